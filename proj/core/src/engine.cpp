#include "jumpcalc/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jumpcalc {

JumpConstants constants(const BuildingSet& g) {
  JumpConstants k;
  k.n = static_cast<int>(g.ambient_dim());
  k.d = g.lattice().d_total();
  int excess = 0;
  for (const auto& m : g.members()) {
    k.s.push_back(m.s);
    k.r.push_back(static_cast<int>(m.codim));
    k.delta.push_back(static_cast<int>(m.dim));
    if (m.element) excess += std::max(0, m.s - static_cast<int>(m.codim));
  }
  k.a0 = std::max(k.d - k.n + 1, excess);
  return k;
}

Rational a_value(const Rational& c, int r, int s) {
  const Rational cs = c * s;
  if (is_integer(cs)) return r - cs;
  return Rational(r - 1) - Rational(floor_of(cs));
}

Candidate make_candidate(const Rational& c, const JumpConstants& k) {
  Candidate out{c, {}, {}};
  out.a_values.push_back(-k.a0);
  for (std::size_t v = 1; v < k.s.size(); ++v) {
    if (is_integer(c * k.s[v])) out.s_c.insert(v);
    out.a_values.push_back(a_value(c, k.r[v], k.s[v]));
  }
  return out;
}

std::vector<Candidate> candidates(const JumpConstants& k) {
  std::set<Rational> values;
  for (std::size_t v = 1; v < k.s.size(); ++v) {
    for (int i = 1; i <= k.s[v]; ++i) {
      Rational c(i, k.s[v]);
      c.canonicalize();
      values.insert(c);
    }
  }
  std::vector<Candidate> out;
  for (const auto& c : values) out.push_back(make_candidate(c, k));
  return out;
}

namespace {

// -(sum of c_W' over W' ⊆ w nested with S), optionally leaving out w itself.
TruncatedPoly nested_sum(MemberId w, bool strict, const BuildingSet& g, const std::vector<bool>& nested_with,
                         int order) {
  TruncatedPoly sum(g.size(), order);
  for (MemberId w2 = 0; w2 < g.size(); ++w2) {
    if (strict && w2 == w) continue;
    if (nested_with[w2] && g.contained(w2, w)) sum += TruncatedPoly::variable(g.size(), order, w2, -1);
  }
  return sum;
}

}  // namespace

TruncatedPoly p_series(const Factor& f, MemberId w, const BuildingSet& g, const std::vector<bool>& nested_with,
                       const UnivariateSeries& q) {
  if (!g.contained(f.bottom, w) || !g.strictly_below(w, f.top)) {
    throw std::invalid_argument("p_series: W must satisfy bottom ⊆ W ⊊ top");
  }
  const int order = q.order();
  const int e = static_cast<int>(f.top_dim) - static_cast<int>(g.member(w).dim);
  const TruncatedPoly inclusive = substitute_linear(q, nested_sum(w, false, g, nested_with, order));
  if (w == f.bottom) return series_pow(inclusive, e);
  const TruncatedPoly strict = substitute_linear(q, nested_sum(w, true, g, nested_with, order));
  const TruncatedPoly own = substitute_linear(q, TruncatedPoly::variable(g.size(), order, w));
  return series_pow(strict, -e) * own * series_pow(inclusive, e);
}

JumpEngine::JumpEngine(BuildingSet g, Type1Mode mode)
    : g_(std::move(g)),
      k_(jumpcalc::constants(g_)),
      presentation_(build_presentation(g_, mode)),
      slice_(presentation_),
      q_(q_series(k_.n - 1)) {}

std::vector<bool> JumpEngine::nested_with(MemberSet s) const {
  std::vector<bool> out(g_.size());
  for (MemberId w = 0; w < g_.size(); ++w) {
    if (w == BuildingSet::zero || s.contains(w)) {
      out[w] = true;
      continue;
    }
    MemberSet t = s;
    t.insert(w);
    out[w] = is_nested(t, g_);
  }
  return out;
}

TruncatedPoly JumpEngine::t_series(const NestedSet& s) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = t_cache_.find(s.members); it != t_cache_.end()) return it->second;
  }
  const auto with = nested_with(s.members);
  TruncatedPoly t = TruncatedPoly::constant(g_.size(), top_degree(), 1);
  for (const auto& f : s.factors) {
    for (MemberId w = 0; w < g_.size(); ++w) {
      if (g_.contained(f.bottom, w) && g_.strictly_below(w, f.top)) t = t * p_series(f, w, g_, with, q_);
    }
  }
  std::lock_guard lock(cache_mutex_);
  return t_cache_.try_emplace(s.members, std::move(t)).first->second;
}

TruncatedPoly JumpEngine::linear_form(const std::vector<Rational>& a, bool include_zero) const {
  TruncatedPoly l(g_.size(), top_degree());
  for (MemberId v = include_zero ? 0 : 1; v < g_.size(); ++v) {
    l += TruncatedPoly::variable(g_.size(), top_degree(), v, a[v]);
  }
  return l;
}

TruncatedPoly JumpEngine::criterion_poly(const Candidate& c) const {
  const int top = top_degree();
  const TruncatedPoly l = linear_form(c.a_values, true);
  std::vector<TruncatedPoly> l_pow{TruncatedPoly::constant(g_.size(), top, 1)};
  for (int j = 1; j <= top; ++j) l_pow.push_back(l_pow.back() * l);

  TruncatedPoly total(g_.size(), top);
  for (const auto& s : nested_subsets_of(c.s_c, g_)) {
    const int size = static_cast<int>(s.members.size());
    if (size > top) continue;
    const TruncatedPoly t = t_series(s);
    TruncatedPoly prod = TruncatedPoly::constant(g_.size(), top, 1);
    for (MemberId v : s.members.ids()) prod = prod * TruncatedPoly::variable(g_.size(), top, v);
    const Rational sign = size % 2 == 1 ? 1 : -1;
    for (int j = 0; j <= top - size; ++j) {
      total += (sign / factorial(static_cast<unsigned>(j))) * (l_pow[j] * t.homogeneous_part(top - size - j) * prod);
    }
  }
  return total;
}

bool JumpEngine::is_jumping(const Candidate& c) const { return !slice_.is_in_ideal(criterion_poly(c)); }

std::optional<MemberId> JumpEngine::apex() const {
  for (MemberId v = 1; v < g_.size(); ++v) {
    if (g_.member(v).dim == 1) return v;
  }
  return std::nullopt;
}

TruncatedPoly JumpEngine::inner_poly(const Rational& c) const {
  const auto vx = apex();
  if (!vx) throw std::logic_error("inner_poly: building set has no member of dimension one");
  const int top = top_degree();
  if (!is_integer(c * k_.d)) return TruncatedPoly(g_.size(), top);
  const Candidate cand = make_candidate(c, k_);
  // Same linear form as the criterion, minus the zero-subspace term.
  const TruncatedPoly l = linear_form(cand.a_values, false);
  const TruncatedPoly t = t_series(make_nested_set(MemberSet{*vx}, g_));
  const TruncatedPoly cx = TruncatedPoly::variable(g_.size(), top, *vx);
  TruncatedPoly total(g_.size(), top);
  TruncatedPoly l_pow = TruncatedPoly::constant(g_.size(), top, 1);
  for (int j = 0; j <= top - 1; ++j) {
    total += (1 / factorial(static_cast<unsigned>(j))) * (l_pow * t.homogeneous_part(top - 1 - j) * cx);
    l_pow = l_pow * l;
  }
  return total;
}

Integer JumpEngine::inner_multiplicity(const Rational& c) const {
  if (!apex() || !is_integer(c * k_.d)) return 0;
  const Rational value = slice_.evaluate_top(inner_poly(c));
  if (!is_integer(value) || value < 0) {
    throw std::logic_error("inner multiplicity at " + to_string(c) + " evaluated to " + to_string(value));
  }
  return value.get_num();
}

std::size_t JumpReport::oracle_agreements() const {
  return static_cast<std::size_t>(std::count_if(candidates.begin(), candidates.end(), [](const auto& r) {
    return r.oracle && *r.oracle == r.verdict;
  }));
}

bool JumpReport::oracle_agrees() const { return oracle_agreements() == candidates.size(); }

namespace {

bool has_apex_flat(const Lattice& l) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l.dim(i) == 1) return true;
  }
  return false;
}

}  // namespace

JumpReport analyze(const ArrangementInput& a, const AnalyzeOptions& options) {
  const Lattice lattice = cone(a);
  const JumpEngine engine(make_building_set(lattice, options.building_set));
  const auto& k = engine.constants();

  JumpReport report;
  report.building_set = options.building_set;
  report.inner_building_set = options.building_set;
  report.n = k.n;
  report.d = k.d;
  report.a0 = k.a0;
  report.members = engine.building_set().members();

  for (const auto& cand : candidates(k)) {
    CandidateResult r{cand.c, cand.s_c, true, std::nullopt, TruncatedPoly(engine.building_set().size(), k.n - 1), 0};
    if (cand.c < 1) {
      r.criterion = engine.criterion_poly(cand);
      r.criterion_value = engine.slice().evaluate_top(r.criterion);
      r.verdict = !engine.slice().is_in_ideal(r.criterion);
      if (r.verdict) report.jumping_numbers.push_back(cand.c);
    }
    report.candidates.push_back(std::move(r));
  }

  // Without a dimension-one member the inner multiplicities must come from a
  // building set that has one, if the lattice does.
  std::unique_ptr<JumpEngine> fallback;
  const JumpEngine* inner = &engine;
  if (!engine.apex() && has_apex_flat(lattice)) {
    fallback = std::make_unique<JumpEngine>(full_building_set(lattice));
    inner = fallback.get();
    report.inner_building_set = BuildingSetKind::full;
  }
  for (int i = 1; i <= k.d; ++i) {
    Rational c(i, k.d);
    c.canonicalize();
    const Integer m = inner->inner_multiplicity(c);
    report.inner_multiplicities.emplace_back(c, m);
    if (m != 0) report.spectrum_part.emplace_back(c, m);
  }

  if (options.with_oracle) {
    std::vector<std::pair<Rational, bool>> verdicts;
    for (const auto& r : report.candidates) verdicts.emplace_back(r.c, r.verdict);
    const auto agreement = cross_validate(a, verdicts);
    for (std::size_t i = 0; i < agreement.size(); ++i) report.candidates[i].oracle = agreement[i].oracle;
    report.oracle_run = true;
  }
  return report;
}

}  // namespace jumpcalc
