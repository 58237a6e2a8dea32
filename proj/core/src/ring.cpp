#include "jumpcalc/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jumpcalc {

namespace {

// Nested subsets of G - {0} with at most `max_size` members, including the empty set.
std::vector<MemberSet> small_nested_sets(const BuildingSet& g, std::size_t max_size) {
  std::vector<MemberSet> out{MemberSet{}};
  const auto pool = g.nonzero_members().ids();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const MemberSet base = out[i];
    if (base.size() >= max_size) continue;
    const auto ids = base.ids();
    const MemberId after = ids.empty() ? 0 : ids.back();
    for (MemberId x : pool) {
      if (x <= after) continue;
      MemberSet next = base;
      next.insert(x);
      if (is_nested(next, g)) out.push_back(next);
    }
  }
  return out;
}

TruncatedPoly product_of(MemberSet h, std::size_t nvars, int order) {
  TruncatedPoly p = TruncatedPoly::constant(nvars, order, 1);
  for (MemberId v : h.ids()) p = p * TruncatedPoly::variable(nvars, order, v);
  return p;
}

std::vector<MemberSet> type1_supports(const BuildingSet& g, int top, Type1Mode mode,
                                      const std::vector<MemberSet>& nested) {
  std::vector<MemberSet> out;
  const auto pool = g.nonzero_members().ids();
  if (mode == Type1Mode::all) {
    // Every non-nested subset up to the top degree.
    std::vector<MemberSet> level{MemberSet{}};
    for (int k = 1; k <= top; ++k) {
      std::vector<MemberSet> next_level;
      for (MemberSet base : level) {
        const auto ids = base.ids();
        const MemberId after = ids.empty() ? 0 : ids.back();
        for (MemberId x : pool) {
          if (x <= after) continue;
          MemberSet next = base;
          next.insert(x);
          next_level.push_back(next);
          if (!is_nested(next, g)) out.push_back(next);
        }
      }
      level = std::move(next_level);
    }
    return out;
  }
  const std::set<MemberSet> known(nested.begin(), nested.end());
  for (MemberSet base : nested) {
    if (base.empty() || static_cast<int>(base.size()) >= top) continue;
    const auto ids = base.ids();
    for (MemberId x : pool) {
      if (x <= ids.back()) continue;
      MemberSet h = base;
      h.insert(x);
      if (is_nested(h, g)) continue;
      bool minimal = true;
      for (MemberId drop : h.ids()) {
        MemberSet sub = h;
        sub.erase(drop);
        if (!known.contains(sub)) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(h);
    }
  }
  return out;
}

}  // namespace

RingPresentation build_presentation(const BuildingSet& g, Type1Mode mode) {
  const std::size_t n = g.ambient_dim();
  const int top = static_cast<int>(n) - 1;
  const std::size_t nvars = g.size();
  const auto nested = small_nested_sets(g, static_cast<std::size_t>(top));

  std::vector<Generator> gens;
  for (MemberSet h : type1_supports(g, top, mode, nested)) {
    gens.push_back(Generator{1, h, std::nullopt, static_cast<int>(h.size()), product_of(h, nvars, top)});
  }

  for (MemberSet h : nested) {
    const std::size_t delta_h = h.empty() ? n : g.lattice().dim(g.meet(h));
    for (MemberId w = 0; w < nvars; ++w) {
      bool below_all = true;
      for (MemberId v : h.ids()) below_all = below_all && g.strictly_contained(w, v);
      if (!below_all) continue;
      const int d = static_cast<int>(delta_h) - static_cast<int>(g.member(w).dim);
      const int degree = static_cast<int>(h.size()) + d;
      if (degree > top) continue;
      TruncatedPoly sum(nvars, top);
      for (MemberId w2 = 0; w2 < nvars; ++w2) {
        if (g.contained(w2, w)) sum += TruncatedPoly::variable(nvars, top, w2);
      }
      TruncatedPoly p = product_of(h, nvars, top);
      for (int i = 0; i < d; ++i) p = p * sum;
      gens.push_back(Generator{2, h, w, degree, std::move(p)});
    }
  }
  return RingPresentation(nvars, top, std::move(gens));
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  // Recursive fill, highest exponent on the first variable first.
  auto fill = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = static_cast<std::uint8_t>(left);
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = static_cast<std::uint8_t>(a);
      self(self, i + 1, left - a);
    }
  };
  fill(fill, 0, degree);
  return out;
}

GradedIdealSlice::GradedIdealSlice(const RingPresentation& p, int degree)
    : degree_(degree),
      nvars_(p.nvars()),
      basis_(monomials_of_degree(p.nvars(), degree)),
      space_(basis_.size()) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  for (const auto& gen : p.generators()) {
    if (gen.degree > degree) continue;
    for (const auto& m : monomials_of_degree(nvars_, degree - gen.degree)) {
      SparseVector row;
      for (const auto& [e, coeff] : gen.poly.terms()) {
        Exponents sum = e;
        for (std::size_t k = 0; k < nvars_; ++k) sum[k] = static_cast<std::uint8_t>(sum[k] + m[k]);
        row.emplace_back(index_.at(sum), coeff);
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      space_.insert(row);
      if (space_.rank() == basis_.size()) break;
    }
    if (space_.rank() == basis_.size()) break;
  }
  space_.canonicalize();
}

std::vector<Rational> GradedIdealSlice::to_vector(const TruncatedPoly& q) const {
  std::vector<Rational> v(basis_.size());
  for (const auto& [e, coeff] : q.terms()) {
    const auto it = index_.find(e);
    if (it == index_.end()) throw std::invalid_argument("polynomial has a term outside the slice degree");
    v[it->second] = coeff;
  }
  return v;
}

std::vector<Rational> GradedIdealSlice::residual(const TruncatedPoly& q) const {
  return space_.reduce(to_vector(q));
}

bool GradedIdealSlice::contains(const TruncatedPoly& q) const {
  const auto r = residual(q);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

TopSlice::TopSlice(const RingPresentation& p) : slice_(p, p.top_degree()) {
  if (slice_.quotient_dimension() != 1) {
    throw std::logic_error("top-degree quotient has dimension " +
                           std::to_string(slice_.quotient_dimension()) + ", expected 1");
  }
  Exponents e(p.nvars(), 0);
  e[0] = static_cast<std::uint8_t>(p.top_degree());
  const Rational sign = p.top_degree() % 2 == 0 ? 1 : -1;
  const auto r = slice_.residual(TruncatedPoly::monomial(p.top_degree(), e, sign));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] != 0) {
      free_column_ = i;
      unit_value_ = r[i];
      return;
    }
  }
  throw std::logic_error("(-c0)^(n-1) lies in the ideal");
}

void TopSlice::check_degree(const TruncatedPoly& q) const {
  if (!q.is_zero() && !q.is_homogeneous(degree())) {
    throw std::invalid_argument("expected a homogeneous polynomial of degree " + std::to_string(degree()));
  }
}

bool TopSlice::is_in_ideal(const TruncatedPoly& q) const {
  check_degree(q);
  return slice_.contains(q);
}

Rational TopSlice::evaluate_top(const TruncatedPoly& q) const {
  check_degree(q);
  return slice_.residual(q)[free_column_] / unit_value_;
}

std::vector<std::size_t> quotient_dimensions(const RingPresentation& p) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= p.top_degree(); ++k) out.push_back(GradedIdealSlice(p, k).quotient_dimension());
  return out;
}

}  // namespace jumpcalc
