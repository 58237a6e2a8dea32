#include "jumpcalc/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jumpcalc {

namespace {

std::vector<Exponents> monomials(std::size_t nvars, int degree) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
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

TruncatedPoly linear_form(std::span<const Rational> coeffs, int order) {
  TruncatedPoly p(coeffs.size(), order);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) p += TruncatedPoly::variable(coeffs.size(), order, j, coeffs[j]);
  }
  return p;
}

// Annihilator of a row space inside the ambient coordinate space.
Matrix annihilator(const Matrix& rows, std::size_t dim) {
  if (rows.empty()) return Matrix::identity(dim);
  return nullspace(rows);
}

}  // namespace

Matrix adapted_frame(const Subspace& flat) {
  const Matrix& eq = flat.equations();
  const std::size_t n = flat.ambient();
  Matrix frame = eq;
  std::vector<bool> pivot(n, false);
  for (std::size_t i = 0; i < eq.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (eq(i, j) != 0) {
        pivot[j] = true;
        break;
      }
    }
  }
  std::vector<Rational> unit(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot[j]) continue;
    std::fill(unit.begin(), unit.end(), Rational(0));
    unit[j] = 1;
    frame.append_row(unit);
  }
  return frame;
}

PolySpace::PolySpace(std::size_t nvars, int lo, int hi) : nvars_(nvars), lo_(lo), hi_(hi) {
  if (nvars == 0 || lo < 0 || hi < lo) throw std::invalid_argument("bad polynomial space");
  for (int t = lo; t <= hi; ++t) {
    for (auto& e : monomials(nvars, t)) {
      index_.emplace(e, basis_.size());
      basis_.push_back(std::move(e));
    }
  }
}

std::vector<Rational> PolySpace::to_vector(const TruncatedPoly& p) const {
  std::vector<Rational> v(basis_.size());
  for (const auto& [e, c] : p.terms()) {
    const auto it = index_.find(e);
    if (it == index_.end()) throw std::invalid_argument("polynomial outside the space");
    v[it->second] = c;
  }
  return v;
}

TruncatedPoly PolySpace::to_poly(std::span<const Rational> v) const {
  TruncatedPoly p(nvars_, hi_);
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(basis_[i], v[i]);
  return p;
}

Matrix flat_power_membership_space(const Matrix& frame, std::size_t r, int e, const PolySpace& space) {
  const std::size_t n = space.nvars();
  const int order = space.max_degree();
  std::vector<TruncatedPoly> y;
  for (std::size_t i = 0; i < n; ++i) y.push_back(linear_form(frame.row(i), order));

  // y^alpha for every alpha with the right degree; y is invertible so these
  // products span the whole space and the I_W^e part is picked out by alpha.
  Matrix rows(0, space.size());
  for (int t = space.min_degree(); t <= order; ++t) {
    for (const auto& alpha : monomials(n, t)) {
      int in_flat = 0;
      for (std::size_t i = 0; i < r; ++i) in_flat += alpha[i];
      if (in_flat < e) continue;
      TruncatedPoly p = TruncatedPoly::constant(n, order, 1);
      for (std::size_t i = 0; i < n; ++i) {
        for (int k = 0; k < alpha[i]; ++k) p = p * y[i];
      }
      rows.append_row(space.to_vector(p));
    }
  }
  return rref(rows);
}

Matrix flat_power_membership_space(const AffineFlatData& w, int e, const PolySpace& space) {
  return flat_power_membership_space(w.frame, w.r_prime, e, space);
}

AffineOracle::AffineOracle(const ArrangementInput& a) : dim_(static_cast<std::size_t>(a.affine_dim)) {
  validate(a);
  std::vector<Subspace> hyperplanes;
  for (const auto& h : a.hyperplanes) {
    Matrix eq(0, dim_);
    eq.append_row(h.form);
    hyperplanes.push_back(Subspace::from_equations(eq));
  }
  std::set<Subspace> seen(hyperplanes.begin(), hyperplanes.end());
  std::vector<Subspace> work(seen.begin(), seen.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& h : hyperplanes) {
      Subspace x = work[i].intersect(h);
      if (seen.insert(x).second) work.push_back(x);
    }
  }
  for (const auto& v : seen) {
    AffineFlatData f{v, v.codim(), 0, adapted_frame(v)};
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
      if (hyperplanes[i].contains(v)) f.s_prime += a.hyperplanes[i].mult;
    }
    bound_ += std::max(0, f.s_prime - static_cast<int>(f.r_prime));
    flats_.push_back(std::move(f));
  }
}

OracleVerdict AffineOracle::check(const Rational& c) const {
  if (c <= 0 || c > 1) throw std::invalid_argument("oracle is defined for c in (0,1]");
  for (std::size_t v = 0; v < flats_.size(); ++v) {
    const auto& fv = flats_[v];
    const Rational excess = c * fv.s_prime - static_cast<long>(fv.r_prime);
    if (!is_integer(excess) || excess < 0) continue;
    const int m = static_cast<int>(to_long(excess.get_num()));

    std::vector<std::pair<const AffineFlatData*, int>> conditions;
    for (const auto& fw : flats_) {
      if (!fw.flat.contains(fv.flat)) continue;
      const long e = to_long(ceil_of(c * fw.s_prime)) - static_cast<long>(fw.r_prime);
      conditions.emplace_back(&fw, static_cast<int>(std::max(0L, e)));
    }
    // The ideals are homogeneous, so it is enough to look degree by degree.
    for (int t = 0; t <= bound_; ++t) {
      const PolySpace space = PolySpace::homogeneous(dim_, t);
      Matrix constraints(0, space.size());
      for (const auto& [fw, e] : conditions) {
        constraints = constraints.stacked(annihilator(flat_power_membership_space(*fw, e, space), space.size()));
      }
      const Matrix target = flat_power_membership_space(fv, m + 1, space);
      const Matrix both = constraints.stacked(annihilator(target, space.size()));
      if (rank(both) == rank(constraints)) continue;

      const Matrix meet = constraints.empty() ? Matrix::identity(space.size()) : nullspace(constraints);
      for (std::size_t i = 0; i < meet.rows(); ++i) {
        if (!in_row_space(target, meet.row(i))) {
          return {true, OracleWitness{v, m, t, space.to_poly(meet.row(i))}};
        }
      }
      throw std::logic_error("oracle: rank test and witness search disagree");
    }
  }
  return {false, std::nullopt};
}

std::vector<Rational> AffineOracle::candidates() const {
  std::set<Rational> out;
  for (const auto& f : flats_) {
    for (int k = static_cast<int>(f.r_prime); k < f.s_prime; ++k) {
      Rational q(k, f.s_prime);
      q.canonicalize();
      out.insert(q);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Rational> AffineOracle::jumping_set() const {
  std::vector<Rational> out;
  for (const auto& c : candidates()) {
    if (is_jumping(c)) out.push_back(c);
  }
  return out;
}

bool oracle_is_jumping(const Rational& c, const ArrangementInput& a) { return AffineOracle(a).is_jumping(c); }

std::vector<Agreement> cross_validate(const ArrangementInput& a,
                                      const std::vector<std::pair<Rational, bool>>& verdicts) {
  const AffineOracle oracle(a);
  std::vector<Agreement> out;
  for (const auto& [c, engine] : verdicts) out.push_back(Agreement{c, engine, oracle.is_jumping(c)});
  return out;
}

}  // namespace jumpcalc
