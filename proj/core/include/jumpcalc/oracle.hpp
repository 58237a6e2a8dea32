#pragma once

// Brute-force check of jumping numbers on the affine arrangement itself:
// multiplier ideals of arrangements are intersections of powers of the
// ideals of flats, so every question reduces to linear algebra on spaces of
// homogeneous polynomials of bounded degree. Shares no code with the
// projective pipeline beyond matrices and subspaces.

#include "jumpcalc/arrangement.hpp"
#include "jumpcalc/lattice.hpp"
#include "jumpcalc/matrix.hpp"
#include "jumpcalc/series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace jumpcalc {

struct AffineFlatData {
  Subspace flat;
  std::size_t r_prime = 0;
  int s_prime = 0;
  /// Invertible; rows 0..r'-1 are the flat's equations, the rest are unit
  /// vectors. Row i is the linear form y_i in the old coordinates.
  Matrix frame;
};

/// Adapted frame built from the rref equations of `flat`.
Matrix adapted_frame(const Subspace& flat);

/// Polynomials in `nvars` variables with degrees in [min_degree, max_degree],
/// in the monomial basis.
class PolySpace {
 public:
  static PolySpace up_to(std::size_t nvars, int bound) { return PolySpace(nvars, 0, bound); }
  static PolySpace homogeneous(std::size_t nvars, int degree) { return PolySpace(nvars, degree, degree); }

  std::size_t nvars() const { return nvars_; }
  int min_degree() const { return lo_; }
  int max_degree() const { return hi_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Exponents>& basis() const { return basis_; }

  std::vector<Rational> to_vector(const TruncatedPoly& p) const;
  TruncatedPoly to_poly(std::span<const Rational> v) const;

 private:
  PolySpace(std::size_t nvars, int lo, int hi);

  std::size_t nvars_;
  int lo_;
  int hi_;
  std::vector<Exponents> basis_;
  std::map<Exponents, std::size_t> index_;
};

/// rref basis of the polynomials of `space` lying in I_W^e, where W is cut
/// out by the first `r` rows of `frame`.
Matrix flat_power_membership_space(const Matrix& frame, std::size_t r, int e, const PolySpace& space);
Matrix flat_power_membership_space(const AffineFlatData& w, int e, const PolySpace& space);

struct OracleWitness {
  std::size_t flat = 0;  // index into AffineOracle::flats()
  int m = 0;
  int degree = 0;
  TruncatedPoly polynomial;
};

struct OracleVerdict {
  bool jumping = false;
  std::optional<OracleWitness> witness;
};

class AffineOracle {
 public:
  explicit AffineOracle(const ArrangementInput& a);

  std::size_t dim() const { return dim_; }
  const std::vector<AffineFlatData>& flats() const { return flats_; }
  /// a_0' = sum over flats of max(0, s' - r').
  int degree_bound() const { return bound_; }

  /// Defined for c in (0,1]; c = 1 is always reported as jumping when some
  /// flat witnesses it, which the hyperplanes always do.
  OracleVerdict check(const Rational& c) const;
  bool is_jumping(const Rational& c) const { return check(c).jumping; }

  /// All values (r'+m)/s' in (0,1) over every flat.
  std::vector<Rational> candidates() const;
  std::vector<Rational> jumping_set() const;

 private:
  std::size_t dim_;
  std::vector<AffineFlatData> flats_;
  int bound_ = 0;
};

bool oracle_is_jumping(const Rational& c, const ArrangementInput& a);

struct Agreement {
  Rational c;
  bool engine = false;
  bool oracle = false;
  bool agree() const { return engine == oracle; }
};

/// Runs the oracle on every (c, engine verdict) pair.
std::vector<Agreement> cross_validate(const ArrangementInput& a,
                                      const std::vector<std::pair<Rational, bool>>& verdicts);

}  // namespace jumpcalc
