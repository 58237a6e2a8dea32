#pragma once

// Truncated multivariate power series over Q.
//
// Monomials are dense exponent vectors over a fixed variable ordering; the
// building sets we work with have at most a few dozen members, so dense
// vectors keep comparison and hashing trivial.

#include "jumpcalc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace jumpcalc {

using Exponents = std::vector<std::uint8_t>;

int total_degree(const Exponents& e);

/// Element of Q[[c_0..c_{k-1}]] / (terms of total degree > order).
/// Invariants: no stored zero coefficient, every stored term has degree <= order.
class TruncatedPoly {
 public:
  TruncatedPoly(std::size_t nvars, int order);

  static TruncatedPoly constant(std::size_t nvars, int order, const Rational& value);
  static TruncatedPoly variable(std::size_t nvars, int order, std::size_t index,
                                const Rational& coeff = 1);
  static TruncatedPoly monomial(int order, const Exponents& e, const Rational& coeff = 1);

  std::size_t nvars() const { return nvars_; }
  int order() const { return order_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree present, -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int degree) const;
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;

  void add_term(const Exponents& e, const Rational& coeff);
  TruncatedPoly homogeneous_part(int degree) const;
  TruncatedPoly with_order(int order) const;

  TruncatedPoly& operator+=(const TruncatedPoly& other);
  TruncatedPoly& operator-=(const TruncatedPoly& other);
  TruncatedPoly& operator*=(const Rational& scalar);

  friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
  friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
  friend TruncatedPoly operator*(TruncatedPoly a, const Rational& s) { return a *= s; }
  friend TruncatedPoly operator*(const Rational& s, TruncatedPoly a) { return a *= s; }
  /// Product truncated at min(a.order, b.order).
  friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);

  friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form using `names` for the variables (c0, c1, ... if empty).
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_;
  int order_;
  std::map<Exponents, Rational> terms_;
};

/// Coefficients a_0..a_order of a univariate series.
class UnivariateSeries {
 public:
  explicit UnivariateSeries(std::vector<Rational> coefficients);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

 private:
  std::vector<Rational> coeffs_;
};

/// Q(x) = x / (1 - exp(-x)) through degree `order`, by truncated long division.
UnivariateSeries q_series(int order);

/// s^k truncated at s.order(); negative k goes through the truncated inverse.
/// Throws std::invalid_argument unless the constant term of s is 1.
TruncatedPoly series_pow(const TruncatedPoly& s, int k);

/// sum_k s_k * l^k truncated at l.order(). `linear` must be homogeneous of
/// degree 1 (the zero polynomial is accepted); throws std::invalid_argument
/// otherwise.
TruncatedPoly substitute_linear(const UnivariateSeries& s, const TruncatedPoly& linear);

}  // namespace jumpcalc
