#pragma once

// Q[c_V]_{V in G} / I, the presentation of the cohomology ring of the
// wonderful model, queried only in the top degree n-1.

#include "jumpcalc/building_set.hpp"
#include "jumpcalc/matrix.hpp"
#include "jumpcalc/series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace jumpcalc {

struct Generator {
  int type = 1;                // 1: monomial of a non-nested set, 2: nested set times a power
  MemberSet support;           // H
  std::optional<MemberId> w;   // W for type 2
  int degree = 0;
  TruncatedPoly poly;
};

enum class Type1Mode { minimal, all };

/// Generators are only materialized up to degree n-1; anything larger
/// cannot contribute to the top-degree slice.
class RingPresentation {
 public:
  RingPresentation(std::size_t nvars, int top_degree, std::vector<Generator> generators)
      : nvars_(nvars), top_degree_(top_degree), generators_(std::move(generators)) {}

  std::size_t nvars() const { return nvars_; }
  int top_degree() const { return top_degree_; }
  const std::vector<Generator>& generators() const { return generators_; }

 private:
  std::size_t nvars_;
  int top_degree_;
  std::vector<Generator> generators_;
};

RingPresentation build_presentation(const BuildingSet& g, Type1Mode mode = Type1Mode::minimal);

/// All exponent vectors of the given total degree, in decreasing lex order.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, int degree);

/// The degree-k component of I as a row space over the monomial basis.
class GradedIdealSlice {
 public:
  GradedIdealSlice(const RingPresentation& p, int degree);

  int degree() const { return degree_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Exponents>& basis() const { return basis_; }
  std::size_t rank() const { return space_.rank(); }
  std::size_t quotient_dimension() const { return basis_.size() - space_.rank(); }
  Matrix rowspace() const { return space_.to_matrix(); }

  std::vector<Rational> to_vector(const TruncatedPoly& q) const;

  /// Normal form of q modulo the slice (zero on every pivot column).
  std::vector<Rational> residual(const TruncatedPoly& q) const;

  bool contains(const TruncatedPoly& q) const;

 private:
  int degree_;
  std::size_t nvars_;
  std::vector<Exponents> basis_;
  std::map<Exponents, std::size_t> index_;
  RowSpace space_;
};

/// Top-degree slice with its normalization class (-c_0)^{n-1}. Construction
/// fails with std::logic_error unless the quotient is one-dimensional and
/// (-c_0)^{n-1} survives in it.
class TopSlice {
 public:
  explicit TopSlice(const RingPresentation& p);

  const GradedIdealSlice& slice() const { return slice_; }
  int degree() const { return slice_.degree(); }

  /// q must be homogeneous of degree n-1 (or zero); throws std::invalid_argument otherwise.
  bool is_in_ideal(const TruncatedPoly& q) const;

  /// The unique lambda with q = lambda * (-c_0)^{n-1} mod I.
  Rational evaluate_top(const TruncatedPoly& q) const;

 private:
  void check_degree(const TruncatedPoly& q) const;

  GradedIdealSlice slice_;
  std::size_t free_column_ = 0;
  Rational unit_value_;
};

/// Dimensions of (Q[c]/I)_k for k = 0..top_degree, each from its own slice.
std::vector<std::size_t> quotient_dimensions(const RingPresentation& p);

}  // namespace jumpcalc
