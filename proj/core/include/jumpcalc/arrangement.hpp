#pragma once

#include "jumpcalc/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jumpcalc {

/// Raised for malformed or mathematically invalid input documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Hyperplane {
  std::vector<Rational> form;  // linear form on C^{affine_dim}
  int mult = 1;
};

/// A central arrangement with multiplicities in C^{affine_dim}.
struct ArrangementInput {
  int affine_dim = 0;
  std::vector<Hyperplane> hyperplanes;

  /// Total degree d = sum of multiplicities.
  int degree() const;
};

/// Throws InputError when affine_dim < 2, a form has the wrong length or is
/// zero, a multiplicity is < 1, or two forms are proportional.
void validate(const ArrangementInput& a);

/// Parses `{ "affine_dim": int, "hyperplanes": [ { "coeffs": [int | "p/q", ...],
/// "mult": int }, ... ] }` and validates the result. Floats are rejected.
ArrangementInput parse_arrangement(std::string_view document);

std::string to_json(const ArrangementInput& a);

}  // namespace jumpcalc
