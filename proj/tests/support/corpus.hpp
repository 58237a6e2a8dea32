#pragma once

#include "jumpcalc/arrangement.hpp"

#include <string>
#include <vector>

namespace jumpcalc::testkit {

struct NamedArrangement {
  std::string name;
  ArrangementInput input;
};

ArrangementInput make_arrangement(int affine_dim, const std::vector<std::vector<int>>& forms,
                                  const std::vector<int>& mults);

/// Every nonempty subset of the lines x, y, x+y, x-y, x+2y with every
/// multiplicity assignment in 1..3 (1023 arrangements).
std::vector<NamedArrangement> line_corpus();

/// Plane arrangements in C^3, including both equivalent pencils.
std::vector<NamedArrangement> plane_corpus();

std::vector<NamedArrangement> full_corpus();

/// Every fourth line arrangement plus all plane arrangements: a cheaper
/// deterministic slice for tests that need many engine runs per arrangement.
std::vector<NamedArrangement> sampled_corpus();

ArrangementInput load_fixture(const std::string& file);

ArrangementInput with_scaled_multiplicities(ArrangementInput a, int k);
ArrangementInput reversed(ArrangementInput a);

}  // namespace jumpcalc::testkit
