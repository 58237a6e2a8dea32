#pragma once

// Serialization of reports. Rationals are always written as "p/q" strings.

#include "jumpcalc/engine.hpp"
#include "jumpcalc/oracle.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jumpcalc {

/// JSON report. Candidates list S_c as sorted {codim, s} pairs, which depend
/// only on the combinatorics, so equivalent arrangements serialize
/// identically. `diagnostics` adds member ids and criterion polynomials.
std::string report_to_json(const JumpReport& r, bool diagnostics = false);
std::string report_to_table(const JumpReport& r, bool diagnostics = false);

std::string ring_info_to_json(const JumpEngine& engine);
std::string ring_info_to_table(const JumpEngine& engine);

struct OracleRun {
  int degree_bound = 0;
  std::vector<std::pair<Rational, OracleVerdict>> results;  // every oracle candidate in (0,1)
  std::vector<AffineFlatData> flats;

  std::vector<Rational> jumping_numbers() const;
};

OracleRun run_oracle(const ArrangementInput& a);

std::string oracle_to_json(const OracleRun& run, bool diagnostics = false);
std::string oracle_to_table(const OracleRun& run, bool diagnostics = false);

/// "p/q" pairs such as (2/3,1),(1,2); "none" when empty.
std::string format_pairs(const std::vector<std::pair<Rational, Integer>>& pairs);

}  // namespace jumpcalc
