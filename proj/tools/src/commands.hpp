#pragma once

#include "jumpcalc/building_set.hpp"

#include <iosfwd>
#include <string>

namespace jumpcalc::cli {

enum class OutputFormat { table, json };

struct RunConfig {
  std::string input_path;
  BuildingSetKind building_set = BuildingSetKind::full;
  bool with_oracle = false;
  OutputFormat format = OutputFormat::table;
  bool diagnostics = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int invalid_input = 2;
inline constexpr int oracle_disagreement = 3;
}  // namespace exit_code

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_ring_info(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace jumpcalc::cli
