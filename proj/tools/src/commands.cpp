#include "commands.hpp"

#include "jumpcalc/engine.hpp"
#include "jumpcalc/lattice.hpp"
#include "jumpcalc/report.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace jumpcalc::cli {

namespace {

ArrangementInput load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_arrangement(text.str());
}

// Shared error handling: bad input is the user's problem, anything else is ours.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::invalid_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal;
  }
}

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ArrangementInput a = load(config.input_path);
    const JumpReport report = analyze(a, AnalyzeOptions{config.building_set, config.with_oracle});
    out << (config.format == OutputFormat::json ? report_to_json(report, config.diagnostics)
                                                : report_to_table(report, config.diagnostics));
    if (report.oracle_run && !report.oracle_agrees()) {
      err << "error: oracle disagrees with the ring computation\n";
      return exit_code::oracle_disagreement;
    }
    return exit_code::ok;
  });
}

int cmd_ring_info(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ArrangementInput a = load(config.input_path);
    const JumpEngine engine(make_building_set(cone(a), config.building_set));
    out << (config.format == OutputFormat::json ? ring_info_to_json(engine) : ring_info_to_table(engine));
    return exit_code::ok;
  });
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const OracleRun run = run_oracle(load(config.input_path));
    out << (config.format == OutputFormat::json ? oracle_to_json(run, config.diagnostics)
                                                : oracle_to_table(run, config.diagnostics));
    return exit_code::ok;
  });
}

}  // namespace jumpcalc::cli
