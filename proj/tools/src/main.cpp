#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using namespace jumpcalc;
  using cli::OutputFormat;

  CLI::App app{"Jumping numbers and the (0,1] spectrum of central hyperplane arrangements"};
  app.require_subcommand(1);

  cli::RunConfig config;
  const std::map<std::string, BuildingSetKind> kinds{{"full", BuildingSetKind::full},
                                                     {"minimal", BuildingSetKind::minimal}};
  const std::map<std::string, OutputFormat> formats{{"table", OutputFormat::table}, {"json", OutputFormat::json}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input_path, "Arrangement JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", config.format, "Output format: table or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--diagnostics", config.diagnostics, "Include per-candidate details");
  };

  auto* analyze = app.add_subcommand("analyze", "Jumping numbers, inner multiplicities and spectrum part");
  add_common(analyze);
  analyze->add_option("--building-set", config.building_set, "Building set: full or minimal")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  analyze->add_flag("--oracle", config.with_oracle, "Cross-check every candidate with the affine oracle");

  auto* ring = app.add_subcommand("ring-info", "Generators and graded dimensions of the cohomology presentation");
  add_common(ring);
  ring->add_option("--building-set", config.building_set, "Building set: full or minimal")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));

  auto* oracle = app.add_subcommand("oracle", "Jumping numbers from the affine ideal-membership oracle only");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_code::invalid_input;
  }

  if (analyze->parsed()) return cli::cmd_analyze(config, std::cout, std::cerr);
  if (ring->parsed()) return cli::cmd_ring_info(config, std::cout, std::cerr);
  return cli::cmd_oracle(config, std::cout, std::cerr);
}
