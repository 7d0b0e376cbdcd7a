#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace orbizeta::cli;

  CLI::App app{"orbizeta: inertia sectors, Chen-Ruan rings and orbifold zeta functions over finite fields"};
  app.require_subcommand(1);

  std::string spec_path, zeta_path, format = "table";

  auto* inertia = app.add_subcommand("inertia", "Enumerate inertia sectors with ages and involution");
  inertia->add_option("spec", spec_path, "Orbifold description (JSON)")->required()->check(CLI::ExistingFile);
  inertia->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  ZetaOptions zeta_options;
  std::string zeta_format = "table";
  std::int64_t q_override = 0;
  auto* zeta = app.add_subcommand("zeta", "Orbifold cohomological zeta function");
  zeta->add_option("spec", spec_path, "Orbifold description (JSON)")->required()->check(CLI::ExistingFile);
  zeta->add_option("--traces", zeta_options.traces, "Print the first R traces of the orbifold Frobenius");
  zeta->add_flag("--verify", zeta_options.verify, "Check the trace formula against groupoid point counts");
  zeta->add_option("--max-r", zeta_options.verify_max_r, "Largest iterate checked by --verify")
      ->check(CLI::PositiveNumber);
  zeta->add_flag("--recover", zeta_options.recover, "Recover the zeta from its traces and compare");
  zeta->add_option("--q", q_override, "Override the base field size")->check(CLI::PositiveNumber);
  zeta->add_option("--format", zeta_format, "Output format")->check(CLI::IsMember({"table", "json"}));

  RingOptions ring_options;
  auto* ring = app.add_subcommand("ring", "Chen-Ruan ring and orbifold Frobenius checks");
  ring->add_option("spec", spec_path, "Orbifold description (JSON)")->required()->check(CLI::ExistingFile);
  ring->add_flag("--verify-frobenius", ring_options.verify_frobenius,
                 "Verify that the age-twisted Frobenius is a graded ring homomorphism");
  ring->add_flag("--negative-control", ring_options.negative_control,
                 "Check that the untwisted Frobenius is not a ring homomorphism");

  auto* compare = app.add_subcommand("compare", "Compare the orbifold zeta with a resolution zeta");
  compare->add_option("spec", spec_path, "Orbifold description (JSON)")->required()->check(CLI::ExistingFile);
  compare->add_option("zeta", zeta_path, "Resolution zeta (JSON)")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  CommandResult result;
  if (*inertia) {
    result = cmd_inertia(spec_path, format == "json" ? Format::Json : Format::Table);
  } else if (*zeta) {
    if (q_override > 0) zeta_options.q = q_override;
    zeta_options.format = zeta_format == "json" ? Format::Json : Format::Table;
    result = cmd_zeta(spec_path, zeta_options);
  } else if (*ring) {
    result = cmd_ring(spec_path, ring_options);
  } else {
    result = cmd_compare(spec_path, zeta_path);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
