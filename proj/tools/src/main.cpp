// lrdipole: exact invariant-based solution of the driven dipole oscillator.
//
//   lrdipole solve  --config run.json --out trajectory.csv
//   lrdipole verify --config run.json
//   lrdipole sweep  --config run.json --omegas 0.1,0.05 --out sweep.csv
//
// Exit codes: 0 success, 1 runtime failure or failed check, 2 bad usage or
// configuration.

#include "lrdipole/cli/config.hpp"
#include "lrdipole/cli/csv.hpp"
#include "lrdipole/cli/workflows.hpp"
#include "lrdipole/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct CommonFlags
{
  std::string config_path;
  std::string out_path;
  bool numeric = false;
  bool homogeneous_free = false;
  std::optional<int> fock_dim;
  bool quiet = false;
};

void add_common(CLI::App& cmd, CommonFlags& flags, bool needs_out)
{
  cmd.add_option("--config", flags.config_path, "JSON run configuration")
    ->required();
  auto* out = cmd.add_option("--out", flags.out_path, "output CSV path");
  if (needs_out)
    out->required();
  cmd.add_flag("--numeric", flags.numeric,
               "use the numeric auxiliary solver instead of the closed form");
  cmd.add_flag("--homogeneous-free", flags.homogeneous_free,
               "start without the homogeneous part (B = 0)");
  cmd.add_option("--fock-dim", flags.fock_dim, "override the Fock basis size");
  cmd.add_flag("--quiet", flags.quiet, "suppress progress output");
}

lrdipole::cli::RunConfig build_config(const CommonFlags& flags)
{
  lrdipole::cli::RunConfig config = lrdipole::cli::load_config(flags.config_path);
  if (flags.numeric)
    config.force_numeric = true;
  if (flags.homogeneous_free)
    config.ic_convention = lrdipole::InitialCondition::HomogeneousFree;
  if (flags.fock_dim)
    config.fock_dim = *flags.fock_dim;
  config.validate();
  return config;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Invariant-based solver for a dipole oscillator in a rotating "
               "electric field"};
  app.require_subcommand(1);

  CommonFlags solve_flags, verify_flags, sweep_flags;
  std::vector<double> omegas;
  int cycles = 1;

  auto* solve = app.add_subcommand("solve", "write the trajectory CSV");
  add_common(*solve, solve_flags, true);

  auto* verify = app.add_subcommand("verify", "run all diagnostic checks");
  add_common(*verify, verify_flags, false);

  auto* sweep = app.add_subcommand("sweep", "per-cycle geometric phase vs Omega");
  add_common(*sweep, sweep_flags, true);
  sweep->add_option("--omegas", omegas, "drive frequencies")
    ->required()
    ->delimiter(',');
  sweep->add_option("--cycles", cycles, "drive cycles per Omega")
    ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) {
      const auto config = build_config(solve_flags);
      lrdipole::cli::cmd_solve(config, solve_flags.out_path);
      if (!solve_flags.quiet)
        std::cerr << "wrote " << solve_flags.out_path << '\n';
      return 0;
    }
    if (*verify) {
      const auto config = build_config(verify_flags);
      const auto report = lrdipole::cli::cmd_verify(config);
      std::cout << lrdipole::cli::format_report(report);
      return report.exit_code();
    }
    if (*sweep) {
      const auto config = build_config(sweep_flags);
      lrdipole::cli::cmd_sweep(config, omegas, cycles, sweep_flags.out_path);
      if (!sweep_flags.quiet)
        std::cerr << "wrote " << sweep_flags.out_path << '\n';
      return 0;
    }
  } catch (const lrdipole::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const lrdipole::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const lrdipole::ResonanceError& e) {
    std::cerr << "error: " << e.what() << " (try --numeric)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
