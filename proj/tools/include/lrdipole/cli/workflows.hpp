#pragma once

#include "lrdipole/cli/config.hpp"
#include "lrdipole/phases.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace lrdipole::cli {

/// One row of `solve` output (X axis, quantum number n1).
struct SolveSample
{
  double t = 0.0;
  cplx eta;
  double delta = 0.0;
  cplx beta;
  PhaseBreakdown phase;
  cplx exp_a;
};

std::vector<SolveSample> solve_samples(const RunConfig& config);

/// Header: t,eta_re,eta_im,delta,beta_re,beta_im,phase_total,phase_geom,
/// phase_dyn,exp_a_re,exp_a_im
std::string solve_csv(const RunConfig& config);

void cmd_solve(const RunConfig& config, const std::filesystem::path& out);

enum class CheckStatus
{
  Pass,
  Fail,
  Skipped
};

struct CheckResult
{
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct VerifyReport
{
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
};

/// Runs every diagnostic for the configured X axis. Closed-form checks are
/// skipped at resonance and the remaining checks fall back to the numeric
/// path. Library errors inside a check turn into a FAIL line.
VerifyReport cmd_verify(const RunConfig& config);

/// "PASS name: detail" per line.
std::string format_report(const VerifyReport& report);

/// Header: Omega,phase_per_cycle,ratio,loop_area,area_check_residual
std::string sweep_csv(const RunConfig& config,
                      std::span<const double> omega_list, int cycles = 1);

void cmd_sweep(const RunConfig& config, std::span<const double> omega_list,
               int cycles, const std::filesystem::path& out);

} // namespace lrdipole::cli
