#pragma once

#include "lrdipole/auxiliary.hpp"
#include "lrdipole/params.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace lrdipole::cli {

/// Malformed or invalid run configuration (exit code 2).
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// One run, loaded from a flat JSON object with exactly these keys:
/// mu, omega1, omega2, Omega, Q, E, alpha, n1, n2, t_max, dt_out, fock_dim,
/// oracle_dt, ic_convention ("default-B" | "homogeneous-free").
/// Missing keys keep the defaults below; unknown keys are rejected.
struct RunConfig
{
  OscillatorParams params{1.0, 1.0, 1.3, 0.3, 0.2, 1.0, 1.0};
  int n1 = 0;
  int n2 = 0;
  double t_max = 50.0;
  double dt_out = 0.1;
  int fock_dim = 64;
  double oracle_dt = 1e-3;
  InitialCondition ic_convention = InitialCondition::DefaultB;
  /// Set by --numeric: skip the closed form even on the X axis.
  bool force_numeric = false;

  /// Throws ConfigError.
  void validate() const;

  SolverOptions solver_options() const;
};

RunConfig parse_config(const nlohmann::json& document);

RunConfig load_config(const std::filesystem::path& path);

} // namespace lrdipole::cli
