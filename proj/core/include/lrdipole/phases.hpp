#pragma once

#include "lrdipole/auxiliary.hpp"
#include "lrdipole/params.hpp"

#include <span>
#include <vector>

namespace lrdipole {

/// Accumulated phases at time t. Never reduced mod 2 pi.
///
///   dynamical = Int [n omega + omega |beta|^2 - (beta + conj(beta)) c] dt
///   geometric = Int (i/2)(beta_dot conj(beta) - conj(beta_dot) beta) dt
///             = -Int Im(conj(beta) beta_dot) dt
///   total     = dynamical - geometric
///
/// The state is exp(-i total) D(-beta)|n>. `geometric` is the phase the state
/// picks up from the path of beta (minus twice the enclosed area for a
/// closed loop); it enters the wavefunction as exp(+i geometric).
struct PhaseBreakdown
{
  double t = 0.0;
  double total = 0.0;
  double geometric = 0.0;
  double dynamical = 0.0;
};

struct PhaseRates
{
  double geometric = 0.0;
  double dynamical = 0.0;
};

/// Integrand rates given beta at time t.
PhaseRates phase_rates(const OscillatorParams& params, DriveAxis axis, int n,
                       double t, cplx beta);

/// Integrand rates at time t, with beta(t) from the configured path.
PhaseRates phase_integrand(const OscillatorParams& params, DriveAxis axis,
                           int n, double t, const SolverOptions& options = {});

/// Phases on a uniform grid starting at 0 (GridError otherwise).
std::vector<PhaseBreakdown> accumulate_phases(
  const OscillatorParams& params, DriveAxis axis, int n,
  std::span<const double> t_grid, const SolverOptions& options = {});

/// Phases at a single time t >= 0.
PhaseBreakdown phases_at(const OscillatorParams& params, DriveAxis axis, int n,
                         double t, const SolverOptions& options = {});

/// Closure of the beta loop: omega1 / Omega = p / q in lowest terms,
/// period = 2 pi p / omega1 = 2 pi q / Omega.
struct LoopSpec
{
  long p = 0;
  long q = 0;
  double period = 0.0;
};

/// Continued-fraction search for p/q with q <= max_den matching omega1/Omega
/// to 1e-12 relative. Throws IncommensurateError if none exists.
LoopSpec commensurate_period(double omega1, double Omega, long max_den = 1000);

/// Shoelace area of a closed polyline in the (Re, Im) plane, counterclockwise
/// positive. First and last samples must agree to 1e-9 (OpenCurveError).
double loop_signed_area(std::span<const cplx> samples);

/// Geometric phase per drive cycle in the adiabatic ellipse limit:
/// 2 pi K'^2 omega1 Omega with K' = QE sqrt(1/(2 mu omega1)) / (omega1^2 - Omega^2).
double ellipse_cycle_phase(const OscillatorParams& params);

struct BerryRow
{
  double Omega = 0.0;
  double phase_per_cycle = 0.0;
  /// phase_per_cycle / Omega
  double ratio = 0.0;
  /// Shoelace area of one cycle of beta.
  double loop_area = 0.0;
  /// |phase_per_cycle + 2 loop_area|
  double area_check_residual = 0.0;
  std::vector<double> cycle_phases;
};

/// Per-cycle geometric phase on the X axis under the homogeneous-free
/// convention, one row per Omega in input order.
std::vector<BerryRow> berry_sweep(const OscillatorParams& params_template,
                                  std::span<const double> omega_list,
                                  int cycles = 1);

} // namespace lrdipole
