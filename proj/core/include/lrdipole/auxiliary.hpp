#pragma once

// Auxiliary equations of the invariant I(t) = alpha a^dag a + eta a^dag
// + conj(eta) a + delta:
//
//   d(eta)/dt   = i (alpha c(t) - omega eta)
//   d(delta)/dt = i (conj(eta) - eta) c(t)
//
// with beta = eta / alpha the displacement that diagonalizes I(t).

#include "lrdipole/params.hpp"

#include <array>
#include <span>
#include <vector>

namespace lrdipole {

/// Relative distance |omega^2 - Omega^2| / omega^2 below which the closed form
/// is refused.
inline constexpr double kResonanceTolerance = 1e-6;

enum class InitialCondition
{
  /// eta(0) = 0, so the evolution operator is the identity at t = 0.
  DefaultB,
  /// No homogeneous part (B = 0): beta traces a pure ellipse.
  HomogeneousFree
};

enum class EtaPath
{
  ClosedForm,
  Numeric
};

struct SolverOptions
{
  InitialCondition initial_condition = InitialCondition::DefaultB;
  /// The Y axis has no closed form and always takes the numeric path.
  EtaPath path = EtaPath::ClosedForm;
  double resonance_tolerance = kResonanceTolerance;
};

struct AuxiliaryState
{
  cplx eta;
  double delta = 0.0;
};

/// eta(t) = B exp(-i omega1 t) + K (omega1 cos(Omega t) - i Omega sin(Omega t))
struct ClosedFormCoeffs
{
  cplx B;
  double K = 0.0;
};

/// Derivative of (eta, delta); delta is carried as complex so numerical
/// imaginary drift stays observable.
std::array<cplx, 2> aux_rhs(const OscillatorParams& params, DriveAxis axis,
                            std::span<const cplx, 2> state, double t);

/// Throws ResonanceError when |omega^2 - Omega^2| <= tolerance * omega^2.
void require_off_resonance(const OscillatorParams& params, DriveAxis axis,
                           double tolerance = kResonanceTolerance);

ClosedFormCoeffs closed_form_coeffs(
  const OscillatorParams& params,
  InitialCondition ic = InitialCondition::DefaultB,
  double tolerance = kResonanceTolerance);

/// Closed-form eta(t) for the cosine (X) drive.
cplx closed_form_eta(const OscillatorParams& params, double t,
                     InitialCondition ic = InitialCondition::DefaultB,
                     double tolerance = kResonanceTolerance);

/// Particular (drive-following) solution for either axis. For the sine drive
/// it is alpha s0 (omega2 sin(Omega t) + i Omega cos(Omega t)) / (omega2^2 - Omega^2).
cplx particular_eta(const OscillatorParams& params, DriveAxis axis, double t,
                    double tolerance = kResonanceTolerance);

/// eta(0) for the chosen convention.
cplx initial_eta(const OscillatorParams& params, DriveAxis axis,
                 InitialCondition ic, double tolerance = kResonanceTolerance);

/// Variation of parameters:
///   eta(t) = exp(-i omega t) [eta0 + i alpha Int_0^t exp(i omega s) c(s) ds]
/// with the integral done by composite Simpson on a refinement of `t_grid`.
/// Throws GridError unless the grid starts at 0 and strictly increases.
std::vector<cplx> general_eta(const OscillatorParams& params, DriveAxis axis,
                              cplx eta0, std::span<const double> t_grid);

/// eta on an arbitrary grid from 0, dispatching closed form vs numeric.
std::vector<cplx> eta_on_grid(const OscillatorParams& params, DriveAxis axis,
                              std::span<const double> t_grid,
                              const SolverOptions& options = {});

/// Single-time convenience: eta(t) and delta = |eta|^2 / alpha.
AuxiliaryState auxiliary_state(const OscillatorParams& params, DriveAxis axis,
                               double t, const SolverOptions& options = {});

inline cplx beta_of_eta(cplx eta, double alpha)
{
  return eta / alpha;
}

inline double delta_of_eta(cplx eta, double alpha)
{
  return std::norm(eta) / alpha;
}

/// d(beta)/dt = i (c(t) - omega beta).
cplx beta_dot(const OscillatorParams& params, DriveAxis axis, cplx beta,
              double t);

/// beta = eta / alpha on a grid.
std::vector<cplx> beta_on_grid(const OscillatorParams& params, DriveAxis axis,
                               std::span<const double> t_grid,
                               const SolverOptions& options = {});

} // namespace lrdipole
