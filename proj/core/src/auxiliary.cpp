#include "lrdipole/auxiliary.hpp"

#include "lrdipole/errors.hpp"
#include "lrdipole/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lrdipole {

namespace {

constexpr cplx I{0.0, 1.0};

// Sub-step for the quadrature, in units of the fastest period.
constexpr double kQuadratureStep = 0.005;

double resonance_denominator(const OscillatorParams& params, DriveAxis axis,
                             double tolerance)
{
  const double omega = params.frequency(axis);
  const double denom = omega * omega - params.Omega * params.Omega;
  if (std::abs(denom) <= tolerance * omega * omega) {
    std::ostringstream msg;
    msg << "drive frequency Omega=" << params.Omega
        << " is resonant with omega=" << omega
        << "; the closed form is invalid, use the numeric path";
    throw ResonanceError(msg.str());
  }
  return denom;
}

} // namespace

std::array<cplx, 2> aux_rhs(const OscillatorParams& params, DriveAxis axis,
                            std::span<const cplx, 2> state, double t)
{
  const double c = drive_value(params, axis, t);
  const double omega = params.frequency(axis);
  const cplx eta = state[0];
  return {I * (params.alpha * c - eta * omega), I * (std::conj(eta) - eta) * c};
}

void require_off_resonance(const OscillatorParams& params, DriveAxis axis,
                           double tolerance)
{
  resonance_denominator(params, axis, tolerance);
}

ClosedFormCoeffs closed_form_coeffs(const OscillatorParams& params,
                                    InitialCondition ic, double tolerance)
{
  const double denom = resonance_denominator(params, DriveAxis::X, tolerance);
  const double w1 = params.omega1;
  ClosedFormCoeffs coeffs;
  coeffs.K = params.alpha * drive_amplitude(params, DriveAxis::X) / denom;
  if (ic == InitialCondition::DefaultB)
    coeffs.B = -params.alpha * params.field_coupling() *
               std::sqrt(w1 / (2.0 * params.mu)) / denom;
  return coeffs;
}

cplx closed_form_eta(const OscillatorParams& params, double t,
                     InitialCondition ic, double tolerance)
{
  const ClosedFormCoeffs coeffs = closed_form_coeffs(params, ic, tolerance);
  const double w1 = params.omega1;
  const double phase = params.Omega * t;
  const cplx particular =
    coeffs.K * cplx(w1 * std::cos(phase), -params.Omega * std::sin(phase));
  return coeffs.B * std::exp(-I * (w1 * t)) + particular;
}

cplx particular_eta(const OscillatorParams& params, DriveAxis axis, double t,
                    double tolerance)
{
  const double denom = resonance_denominator(params, axis, tolerance);
  const double omega = params.frequency(axis);
  const double scale = params.alpha * drive_amplitude(params, axis) / denom;
  const double c = std::cos(params.Omega * t);
  const double s = std::sin(params.Omega * t);
  if (axis == DriveAxis::X)
    return scale * cplx(omega * c, -params.Omega * s);
  return scale * cplx(omega * s, params.Omega * c);
}

cplx initial_eta(const OscillatorParams& params, DriveAxis axis,
                 InitialCondition ic, double tolerance)
{
  if (ic == InitialCondition::DefaultB)
    return {0.0, 0.0};
  return particular_eta(params, axis, 0.0, tolerance);
}

std::vector<cplx> general_eta(const OscillatorParams& params, DriveAxis axis,
                              cplx eta0, std::span<const double> t_grid)
{
  require_increasing_from_zero(t_grid);
  const double omega = params.frequency(axis);
  const double fastest = std::max({omega, params.Omega, 1e-12});
  const RefinedGrid fine = refine_grid(t_grid, kQuadratureStep / fastest);

  std::vector<cplx> integrand(fine.points.size());
  for (std::size_t i = 0; i < fine.points.size(); ++i) {
    const double t = fine.points[i];
    integrand[i] = std::exp(I * (omega * t)) * drive_value(params, axis, t);
  }
  const std::vector<cplx> integral = cumulative_simpson(fine, integrand);

  std::vector<cplx> eta(t_grid.size());
  for (std::size_t k = 0; k < t_grid.size(); ++k)
    eta[k] = std::exp(-I * (omega * t_grid[k])) *
             (eta0 + I * params.alpha * integral[k]);
  return eta;
}

std::vector<cplx> eta_on_grid(const OscillatorParams& params, DriveAxis axis,
                              std::span<const double> t_grid,
                              const SolverOptions& options)
{
  if (axis == DriveAxis::X && options.path == EtaPath::ClosedForm) {
    std::vector<cplx> eta(t_grid.size());
    for (std::size_t k = 0; k < t_grid.size(); ++k)
      eta[k] = closed_form_eta(params, t_grid[k], options.initial_condition,
                               options.resonance_tolerance);
    return eta;
  }
  const cplx eta0 = initial_eta(params, axis, options.initial_condition,
                                options.resonance_tolerance);
  return general_eta(params, axis, eta0, t_grid);
}

AuxiliaryState auxiliary_state(const OscillatorParams& params, DriveAxis axis,
                               double t, const SolverOptions& options)
{
  cplx eta;
  if (axis == DriveAxis::X && options.path == EtaPath::ClosedForm) {
    eta = closed_form_eta(params, t, options.initial_condition,
                          options.resonance_tolerance);
  } else if (t == 0.0) {
    eta = initial_eta(params, axis, options.initial_condition,
                      options.resonance_tolerance);
  } else {
    const double grid[] = {0.0, t};
    eta = eta_on_grid(params, axis, grid, options).back();
  }
  return {eta, delta_of_eta(eta, params.alpha)};
}

cplx beta_dot(const OscillatorParams& params, DriveAxis axis, cplx beta,
              double t)
{
  return I * (drive_value(params, axis, t) - params.frequency(axis) * beta);
}

std::vector<cplx> beta_on_grid(const OscillatorParams& params, DriveAxis axis,
                               std::span<const double> t_grid,
                               const SolverOptions& options)
{
  std::vector<cplx> beta = eta_on_grid(params, axis, t_grid, options);
  for (cplx& b : beta)
    b = beta_of_eta(b, params.alpha);
  return beta;
}

} // namespace lrdipole
