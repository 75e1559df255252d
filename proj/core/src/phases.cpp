#include "lrdipole/phases.hpp"

#include "lrdipole/errors.hpp"
#include "lrdipole/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace lrdipole {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kQuadratureStep = 0.005;
constexpr std::size_t kLoopSamples = 100000;

double fastest_frequency(const OscillatorParams& params, DriveAxis axis)
{
  return std::max({params.frequency(axis), params.Omega, 1e-12});
}

} // namespace

PhaseRates phase_rates(const OscillatorParams& params, DriveAxis axis, int n,
                       double t, cplx beta)
{
  const double omega = params.frequency(axis);
  const double c = drive_value(params, axis, t);
  const cplx rate = beta_dot(params, axis, beta, t);
  PhaseRates out;
  // (i/2)(b' b* - b'* b) = -Im(b* b')
  out.geometric = -(std::conj(beta) * rate).imag();
  out.dynamical = n * omega + omega * std::norm(beta) - 2.0 * c * beta.real();
  return out;
}

PhaseRates phase_integrand(const OscillatorParams& params, DriveAxis axis,
                           int n, double t, const SolverOptions& options)
{
  const AuxiliaryState aux = auxiliary_state(params, axis, t, options);
  return phase_rates(params, axis, n, t, beta_of_eta(aux.eta, params.alpha));
}

std::vector<PhaseBreakdown> accumulate_phases(const OscillatorParams& params,
                                              DriveAxis axis, int n,
                                              std::span<const double> t_grid,
                                              const SolverOptions& options)
{
  require_uniform_from_zero(t_grid);
  if (n < 0)
    throw PreconditionError("accumulate_phases: quantum number must be >= 0");

  const RefinedGrid fine =
    refine_grid(t_grid, kQuadratureStep / fastest_frequency(params, axis));
  const std::vector<cplx> beta =
    beta_on_grid(params, axis, fine.points, options);

  std::vector<double> geometric_rate(beta.size());
  std::vector<double> dynamical_rate(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const PhaseRates r = phase_rates(params, axis, n, fine.points[i], beta[i]);
    geometric_rate[i] = r.geometric;
    dynamical_rate[i] = r.dynamical;
  }
  const std::vector<double> geometric =
    cumulative_simpson(fine, geometric_rate);
  const std::vector<double> dynamical =
    cumulative_simpson(fine, dynamical_rate);

  std::vector<PhaseBreakdown> out(t_grid.size());
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    out[k].t = t_grid[k];
    out[k].geometric = geometric[k];
    out[k].dynamical = dynamical[k];
    out[k].total = dynamical[k] - geometric[k];
  }
  return out;
}

PhaseBreakdown phases_at(const OscillatorParams& params, DriveAxis axis, int n,
                         double t, const SolverOptions& options)
{
  if (t == 0.0)
    return {};
  const double grid[] = {0.0, t};
  return accumulate_phases(params, axis, n, grid, options).back();
}

LoopSpec commensurate_period(double omega1, double Omega, long max_den)
{
  if (!(Omega > 0.0) || !(omega1 > 0.0))
    throw PreconditionError("commensurate_period: frequencies must be positive");
  const double ratio = omega1 / Omega;

  // Convergents h/k of the continued fraction of ratio.
  long h_prev = 1, h = static_cast<long>(std::floor(ratio));
  long k_prev = 0, k = 1;
  double rest = ratio - std::floor(ratio);
  for (int iter = 0; iter < 64; ++iter) {
    if (k > max_den)
      break;
    if (std::abs(static_cast<double>(h) / static_cast<double>(k) - ratio) <=
        1e-12 * ratio) {
      LoopSpec spec;
      spec.p = h;
      spec.q = k;
      spec.period = kTwoPi * static_cast<double>(h) / omega1;
      return spec;
    }
    if (rest < 1e-15)
      break;
    const double inv = 1.0 / rest;
    const auto a = static_cast<long>(std::floor(inv));
    rest = inv - static_cast<double>(a);
    const long h_next = a * h + h_prev;
    const long k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  std::ostringstream msg;
  msg << "omega1/Omega = " << ratio
      << " has no rational approximation with denominator <= " << max_den;
  throw IncommensurateError(msg.str());
}

double loop_signed_area(std::span<const cplx> samples)
{
  if (samples.size() < 2)
    throw OpenCurveError("loop_signed_area: need at least two samples");
  if (std::abs(samples.front() - samples.back()) > 1e-9)
    throw OpenCurveError("loop_signed_area: first and last samples differ");
  double twice_area = 0.0;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const cplx a = samples[i];
    const cplx b = samples[i + 1];
    twice_area += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * twice_area;
}

double ellipse_cycle_phase(const OscillatorParams& params)
{
  const double w1 = params.omega1;
  const double k = drive_amplitude(params, DriveAxis::X) /
                   (w1 * w1 - params.Omega * params.Omega);
  return kTwoPi * k * k * w1 * params.Omega;
}

std::vector<BerryRow> berry_sweep(const OscillatorParams& params_template,
                                  std::span<const double> omega_list,
                                  int cycles)
{
  if (cycles < 1)
    throw PreconditionError("berry_sweep: cycles must be >= 1");
  params_template.validate();

  SolverOptions options;
  options.initial_condition = InitialCondition::HomogeneousFree;

  std::vector<BerryRow> rows;
  rows.reserve(omega_list.size());
  for (const double Omega : omega_list) {
    if (!(Omega > 0.0) || !(Omega < 0.5 * params_template.omega1))
      throw PreconditionError(
        "berry_sweep: every Omega must lie in (0, omega1/2)");
    OscillatorParams params = params_template;
    params.Omega = Omega;
    const double period = kTwoPi / Omega;

    std::vector<double> grid(static_cast<std::size_t>(cycles) + 1);
    for (std::size_t c = 0; c < grid.size(); ++c)
      grid[c] = static_cast<double>(c) * period;
    const std::vector<PhaseBreakdown> phases =
      accumulate_phases(params, DriveAxis::X, 0, grid, options);

    BerryRow row;
    row.Omega = Omega;
    for (std::size_t c = 1; c < phases.size(); ++c)
      row.cycle_phases.push_back(phases[c].geometric -
                                 phases[c - 1].geometric);
    row.phase_per_cycle = phases.back().geometric / cycles;
    row.ratio = row.phase_per_cycle / Omega;

    std::vector<double> loop_times(kLoopSamples + 1);
    for (std::size_t i = 0; i <= kLoopSamples; ++i)
      loop_times[i] =
        period * static_cast<double>(i) / static_cast<double>(kLoopSamples);
    std::vector<cplx> loop =
      beta_on_grid(params, DriveAxis::X, loop_times, options);
    row.loop_area = loop_signed_area(loop);
    row.area_check_residual = std::abs(row.cycle_phases.front() + 2.0 * row.loop_area);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace lrdipole
