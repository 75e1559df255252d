#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <cmath>
#include <complex>
#include <vector>

namespace lrdipole::testing {

using cplx = std::complex<double>;

/// Reference configuration: mu = omega1 = 1, Omega = 0.3, QE = 0.2.
inline constexpr double kRefMu = 1.0;
inline constexpr double kRefOmega1 = 1.0;
inline constexpr double kRefOmega2 = 1.3;
inline constexpr double kRefOmega = 0.3;
inline constexpr double kRefQ = 0.2;
inline constexpr double kRefE = 1.0;

/// Coherent state exp(-|g|^2/2) g^n / sqrt(n!) by the power series.
inline std::vector<cplx> coherent_state_series(cplx gamma, int dim)
{
  std::vector<cplx> amps(dim);
  cplx term = std::exp(-0.5 * std::norm(gamma));
  for (int n = 0; n < dim; ++n) {
    amps[n] = term;
    term *= gamma / std::sqrt(static_cast<double>(n + 1));
  }
  return amps;
}

/// Hand-rolled RK4 for eta' = i (alpha c0 cos(Omega t) - omega eta), kept
/// separate from the library integrator.
inline cplx rk4_cosine_eta(double alpha, double c0, double omega, double Omega,
                           cplx eta0, double t1, double dt)
{
  const cplx I{0.0, 1.0};
  auto f = [&](double t, cplx eta) {
    return I * (alpha * c0 * std::cos(Omega * t) - omega * eta);
  };
  const auto steps = static_cast<long>(std::llround(t1 / dt));
  const double h = t1 / static_cast<double>(steps);
  cplx y = eta0;
  for (long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * h;
    const cplx k1 = f(t, y);
    const cplx k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
    const cplx k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
    const cplx k4 = f(t + h, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x,
                        const std::vector<double>& y)
{
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

} // namespace lrdipole::testing
