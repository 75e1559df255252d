#pragma once

#include <complex>
#include <string_view>

namespace lrdipole {

using cplx = std::complex<double>;

/// Which Cartesian oscillator of the dipole is being driven.
///   X: omega1 with c(t) = c0 cos(Omega t)
///   Y: omega2 with s(t) = s0 sin(Omega t)
enum class DriveAxis
{
  X,
  Y
};

std::string_view to_string(DriveAxis axis);

/// Physical constants of the dipole oscillator in a rotating field (hbar = 1).
///
/// Q and E only ever enter through the product Q*E.
struct OscillatorParams
{
  double mu = 1.0;
  double omega1 = 1.0;
  double omega2 = 1.0;
  double Omega = 0.0;
  double Q = 0.0;
  double E = 0.0;
  /// Scale of the invariant. Physical outputs do not depend on it.
  double alpha = 1.0;

  /// Throws PreconditionError unless mu, omega1, omega2 > 0, Omega >= 0,
  /// alpha != 0 and everything is finite.
  void validate() const;

  double field_coupling() const { return Q * E; }

  double frequency(DriveAxis axis) const
  {
    return axis == DriveAxis::X ? omega1 : omega2;
  }
};

/// Constant prefactor of the drive: QE * sqrt(1 / (2 mu omega)).
double drive_amplitude(const OscillatorParams& params, DriveAxis axis);

/// c(t) for the X axis, s(t) for the Y axis.
double drive_value(const OscillatorParams& params, DriveAxis axis, double t);

} // namespace lrdipole
