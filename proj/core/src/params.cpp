#include "lrdipole/params.hpp"

#include "lrdipole/errors.hpp"

#include <cmath>

namespace lrdipole {

std::string_view to_string(DriveAxis axis)
{
  return axis == DriveAxis::X ? "x" : "y";
}

void OscillatorParams::validate() const
{
  const bool finite = std::isfinite(mu) && std::isfinite(omega1) &&
                      std::isfinite(omega2) && std::isfinite(Omega) &&
                      std::isfinite(Q) && std::isfinite(E) &&
                      std::isfinite(alpha);
  if (!finite)
    throw PreconditionError("oscillator parameters must be finite");
  if (!(mu > 0.0))
    throw PreconditionError("mu must be positive");
  if (!(omega1 > 0.0) || !(omega2 > 0.0))
    throw PreconditionError("omega1 and omega2 must be positive");
  if (Omega < 0.0)
    throw PreconditionError("Omega must be non-negative");
  if (alpha == 0.0)
    throw PreconditionError("alpha must be non-zero");
}

double drive_amplitude(const OscillatorParams& params, DriveAxis axis)
{
  const double omega = params.frequency(axis);
  return params.field_coupling() * std::sqrt(1.0 / (2.0 * params.mu * omega));
}

double drive_value(const OscillatorParams& params, DriveAxis axis, double t)
{
  const double phase = params.Omega * t;
  const double c0 = drive_amplitude(params, axis);
  return axis == DriveAxis::X ? c0 * std::cos(phase) : c0 * std::sin(phase);
}

} // namespace lrdipole
