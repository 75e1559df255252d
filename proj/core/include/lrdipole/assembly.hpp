#pragma once

#include "lrdipole/fock.hpp"

namespace lrdipole {

/// |Psi(t)> = exp(i global_phase) |Psi1(t)> |Psi2(t)>, kept factored.
struct CompositeState
{
  double t = 0.0;
  FockVector x_state;
  FockVector y_state;
  /// -(omega1 + omega2) t / 2, from the zero-point offset of H.
  double global_phase = 0.0;
};

/// Both axes from |n1>|n2> at t = 0. Errors carry the failing axis in their
/// message.
CompositeState full_state(const OscillatorParams& params, int n1, int n2,
                          double t, Eigen::Index N,
                          const SolverOptions& options = {});

struct DipolePosition
{
  double x = 0.0;
  double y = 0.0;
};

/// <x> = 2 Re<a> / sqrt(2 mu omega1), <y> likewise with b and omega2.
DipolePosition dipole_expectation(const CompositeState& state,
                                  const OscillatorParams& params);

} // namespace lrdipole
