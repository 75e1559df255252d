#include "lrdipole/assembly.hpp"

#include "lrdipole/errors.hpp"

#include <cmath>
#include <string>

namespace lrdipole {

namespace {

FockVector axis_state(const OscillatorParams& params, DriveAxis axis, int n,
                      double t, Eigen::Index N, const SolverOptions& options)
{
  try {
    return analytic_state(params, axis, n, t, N, options);
  } catch (Error& e) {
    e.add_context(std::string(to_string(axis)) + " axis");
    throw;
  }
}

} // namespace

CompositeState full_state(const OscillatorParams& params, int n1, int n2,
                          double t, Eigen::Index N,
                          const SolverOptions& options)
{
  params.validate();
  return CompositeState{
    t,
    axis_state(params, DriveAxis::X, n1, t, N, options),
    axis_state(params, DriveAxis::Y, n2, t, N, options),
    -0.5 * (params.omega1 + params.omega2) * t,
  };
}

DipolePosition dipole_expectation(const CompositeState& state,
                                  const OscillatorParams& params)
{
  const cplx ax = expect_a(state.x_state);
  const cplx ay = expect_a(state.y_state);
  return {2.0 * ax.real() / std::sqrt(2.0 * params.mu * params.omega1),
          2.0 * ay.real() / std::sqrt(2.0 * params.mu * params.omega2)};
}

} // namespace lrdipole
