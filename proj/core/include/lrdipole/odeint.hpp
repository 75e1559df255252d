#pragma once

#include "lrdipole/params.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace lrdipole {

/// Right-hand side of a complex first-order system: writes dy/dt into `dydt`.
using OdeRhs =
  std::function<void(double t, std::span<const cplx> y, std::span<cplx> dydt)>;

struct OdeProblem
{
  OdeRhs rhs;
  std::vector<cplx> y0;
  double t0 = 0.0;
  double t1 = 1.0;
  double dt = 1e-3;
  /// Keep every k-th step in the returned trajectory. The endpoint is always
  /// kept.
  std::size_t record_every = 1;

  std::size_t dimension() const { return y0.size(); }
  /// Number of fixed steps; the actual step is (t1 - t0) / step_count() so
  /// that t1 is hit exactly.
  std::size_t step_count() const;
};

/// Sampled solution, states stored contiguously (one row per time).
class Trajectory
{
public:
  Trajectory(std::size_t dimension) : dimension_(dimension) {}

  std::size_t size() const { return times_.size(); }
  std::size_t dimension() const { return dimension_; }

  double time(std::size_t i) const { return times_[i]; }
  std::span<const cplx> state(std::size_t i) const
  {
    return {states_.data() + i * dimension_, dimension_};
  }
  std::span<const double> times() const { return times_; }

  std::span<const cplx> back() const { return state(size() - 1); }

  void push(double t, std::span<const cplx> y);

private:
  std::size_t dimension_;
  std::vector<double> times_;
  std::vector<cplx> states_;
};

/// Classical fixed-step fourth-order Runge-Kutta.
///
/// Throws PreconditionError for dt <= 0 or t1 <= t0, NonFiniteError as soon as
/// any component stops being finite.
Trajectory integrate_rk4(const OdeProblem& problem);

} // namespace lrdipole
