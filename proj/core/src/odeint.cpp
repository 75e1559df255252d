#include "lrdipole/odeint.hpp"

#include "lrdipole/errors.hpp"

#include <cmath>
#include <string>

namespace lrdipole {

std::size_t OdeProblem::step_count() const
{
  const double steps = std::round((t1 - t0) / dt);
  return steps < 1.0 ? 1 : static_cast<std::size_t>(steps);
}

void Trajectory::push(double t, std::span<const cplx> y)
{
  times_.push_back(t);
  states_.insert(states_.end(), y.begin(), y.end());
}

namespace {

bool all_finite(std::span<const cplx> y)
{
  for (const cplx& v : y)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      return false;
  return true;
}

} // namespace

Trajectory integrate_rk4(const OdeProblem& problem)
{
  if (!problem.rhs)
    throw PreconditionError("integrate_rk4: missing right-hand side");
  if (!(problem.dt > 0.0))
    throw PreconditionError("integrate_rk4: dt must be positive");
  if (!(problem.t1 > problem.t0))
    throw PreconditionError("integrate_rk4: t1 must exceed t0");
  if (problem.y0.empty())
    throw PreconditionError("integrate_rk4: empty initial state");

  const std::size_t dim = problem.dimension();
  const std::size_t steps = problem.step_count();
  const std::size_t every = problem.record_every == 0 ? 1 : problem.record_every;
  const double h = (problem.t1 - problem.t0) / static_cast<double>(steps);

  std::vector<cplx> y = problem.y0;
  std::vector<cplx> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  Trajectory out(dim);
  out.push(problem.t0, y);

  for (std::size_t step = 0; step < steps; ++step) {
    const double t = problem.t0 + static_cast<double>(step) * h;

    problem.rhs(t, y, k1);
    for (std::size_t i = 0; i < dim; ++i)
      tmp[i] = y[i] + 0.5 * h * k1[i];
    problem.rhs(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < dim; ++i)
      tmp[i] = y[i] + 0.5 * h * k2[i];
    problem.rhs(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < dim; ++i)
      tmp[i] = y[i] + h * k3[i];
    problem.rhs(t + h, tmp, k4);

    for (std::size_t i = 0; i < dim; ++i)
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    if (!all_finite(y))
      throw NonFiniteError("integrate_rk4: state became non-finite at t=" +
                           std::to_string(t + h));

    const bool last = step + 1 == steps;
    if (last || (step + 1) % every == 0) {
      const double t_next =
        last ? problem.t1 : problem.t0 + static_cast<double>(step + 1) * h;
      out.push(t_next, y);
    }
  }
  return out;
}

} // namespace lrdipole
