#include "lrdipole/quadrature.hpp"

#include "lrdipole/errors.hpp"

#include <cmath>
#include <string>

namespace lrdipole {

RefinedGrid refine_grid(std::span<const double> coarse, double max_step)
{
  if (!(max_step > 0.0))
    throw PreconditionError("refine_grid: max_step must be positive");
  RefinedGrid out;
  if (coarse.empty())
    return out;
  out.points.push_back(coarse[0]);
  out.anchors.push_back(0);
  for (std::size_t k = 1; k < coarse.size(); ++k) {
    const double a = coarse[k - 1];
    const double b = coarse[k];
    auto pieces = static_cast<std::size_t>(std::ceil((b - a) / max_step));
    if (pieces < 2)
      pieces = 2;
    if (pieces % 2 != 0)
      ++pieces;
    const double h = (b - a) / static_cast<double>(pieces);
    for (std::size_t j = 1; j < pieces; ++j)
      out.points.push_back(a + static_cast<double>(j) * h);
    out.points.push_back(b);
    out.anchors.push_back(out.points.size() - 1);
  }
  return out;
}

void require_increasing_from_zero(std::span<const double> grid)
{
  if (grid.empty())
    throw GridError("time grid is empty");
  if (grid[0] != 0.0)
    throw GridError("time grid must start at 0, got " + std::to_string(grid[0]));
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1]))
      throw GridError("time grid is not strictly increasing at index " +
                      std::to_string(k));
}

void require_uniform_from_zero(std::span<const double> grid)
{
  require_increasing_from_zero(grid);
  if (grid.size() < 3)
    return;
  const double h = grid[1] - grid[0];
  for (std::size_t k = 2; k < grid.size(); ++k) {
    const double step = grid[k] - grid[k - 1];
    if (std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(grid[k])))
      throw GridError("time grid is not uniform at index " + std::to_string(k));
  }
}

namespace {

template <typename T>
T simpson_impl(std::span<const T> f, std::size_t first, std::size_t last,
               double h)
{
  if ((last - first) % 2 != 0)
    throw PreconditionError("simpson: needs an even number of intervals");
  T odd{}, even{};
  for (std::size_t i = first + 1; i < last; i += 2)
    odd += f[i];
  for (std::size_t i = first + 2; i < last; i += 2)
    even += f[i];
  return h / 3.0 * (f[first] + f[last] + 4.0 * odd + 2.0 * even);
}

template <typename T>
std::vector<T> cumulative_impl(const RefinedGrid& grid, std::span<const T> f)
{
  if (f.size() != grid.points.size())
    throw DimensionError("cumulative_simpson: sample count does not match grid");
  std::vector<T> out;
  out.reserve(grid.anchors.size());
  T running{};
  out.push_back(running);
  for (std::size_t k = 1; k < grid.anchors.size(); ++k) {
    const std::size_t first = grid.anchors[k - 1];
    const std::size_t last = grid.anchors[k];
    const double h = (grid.points[last] - grid.points[first]) /
                     static_cast<double>(last - first);
    running += simpson_impl(f, first, last, h);
    out.push_back(running);
  }
  return out;
}

} // namespace

double simpson(std::span<const double> f, std::size_t first, std::size_t last,
               double h)
{
  return simpson_impl(f, first, last, h);
}

cplx simpson(std::span<const cplx> f, std::size_t first, std::size_t last,
             double h)
{
  return simpson_impl(f, first, last, h);
}

std::vector<double> cumulative_simpson(const RefinedGrid& grid,
                                       std::span<const double> f)
{
  return cumulative_impl(grid, f);
}

std::vector<cplx> cumulative_simpson(const RefinedGrid& grid,
                                     std::span<const cplx> f)
{
  return cumulative_impl(grid, f);
}

std::vector<double> uniform_grid(double t_max, double dt)
{
  if (!(t_max > 0.0) || !(dt > 0.0))
    throw PreconditionError("uniform_grid: t_max and dt must be positive");
  const auto n = static_cast<std::size_t>(std::llround(t_max / dt));
  std::vector<double> grid(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    grid[k] = static_cast<double>(k) * dt;
  return grid;
}

} // namespace lrdipole
