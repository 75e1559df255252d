#pragma once

#include "lrdipole/params.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lrdipole {

/// A grid with every interval split into an even number of equal sub-steps,
/// so composite Simpson applies interval by interval.
struct RefinedGrid
{
  std::vector<double> points;
  /// points[anchors[k]] == coarse[k]
  std::vector<std::size_t> anchors;
};

/// Splits each interval of `coarse` into an even number of pieces no wider
/// than `max_step`.
RefinedGrid refine_grid(std::span<const double> coarse, double max_step);

/// Throws GridError unless the grid is non-empty, starts at 0 and is strictly
/// increasing.
void require_increasing_from_zero(std::span<const double> grid);

/// Same as above, and additionally uniform to 1e-9 relative.
void require_uniform_from_zero(std::span<const double> grid);

/// Composite Simpson over samples f[first..last] (last - first even) spaced h.
double simpson(std::span<const double> f, std::size_t first, std::size_t last,
               double h);
cplx simpson(std::span<const cplx> f, std::size_t first, std::size_t last,
             double h);

/// Running integral of f sampled on a refined grid, reported at the anchors.
std::vector<double> cumulative_simpson(const RefinedGrid& grid,
                                       std::span<const double> f);
std::vector<cplx> cumulative_simpson(const RefinedGrid& grid,
                                     std::span<const cplx> f);

/// Uniform grid 0, dt, ..., n*dt with n = round(t_max / dt).
std::vector<double> uniform_grid(double t_max, double dt);

} // namespace lrdipole
