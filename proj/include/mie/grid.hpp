#pragma once

#include <span>
#include <vector>

namespace mie {

enum class GridSpacing { Uniform, LogUniform };

/// Radial abscissae on [r_min, r_max], uniform in r or in ln r.
struct RadialGrid {
  double r_min = 1e-4;
  double r_max = 40.0;
  int points = 2001;
  GridSpacing spacing = GridSpacing::LogUniform;

  /// Throws DomainError unless 0 < r_min < r_max and points >= 16.
  void validate() const;
  /// Step in r (Uniform) or in ln r (LogUniform).
  double step() const;
  std::vector<double> abscissae() const;
  /// Same interval with the step halved (2 points - 1 nodes).
  RadialGrid refined() const;
};

/// Composite Simpson approximation of the integral of f(r) dr over the grid,
/// with f sampled at grid.abscissae(). An even point count closes with the
/// 3/8 rule on the last three intervals.
double simpson(const RadialGrid& grid, std::span<const double> f);

}  // namespace mie
