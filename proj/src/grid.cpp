#include "mie/grid.hpp"

#include <cmath>

#include "mie/errors.hpp"

namespace mie {

void RadialGrid::validate() const {
  if (!std::isfinite(r_min) || r_min <= 0.0) throw DomainError("grid r_min must be > 0");
  if (!std::isfinite(r_max) || r_max <= r_min) throw DomainError("grid r_max must exceed r_min");
  if (points < 16) throw DomainError("grid needs at least 16 points");
}

double RadialGrid::step() const {
  const double span =
      spacing == GridSpacing::Uniform ? r_max - r_min : std::log(r_max) - std::log(r_min);
  return span / (points - 1);
}

std::vector<double> RadialGrid::abscissae() const {
  validate();
  std::vector<double> r(static_cast<std::size_t>(points));
  const double h = step();
  if (spacing == GridSpacing::Uniform) {
    for (int i = 0; i < points; ++i) r[i] = r_min + i * h;
  } else {
    const double t0 = std::log(r_min);
    for (int i = 0; i < points; ++i) r[i] = std::exp(t0 + i * h);
  }
  r.front() = r_min;
  r.back() = r_max;
  return r;
}

RadialGrid RadialGrid::refined() const {
  RadialGrid g = *this;
  g.points = 2 * points - 1;
  return g;
}

double simpson(const RadialGrid& grid, std::span<const double> f) {
  grid.validate();
  if (f.size() != static_cast<std::size_t>(grid.points)) {
    throw DomainError("simpson: sample count does not match grid");
  }
  const double h = grid.step();
  std::vector<double> g(f.begin(), f.end());
  if (grid.spacing == GridSpacing::LogUniform) {
    // dr = r dt
    const auto r = grid.abscissae();
    for (std::size_t i = 0; i < g.size(); ++i) g[i] *= r[i];
  }
  const std::size_t n = g.size();
  std::size_t simpson_end = n;  // odd count of nodes handled by Simpson
  double tail = 0.0;
  if (n % 2 == 0) {
    simpson_end = n - 3;
    tail = 3.0 * h / 8.0 * (g[n - 4] + 3.0 * g[n - 3] + 3.0 * g[n - 2] + g[n - 1]);
  }
  double sum = g[0] + g[simpson_end - 1];
  for (std::size_t i = 1; i + 1 < simpson_end; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * g[i];
  return h / 3.0 * sum + tail;
}

}  // namespace mie
