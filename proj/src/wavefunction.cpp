#include "mie/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mie/errors.hpp"
#include "mie/specialfn.hpp"

namespace mie {

LogRadial log_radial_wavefunction(const CoulombBarrier& problem, QuantumState state, double r) {
  if (!std::isfinite(r) || r <= 0.0) throw DomainError("r must be finite and > 0");
  const ReducedParams rp = reduced_params(problem, state);
  const double poly = laguerre(state.n, 2.0 * rp.Lambda + 1.0, 2.0 * rp.kappa * r);
  if (poly == 0.0) return LogRadial{-INFINITY, 0};
  const double log_c = log_normalization_constant(state.n, rp.Lambda, rp.kappa);
  return LogRadial{log_c + rp.Lambda * std::log(r) - rp.kappa * r + std::log(std::abs(poly)),
                   poly > 0.0 ? 1 : -1};
}

double radial_wavefunction(const CoulombBarrier& problem, QuantumState state, double r) {
  const LogRadial lr = log_radial_wavefunction(problem, state, r);
  if (lr.sign == 0) return 0.0;
  return lr.sign * std::exp(lr.log_abs);
}

double radial_wavefunction(const PhysQty& mu, const PhysQty& V0, const PhysQty& a,
                           QuantumState state, const PhysQty& r) {
  if (r.dimension != Dimension::Length) throw UnitError("r must be a length");
  require_same_system({&a, &r});
  return radial_wavefunction(CoulombBarrier::from_mie(mu, V0, a), state, r.value);
}

RadialGrid default_grid(const CoulombBarrier& problem, QuantumState state) {
  const ReducedParams rp = reduced_params(problem, state);
  const double scale = problem.length_scale();
  const double r_max = std::min(40.0 * (state.n + rp.Lambda + 1.0) / rp.kappa, 1e6 * scale);
  return RadialGrid{1e-4 * scale, r_max, 2001, GridSpacing::LogUniform};
}

RadialFunction sample(const CoulombBarrier& problem, QuantumState state, const RadialGrid& grid) {
  RadialFunction f;
  f.grid = grid;
  f.state = state;
  f.r = grid.abscissae();
  f.R.resize(f.r.size());
  f.u.resize(f.r.size());
  std::vector<double> density(f.r.size());
  for (std::size_t i = 0; i < f.r.size(); ++i) {
    f.R[i] = radial_wavefunction(problem, state, f.r[i]);
    f.u[i] = f.r[i] * f.R[i];
    density[i] = f.u[i] * f.u[i];
  }
  f.norm_check = simpson(grid, density);
  f.coarse_grid = std::abs(f.norm_check - 1.0) > 1e-3;
  return f;
}

RadialFunction sample(const PhysQty& mu, const PhysQty& V0, const PhysQty& a, QuantumState state,
                      const RadialGrid& grid) {
  return sample(CoulombBarrier::from_mie(mu, V0, a), state, grid);
}

int count_nodes(const RadialFunction& f) {
  int nodes = 0;
  int last_sign = 0;
  for (double v : f.u) {
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

namespace {

// Expectation grids reach much closer to the origin than the sampling grid so
// that r^-2 weights lose nothing below r_min.
RadialGrid expectation_grid(const CoulombBarrier& problem, QuantumState state) {
  RadialGrid g = default_grid(problem, state);
  g.r_min = 1e-12 * problem.length_scale();
  g.points = 4001;
  return g;
}

double weight_of(const CoulombBarrier& p, Observable o, double r) {
  switch (o) {
    case Observable::InvR:
      return 1.0 / r;
    case Observable::InvR2:
      return 1.0 / (r * r);
    case Observable::V:
      return p.potential(r);
    case Observable::rVprime:
      return p.attraction / r - 2.0 * p.barrier / (r * r);
    case Observable::T:
      break;
  }
  throw DomainError("observable has no pointwise weight");
}

double integrate_weighted(const CoulombBarrier& p, QuantumState s, Observable o,
                          const RadialGrid& grid) {
  const auto r = grid.abscissae();
  std::vector<double> f(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double u = r[i] * radial_wavefunction(p, s, r[i]);
    f[i] = weight_of(p, o, r[i]) * u * u;
  }
  return simpson(grid, f);
}

}  // namespace

double expectation(const CoulombBarrier& problem, QuantumState state, Observable observable) {
  if (observable == Observable::T) {
    const double e = bound_energy(problem, state).energy.value;
    return e - expectation(problem, state, Observable::V);
  }
  const RadialGrid grid = expectation_grid(problem, state);
  const double coarse = integrate_weighted(problem, state, observable, grid);
  const double fine = integrate_weighted(problem, state, observable, grid.refined());
  const double scale = std::max(std::abs(fine), 1e-300);
  if (std::abs(fine - coarse) > 1e-9 * scale) {
    throw QuadratureError("expectation value did not converge under grid refinement (estimate " +
                              std::to_string(fine) + ")",
                          fine);
  }
  return fine;
}

double expectation(const PhysQty& mu, const PhysQty& V0, const PhysQty& a, QuantumState state,
                   Observable observable) {
  return expectation(CoulombBarrier::from_mie(mu, V0, a), state, observable);
}

double overlap(const CoulombBarrier& problem, QuantumState s1, QuantumState s2) {
  const RadialGrid g1 = default_grid(problem, s1);
  const RadialGrid g2 = default_grid(problem, s2);
  const RadialGrid grid{std::min(g1.r_min, g2.r_min), std::max(g1.r_max, g2.r_max), 4001,
                        GridSpacing::LogUniform};
  const auto r = grid.abscissae();
  std::vector<double> f(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    f[i] = radial_wavefunction(problem, s1, r[i]) * radial_wavefunction(problem, s2, r[i]) *
           r[i] * r[i];
  }
  return simpson(grid, f);
}

double small_r_exponent(const CoulombBarrier& problem, QuantumState state) {
  const double scale = problem.length_scale();
  const double r1 = 1e-6 * scale;
  const double r2 = 1e-5 * scale;
  const double r3 = 1e-4 * scale;
  const LogRadial y1 = log_radial_wavefunction(problem, state, r1);
  const LogRadial y2 = log_radial_wavefunction(problem, state, r2);
  const LogRadial y3 = log_radial_wavefunction(problem, state, r3);
  if (y1.sign == 0 || y2.sign == 0 || y3.sign == 0) {
    throw DomainError("wavefunction vanishes at a small-r sample point");
  }
  const double dt = std::log(10.0);
  const double d1 = y2.log_abs - y1.log_abs;
  const double d2 = y3.log_abs - y2.log_abs;
  const double s = (d2 - d1) / ((r3 - r2) - (r2 - r1));
  return (d1 - s * (r2 - r1)) / dt;
}

}  // namespace mie
