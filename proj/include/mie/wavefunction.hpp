#pragma once

#include <vector>

#include "mie/grid.hpp"
#include "mie/spectrum.hpp"
#include "mie/units.hpp"

namespace mie {

/// R and u = r R sampled on a grid, with the quadrature norm of R.
struct RadialFunction {
  RadialGrid grid;
  std::vector<double> r;
  std::vector<double> R;
  std::vector<double> u;
  QuantumState state;
  double norm_check = 0.0;     // Simpson value of the integral of R^2 r^2 dr
  bool coarse_grid = false;    // |norm_check - 1| > 1e-3
};

/// ln|R| and the sign of R, for arguments where R itself under/overflows.
struct LogRadial {
  double log_abs = 0.0;
  int sign = 0;  // 0 at a node of the polynomial
};

/// R(r) = C_n r^Lambda e^{-kappa r} L_n^{2 Lambda + 1}(2 kappa r), normalized
/// so that the integral of R^2 r^2 dr is 1. r in the problem's length unit.
LogRadial log_radial_wavefunction(const CoulombBarrier& problem, QuantumState state, double r);
double radial_wavefunction(const CoulombBarrier& problem, QuantumState state, double r);
double radial_wavefunction(const PhysQty& mu, const PhysQty& V0, const PhysQty& a,
                           QuantumState state, const PhysQty& r);

/// LogUniform grid on [1e-4 L, 40 (n + Lambda + 1) / kappa] with 2001 points,
/// L = problem.length_scale(); the upper end is capped at 1e6 L.
RadialGrid default_grid(const CoulombBarrier& problem, QuantumState state);

RadialFunction sample(const CoulombBarrier& problem, QuantumState state, const RadialGrid& grid);
RadialFunction sample(const PhysQty& mu, const PhysQty& V0, const PhysQty& a, QuantumState state,
                      const RadialGrid& grid);

/// Strict sign changes of u on the sampled grid; exact zeros are skipped.
int count_nodes(const RadialFunction& f);

enum class Observable { InvR, InvR2, V, T, rVprime };

/// <O> = integral of O(r) R^2 r^2 dr. <T> is E - <V>, with E from the closed
/// form. Throws QuadratureError if grid refinement changes the value by more
/// than 1e-9 relative.
double expectation(const CoulombBarrier& problem, QuantumState state, Observable observable);
double expectation(const PhysQty& mu, const PhysQty& V0, const PhysQty& a, QuantumState state,
                   Observable observable);

/// Integral of R_s1 R_s2 r^2 dr by quadrature.
double overlap(const CoulombBarrier& problem, QuantumState s1, QuantumState s2);

/// Limiting exponent p of R ~ r^p as r -> 0, fitted from ln|R| = c + p ln r + s r
/// at r = 1e-6 L, 1e-5 L, 1e-4 L. Evaluated in log space.
double small_r_exponent(const CoulombBarrier& problem, QuantumState state);

}  // namespace mie
