#pragma once

#include <vector>

#include "mie/units.hpp"

namespace mie {

/// Radial (vibrational) quantum number n and angular momentum ell.
struct QuantumState {
  int n = 0;
  int ell = 0;

  void validate() const;
  friend bool operator==(const QuantumState&, const QuantumState&) = default;
};

/// The radial problem -A/r + B/r^2 with kinetic prefactor hbar^2/(2 mu),
/// all three in one unit system. The (2,1) Mie potential is the case
/// A = V0 a, B = V0 a^2 / 2; B = 0 is the hydrogen-like problem.
struct CoulombBarrier {
  double kinetic = 1.0;     // hbar^2 / (2 mu), energy * length^2
  double attraction = 1.0;  // A, energy * length
  double barrier = 0.0;     // B, energy * length^2
  UnitSystem system = UnitSystem::AtomicHbar1TwoMu1;

  static CoulombBarrier from_mie(const PhysQty& mu, const PhysQty& V0, const PhysQty& a);
  static CoulombBarrier from_strengths(const PhysQty& mu, const PhysQty& A, const PhysQty& B);

  void validate() const;
  /// a for the Mie case (2B/A); the Bohr-type radius 2 hbar^2/(2 mu A) when B = 0.
  double length_scale() const;
  /// V(r) = -A/r + B/r^2.
  double potential(double r) const;
};

/// Dimensionless combinations driving the closed forms. Inverse lengths
/// (beta, A, kappa) are in the problem's length unit.
struct ReducedParams {
  double beta = 0.0;    // -2 mu A_strength / hbar^2 (negative)
  double gamma = 0.0;   // 2 mu B_strength / hbar^2 + ell (ell + 1)
  double eps_sq = 0.0;  // 2 mu E / hbar^2 = -kappa^2
  double A = 0.0;       // -beta
  double Lambda = 0.0;  // (-1 + sqrt(1 + 4 gamma)) / 2
  double kappa = 0.0;   // sqrt(-2 mu E) / hbar = A / (2 (n + Lambda + 1))
};

struct EnergyLevel {
  QuantumState state;
  PhysQty energy;
  ReducedParams reduced;
};

ReducedParams reduced_params(const CoulombBarrier& problem, QuantumState state);
ReducedParams reduced_params(const PhysQty& mu, const PhysQty& V0, const PhysQty& a,
                             QuantumState state);

/// E = -(A^2 / c) [2n + 1 + sqrt((2 ell + 1)^2 + 4 B / c)]^-2 with c = hbar^2/(2 mu).
/// For the Mie case this is -2 mu V0^2 a^2 / hbar^2 [...]^-2.
EnergyLevel bound_energy(const CoulombBarrier& problem, QuantumState state);
EnergyLevel bound_energy(const PhysQty& mu, const PhysQty& V0, const PhysQty& a,
                         QuantumState state);

/// The same energy through -hbar^2 A^2 / (8 mu (n + Lambda + 1)^2).
double bound_energy_lambda_form(const CoulombBarrier& problem, QuantumState state);

/// Atomic-unit form -V0^2 a^2 (2n + 1 + sqrt((2 ell + 1)^2 + 2 V0 a^2))^-2,
/// valid for hbar = 1, 2 mu = 1.
double bound_energy_atomic(double V0, double a, QuantumState state);

/// Bound energy of -A/r + B/r^2. Throws DomainError for A <= 0 (no bound states).
EnergyLevel bound_energy_coulomb_barrier(const PhysQty& mu, const PhysQty& A_strength,
                                         const PhysQty& B_strength, QuantumState state);

/// Which ell values accompany each n in a table. The default reproduces the
/// triangular ell <= n layout; ell_max >= 0 caps it further.
struct EllRule {
  int ell_max = -1;
  int max_for(int n) const { return ell_max < 0 ? n : (ell_max < n ? ell_max : n); }
};

/// Levels for n = 0..n_max and ell = 0..rule.max_for(n), sorted by (n, ell).
std::vector<EnergyLevel> spectrum_table(const CoulombBarrier& problem, int n_max,
                                        EllRule rule = {});
std::vector<EnergyLevel> spectrum_table(const PhysQty& mu, const PhysQty& V0, const PhysQty& a,
                                        int n_max, EllRule rule = {});

}  // namespace mie
