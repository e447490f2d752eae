#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "mie/grid.hpp"
#include "mie/spectrum.hpp"
#include "mie/units.hpp"

namespace mie {

/// Numerical reference solver for
///   -(hbar^2 / 2 mu) u'' + [V(r) + ell (ell + 1) hbar^2 / (2 mu r^2)] u = E u,
///   u(r_min) = u(r_max) = 0.
/// It only ever evaluates the potential; it never consults the closed forms.

enum class OracleMethod { FiniteDifferenceMatrix, NumerovShooting };

struct OracleConfig {
  RadialGrid grid;
  int states_requested = 1;
  OracleMethod method = OracleMethod::FiniteDifferenceMatrix;
  bool richardson = true;
  /// Reported eigenvalues must be negative (bound below the dissociation limit).
  bool require_bound = true;
  /// Times r_max may be doubled when a state touches the outer boundary.
  int max_domain_doublings = 8;

  void validate() const;
};

struct OracleResult {
  std::vector<double> energies;                   // ascending
  std::vector<std::vector<double>> eigenvectors;  // u on grid_used, unit norm
  RadialGrid grid_used;                           // finest grid actually solved
  std::vector<double> convergence_estimate;       // absolute, per energy
};

using RadialPotential = std::function<double(double)>;

/// Generic entry point: `kinetic` is hbar^2 / (2 mu), `potential` V(r), all in
/// one consistent unit system; the grid is in that system's length unit.
OracleResult solve_radial(double kinetic, const RadialPotential& potential, int ell,
                          const OracleConfig& cfg);

/// -A/r + B/r^2 problem, solved internally in units of length_scale() and
/// attraction / length_scale() so that matrix entries stay O(1).
OracleResult solve_radial(const CoulombBarrier& problem, int ell, const OracleConfig& cfg);

/// Mie (2, 1) potential, solved in units of a and V0.
OracleResult solve_radial(const PhysQty& mu, const PhysQty& V0, const PhysQty& a, int ell,
                          const OracleConfig& cfg);

/// Production settings for states n = 0..n_top at one ell.
OracleConfig default_oracle_config(const CoulombBarrier& problem, int ell, int n_top);

enum class VerificationStatus { Pass, Fail, Inconclusive };
std::string_view to_string(VerificationStatus s);

struct VerificationReport {
  QuantumState state;
  double e_closed = 0.0;
  double e_oracle = 0.0;
  double abs_delta = 0.0;
  double rel_delta = 0.0;  // |e_closed - e_oracle| / |e_closed|
  double convergence_estimate = 0.0;
  bool converged = false;
  double tolerance = 0.0;
  int oracle_nodes = -1;  // interior sign changes of the oracle eigenvector
  VerificationStatus status = VerificationStatus::Inconclusive;
  RadialGrid grid_used;
};

/// Relative convergence-estimate threshold below which an oracle value counts
/// as converged for a given comparison tolerance.
double convergence_threshold(double tolerance);

/// Compare the closed-form energy of `state` with the (n+1)-th oracle
/// eigenvalue at that ell. A mismatch is reported, not thrown.
VerificationReport verify_state(const CoulombBarrier& problem, QuantumState state,
                                const OracleConfig& cfg, double tolerance = 1e-6);
VerificationReport verify_state(const CoulombBarrier& problem, QuantumState state,
                                double tolerance = 1e-6);
VerificationReport verify_state(const PhysQty& mu, const PhysQty& V0, const PhysQty& a,
                                QuantumState state, const OracleConfig& cfg,
                                double tolerance = 1e-6);

/// All states n = 0..n_max, ell = 0..rule.max_for(n), one oracle solve per ell,
/// ordered by (n, ell).
std::vector<VerificationReport> verify_table(
    const CoulombBarrier& problem, int n_max, EllRule rule = {}, double tolerance = 1e-6,
    OracleMethod method = OracleMethod::FiniteDifferenceMatrix);

}  // namespace mie
