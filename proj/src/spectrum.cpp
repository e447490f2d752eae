#include "mie/spectrum.hpp"

#include <cmath>
#include <string>

#include "mie/errors.hpp"

namespace mie {

void QuantumState::validate() const {
  if (n < 0 || ell < 0) {
    throw DomainError("quantum numbers must be >= 0 (n=" + std::to_string(n) +
                      ", ell=" + std::to_string(ell) + ")");
  }
}

CoulombBarrier CoulombBarrier::from_mie(const PhysQty& mu, const PhysQty& V0, const PhysQty& a) {
  require_positive(mu, Dimension::Mass, "mu");
  require_positive(V0, Dimension::Energy, "V0");
  require_positive(a, Dimension::Length, "a");
  require_same_system({&mu, &V0, &a});
  CoulombBarrier p;
  p.kinetic = hbar2_over_2m(mu).value;
  p.attraction = V0.value * a.value;
  p.barrier = V0.value * a.value * a.value * 0.5;
  p.system = mu.system;
  return p;
}

CoulombBarrier CoulombBarrier::from_strengths(const PhysQty& mu, const PhysQty& A,
                                              const PhysQty& B) {
  require_positive(mu, Dimension::Mass, "mu");
  if (A.dimension != Dimension::EnergyLength) throw UnitError("A must be energy*length");
  if (B.dimension != Dimension::EnergyLength2) throw UnitError("B must be energy*length^2");
  require_same_system({&mu, &A, &B});
  if (!(A.value > 0.0)) throw DomainError("A must be > 0; no bound states otherwise");
  if (!(B.value >= 0.0)) throw DomainError("B must be >= 0");
  return CoulombBarrier{hbar2_over_2m(mu).value, A.value, B.value, mu.system};
}

void CoulombBarrier::validate() const {
  if (!std::isfinite(kinetic) || kinetic <= 0.0) throw DomainError("kinetic prefactor must be > 0");
  if (!std::isfinite(attraction) || attraction <= 0.0) {
    throw DomainError("attraction strength must be > 0; no bound states otherwise");
  }
  if (!std::isfinite(barrier) || barrier < 0.0) throw DomainError("barrier strength must be >= 0");
}

double CoulombBarrier::length_scale() const {
  return barrier > 0.0 ? 2.0 * barrier / attraction : 2.0 * kinetic / attraction;
}

double CoulombBarrier::potential(double r) const { return -attraction / r + barrier / (r * r); }

ReducedParams reduced_params(const CoulombBarrier& problem, QuantumState state) {
  problem.validate();
  state.validate();
  ReducedParams rp;
  rp.A = problem.attraction / problem.kinetic;
  rp.beta = -rp.A;
  rp.gamma = problem.barrier / problem.kinetic + state.ell * (state.ell + 1.0);
  rp.Lambda = 0.5 * (std::sqrt(1.0 + 4.0 * rp.gamma) - 1.0);
  rp.kappa = rp.A / (2.0 * (state.n + rp.Lambda + 1.0));
  rp.eps_sq = -rp.kappa * rp.kappa;
  return rp;
}

ReducedParams reduced_params(const PhysQty& mu, const PhysQty& V0, const PhysQty& a,
                             QuantumState state) {
  return reduced_params(CoulombBarrier::from_mie(mu, V0, a), state);
}

namespace {

double closed_form(double c, double A, double B, QuantumState s) {
  const double two_l1 = 2.0 * s.ell + 1.0;
  const double denom = 2.0 * s.n + 1.0 + std::sqrt(two_l1 * two_l1 + 4.0 * B / c);
  return -(A * A / c) / (denom * denom);
}

}  // namespace

EnergyLevel bound_energy(const CoulombBarrier& problem, QuantumState state) {
  const ReducedParams rp = reduced_params(problem, state);
  const double e = closed_form(problem.kinetic, problem.attraction, problem.barrier, state);
  return EnergyLevel{state, energy(e, problem.system), rp};
}

EnergyLevel bound_energy(const PhysQty& mu, const PhysQty& V0, const PhysQty& a,
                         QuantumState state) {
  return bound_energy(CoulombBarrier::from_mie(mu, V0, a), state);
}

double bound_energy_lambda_form(const CoulombBarrier& problem, QuantumState state) {
  const ReducedParams rp = reduced_params(problem, state);
  const double m = state.n + rp.Lambda + 1.0;
  return -problem.kinetic * rp.A * rp.A / (4.0 * m * m);
}

double bound_energy_atomic(double V0, double a, QuantumState state) {
  if (!std::isfinite(V0) || !std::isfinite(a) || V0 <= 0.0 || a <= 0.0) {
    throw DomainError("V0 and a must be finite and > 0");
  }
  state.validate();
  const double two_l1 = 2.0 * state.ell + 1.0;
  const double denom = 2.0 * state.n + 1.0 + std::sqrt(two_l1 * two_l1 + 2.0 * V0 * a * a);
  const double v0a = V0 * a;
  return -(v0a * v0a) / (denom * denom);
}

EnergyLevel bound_energy_coulomb_barrier(const PhysQty& mu, const PhysQty& A_strength,
                                         const PhysQty& B_strength, QuantumState state) {
  return bound_energy(CoulombBarrier::from_strengths(mu, A_strength, B_strength), state);
}

std::vector<EnergyLevel> spectrum_table(const CoulombBarrier& problem, int n_max, EllRule rule) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  std::vector<EnergyLevel> levels;
  for (int n = 0; n <= n_max; ++n) {
    for (int ell = 0; ell <= rule.max_for(n); ++ell) {
      levels.push_back(bound_energy(problem, QuantumState{n, ell}));
    }
  }
  return levels;
}

std::vector<EnergyLevel> spectrum_table(const PhysQty& mu, const PhysQty& V0, const PhysQty& a,
                                        int n_max, EllRule rule) {
  return spectrum_table(CoulombBarrier::from_mie(mu, V0, a), n_max, rule);
}

}  // namespace mie
