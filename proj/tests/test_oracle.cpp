#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mie/errors.hpp"
#include "mie/oracle.hpp"

using namespace mie;

namespace {

constexpr auto kRyd = UnitSystem::AtomicHbar1TwoMu1;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

CoulombBarrier unit_mie() {
  return CoulombBarrier::from_mie(mass(0.5, kRyd), energy(1.0, kRyd), length(1.0, kRyd));
}

OracleConfig harmonic_config(OracleMethod method, GridSpacing spacing) {
  OracleConfig cfg;
  cfg.grid = spacing == GridSpacing::LogUniform ? RadialGrid{1e-10, 12.0, 4001, spacing}
                                                : RadialGrid{1e-8, 12.0, 4001, spacing};
  cfg.states_requested = 3;
  cfg.require_bound = false;
  cfg.method = method;
  return cfg;
}

}  // namespace

TEST_CASE("3D harmonic oscillator through the generic interface") {
  // -u'' + r^2 u = E u: E = 3, 7, 11 for ell = 0 and 5, 9 for ell = 1
  for (auto method : {OracleMethod::FiniteDifferenceMatrix, OracleMethod::NumerovShooting}) {
    for (auto spacing : {GridSpacing::LogUniform, GridSpacing::Uniform}) {
      const OracleResult res =
          solve_radial(1.0, [](double r) { return r * r; }, 0, harmonic_config(method, spacing));
      REQUIRE(res.energies.size() == 3);
      CHECK(rel(res.energies[0], 3.0) < 1e-6);
      CHECK(rel(res.energies[1], 7.0) < 1e-6);
      CHECK(rel(res.energies[2], 11.0) < 1e-6);
      // the reported estimate is an honest bound up to a small factor
      CHECK(std::abs(res.energies[0] - 3.0) <= 3.0 * res.convergence_estimate[0] + 1e-12);
    }
  }
  const OracleResult p = solve_radial(
      1.0, [](double r) { return r * r; }, 1,
      harmonic_config(OracleMethod::FiniteDifferenceMatrix, GridSpacing::LogUniform));
  CHECK(rel(p.energies[0], 5.0) < 1e-6);
  CHECK(rel(p.energies[1], 9.0) < 1e-6);
}

TEST_CASE("eigenvectors are normalized and ordered by nodes") {
  const OracleResult res = solve_radial(
      1.0, [](double r) { return r * r; }, 0,
      harmonic_config(OracleMethod::FiniteDifferenceMatrix, GridSpacing::Uniform));
  const auto r = res.grid_used.abscissae();
  for (std::size_t j = 0; j < res.eigenvectors.size(); ++j) {
    const auto& u = res.eigenvectors[j];
    REQUIRE(u.size() == r.size());
    double norm = 0.0;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) norm += 0.5 * (u[i] * u[i] + u[i + 1] * u[i + 1]) * (r[i + 1] - r[i]);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));
    int nodes = 0;
    for (std::size_t i = 1; i < u.size(); ++i) {
      if (std::abs(u[i]) > 1e-10 && std::abs(u[i - 1]) > 1e-10 && (u[i] > 0) != (u[i - 1] > 0)) ++nodes;
    }
    CHECK(nodes == static_cast<int>(j));
  }
}

TEST_CASE("hydrogen") {
  const CoulombBarrier h{0.5, 1.0, 0.0, UnitSystem::AtomicHbar1Mu1};
  const OracleResult res = solve_radial(h, 0, default_oracle_config(h, 0, 2));
  CHECK(rel(res.energies[0], -0.5) < 1e-8);
  CHECK(rel(res.energies[1], -0.125) < 1e-8);
  CHECK(rel(res.energies[2], -1.0 / 18.0) < 1e-8);
}

TEST_CASE("Mie problem by both methods and both overloads") {
  const CoulombBarrier p = unit_mie();
  for (auto method : {OracleMethod::FiniteDifferenceMatrix, OracleMethod::NumerovShooting}) {
    OracleConfig cfg = default_oracle_config(p, 2, 3);
    cfg.method = method;
    const OracleResult a = solve_radial(p, 2, cfg);
    const OracleResult b = solve_radial(mass(0.5, kRyd), energy(1.0, kRyd), length(1.0, kRyd), 2, cfg);
    for (int n = 0; n <= 3; ++n) {
      const double closed = bound_energy(p, {n, 2}).energy.value;
      CHECK(rel(a.energies[n], closed) < 1e-8);
      CHECK(rel(b.energies[n], closed) < 1e-8);
    }
  }
}

TEST_CASE("convergence order") {
  const CoulombBarrier p = unit_mie();
  const double exact = bound_energy(p, {0, 0}).energy.value;
  for (auto [method, ratio] : {std::pair{OracleMethod::FiniteDifferenceMatrix, 4.0},
                               {OracleMethod::NumerovShooting, 16.0}}) {
    double prev = 0.0;
    for (int points : {801, 1601}) {
      OracleConfig cfg;
      cfg.grid = RadialGrid{1e-12, 200.0, points, GridSpacing::LogUniform};
      cfg.richardson = false;
      cfg.method = method;
      const double err = std::abs(solve_radial(p, 0, cfg).energies[0] - exact);
      if (prev > 0.0) CHECK(prev / err == doctest::Approx(ratio).epsilon(0.1));
      prev = err;
    }
  }
}

TEST_CASE("domain too small raises contamination") {
  const CoulombBarrier p = unit_mie();
  OracleConfig cfg;
  cfg.grid = RadialGrid{1e-10, 5.0, 2001, GridSpacing::LogUniform};
  cfg.max_domain_doublings = 0;
  CHECK_THROWS_AS(solve_radial(p, 0, cfg), BoundaryContaminationError);
  try {
    solve_radial(p, 0, cfg);
  } catch (const BoundaryContaminationError& e) {
    CHECK(e.state_index() == 0);
  }
  // allowing doublings recovers
  cfg.max_domain_doublings = 8;
  const OracleResult res = solve_radial(p, 0, cfg);
  CHECK(res.grid_used.r_max > 5.0);
  CHECK(rel(res.energies[0], bound_energy(p, {0, 0}).energy.value) < 1e-6);
}

TEST_CASE("guardrails") {
  const CoulombBarrier p = unit_mie();
  OracleConfig cfg;
  cfg.grid = RadialGrid{1e-10, 200.0, 101, GridSpacing::LogUniform};
  cfg.states_requested = 4;
  CHECK_THROWS_AS(solve_radial(p, 0, cfg), DomainError);

  OracleConfig numerov;
  numerov.grid = RadialGrid{1e-12, 200.0, 401, GridSpacing::LogUniform};
  numerov.richardson = false;
  numerov.method = OracleMethod::NumerovShooting;
  CHECK_THROWS_AS(solve_radial(p, 0, numerov), DomainError);

  CHECK_THROWS_AS(solve_radial(0.0, [](double r) { return r; }, 0, cfg), DomainError);
  CHECK_THROWS_AS(solve_radial(1.0, RadialPotential{}, 0, cfg), DomainError);
  CHECK_THROWS_AS(solve_radial(1.0, [](double r) { return r; }, -1, cfg), DomainError);
  OracleConfig bad = cfg;
  bad.states_requested = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = cfg;
  bad.max_domain_doublings = -1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("verification reports") {
  const CoulombBarrier p = unit_mie();
  const VerificationReport r = verify_state(p, {2, 1});
  CHECK(r.state == QuantumState{2, 1});
  CHECK(r.status == VerificationStatus::Pass);
  CHECK(r.converged);
  CHECK(r.oracle_nodes == 2);
  CHECK(r.rel_delta <= 1e-6);
  CHECK(r.e_closed == bound_energy(p, {2, 1}).energy.value);

  // an absurd tolerance fails rather than passing vacuously
  CHECK(verify_state(p, {0, 0}, 1e-16).status == VerificationStatus::Fail);

  // too coarse to judge at 1e-6
  OracleConfig coarse;
  coarse.grid = RadialGrid{1e-10, 200.0, 51, GridSpacing::LogUniform};
  const VerificationReport c = verify_state(p, {0, 0}, coarse, 1e-6);
  CHECK(c.status == VerificationStatus::Inconclusive);
  CHECK_FALSE(c.converged);

  CHECK(to_string(VerificationStatus::Pass) == "pass");
  CHECK(to_string(VerificationStatus::Fail) == "fail");
  CHECK(to_string(VerificationStatus::Inconclusive) == "inconclusive");
  CHECK(convergence_threshold(1e-6) == doctest::Approx(1e-7));
  CHECK(convergence_threshold(1e-12) == 1e-9);
}

TEST_CASE("verification table ordering") {
  const auto reports = verify_table(unit_mie(), 3);
  REQUIRE(reports.size() == 10);
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const auto& a = reports[i - 1].state;
    const auto& b = reports[i].state;
    CHECK((a.n < b.n || (a.n == b.n && a.ell < b.ell)));
  }
  CHECK(std::all_of(reports.begin(), reports.end(),
                    [](const auto& r) { return r.status == VerificationStatus::Pass; }));
  CHECK(verify_table(unit_mie(), 3, EllRule{0}).size() == 4);
  CHECK_THROWS_AS(verify_table(unit_mie(), -1), DomainError);
}
