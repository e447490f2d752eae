#include <doctest.h>

#include <cmath>

#include "mie/errors.hpp"
#include "mie/molecules.hpp"
#include "mie/wavefunction.hpp"

using namespace mie;

namespace {

constexpr auto kRyd = UnitSystem::AtomicHbar1TwoMu1;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

CoulombBarrier unit_mie() {
  return CoulombBarrier::from_mie(mass(0.5, kRyd), energy(1.0, kRyd), length(1.0, kRyd));
}

// hartree units, mu = 1, A = 1
const CoulombBarrier kHydrogen{0.5, 1.0, 0.0, UnitSystem::AtomicHbar1Mu1};

}  // namespace

TEST_CASE("hydrogen 1s") {
  CHECK(rel(radial_wavefunction(kHydrogen, {0, 0}, 1.0), 0.73575888234288464) < 1e-14);
  CHECK(rel(radial_wavefunction(kHydrogen, {0, 0}, 1e-4), 2.0 * std::exp(-1e-4)) < 1e-14);
  CHECK(rel(expectation(kHydrogen, {0, 0}, Observable::InvR), 1.0) < 1e-10);
  CHECK(rel(expectation(kHydrogen, {0, 0}, Observable::InvR2), 2.0) < 1e-10);
}

TEST_CASE("Mie wavefunction against quadrature-normalized values") {
  const CoulombBarrier p = unit_mie();
  CHECK(rel(radial_wavefunction(p, {2, 1}, 1.3), 0.0088000089901622094) < 1e-12);
  CHECK(rel(radial_wavefunction(p, {2, 1}, 7.5), 0.011323270328892928) < 1e-12);
  CHECK(rel(expectation(p, {1, 1}, Observable::InvR), 0.050125628933800453) < 1e-10);
  CHECK(rel(expectation(p, {1, 1}, Observable::InvR2), 0.0047852916008917733) < 1e-10);
}

TEST_CASE("typed overload matches") {
  const double r1 = radial_wavefunction(mass(0.5, kRyd), energy(1.0, kRyd), length(1.0, kRyd),
                                        {2, 1}, length(1.3, kRyd));
  CHECK(r1 == radial_wavefunction(unit_mie(), {2, 1}, 1.3));
  CHECK_THROWS_AS(radial_wavefunction(mass(0.5, kRyd), energy(1.0, kRyd), length(1.0, kRyd),
                                      {0, 0}, energy(1.0, kRyd)),
                  UnitError);
}

TEST_CASE("sampled function") {
  const CoulombBarrier p = unit_mie();
  for (int n = 0; n <= 4; ++n) {
    const RadialFunction f = sample(p, {n, 1}, default_grid(p, {n, 1}));
    CHECK(f.norm_check == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_FALSE(f.coarse_grid);
    CHECK(count_nodes(f) == n);
    REQUIRE(f.r.size() == f.u.size());
    for (std::size_t i = 0; i < f.r.size(); i += 97) CHECK(f.u[i] == f.r[i] * f.R[i]);
  }
}

TEST_CASE("coarse grid is flagged") {
  const CoulombBarrier p = unit_mie();
  const RadialFunction f = sample(p, {3, 0}, RadialGrid{1e-3, 30.0, 16, GridSpacing::Uniform});
  CHECK(f.coarse_grid);
}

TEST_CASE("log evaluation where R underflows") {
  const Registry reg = builtin_registry();
  const CoulombBarrier n2 = reg.get("N2").problem();
  const double r = 1e-3;  // deep inside the repulsive wall
  const LogRadial lr = log_radial_wavefunction(n2, {0, 0}, r);
  CHECK(std::isfinite(lr.log_abs));
  CHECK(lr.log_abs < -745.0);
  CHECK(lr.sign == 1);
  CHECK(radial_wavefunction(n2, {0, 0}, r) == 0.0);
}

TEST_CASE("orthogonality and small-r exponent") {
  const CoulombBarrier p = unit_mie();
  CHECK(std::abs(overlap(p, {0, 2}, {3, 2})) < 1e-9);
  CHECK(std::abs(overlap(p, {1, 0}, {2, 0})) < 1e-9);
  CHECK(overlap(p, {2, 0}, {2, 0}) == doctest::Approx(1.0).epsilon(1e-9));
  const double lambda = reduced_params(p, {1, 2}).Lambda;
  CHECK(std::abs(small_r_exponent(p, {1, 2}) - lambda) < 1e-3);
}

TEST_CASE("virial") {
  const CoulombBarrier p = unit_mie();
  for (int n = 0; n <= 3; ++n) {
    const double t = expectation(p, {n, 1}, Observable::T);
    const double rv = expectation(p, {n, 1}, Observable::rVprime);
    CHECK(std::abs(2.0 * t - rv) / std::abs(rv) < 1e-9);
  }
}

TEST_CASE("wavefunction errors") {
  const CoulombBarrier p = unit_mie();
  CHECK_THROWS_AS(radial_wavefunction(p, {0, 0}, 0.0), DomainError);
  CHECK_THROWS_AS(radial_wavefunction(p, {0, 0}, -1.0), DomainError);
  CHECK_THROWS_AS(radial_wavefunction(p, {-1, 0}, 1.0), DomainError);
  CHECK_THROWS_AS(sample(p, {0, 0}, RadialGrid{1.0, 0.5, 100}), DomainError);
}
