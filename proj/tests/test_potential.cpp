#include <doctest.h>

#include <cmath>

#include "mie/errors.hpp"
#include "mie/potential.hpp"
#include "mie/units.hpp"

using namespace mie;

namespace {
constexpr auto kSpec = UnitSystem::SpectroscopicEvAngstromAmu;
}

TEST_CASE("special potential shape") {
  const SpecialPotentialParams p{energy(11.9, kSpec), length(1.094, kSpec)};
  CHECK(special_potential(p, length(1.094, kSpec)).value == doctest::Approx(-11.9 / 2).epsilon(1e-15));
  // zero crossing at r = a/2
  CHECK(std::abs(special_potential(p, length(0.547, kSpec)).value) < 1e-14);
  CHECK(special_potential(p, length(0.3, kSpec)).value > 0.0);
  CHECK(special_potential(p, length(1e6, kSpec)).value < 0.0);
  CHECK(std::abs(special_potential(p, length(1e6, kSpec)).value) < 2e-5);
  // the minimum sits at r = a
  const double at = special_potential(p, length(1.094, kSpec)).value;
  CHECK(special_potential(p, length(1.094 * (1 + 1e-4), kSpec)).value > at);
  CHECK(special_potential(p, length(1.094 * (1 - 1e-4), kSpec)).value > at);
}

TEST_CASE("special case is the (2,1) member of the general family") {
  const SpecialPotentialParams p{energy(3.0, kSpec), length(1.5, kSpec)};
  const PotentialParams g = p.as_general();
  CHECK(g.ell_exp == 2);
  CHECK(g.k_exp == 1);
  CHECK(g.epsilon.value == 1.5);
  for (double r : {0.01, 0.2, 0.75, 1.5, 3.3, 40.0, 1e4}) {
    CHECK(special_potential(p, length(r, kSpec)).value ==
          mie_general(g, length(r, kSpec)).value);
  }
}

TEST_CASE("general Mie well depth is epsilon at r = a") {
  for (auto [l, k] : {std::pair{2, 1}, {12, 6}, {9, 3}, {8, 4}}) {
    const PotentialParams p{energy(0.7, kSpec), length(2.0, kSpec), l, k};
    CHECK(mie_general(p, length(2.0, kSpec)).value == doctest::Approx(-0.7).epsilon(1e-14));
  }
}

TEST_CASE("effective potential adds the centrifugal term") {
  const auto sys = UnitSystem::AtomicHbar1TwoMu1;
  const SpecialPotentialParams p{energy(1.0, sys), length(1.0, sys)};
  const PhysQty mu = mass(0.5, sys);  // hbar^2/2mu = 1
  const double r = 0.8;
  const double v = special_potential(p, length(r, sys)).value;
  CHECK(effective_potential(p, 0, mu, length(r, sys)).value == v);
  CHECK(effective_potential(p, 3, mu, length(r, sys)).value ==
        doctest::Approx(v + 12.0 / (r * r)).epsilon(1e-15));
  CHECK_THROWS_AS(effective_potential(p, -1, mu, length(r, sys)), DomainError);
  CHECK_THROWS_AS(effective_potential(p, 1, mass(0.5, kSpec), length(r, sys)), UnitError);
}

TEST_CASE("kernel near overflow") {
  // (a/r)^2 close to DBL_MAX takes the log-space branch
  const double x = 1.2e154;
  const double v = kernel::special_value(1.0, 1.0, 1.0 / x);
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(0.5 * x * x).epsilon(1e-12));
  CHECK_THROWS_AS(kernel::special_value(1.0, 1.0, 1e-200), OverflowError);
  CHECK_THROWS_AS(kernel::mie_value(1.0, 1.0, 12, 6, 1e-40), OverflowError);
}

TEST_CASE("domain errors") {
  const SpecialPotentialParams p{energy(1.0, kSpec), length(1.0, kSpec)};
  CHECK_THROWS_AS(special_potential(p, length(0.0, kSpec)), DomainError);
  CHECK_THROWS_AS(special_potential(p, length(-1.0, kSpec)), DomainError);
  CHECK_THROWS_AS(special_potential(p, energy(1.0, kSpec)), UnitError);
  CHECK_THROWS_AS(special_potential(p, length(1.0, UnitSystem::AtomicHbar1Mu1)), UnitError);
  CHECK_THROWS_AS((SpecialPotentialParams{energy(-1.0, kSpec), length(1.0, kSpec)}.validate()),
                  DomainError);
  CHECK_THROWS_AS((PotentialParams{energy(1.0, kSpec), length(1.0, kSpec), 1, 2}.validate()),
                  DomainError);
  CHECK_THROWS_AS((PotentialParams{energy(1.0, kSpec), length(1.0, kSpec), 2, 2}.validate()),
                  DomainError);
  CHECK_THROWS_AS((PotentialParams{energy(1.0, kSpec), length(1.0, kSpec), 2, 0}.validate()),
                  DomainError);
  CHECK_THROWS_AS(
      (PotentialParams{energy(1.0, kSpec), length(1.0, UnitSystem::AtomicHbar1Mu1)}.validate()),
      UnitError);
}
