#include <doctest.h>

#include <cmath>

#include "mie/errors.hpp"
#include "mie/specialfn.hpp"

using namespace mie;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("Laguerre frozen values") {
  CHECK(laguerre(2, 0.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(rel(laguerre(5, 2.5, 3.7), 2.0766806666666667) < 1e-14);
  CHECK(rel(laguerre(3, 7.0, 40.0), -4346.6666666666667) < 1e-14);
}

TEST_CASE("Laguerre low degrees") {
  for (double alpha : {0.0, 0.5, 2.7, 151.0}) {
    for (double x : {0.0, 0.3, 2.0, 17.5}) {
      CHECK(laguerre(0, alpha, x) == 1.0);
      CHECK(laguerre(1, alpha, x) == doctest::Approx(1.0 + alpha - x).epsilon(1e-15));
      const double l2 = 0.5 * (x * x - 2.0 * (alpha + 2.0) * x + (alpha + 1.0) * (alpha + 2.0));
      CHECK(laguerre(2, alpha, x) == doctest::Approx(l2).epsilon(1e-13));
    }
  }
}

TEST_CASE("Laguerre at the origin is binomial(n + alpha, n)") {
  const double alpha = 1.73;
  double binom = 1.0;
  for (int n = 1; n <= 12; ++n) {
    binom *= (n + alpha) / n;
    CHECK(rel(laguerre(n, alpha, 0.0), binom) < 1e-14);
  }
}

TEST_CASE("Laguerre domain") {
  CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, 0.0, NAN), DomainError);
  CHECK_NOTHROW(laguerre(2, -0.5, 1.0));
  CHECK_THROWS_AS((LaguerreParams{3, -2.0}.validate()), DomainError);
}

TEST_CASE("log gamma frozen values") {
  CHECK(rel(log_gamma(0.5), 0.57236494292470009) < 1e-14);
  CHECK(rel(log_gamma(5.0), 3.1780538303479456) < 1e-14);
  CHECK(rel(log_gamma(10.3), 13.482036786138357) < 1e-14);
  CHECK(rel(log_gamma(1e-3), 6.9071788853838537) < 1e-14);
  CHECK(rel(log_gamma(250.5), 1131.2840013322552) < 1e-14);
  CHECK(log_gamma(1.0) == 0.0);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
}

TEST_CASE("normalization constants") {
  CHECK(rel(normalization_constant(0, 0.0, 1.0), 2.0) < 1e-15);
  CHECK(rel(normalization_constant(0, 0.0, 2.0), 5.6568542494923802) < 1e-15);
  CHECK(rel(normalization_constant(2, 0.366, 0.7), 0.25403906457021747) < 1e-13);
  CHECK(rel(normalization_constant(4, 3.2, 1.3), 0.010442902403191338) < 1e-13);
}

TEST_CASE("normalization constant for molecular-size Lambda") {
  // C itself overflows; the log stays usable
  const double lc = log_normalization_constant(0, 200.0, 1e6);
  CHECK(std::isfinite(lc));
  CHECK(lc > 709.0);
  CHECK_THROWS_AS(normalization_constant(0, 200.0, 1e6), OverflowError);
  CHECK_THROWS_AS(log_normalization_constant(-1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(log_normalization_constant(0, -0.1, 1.0), DomainError);
  CHECK_THROWS_AS(log_normalization_constant(0, 0.0, 0.0), DomainError);
}
