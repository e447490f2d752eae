#include "mie/specialfn.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mie/errors.hpp"

namespace mie {

void LaguerreParams::validate() const {
  if (n < 0) throw DomainError("Laguerre degree must be >= 0");
  if (!std::isfinite(alpha) || alpha <= -1.0) throw DomainError("Laguerre order must be > -1");
}

double laguerre(int n, double alpha, double x) {
  LaguerreParams{n, alpha}.validate();
  if (!std::isfinite(x)) throw DomainError("Laguerre argument must be finite");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0 + alpha - x) * cur - (k - 1.0 + alpha) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
  }
  return std::lgamma(x);
}

double log_normalization_constant(int n, double Lambda, double kappa) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (!std::isfinite(Lambda) || Lambda < 0.0) throw DomainError("Lambda must be >= 0");
  if (!std::isfinite(kappa) || kappa <= 0.0) throw DomainError("kappa must be > 0");
  const double log_sq = (2.0 * Lambda + 3.0) * std::log(2.0 * kappa) + log_gamma(n + 1.0) -
                        std::log(2.0 * (n + Lambda + 1.0)) - log_gamma(n + 2.0 * Lambda + 2.0);
  return 0.5 * log_sq;
}

double normalization_constant(int n, double Lambda, double kappa) {
  const double log_c = log_normalization_constant(n, Lambda, kappa);
  if (log_c >= std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("normalization constant overflows; use log_normalization_constant");
  }
  return std::exp(log_c);
}

}  // namespace mie
