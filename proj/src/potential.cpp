#include "mie/potential.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mie/errors.hpp"

namespace mie {

namespace {

double pow_int(double x, int p) {
  double result = 1.0;
  for (int i = 0; i < p; ++i) result *= x;
  return result;
}

const double kLogMax = std::log(std::numeric_limits<double>::max());

void require_radius(double r) {
  if (!std::isfinite(r) || r <= 0.0) {
    throw DomainError("radius must be finite and > 0, got " + std::to_string(r));
  }
}

}  // namespace

namespace kernel {

double mie_value(double epsilon, double a, int ell_exp, int k_exp, double r) {
  require_radius(r);
  const double x = a / r;
  const double l = ell_exp;
  const double k = k_exp;
  if (l * std::log(x) < kLogMax - 2.0) {
    return epsilon * (k * pow_int(x, ell_exp) - l * pow_int(x, k_exp)) / (l - k);
  }
  // (a/r)^l would overflow; the repulsive term dominates so factor it out.
  const double log_mag = std::log(epsilon * k / (l - k)) + l * std::log(x) +
                         std::log1p(-(l / k) * std::exp((k - l) * std::log(x)));
  if (log_mag >= kLogMax) {
    throw OverflowError("Mie potential overflows at r = " + std::to_string(r));
  }
  return std::exp(log_mag);
}

double special_value(double V0, double a, double r) {
  require_radius(r);
  const double x = a / r;
  if (2.0 * std::log(x) < kLogMax - 2.0) {
    return 0.5 * V0 * (x * x - 2.0 * x);
  }
  return mie_value(0.5 * V0, a, 2, 1, r);
}

}  // namespace kernel

void PotentialParams::validate() const {
  require_positive(epsilon, Dimension::Energy, "epsilon");
  require_positive(a, Dimension::Length, "a");
  require_same_system({&epsilon, &a});
  if (k_exp < 1 || ell_exp <= k_exp) {
    throw DomainError("Mie exponents must satisfy ell_exp > k_exp >= 1");
  }
}

void SpecialPotentialParams::validate() const {
  require_positive(V0, Dimension::Energy, "V0");
  require_positive(a, Dimension::Length, "a");
  require_same_system({&V0, &a});
}

PotentialParams SpecialPotentialParams::as_general() const {
  return PotentialParams{PhysQty{0.5 * V0.value, Dimension::Energy, V0.system}, a, 2, 1};
}

PhysQty mie_general(const PotentialParams& p, const PhysQty& r) {
  p.validate();
  if (r.dimension != Dimension::Length) throw UnitError("r must be a length");
  require_same_system({&p.a, &r});
  return energy(kernel::mie_value(p.epsilon.value, p.a.value, p.ell_exp, p.k_exp, r.value),
                p.a.system);
}

PhysQty special_potential(const SpecialPotentialParams& p, const PhysQty& r) {
  p.validate();
  if (r.dimension != Dimension::Length) throw UnitError("r must be a length");
  require_same_system({&p.a, &r});
  return energy(kernel::special_value(p.V0.value, p.a.value, r.value), p.a.system);
}

PhysQty effective_potential(const SpecialPotentialParams& p, int ell, const PhysQty& mu,
                            const PhysQty& r) {
  if (ell < 0) throw DomainError("angular momentum must be >= 0");
  const PhysQty v = special_potential(p, r);
  require_same_system({&p.a, &mu});
  const double c = hbar2_over_2m(mu).value;
  const double centrifugal = ell * (ell + 1.0) * c / (r.value * r.value);
  return energy(v.value + centrifugal, v.system);
}

}  // namespace mie
