#pragma once

#include "mie/units.hpp"

namespace mie {

/// General Mie potential eps * [k/(l-k) (a/r)^l - l/(l-k) (a/r)^k].
/// The exponents are stored as ell_exp / k_exp to keep them apart from the
/// angular momentum quantum number.
struct PotentialParams {
  PhysQty epsilon;  // well depth
  PhysQty a;        // position of the minimum
  int ell_exp = 2;
  int k_exp = 1;

  /// Throws DomainError / UnitError on violated invariants.
  void validate() const;
};

/// The (ell_exp, k_exp) = (2, 1) member: V0 [ (a/r)^2 / 2 - a/r ].
struct SpecialPotentialParams {
  PhysQty V0;
  PhysQty a;

  void validate() const;
  /// Equivalent general parameters (epsilon = V0 / 2, exponents (2, 1)).
  PotentialParams as_general() const;
};

PhysQty mie_general(const PotentialParams& p, const PhysQty& r);
PhysQty special_potential(const SpecialPotentialParams& p, const PhysQty& r);

/// special_potential plus the centrifugal term ell(ell+1) hbar^2 / (2 mu r^2).
PhysQty effective_potential(const SpecialPotentialParams& p, int ell, const PhysQty& mu,
                            const PhysQty& r);

namespace kernel {

// Unit-free evaluators shared by the typed API and the numerical solver.
// Both throw DomainError for r <= 0 and OverflowError if the result does not
// fit in a double.
double mie_value(double epsilon, double a, int ell_exp, int k_exp, double r);
double special_value(double V0, double a, double r);

}  // namespace kernel

}  // namespace mie
