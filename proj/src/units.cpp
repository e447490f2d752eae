#include "mie/units.hpp"

#include <cmath>

#include "mie/errors.hpp"

namespace mie {

namespace {

double electron_c2_ev() { return codata::amu_c2_ev * codata::electron_mass_amu; }

double energy_factor(UnitSystem sys) {
  switch (sys) {
    case UnitSystem::SpectroscopicEvAngstromAmu:
      return 1.0;
    case UnitSystem::AtomicHbar1Mu1:
      return consistent_hartree_ev();
    case UnitSystem::AtomicHbar1TwoMu1:
      return 0.5 * consistent_hartree_ev();
  }
  throw UnitError("unknown unit system");
}

double length_factor(UnitSystem sys) {
  switch (sys) {
    case UnitSystem::SpectroscopicEvAngstromAmu:
      return 1.0;
    case UnitSystem::AtomicHbar1Mu1:
    case UnitSystem::AtomicHbar1TwoMu1:
      return codata::bohr_angstrom;
  }
  throw UnitError("unknown unit system");
}

double mass_factor(UnitSystem sys) {
  switch (sys) {
    case UnitSystem::SpectroscopicEvAngstromAmu:
      return 1.0;
    case UnitSystem::AtomicHbar1Mu1:
      return codata::electron_mass_amu;
    case UnitSystem::AtomicHbar1TwoMu1:
      return 2.0 * codata::electron_mass_amu;
  }
  throw UnitError("unknown unit system");
}

}  // namespace

double consistent_hartree_ev() {
  static const double value = codata::hbar_c_ev_angstrom * codata::hbar_c_ev_angstrom /
                              (electron_c2_ev() * codata::bohr_angstrom * codata::bohr_angstrom);
  return value;
}

PhysQty make_qty(double value, Dimension dim, UnitSystem sys) {
  if (!std::isfinite(value)) {
    throw DomainError("physical quantity must be finite");
  }
  return PhysQty{value, dim, sys};
}

PhysQty energy(double value, UnitSystem sys) { return make_qty(value, Dimension::Energy, sys); }
PhysQty length(double value, UnitSystem sys) { return make_qty(value, Dimension::Length, sys); }
PhysQty mass(double value, UnitSystem sys) { return make_qty(value, Dimension::Mass, sys); }

void require_positive(const PhysQty& q, Dimension dim, std::string_view what) {
  if (q.dimension != dim) {
    throw UnitError(std::string(what) + ": expected dimension " + std::string(to_string(dim)) +
                    ", got " + std::string(to_string(q.dimension)));
  }
  if (!std::isfinite(q.value) || q.value <= 0.0) {
    throw DomainError(std::string(what) + " must be finite and > 0");
  }
}

void require_same_system(std::initializer_list<const PhysQty*> qs) {
  if (qs.size() == 0) return;
  const UnitSystem first = (*qs.begin())->system;
  for (const PhysQty* q : qs) {
    if (q->system != first) {
      throw UnitError("mixed unit systems: " + std::string(to_string(first)) + " vs " +
                      std::string(to_string(q->system)));
    }
  }
}

double unit_factor(Dimension dim, UnitSystem sys) {
  switch (dim) {
    case Dimension::Dimensionless:
      return 1.0;
    case Dimension::Energy:
      return energy_factor(sys);
    case Dimension::Length:
      return length_factor(sys);
    case Dimension::Mass:
      return mass_factor(sys);
    case Dimension::EnergyLength:
      return energy_factor(sys) * length_factor(sys);
    case Dimension::EnergyLength2:
      return energy_factor(sys) * length_factor(sys) * length_factor(sys);
  }
  throw UnitError("no conversion defined for this dimension");
}

PhysQty to_internal(const PhysQty& q, UnitSystem target) {
  if (!std::isfinite(q.value)) {
    throw DomainError("cannot convert a non-finite quantity");
  }
  if (q.system == target) return q;
  const double from = unit_factor(q.dimension, q.system);
  const double to = unit_factor(q.dimension, target);
  return PhysQty{q.value * (from / to), q.dimension, target};
}

PhysQty hbar2_over_2m(const PhysQty& m) {
  require_positive(m, Dimension::Mass, "mass");
  double value = 0.0;
  switch (m.system) {
    case UnitSystem::SpectroscopicEvAngstromAmu:
      value = codata::hbar_c_ev_angstrom * codata::hbar_c_ev_angstrom /
              (2.0 * m.value * codata::amu_c2_ev);
      break;
    case UnitSystem::AtomicHbar1Mu1:
    case UnitSystem::AtomicHbar1TwoMu1:
      value = 1.0 / (2.0 * m.value);
      break;
  }
  return PhysQty{value, Dimension::EnergyLength2, m.system};
}

std::string_view to_string(UnitSystem sys) {
  switch (sys) {
    case UnitSystem::SpectroscopicEvAngstromAmu:
      return "spectroscopic";
    case UnitSystem::AtomicHbar1Mu1:
      return "atomic";
    case UnitSystem::AtomicHbar1TwoMu1:
      return "atomic2mu";
  }
  return "unknown";
}

std::string_view to_string(Dimension dim) {
  switch (dim) {
    case Dimension::Energy:
      return "energy";
    case Dimension::Length:
      return "length";
    case Dimension::Mass:
      return "mass";
    case Dimension::Dimensionless:
      return "dimensionless";
    case Dimension::EnergyLength:
      return "energy*length";
    case Dimension::EnergyLength2:
      return "energy*length^2";
  }
  return "unknown";
}

std::string_view energy_unit_name(UnitSystem sys) {
  switch (sys) {
    case UnitSystem::SpectroscopicEvAngstromAmu:
      return "eV";
    case UnitSystem::AtomicHbar1Mu1:
      return "hartree";
    case UnitSystem::AtomicHbar1TwoMu1:
      return "rydberg";
  }
  return "?";
}

std::string_view length_unit_name(UnitSystem sys) {
  return sys == UnitSystem::SpectroscopicEvAngstromAmu ? "angstrom" : "bohr";
}

std::string_view mass_unit_name(UnitSystem sys) {
  switch (sys) {
    case UnitSystem::SpectroscopicEvAngstromAmu:
      return "amu";
    case UnitSystem::AtomicHbar1Mu1:
      return "m_e";
    case UnitSystem::AtomicHbar1TwoMu1:
      return "2m_e";
  }
  return "?";
}

}  // namespace mie
