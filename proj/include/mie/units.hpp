#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

namespace mie {

/// Unit conventions understood by the library.
///
/// SpectroscopicEvAngstromAmu: energies in eV, lengths in angstrom, masses in
/// unified atomic mass units.
/// AtomicHbar1Mu1: hartree atomic units (hbar = m_e = 1; hartree, bohr).
/// AtomicHbar1TwoMu1: Rydberg-type atomic units (hbar = 1, 2 m_e = 1; the
/// mass unit is 2 m_e, energies in rydberg, lengths in bohr). A particle of
/// mass 1/2 in this system has hbar^2/(2 mu) = 1.
enum class UnitSystem { SpectroscopicEvAngstromAmu, AtomicHbar1Mu1, AtomicHbar1TwoMu1 };

enum class Dimension { Energy, Length, Mass, Dimensionless, EnergyLength, EnergyLength2 };

namespace codata {
// CODATA 2018.
inline constexpr double hbar_c_ev_angstrom = 1973.269804;
inline constexpr double amu_c2_ev = 931.49410242e6;
inline constexpr double bohr_angstrom = 0.529177210903;
inline constexpr double hartree_ev = 27.211386245988;
inline constexpr double electron_mass_amu = 5.48579909065e-4;
}  // namespace codata

/// Hartree energy implied by the constants above, (hbar c)^2 / (m_e c^2 a0^2).
/// Used for all conversions so that atomic and spectroscopic routes agree.
double consistent_hartree_ev();

/// A value tagged with its dimension and unit system.
struct PhysQty {
  double value = 0.0;
  Dimension dimension = Dimension::Dimensionless;
  UnitSystem system = UnitSystem::SpectroscopicEvAngstromAmu;
};

/// Factories; throw DomainError for non-finite values.
PhysQty make_qty(double value, Dimension dim, UnitSystem sys);
PhysQty energy(double value, UnitSystem sys);
PhysQty length(double value, UnitSystem sys);
PhysQty mass(double value, UnitSystem sys);

/// Throws DomainError unless q has dimension `dim` and a finite value > 0.
void require_positive(const PhysQty& q, Dimension dim, std::string_view what);

/// Throws UnitError unless every quantity shares the system of the first.
void require_same_system(std::initializer_list<const PhysQty*> qs);

/// Value of one unit of (dim, sys) expressed in the spectroscopic system.
double unit_factor(Dimension dim, UnitSystem sys);

/// Re-express q in the target system.
PhysQty to_internal(const PhysQty& q, UnitSystem target);

/// hbar^2 / (2 mu) in energy * length^2 of the mass's system.
PhysQty hbar2_over_2m(const PhysQty& mass);

std::string_view to_string(UnitSystem sys);
std::string_view to_string(Dimension dim);
std::string_view energy_unit_name(UnitSystem sys);
std::string_view length_unit_name(UnitSystem sys);
std::string_view mass_unit_name(UnitSystem sys);

}  // namespace mie
