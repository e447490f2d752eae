#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mie/spectrum.hpp"
#include "mie/units.hpp"

namespace mie {

/// A diatomic parameter set, stored in the spectroscopic system
/// (amu, eV, angstrom).
struct MoleculeSpec {
  std::string name;
  PhysQty reduced_mass;
  PhysQty V0;
  PhysQty a;
  std::string source;

  /// Throws ValidationError naming the molecule and the offending field.
  void validate() const;
  CoulombBarrier problem() const { return CoulombBarrier::from_mie(reduced_mass, V0, a); }
  friend bool operator==(const MoleculeSpec&, const MoleculeSpec&);
};

/// Molecules keyed by case-insensitive name, kept in file order.
class Registry {
 public:
  Registry() = default;
  explicit Registry(std::string origin) : origin_(std::move(origin)) {}

  /// Validates the entry; a duplicate name is a ValidationError.
  void add(MoleculeSpec spec);

  const MoleculeSpec* find(std::string_view name) const;
  /// Throws NotFoundError listing close matches (edit distance <= 2 and shorter than
  /// the query) and all names.
  const MoleculeSpec& get(std::string_view name) const;

  const std::vector<MoleculeSpec>& entries() const { return entries_; }
  const std::string& origin() const { return origin_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<MoleculeSpec> entries_;
  std::map<std::string, std::size_t> index_;
  std::string origin_ = "builtin";
};

/// Registry document format (JSON):
///
///   { "molecules": [
///       { "name": "CO",
///         "reduced_mass": { "value": 6.856, "unit": "amu" },
///         "V0": { "value": 10.845, "unit": "eV" },
///         "a":  { "value": 1.1282, "unit": "angstrom" },
///         "source": "..." } ] }
///
/// Accepted units: amu | m_e, eV | hartree | rydberg, angstrom | bohr.
/// Values are converted to amu / eV / angstrom on load. An empty document
/// yields an empty registry.
Registry parse_registry(std::string_view text, std::string origin = "<memory>");
Registry load_registry(const std::filesystem::path& path);
Registry builtin_registry();

/// Serialize in canonical units; parse_registry(save_registry(r)) == r field by field.
std::string save_registry(const Registry& registry);
void save_registry(const Registry& registry, const std::filesystem::path& path);

const MoleculeSpec& get(const Registry& registry, std::string_view name);

/// Levenshtein distance, ASCII case-insensitive.
int edit_distance(std::string_view a, std::string_view b);

}  // namespace mie
