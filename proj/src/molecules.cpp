#include "mie/molecules.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mie/errors.hpp"

namespace mie {

namespace detail {
std::string_view builtin_registry_text();
}

namespace {

using nlohmann::json;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string where(std::string_view name, std::string_view field) {
  return "molecule '" + std::string(name) + "', field '" + std::string(field) + "'";
}

struct UnitEntry {
  std::string_view name;
  Dimension dim;
  UnitSystem system;
};

// Each accepted unit string is the native unit of one system.
constexpr UnitEntry kUnits[] = {
    {"amu", Dimension::Mass, UnitSystem::SpectroscopicEvAngstromAmu},
    {"m_e", Dimension::Mass, UnitSystem::AtomicHbar1Mu1},
    {"eV", Dimension::Energy, UnitSystem::SpectroscopicEvAngstromAmu},
    {"hartree", Dimension::Energy, UnitSystem::AtomicHbar1Mu1},
    {"rydberg", Dimension::Energy, UnitSystem::AtomicHbar1TwoMu1},
    {"angstrom", Dimension::Length, UnitSystem::SpectroscopicEvAngstromAmu},
    {"bohr", Dimension::Length, UnitSystem::AtomicHbar1Mu1},
};

PhysQty read_quantity(const json& entry, std::string_view name, std::string_view field,
                      Dimension dim) {
  if (!entry.contains(field)) throw ParseError(where(name, field) + ": missing");
  const json& q = entry.at(field);
  if (!q.is_object() || !q.contains("value") || !q.contains("unit")) {
    throw ParseError(where(name, field) + ": expected {\"value\": number, \"unit\": string}");
  }
  if (!q.at("value").is_number()) throw ParseError(where(name, field) + ": value is not a number");
  if (!q.at("unit").is_string()) throw ParseError(where(name, field) + ": unit is not a string");
  const double value = q.at("value").get<double>();
  const std::string unit = q.at("unit").get<std::string>();
  for (const UnitEntry& u : kUnits) {
    if (u.dim == dim && u.name == unit) {
      if (!std::isfinite(value)) throw ValidationError(where(name, field) + ": value not finite");
      return to_internal(PhysQty{value, dim, u.system}, UnitSystem::SpectroscopicEvAngstromAmu);
    }
  }
  throw ParseError(where(name, field) + ": unsupported unit '" + unit + "'");
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

void MoleculeSpec::validate() const {
  const std::string shown = name.empty() ? "<unnamed>" : name;
  if (name.empty()) throw ValidationError("molecule name must be nonempty");
  auto check = [&](const PhysQty& q, Dimension dim, std::string_view field) {
    if (q.dimension != dim) throw ValidationError(where(shown, field) + ": wrong dimension");
    if (!std::isfinite(q.value) || q.value <= 0.0) {
      throw ValidationError(where(shown, field) + ": must be finite and > 0");
    }
  };
  check(reduced_mass, Dimension::Mass, "reduced_mass");
  check(V0, Dimension::Energy, "V0");
  check(a, Dimension::Length, "a");
  if (reduced_mass.system != V0.system || V0.system != a.system) {
    throw ValidationError("molecule '" + shown + "': fields use different unit systems");
  }
}

bool operator==(const MoleculeSpec& x, const MoleculeSpec& y) {
  auto same = [](const PhysQty& p, const PhysQty& q) {
    return p.value == q.value && p.dimension == q.dimension && p.system == q.system;
  };
  return x.name == y.name && same(x.reduced_mass, y.reduced_mass) && same(x.V0, y.V0) &&
         same(x.a, y.a) && x.source == y.source;
}

void Registry::add(MoleculeSpec spec) {
  spec.validate();
  const std::string key = lower(spec.name);
  if (index_.count(key) != 0) {
    throw ValidationError("duplicate molecule name '" + spec.name + "'");
  }
  index_.emplace(key, entries_.size());
  entries_.push_back(std::move(spec));
}

const MoleculeSpec* Registry::find(std::string_view name) const {
  const auto it = index_.find(lower(name));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const MoleculeSpec& Registry::get(std::string_view name) const {
  if (const MoleculeSpec* spec = find(name)) return *spec;
  std::string close;
  std::string all;
  for (const MoleculeSpec& m : entries_) {
    all += (all.empty() ? "" : ", ") + m.name;
    const int d = edit_distance(name, m.name);
    // a distance equal to the query length is a full rewrite, not a typo
    if (d <= 2 && d < static_cast<int>(name.size())) close += (close.empty() ? "" : ", ") + m.name;
  }
  std::string msg = "unknown molecule '" + std::string(name) + "'";
  if (!close.empty()) msg += "; did you mean: " + close;
  msg += "; available: " + (all.empty() ? std::string("(none)") : all);
  throw NotFoundError(msg);
}

const MoleculeSpec& get(const Registry& registry, std::string_view name) {
  return registry.get(name);
}

int edit_distance(std::string_view a, std::string_view b) {
  const std::string x = lower(a);
  const std::string y = lower(b);
  std::vector<int> prev(y.size() + 1);
  std::vector<int> cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const int sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

Registry parse_registry(std::string_view text, std::string origin) {
  Registry reg(std::move(origin));
  if (std::all_of(text.begin(), text.end(),
                  [](unsigned char c) { return std::isspace(c) != 0; })) {
    return reg;
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw ParseError(reg.origin() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("molecules") || !doc.at("molecules").is_array()) {
    throw ParseError(reg.origin() + ": expected an object with a \"molecules\" array");
  }
  std::size_t position = 0;
  for (const json& entry : doc.at("molecules")) {
    ++position;
    if (!entry.is_object()) {
      throw ParseError(reg.origin() + ": molecule #" + std::to_string(position) +
                       " is not an object");
    }
    if (!entry.contains("name") || !entry.at("name").is_string()) {
      throw ParseError(reg.origin() + ": molecule #" + std::to_string(position) +
                       ", field 'name': missing or not a string");
    }
    MoleculeSpec spec;
    spec.name = entry.at("name").get<std::string>();
    spec.reduced_mass = read_quantity(entry, spec.name, "reduced_mass", Dimension::Mass);
    spec.V0 = read_quantity(entry, spec.name, "V0", Dimension::Energy);
    spec.a = read_quantity(entry, spec.name, "a", Dimension::Length);
    if (entry.contains("source")) {
      if (!entry.at("source").is_string()) {
        throw ParseError(where(spec.name, "source") + ": not a string");
      }
      spec.source = entry.at("source").get<std::string>();
    }
    reg.add(std::move(spec));
  }
  return reg;
}

Registry load_registry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open registry file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_registry(buf.str(), path.string());
}

Registry builtin_registry() { return parse_registry(detail::builtin_registry_text(), "builtin"); }

std::string save_registry(const Registry& registry) {
  json doc;
  doc["molecules"] = json::array();
  for (const MoleculeSpec& m : registry.entries()) {
    auto q = [](const PhysQty& p, const char* unit) {
      const PhysQty s = to_internal(p, UnitSystem::SpectroscopicEvAngstromAmu);
      return json{{"value", s.value}, {"unit", unit}};
    };
    doc["molecules"].push_back(json{{"name", m.name},
                                    {"reduced_mass", q(m.reduced_mass, "amu")},
                                    {"V0", q(m.V0, "eV")},
                                    {"a", q(m.a, "angstrom")},
                                    {"source", m.source}});
  }
  return doc.dump(2) + "\n";
}

void save_registry(const Registry& registry, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write registry file " + path.string());
  out << save_registry(registry);
}

}  // namespace mie
