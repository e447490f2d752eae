#include "cli.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string_view>
#include <utility>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "mie/errors.hpp"
#include "mie/molecules.hpp"
#include "mie/oracle.hpp"
#include "mie/spectrum.hpp"
#include "mie/units.hpp"
#include "mie/wavefunction.hpp"

namespace mie::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, JsonLines };
enum class Reference { Raw, FromGround, FromWellBottom };

const std::map<std::string, Format> kFormats{
    {"table", Format::Table}, {"csv", Format::Csv}, {"jsonl", Format::JsonLines}};
const std::map<std::string, Reference> kReferences{{"raw", Reference::Raw},
                                                   {"ground", Reference::FromGround},
                                                   {"well-bottom", Reference::FromWellBottom}};
const std::map<std::string, UnitSystem> kSystems{
    {"spectroscopic", UnitSystem::SpectroscopicEvAngstromAmu},
    {"atomic", UnitSystem::AtomicHbar1Mu1},
    {"atomic2mu", UnitSystem::AtomicHbar1TwoMu1}};
// Energy unit name -> the system whose native energy unit it is.
const std::map<std::string, UnitSystem> kEnergyUnits{
    {"eV", UnitSystem::SpectroscopicEvAngstromAmu},
    {"hartree", UnitSystem::AtomicHbar1Mu1},
    {"rydberg", UnitSystem::AtomicHbar1TwoMu1}};
const std::map<std::string, OracleMethod> kMethods{
    {"fd", OracleMethod::FiniteDifferenceMatrix}, {"numerov", OracleMethod::NumerovShooting}};
const std::map<std::string, GridSpacing> kSpacings{{"uniform", GridSpacing::Uniform},
                                                   {"log", GridSpacing::LogUniform}};

constexpr const char* kTable1Molecules[] = {"N2", "CO", "NO", "CH"};
constexpr int kTable1NMax = 5;
constexpr const char* kTable1Note =
    "potential parameters are best-effort stand-ins; the original parameter set is "
    "unavailable, so these energies are not expected to match the published table";

const CLI::Validator kFinitePositive(
    [](std::string& s) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(s, v) || !std::isfinite(v) || v <= 0.0) {
        return "value " + s + " is not a finite number > 0";
      }
      return {};
    },
    "POSITIVE");
const CLI::Validator kFiniteNonNegative(
    [](std::string& s) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(s, v) || !std::isfinite(v) || v < 0.0) {
        return "value " + s + " is not a finite number >= 0";
      }
      return {};
    },
    "NONNEGATIVE");

std::string num(double v) { return fmt::format("{}", v); }

std::string meta_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return num(v.get<double>());
  return v.dump();
}

void write_meta(std::ostream& out, const ordered_json& meta) {
  for (const auto& [key, value] : meta.items()) out << "# " << key << "=" << meta_text(value) << "\n";
}

// ---- problem source -------------------------------------------------------

struct SourceOptions {
  std::string molecule;
  std::string registry;
  double mu = 0.0;
  double V0 = 0.0;
  double a = 0.0;
  double coulomb = 0.0;
  double barrier = 0.0;
  std::string units = "spectroscopic";
  CLI::Option* o_molecule = nullptr;
  CLI::Option* o_registry = nullptr;
  CLI::Option* o_mu = nullptr;
  CLI::Option* o_V0 = nullptr;
  CLI::Option* o_a = nullptr;
  CLI::Option* o_coulomb = nullptr;
  CLI::Option* o_barrier = nullptr;
  CLI::Option* o_units = nullptr;
};

void add_source(CLI::App* sub, SourceOptions& s) {
  s.o_molecule = sub->add_option("--molecule", s.molecule, "Registry molecule name");
  s.o_registry = sub->add_option("--registry", s.registry, "Registry JSON file (default: builtin)");
  s.o_mu = sub->add_option("--mu", s.mu, "Reduced mass")->check(kFinitePositive);
  s.o_V0 = sub->add_option("--V0", s.V0, "Dissociation energy V0")->check(kFinitePositive);
  s.o_a = sub->add_option("--a", s.a, "Equilibrium distance a")->check(kFinitePositive);
  s.o_coulomb = sub->add_option("--coulomb", s.coulomb, "Strength A of -A/r (instead of --V0/--a)")
                    ->check(kFinitePositive);
  s.o_barrier = sub->add_option("--barrier", s.barrier, "Strength B of +B/r^2 (default 0)")
                    ->check(kFiniteNonNegative);
  s.o_units = sub->add_option("--units", s.units, "Unit system of raw parameters")
                  ->check(CLI::IsMember(kSystems));
}

struct Source {
  CoulombBarrier problem;
  bool from_v0 = false;  // a V0 is defined, so the well bottom is -V0/2
  ordered_json meta = ordered_json::object();
};

Source resolve(const SourceOptions& s) {
  Source src;
  const bool raw = s.o_mu->count() || s.o_V0->count() || s.o_a->count() || s.o_coulomb->count() ||
                   s.o_barrier->count() || s.o_units->count();
  if (s.o_molecule->count()) {
    if (raw) {
      throw UsageError(
          "--molecule cannot be combined with raw parameters (--mu, --V0, --a, --coulomb, "
          "--barrier, --units)");
    }
    const Registry reg = s.o_registry->count() ? load_registry(s.registry) : builtin_registry();
    const MoleculeSpec& m = reg.get(s.molecule);
    src.problem = m.problem();
    src.from_v0 = true;
    src.meta["molecule"] = m.name;
    src.meta["registry"] = reg.origin();
    src.meta["system"] = to_string(src.problem.system);
    src.meta["mu"] = m.reduced_mass.value;
    src.meta["V0"] = m.V0.value;
    src.meta["a"] = m.a.value;
    if (!m.source.empty()) src.meta["source"] = m.source;
  } else {
    if (s.o_registry->count()) throw UsageError("--registry requires --molecule");
    if (!s.o_mu->count()) {
      throw UsageError(
          "give --molecule NAME, or raw parameters --mu with --V0 and --a (or --coulomb and "
          "optional --barrier)");
    }
    const bool mie = s.o_V0->count() || s.o_a->count();
    const bool cb = s.o_coulomb->count() || s.o_barrier->count();
    if (mie && cb) throw UsageError("--V0/--a cannot be combined with --coulomb/--barrier");
    const UnitSystem u = kSystems.at(s.units);
    src.meta["system"] = to_string(u);
    src.meta["mu"] = s.mu;
    if (mie) {
      if (!s.o_V0->count() || !s.o_a->count()) {
        throw UsageError("raw parameters need all of --mu, --V0 and --a");
      }
      src.problem = CoulombBarrier::from_mie(mass(s.mu, u), energy(s.V0, u), length(s.a, u));
      src.from_v0 = true;
      src.meta["V0"] = s.V0;
      src.meta["a"] = s.a;
    } else if (cb) {
      if (!s.o_coulomb->count()) throw UsageError("--barrier needs --coulomb");
      src.problem = CoulombBarrier::from_strengths(
          mass(s.mu, u), make_qty(s.coulomb, Dimension::EnergyLength, u),
          make_qty(s.barrier, Dimension::EnergyLength2, u));
      src.meta["A"] = s.coulomb;
      src.meta["B"] = s.barrier;
    } else {
      throw UsageError("--mu needs --V0 and --a, or --coulomb");
    }
  }
  const UnitSystem sys = src.problem.system;
  src.meta["mass_unit"] = mass_unit_name(sys);
  src.meta["length_unit"] = length_unit_name(sys);
  return src;
}

// ---- energy column ----------------------------------------------------------

struct EnergyOptions {
  std::string unit_out;
  Reference reference = Reference::Raw;
  CLI::Option* o_unit_out = nullptr;
};

void add_energy_options(CLI::App* sub, EnergyOptions& e) {
  e.o_unit_out = sub->add_option("--unit-out", e.unit_out, "Energy unit: eV | hartree | rydberg")
                     ->check(CLI::IsMember(kEnergyUnits));
  sub->add_option("--reference", e.reference, "Energy reference: raw | ground | well-bottom")
      ->transform(CLI::CheckedTransformer(kReferences));
}

std::string_view reference_name(Reference r) {
  switch (r) {
    case Reference::Raw:
      return "raw";
    case Reference::FromGround:
      return "ground";
    case Reference::FromWellBottom:
      return "well-bottom";
  }
  return "?";
}

// Maps an energy in the problem's system to the printed value.
struct EnergyColumn {
  std::string label;
  std::string unit;
  double shift = 0.0;
  double factor = 1.0;

  double operator()(double e) const { return (e - shift) * factor; }
};

EnergyColumn energy_column(const CoulombBarrier& problem, bool from_v0, const EnergyOptions& e) {
  const UnitSystem in = problem.system;
  const UnitSystem out = e.o_unit_out->count() ? kEnergyUnits.at(e.unit_out) : in;
  EnergyColumn col;
  col.unit = energy_unit_name(out);
  col.factor = unit_factor(Dimension::Energy, in) / unit_factor(Dimension::Energy, out);
  switch (e.reference) {
    case Reference::Raw:
      col.label = "E";
      break;
    case Reference::FromGround:
      col.label = "E-E(0,0)";
      col.shift = bound_energy(problem, {0, 0}).energy.value;
      break;
    case Reference::FromWellBottom:
      if (problem.barrier <= 0.0) {
        throw UsageError("--reference well-bottom needs a finite well (barrier > 0)");
      }
      col.label = from_v0 ? "E+V0/2" : "E-Vmin";
      col.shift = -problem.attraction * problem.attraction / (4.0 * problem.barrier);
      break;
  }
  return col;
}

// ---- commands -------------------------------------------------------------

struct SpectrumArgs {
  SourceOptions source;
  EnergyOptions energy;
  int n_max = 5;
  int ell_max = -1;
  Format format = Format::Table;
};

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
  const Source src = resolve(args.source);
  const EnergyColumn col = energy_column(src.problem, src.from_v0, args.energy);
  const auto levels = spectrum_table(src.problem, args.n_max, EllRule{args.ell_max});

  ordered_json meta = src.meta;
  meta["energy_unit"] = col.unit;
  meta["reference"] = reference_name(args.energy.reference);
  meta["column"] = col.label;

  switch (args.format) {
    case Format::Table:
      write_meta(out, meta);
      out << fmt::format("{:>3} {:>3}  {:>22}\n", "n", "l", col.label + " [" + col.unit + "]");
      for (const auto& lv : levels) {
        out << fmt::format("{:>3} {:>3}  {:>22.12g}\n", lv.state.n, lv.state.ell,
                           col(lv.energy.value));
      }
      break;
    case Format::Csv:
      write_meta(out, meta);
      out << "n,l," << col.label << "\n";
      for (const auto& lv : levels) {
        out << lv.state.n << "," << lv.state.ell << "," << num(col(lv.energy.value)) << "\n";
      }
      break;
    case Format::JsonLines:
      for (const auto& lv : levels) {
        ordered_json row;
        row["n"] = lv.state.n;
        row["l"] = lv.state.ell;
        row["E"] = col(lv.energy.value);
        row["reference"] = reference_name(args.energy.reference);
        row["unit"] = col.unit;
        out << row.dump() << "\n";
      }
      break;
  }
  return kOk;
}

struct WavefunctionArgs {
  SourceOptions source;
  EnergyOptions energy;
  int n = 0;
  int ell = 0;
  double r_min = 0.0;
  double r_max = 0.0;
  int points = 0;
  GridSpacing spacing = GridSpacing::LogUniform;
  CLI::Option* o_r_min = nullptr;
  CLI::Option* o_r_max = nullptr;
  CLI::Option* o_points = nullptr;
  CLI::Option* o_spacing = nullptr;
  Format format = Format::Csv;
};

int cmd_wavefunction(const WavefunctionArgs& args, std::ostream& out) {
  const Source src = resolve(args.source);
  const QuantumState state{args.n, args.ell};
  RadialGrid grid = default_grid(src.problem, state);
  if (args.o_r_min->count()) grid.r_min = args.r_min;
  if (args.o_r_max->count()) grid.r_max = args.r_max;
  if (args.o_points->count()) grid.points = args.points;
  if (args.o_spacing->count()) grid.spacing = args.spacing;
  try {
    grid.validate();
  } catch (const DomainError& e) {
    throw UsageError(std::string("grid: ") + e.what());
  }

  const EnergyColumn col = energy_column(src.problem, src.from_v0, args.energy);
  const EnergyLevel level = bound_energy(src.problem, state);
  const RadialFunction f = sample(src.problem, state, grid);

  ordered_json meta = src.meta;
  meta["n"] = state.n;
  meta["l"] = state.ell;
  meta["Lambda"] = level.reduced.Lambda;
  meta["kappa"] = level.reduced.kappa;
  meta[col.label] = col(level.energy.value);
  meta["energy_unit"] = col.unit;
  meta["norm_check"] = f.norm_check;
  meta["coarse_grid"] = f.coarse_grid;
  meta["r_min"] = grid.r_min;
  meta["r_max"] = grid.r_max;
  meta["points"] = grid.points;
  meta["spacing"] = grid.spacing == GridSpacing::Uniform ? "uniform" : "log";

  switch (args.format) {
    case Format::Table:
      write_meta(out, meta);
      out << fmt::format("{:>24} {:>24} {:>24}\n", "r", "R", "u");
      for (std::size_t i = 0; i < f.r.size(); ++i) {
        out << fmt::format("{:>24.15g} {:>24.15g} {:>24.15g}\n", f.r[i], f.R[i], f.u[i]);
      }
      break;
    case Format::Csv:
      write_meta(out, meta);
      out << "r,R,u\n";
      for (std::size_t i = 0; i < f.r.size(); ++i) {
        out << num(f.r[i]) << "," << num(f.R[i]) << "," << num(f.u[i]) << "\n";
      }
      break;
    case Format::JsonLines:
      out << ordered_json{{"metadata", meta}}.dump() << "\n";
      for (std::size_t i = 0; i < f.r.size(); ++i) {
        ordered_json row;
        row["r"] = f.r[i];
        row["R"] = f.R[i];
        row["u"] = f.u[i];
        out << row.dump() << "\n";
      }
      break;
  }
  return kOk;
}

struct VerifyArgs {
  SourceOptions source;
  EnergyOptions energy;
  int n_max = 3;
  int ell_max = -1;
  double tolerance = 1e-6;
  OracleMethod method = OracleMethod::FiniteDifferenceMatrix;
  Format format = Format::Table;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const Source src = resolve(args.source);
  if (args.energy.reference != Reference::Raw) {
    throw UsageError("verify reports raw energies; --reference is not supported");
  }
  const EnergyColumn col = energy_column(src.problem, src.from_v0, args.energy);
  const auto reports =
      verify_table(src.problem, args.n_max, EllRule{args.ell_max}, args.tolerance, args.method);

  int pass = 0;
  int fail = 0;
  int inconclusive = 0;
  for (const auto& r : reports) {
    switch (r.status) {
      case VerificationStatus::Pass:
        ++pass;
        break;
      case VerificationStatus::Fail:
        ++fail;
        break;
      case VerificationStatus::Inconclusive:
        ++inconclusive;
        break;
    }
  }

  ordered_json meta = src.meta;
  meta["energy_unit"] = col.unit;
  meta["tolerance"] = args.tolerance;
  meta["method"] = args.method == OracleMethod::NumerovShooting ? "numerov" : "fd";

  switch (args.format) {
    case Format::Table:
      write_meta(out, meta);
      out << fmt::format("{:>3} {:>3}  {:>22} {:>22} {:>10} {:>10} {:>5}  {}\n", "n", "l",
                         "E_closed", "E_oracle", "rel_delta", "estimate", "nodes", "status");
      for (const auto& r : reports) {
        out << fmt::format("{:>3} {:>3}  {:>22.15g} {:>22.15g} {:>10.3e} {:>10.3e} {:>5}  {}\n",
                           r.state.n, r.state.ell, col(r.e_closed), col(r.e_oracle), r.rel_delta,
                           r.convergence_estimate * col.factor, r.oracle_nodes,
                           to_string(r.status));
      }
      break;
    case Format::Csv:
      write_meta(out, meta);
      out << "n,l,E_closed,E_oracle,abs_delta,rel_delta,convergence_estimate,converged,"
             "oracle_nodes,status\n";
      for (const auto& r : reports) {
        out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.state.n, r.state.ell,
                           num(col(r.e_closed)), num(col(r.e_oracle)), num(r.abs_delta * col.factor),
                           num(r.rel_delta), num(r.convergence_estimate * col.factor),
                           r.converged ? "true" : "false", r.oracle_nodes, to_string(r.status));
      }
      break;
    case Format::JsonLines:
      for (const auto& r : reports) {
        ordered_json row;
        row["n"] = r.state.n;
        row["l"] = r.state.ell;
        row["E_closed"] = col(r.e_closed);
        row["E_oracle"] = col(r.e_oracle);
        row["abs_delta"] = r.abs_delta * col.factor;
        row["rel_delta"] = r.rel_delta;
        row["convergence_estimate"] = r.convergence_estimate * col.factor;
        row["converged"] = r.converged;
        row["oracle_nodes"] = r.oracle_nodes;
        row["tolerance"] = r.tolerance;
        row["status"] = to_string(r.status);
        row["unit"] = col.unit;
        out << row.dump() << "\n";
      }
      break;
  }
  const std::string summary =
      fmt::format("verify: {} states, {} pass, {} fail, {} inconclusive", reports.size(), pass,
                  fail, inconclusive);
  if (args.format == Format::Table) {
    out << summary << "\n";
  } else {
    err << summary << "\n";
  }
  if (fail > 0) {
    err << fmt::format("verify: {} of {} states failed at tolerance {}\n", fail, reports.size(),
                       num(args.tolerance));
    return kCompute;
  }
  return kOk;
}

struct Table1Args {
  std::string registry;
  CLI::Option* o_registry = nullptr;
  EnergyOptions energy;
  Format format = Format::Table;
};

int cmd_table1(const Table1Args& args, std::ostream& out) {
  const Registry reg = args.o_registry->count() ? load_registry(args.registry) : builtin_registry();

  std::vector<std::vector<double>> columns;
  std::vector<QuantumState> states;
  std::string label;
  std::string unit;
  for (const char* name : kTable1Molecules) {
    const MoleculeSpec& m = reg.get(name);
    const CoulombBarrier problem = m.problem();
    const EnergyColumn col = energy_column(problem, true, args.energy);
    label = col.label;
    unit = col.unit;
    std::vector<double> values;
    states.clear();
    for (const auto& lv : spectrum_table(problem, kTable1NMax)) {
      states.push_back(lv.state);
      values.push_back(col(lv.energy.value));
    }
    columns.push_back(std::move(values));
  }

  ordered_json footer;
  footer["energy"] = label;
  footer["energy_unit"] = unit;
  footer["reference"] = reference_name(args.energy.reference);
  footer["registry"] = reg.origin();
  footer["note"] = kTable1Note;

  switch (args.format) {
    case Format::Table:
      out << fmt::format("{:>3} {:>3}", "n", "l");
      for (const char* name : kTable1Molecules) out << fmt::format(" {:>16}", name);
      out << "\n";
      for (std::size_t i = 0; i < states.size(); ++i) {
        out << fmt::format("{:>3} {:>3}", states[i].n, states[i].ell);
        for (const auto& c : columns) out << fmt::format(" {:>16.10f}", c[i]);
        out << "\n";
      }
      write_meta(out, footer);
      break;
    case Format::Csv:
      out << "n,l";
      for (const char* name : kTable1Molecules) out << "," << name;
      out << "\n";
      for (std::size_t i = 0; i < states.size(); ++i) {
        out << states[i].n << "," << states[i].ell;
        for (const auto& c : columns) out << "," << num(c[i]);
        out << "\n";
      }
      write_meta(out, footer);
      break;
    case Format::JsonLines:
      for (std::size_t i = 0; i < states.size(); ++i) {
        ordered_json row;
        row["n"] = states[i].n;
        row["l"] = states[i].ell;
        for (std::size_t j = 0; j < columns.size(); ++j) row[kTable1Molecules[j]] = columns[j][i];
        out << row.dump() << "\n";
      }
      out << ordered_json{{"footer", footer}}.dump() << "\n";
      break;
  }
  return kOk;
}

void add_format(CLI::App* sub, Format& f) {
  sub->add_option("--format", f, "Output format: table | csv | jsonl")
      ->transform(CLI::CheckedTransformer(kFormats));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of the Mie (2,1) potential: closed forms and numerical checks",
               "mie"};
  app.require_subcommand(1);

  SpectrumArgs spectrum;
  CLI::App* s_spectrum = app.add_subcommand("spectrum", "Energy levels E(n, l) for l <= n");
  add_source(s_spectrum, spectrum.source);
  add_energy_options(s_spectrum, spectrum.energy);
  s_spectrum->add_option("--n-max", spectrum.n_max, "Largest n (default 5)")
      ->check(CLI::NonNegativeNumber);
  s_spectrum->add_option("--ell-max", spectrum.ell_max, "Cap on l (default: l <= n)")
      ->check(CLI::NonNegativeNumber);
  add_format(s_spectrum, spectrum.format);

  WavefunctionArgs wave;
  CLI::App* s_wave = app.add_subcommand("wavefunction", "Export r, R(r), u(r) = r R(r)");
  add_source(s_wave, wave.source);
  add_energy_options(s_wave, wave.energy);
  s_wave->add_option("--n", wave.n, "Radial quantum number")->check(CLI::NonNegativeNumber);
  s_wave->add_option("--l", wave.ell, "Angular momentum")->check(CLI::NonNegativeNumber);
  wave.o_r_min = s_wave->add_option("--r-min", wave.r_min, "First abscissa")->check(kFinitePositive);
  wave.o_r_max = s_wave->add_option("--r-max", wave.r_max, "Last abscissa")->check(kFinitePositive);
  wave.o_points = s_wave->add_option("--points", wave.points, "Number of abscissae (>= 16)");
  wave.o_spacing = s_wave->add_option("--spacing", wave.spacing, "uniform | log")
                       ->transform(CLI::CheckedTransformer(kSpacings));
  add_format(s_wave, wave.format);

  VerifyArgs verify;
  CLI::App* s_verify = app.add_subcommand("verify", "Compare closed-form and oracle energies");
  add_source(s_verify, verify.source);
  add_energy_options(s_verify, verify.energy);
  s_verify->add_option("--n-max", verify.n_max, "Largest n (default 3)")
      ->check(CLI::NonNegativeNumber);
  s_verify->add_option("--ell-max", verify.ell_max, "Cap on l (default: l <= n)")
      ->check(CLI::NonNegativeNumber);
  s_verify->add_option("--tolerance", verify.tolerance, "Relative tolerance (default 1e-6)")
      ->check(kFinitePositive);
  s_verify->add_option("--method", verify.method, "Oracle: fd | numerov")
      ->transform(CLI::CheckedTransformer(kMethods));
  add_format(s_verify, verify.format);

  Table1Args table1;
  CLI::App* s_table1 =
      app.add_subcommand("table1", "N2, CO, NO, CH energies for n <= 5, l <= n");
  table1.o_registry =
      s_table1->add_option("--registry", table1.registry, "Registry JSON file (default: builtin)");
  add_energy_options(s_table1, table1.energy);
  add_format(s_table1, table1.format);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("mie");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (s_spectrum->parsed()) return cmd_spectrum(spectrum, out);
    if (s_wave->parsed()) return cmd_wavefunction(wave, out);
    if (s_verify->parsed()) return cmd_verify(verify, out, err);
    if (s_table1->parsed()) return cmd_table1(table1, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotFoundError& e) {
    err << "data error: " << e.what() << "\n";
    return kData;
  } catch (const ParseError& e) {
    err << "data error: " << e.what() << "\n";
    return kData;
  } catch (const ValidationError& e) {
    err << "data error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    err << "compute error: " << e.what() << "\n";
    return kCompute;
  }
  return kUsage;
}

}  // namespace mie::cli
