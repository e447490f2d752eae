#include "mie/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mie/errors.hpp"
#include "mie/potential.hpp"
#include "mie/tridiagonal.hpp"

namespace mie {

void OracleConfig::validate() const {
  grid.validate();
  if (states_requested < 1) throw DomainError("states_requested must be >= 1");
  if (max_domain_doublings < 0) throw DomainError("max_domain_doublings must be >= 0");
}

namespace {

constexpr double kTailFraction = 0.9;
constexpr double kTailAmplitude = 1e-8;
constexpr int kPointsPerState = 200;

bool is_log(const RadialGrid& g) { return g.spacing == GridSpacing::LogUniform; }

// Per-grid samples. On a log grid the unknown is w(x) with u = sqrt(r) w and
// x = ln r, which turns the radial equation into
//   -c w'' + [c (ell + 1/2)^2 + r^2 V] w = E r^2 w.
// `base` and `weight` hold the bracket and the right-hand factor, so the
// local problem reads -c w'' + (base - E weight) w = 0 in both spacings.
struct Samples {
  std::vector<double> r;
  std::vector<double> base;
  std::vector<double> weight;
  double h = 0.0;
  bool log = false;
};

Samples make_samples(double c, const RadialPotential& V, int ell, const RadialGrid& grid) {
  Samples s;
  s.r = grid.abscissae();
  s.h = grid.step();
  s.log = is_log(grid);
  s.base.resize(s.r.size());
  s.weight.resize(s.r.size());
  const double l = ell;
  for (std::size_t i = 0; i < s.r.size(); ++i) {
    const double r = s.r[i];
    const double v = V(r);
    if (!std::isfinite(v)) {
      throw DomainError("potential is not finite at r = " + std::to_string(r));
    }
    if (s.log) {
      s.base[i] = c * (l + 0.5) * (l + 0.5) + r * r * v;
      s.weight[i] = r * r;
    } else {
      s.base[i] = v + c * l * (l + 1.0) / (r * r);
      s.weight[i] = 1.0;
    }
  }
  return s;
}

// u on the full grid (zeros at the Dirichlet ends), unit norm.
std::vector<double> normalized_u(const RadialGrid& grid, const Samples& s, std::vector<double> w) {
  std::vector<double> u(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) u[i] = s.log ? std::sqrt(s.r[i]) * w[i] : w[i];
  std::vector<double> sq(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) sq[i] = u[i] * u[i];
  const double norm = std::sqrt(simpson(grid, sq));
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("oracle eigenvector has no norm");
  for (double& v : u) v /= norm;
  // positive near the origin
  const double big = *std::max_element(u.begin(), u.end(),
                                       [](double a, double b) { return std::abs(a) < std::abs(b); });
  for (double v : u) {
    if (std::abs(v) > 1e-6 * std::abs(big)) {
      if (v < 0.0) {
        for (double& x : u) x = -x;
      }
      break;
    }
  }
  return u;
}

template <typename Count>
double bisect_index(const Count& count, int index, double lo, double hi) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 4.0 * eps * std::max(std::abs(lo), std::abs(hi))) break;
    if (count(mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct GridSolve {
  std::vector<double> energies;
  std::vector<std::vector<double>> vectors;
};

// ---- three-point finite differences -------------------------------------

GridSolve solve_fd(double c, const Samples& s, const RadialGrid& grid, int k, bool want_vectors) {
  const std::size_t n_all = s.r.size();
  const std::size_t m = n_all - 2;
  const double kin = c / (s.h * s.h);
  SymTridiagonal t;
  t.diag.resize(m);
  t.off.resize(m - 1);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t i = j + 1;
    if (s.log) {
      t.diag[j] = (2.0 * kin + s.base[i]) / s.weight[i];
      if (j + 1 < m) t.off[j] = -kin / (s.r[i] * s.r[i + 1]);
    } else {
      t.diag[j] = 2.0 * kin + s.base[i];
      if (j + 1 < m) t.off[j] = -kin;
    }
  }
  GridSolve out;
  out.energies = lowest_eigenvalues(t, k);
  if (want_vectors) {
    for (double e : out.energies) {
      const std::vector<double> y = eigenvector(t, e);
      std::vector<double> w(n_all, 0.0);
      // On the log grid y = r w (symmetrized pencil); uniform grid y = u.
      for (std::size_t j = 0; j < m; ++j) w[j + 1] = s.log ? y[j] / s.r[j + 1] : y[j];
      out.vectors.push_back(normalized_u(grid, s, std::move(w)));
    }
  }
  return out;
}

// ---- Numerov shooting ---------------------------------------------------

struct Numerov {
  const Samples& s;
  double c;

  double f(std::size_t i, double e) const {
    const double g = (s.base[i] - e * s.weight[i]) / c;
    return 1.0 - s.h * s.h * g / 12.0;
  }

  // f_i(E) > 0 at every point iff E exceeds this value; below it the
  // recurrence no longer counts nodes.
  double lowest_resolved_energy() const {
    double e = std::numeric_limits<double>::lowest();
    for (std::size_t i = 1; i < s.r.size(); ++i) {
      e = std::max(e, (s.base[i] - 12.0 * c / (s.h * s.h)) / s.weight[i]);
    }
    return e;
  }

  // Sign changes of the outward solution on points 1..N-1; equals the number
  // of Dirichlet eigenvalues below e.
  int count(double e) const {
    const std::size_t n = s.r.size();
    double w_prev = 0.0;
    double w = 1.0;
    double f_prev = f(0, e);
    double f_cur = f(1, e);
    int nodes = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double f_next = f(i + 1, e);
      double w_next = ((12.0 - 10.0 * f_cur) * w - f_prev * w_prev) / f_next;
      if (w_next == 0.0) w_next = -std::copysign(std::numeric_limits<double>::min(), w);
      if ((w_next < 0.0) != (w < 0.0)) ++nodes;
      if (std::abs(w_next) > 1e150) {
        w_next *= 1e-150;
        w *= 1e-150;
      }
      w_prev = w;
      w = w_next;
      f_prev = f_cur;
      f_cur = f_next;
    }
    return nodes;
  }

  std::vector<double> vector_at(double e) const {
    const std::size_t n = s.r.size();
    // match at the outermost classically allowed point
    std::size_t m = n / 2;
    for (std::size_t i = n - 2; i >= 1; --i) {
      if (s.base[i] - e * s.weight[i] < 0.0) {
        m = i;
        break;
      }
    }
    m = std::clamp<std::size_t>(m, 2, n - 3);

    std::vector<double> out(n, 0.0);
    out[1] = 1.0;
    for (std::size_t i = 1; i < m; ++i) {
      out[i + 1] = ((12.0 - 10.0 * f(i, e)) * out[i] - f(i - 1, e) * out[i - 1]) / f(i + 1, e);
      if (std::abs(out[i + 1]) > 1e200) {
        for (std::size_t j = 0; j <= i + 1; ++j) out[j] *= 1e-200;
      }
    }
    std::vector<double> in(n, 0.0);
    in[n - 2] = 1e-30;
    for (std::size_t i = n - 2; i > m; --i) {
      in[i - 1] = ((12.0 - 10.0 * f(i, e)) * in[i] - f(i + 1, e) * in[i + 1]) / f(i - 1, e);
      if (std::abs(in[i - 1]) > 1e200) {
        for (std::size_t j = i - 1; j < n; ++j) in[j] *= 1e-200;
      }
    }
    std::size_t join = m;
    if (std::abs(in[join]) < 1e-12 * std::abs(in[join - 1])) --join;
    const double scale = out[join] / in[join];
    for (std::size_t i = join; i < n; ++i) out[i] = in[i] * scale;
    return out;
  }
};

GridSolve solve_numerov(double c, const Samples& s, const RadialGrid& grid, int k,
                        bool want_vectors) {
  const Numerov nv{s, c};
  double lo = std::numeric_limits<double>::max();
  for (std::size_t i = 1; i + 1 < s.r.size(); ++i) lo = std::min(lo, s.base[i] / s.weight[i]);
  const double resolved = nv.lowest_resolved_energy();
  lo = std::max(lo, resolved);
  lo += 1e-12 * std::max(std::abs(lo), 1e-300);
  if (nv.count(lo) > 0) {
    throw DomainError("grid too coarse for Numerov: eigenvalues lie below E = " +
                      std::to_string(resolved) + ", the lowest energy the step resolves");
  }
  double hi = std::max(1.0, lo + 1.0);
  for (int i = 0; i < 1100 && nv.count(hi) < k; ++i) hi += std::max(1.0, std::abs(hi));

  GridSolve out;
  for (int j = 0; j < k; ++j) {
    const double start = out.energies.empty() ? lo : out.energies.back();
    out.energies.push_back(bisect_index([&](double e) { return nv.count(e); }, j, start, hi));
  }
  if (want_vectors) {
    for (double e : out.energies) out.vectors.push_back(normalized_u(grid, s, nv.vector_at(e)));
  }
  return out;
}

GridSolve solve_grid(double c, const RadialPotential& V, int ell, const RadialGrid& grid,
                     OracleMethod method, int k, bool want_vectors) {
  const Samples s = make_samples(c, V, ell, grid);
  if (static_cast<int>(s.r.size()) - 2 < k) throw DomainError("grid has fewer unknowns than states");
  return method == OracleMethod::FiniteDifferenceMatrix ? solve_fd(c, s, grid, k, want_vectors)
                                                        : solve_numerov(c, s, grid, k, want_vectors);
}

RadialGrid doubled_domain(const RadialGrid& g) {
  RadialGrid out = g;
  if (is_log(g)) {
    const double h = g.step();
    out.r_max = 2.0 * g.r_max;
    out.points = g.points + static_cast<int>(std::ceil(std::log(2.0) / h));
  } else {
    out.r_max = g.r_min + 2.0 * (g.r_max - g.r_min);
    out.points = 2 * (g.points - 1) + 1;
  }
  return out;
}

// Index of the first state that is unbound or leaks into the outer boundary.
int first_contaminated(const OracleResult& res, bool require_bound) {
  const auto r = res.grid_used.abscissae();
  const double r_tail = res.grid_used.r_min +
                        kTailFraction * (res.grid_used.r_max - res.grid_used.r_min);
  for (std::size_t j = 0; j < res.energies.size(); ++j) {
    if (require_bound && !(res.energies[j] < 0.0)) return static_cast<int>(j);
    const auto& u = res.eigenvectors[j];
    double peak = 0.0;
    double tail = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      peak = std::max(peak, std::abs(u[i]));
      if (r[i] >= r_tail) tail = std::max(tail, std::abs(u[i]));
    }
    if (tail > kTailAmplitude * peak) return static_cast<int>(j);
  }
  return -1;
}

}  // namespace

OracleResult solve_radial(double kinetic, const RadialPotential& potential, int ell,
                          const OracleConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(kinetic) || kinetic <= 0.0) throw DomainError("kinetic prefactor must be > 0");
  if (ell < 0) throw DomainError("ell must be >= 0");
  if (!potential) throw DomainError("no potential supplied");

  const int k = cfg.states_requested;
  const double order = cfg.method == OracleMethod::FiniteDifferenceMatrix ? 2.0 : 4.0;
  const double factor = std::pow(2.0, order) - 1.0;
  // The symmetric stencils have error expansions in h^order, h^(order+2), ...
  const double next_factor = std::pow(2.0, order + 2.0) - 1.0;

  RadialGrid base = cfg.grid;
  for (int attempt = 0;; ++attempt) {
    std::vector<RadialGrid> grids{base, base.refined()};
    if (cfg.richardson) grids.push_back(grids.back().refined());
    if (grids.back().points < kPointsPerState * k) {
      throw DomainError("grid too coarse: the finest grid needs at least " +
                        std::to_string(kPointsPerState * k) + " points for " +
                        std::to_string(k) + " states");
    }
    std::vector<GridSolve> solves;
    for (std::size_t g = 0; g < grids.size(); ++g) {
      solves.push_back(
          solve_grid(kinetic, potential, ell, grids[g], cfg.method, k, g + 1 == grids.size()));
    }

    OracleResult res;
    res.grid_used = grids.back();
    res.eigenvectors = solves.back().vectors;
    for (int j = 0; j < k; ++j) {
      const double e1 = solves[0].energies[j];
      const double e2 = solves[1].energies[j];
      if (cfg.richardson) {
        const double e3 = solves[2].energies[j];
        const double r1 = e2 + (e2 - e1) / factor;
        const double r2 = e3 + (e3 - e2) / factor;
        res.energies.push_back(r2);
        res.convergence_estimate.push_back(std::abs(r2 - r1) / next_factor);
      } else {
        res.energies.push_back(e2);
        res.convergence_estimate.push_back(std::abs(e2 - e1) / factor);
      }
    }

    // Dirichlet at r_min shifts E by about c u'(r_min)^2 r_min.
    const std::vector<double> r = res.grid_used.abscissae();
    for (int j = 0; j < k; ++j) {
      const auto& u = res.eigenvectors[static_cast<std::size_t>(j)];
      const double slope = u[1] / (r[1] - r[0]);
      res.convergence_estimate[static_cast<std::size_t>(j)] += kinetic * slope * slope * r[0];
    }

    const int bad = first_contaminated(res, cfg.require_bound);
    if (bad < 0) return res;
    if (attempt >= cfg.max_domain_doublings) {
      throw BoundaryContaminationError(
          "state " + std::to_string(bad) + " (ell=" + std::to_string(ell) +
              ") is not bound on [r_min, r_max = " + std::to_string(res.grid_used.r_max) +
              "]: eigenvalue >= 0 or amplitude near r_max above " + std::to_string(kTailAmplitude),
          bad);
    }
    base = doubled_domain(base);
  }
}

namespace {

OracleResult solve_scaled(double kinetic_scaled, const RadialPotential& v_scaled, int ell,
                          const OracleConfig& cfg, double length, double energy_unit) {
  OracleConfig scaled = cfg;
  scaled.grid.r_min = cfg.grid.r_min / length;
  scaled.grid.r_max = cfg.grid.r_max / length;
  OracleResult res = solve_radial(kinetic_scaled, v_scaled, ell, scaled);
  for (double& e : res.energies) e *= energy_unit;
  for (double& e : res.convergence_estimate) e *= energy_unit;
  res.grid_used.r_min *= length;
  res.grid_used.r_max *= length;
  const double amp = 1.0 / std::sqrt(length);
  for (auto& u : res.eigenvectors) {
    for (double& v : u) v *= amp;
  }
  return res;
}

}  // namespace

OracleResult solve_radial(const CoulombBarrier& problem, int ell, const OracleConfig& cfg) {
  problem.validate();
  const double length = problem.length_scale();
  const double energy_unit = problem.attraction / length;
  const double kin = problem.kinetic / (energy_unit * length * length);
  const double b = problem.barrier / (energy_unit * length * length);
  return solve_scaled(
      kin, [b](double rho) { return (b / rho - 1.0) / rho; }, ell, cfg, length, energy_unit);
}

OracleResult solve_radial(const PhysQty& mu, const PhysQty& V0, const PhysQty& a, int ell,
                          const OracleConfig& cfg) {
  require_positive(mu, Dimension::Mass, "mu");
  require_positive(V0, Dimension::Energy, "V0");
  require_positive(a, Dimension::Length, "a");
  require_same_system({&mu, &V0, &a});
  const double kin = hbar2_over_2m(mu).value / (V0.value * a.value * a.value);
  return solve_scaled(
      kin, [](double rho) { return kernel::special_value(1.0, 1.0, rho); }, ell, cfg, a.value,
      V0.value);
}

OracleConfig default_oracle_config(const CoulombBarrier& problem, int ell, int n_top) {
  problem.validate();
  if (ell < 0 || n_top < 0) throw DomainError("ell and n_top must be >= 0");
  const double length = problem.length_scale();
  // Bohr-type radius in units of `length`; Coulomb-tail states spread as (n + ell + 1)^2.
  const double bohr = problem.kinetic / (problem.attraction * length);
  const double extent = (n_top + ell + 1.0) * (n_top + ell + 1.0);
  OracleConfig cfg;
  cfg.grid.spacing = GridSpacing::LogUniform;
  cfg.grid.r_min = 1e-12 * length;
  cfg.grid.r_max = length * std::max(40.0, 16.0 * extent * bohr);
  constexpr double kBaseStep = 0.01;
  cfg.grid.points =
      static_cast<int>(std::ceil(std::log(cfg.grid.r_max / cfg.grid.r_min) / kBaseStep)) + 1;
  cfg.states_requested = n_top + 1;
  return cfg;
}

std::string_view to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::Pass:
      return "pass";
    case VerificationStatus::Fail:
      return "fail";
    case VerificationStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

double convergence_threshold(double tolerance) { return std::max(0.1 * tolerance, 1e-9); }

namespace {

int interior_sign_changes(const std::vector<double>& u) {
  double peak = 0.0;
  for (double v : u) peak = std::max(peak, std::abs(v));
  // ignore round-off wiggles in the far tails
  const double floor = 1e-10 * peak;
  int nodes = 0;
  int last = 0;
  for (double v : u) {
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++nodes;
    last = s;
  }
  return nodes;
}

VerificationReport make_report(const CoulombBarrier& problem, QuantumState state,
                               const OracleResult& res, double tolerance) {
  VerificationReport rep;
  rep.state = state;
  rep.tolerance = tolerance;
  rep.e_closed = bound_energy(problem, state).energy.value;
  rep.e_oracle = res.energies.at(static_cast<std::size_t>(state.n));
  rep.abs_delta = std::abs(rep.e_closed - rep.e_oracle);
  rep.rel_delta = rep.abs_delta / std::abs(rep.e_closed);
  rep.convergence_estimate = res.convergence_estimate.at(static_cast<std::size_t>(state.n));
  rep.converged =
      rep.convergence_estimate <= convergence_threshold(tolerance) * std::abs(rep.e_oracle);
  rep.oracle_nodes = interior_sign_changes(res.eigenvectors.at(static_cast<std::size_t>(state.n)));
  rep.grid_used = res.grid_used;
  if (!rep.converged) {
    rep.status = VerificationStatus::Inconclusive;
  } else {
    rep.status = rep.rel_delta <= tolerance ? VerificationStatus::Pass : VerificationStatus::Fail;
  }
  return rep;
}

}  // namespace

VerificationReport verify_state(const CoulombBarrier& problem, QuantumState state,
                                const OracleConfig& cfg, double tolerance) {
  state.validate();
  OracleConfig c = cfg;
  c.states_requested = std::max(c.states_requested, state.n + 1);
  return make_report(problem, state, solve_radial(problem, state.ell, c), tolerance);
}

VerificationReport verify_state(const CoulombBarrier& problem, QuantumState state,
                                double tolerance) {
  state.validate();
  return verify_state(problem, state, default_oracle_config(problem, state.ell, state.n),
                      tolerance);
}

VerificationReport verify_state(const PhysQty& mu, const PhysQty& V0, const PhysQty& a,
                                QuantumState state, const OracleConfig& cfg, double tolerance) {
  state.validate();
  const CoulombBarrier problem = CoulombBarrier::from_mie(mu, V0, a);
  OracleConfig c = cfg;
  c.states_requested = std::max(c.states_requested, state.n + 1);
  return make_report(problem, state, solve_radial(mu, V0, a, state.ell, c), tolerance);
}

std::vector<VerificationReport> verify_table(const CoulombBarrier& problem, int n_max,
                                             EllRule rule, double tolerance,
                                             OracleMethod method) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  std::vector<VerificationReport> reports;
  const int ell_top = rule.max_for(n_max);
  for (int ell = 0; ell <= ell_top; ++ell) {
    OracleConfig cfg = default_oracle_config(problem, ell, n_max);
    cfg.method = method;
    const OracleResult res = solve_radial(problem, ell, cfg);
    for (int n = 0; n <= n_max; ++n) {
      if (ell <= rule.max_for(n)) {
        reports.push_back(make_report(problem, QuantumState{n, ell}, res, tolerance));
      }
    }
  }
  std::sort(reports.begin(), reports.end(), [](const auto& x, const auto& y) {
    return x.state.n != y.state.n ? x.state.n < y.state.n : x.state.ell < y.state.ell;
  });
  return reports;
}

}  // namespace mie
