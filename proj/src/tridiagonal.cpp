#include "mie/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mie/errors.hpp"

namespace mie {

void SymTridiagonal::validate() const {
  if (diag.empty()) throw DomainError("empty tridiagonal matrix");
  if (off.size() + 1 != diag.size()) throw DomainError("off-diagonal length must be n - 1");
  for (double v : diag) {
    if (!std::isfinite(v)) throw DomainError("non-finite diagonal entry");
  }
  for (double v : off) {
    if (!std::isfinite(v)) throw DomainError("non-finite off-diagonal entry");
  }
}

int sturm_count(const SymTridiagonal& t, double x) {
  constexpr double pivmin = std::numeric_limits<double>::min();
  int count = 0;
  double d = t.diag[0] - x;
  if (std::abs(d) < pivmin) d = -pivmin;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < t.diag.size(); ++i) {
    d = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / d;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

namespace {

double bisect(const SymTridiagonal& t, int index, double lo, double hi) {
  // invariant: sturm_count(lo) <= index < sturm_count(hi)
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 4.0 * eps * std::max(std::abs(lo), std::abs(hi))) break;
    if (sturm_count(t, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int k) {
  t.validate();
  if (k < 1 || static_cast<std::size_t>(k) > t.size()) {
    throw DomainError("requested eigenvalue count out of range");
  }
  // Gershgorin bounds are hard limits; the doubling searches usually stop far
  // inside them.
  double g_lo = std::numeric_limits<double>::max();
  double g_hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double radius = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                          (i + 1 < t.size() ? std::abs(t.off[i]) : 0.0);
    g_lo = std::min(g_lo, t.diag[i] - radius);
    g_hi = std::max(g_hi, t.diag[i] + radius);
  }
  g_lo -= 1.0 + std::abs(g_lo) * 1e-12;
  g_hi += 1.0 + std::abs(g_hi) * 1e-12;

  double lo = -1.0;
  while (lo > g_lo && sturm_count(t, lo) > 0) lo *= 2.0;
  lo = std::max(lo, g_lo);
  double hi = 1.0;
  while (hi < g_hi && sturm_count(t, hi) < k) hi *= 2.0;
  hi = std::min(hi, g_hi);

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const double start = values.empty() ? lo : values.back();
    // Eigenvalues below `start` are already counted, so the bracket is valid.
    const double v = bisect(t, j, std::min(start, hi), hi);
    values.push_back(v);
  }
  return values;
}

std::vector<double> eigenvector(const SymTridiagonal& t, double eigenvalue) {
  t.validate();
  const std::size_t n = t.size();
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm = std::max(norm, std::abs(t.diag[i]));
  const double shift =
      eigenvalue + 1e3 * std::numeric_limits<double>::epsilon() * std::max(std::abs(eigenvalue), 1e-300);

  // LU of T - shift I with partial pivoting (bands: diagonal, two super, one sub).
  std::vector<double> a(n), b(n), c(n), l(n);  // a: diag, b: super1, c: super2, l: multipliers
  std::vector<char> swapped(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = t.diag[i] - shift;
    b[i] = i + 1 < n ? t.off[i] : 0.0;
    c[i] = 0.0;
  }
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(norm, 1e-300);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double sub = t.off[i];
    if (std::abs(sub) > std::abs(a[i])) {
      // swap rows i and i+1
      swapped[i] = 1;
      const double na = sub;
      const double nb = a[i + 1];
      const double nc = i + 2 < n ? b[i + 1] : 0.0;
      const double old_a = a[i];
      const double old_b = b[i];
      a[i] = na;
      b[i] = nb;
      c[i] = nc;
      l[i] = old_a / na;
      a[i + 1] = old_b - l[i] * nb;
      b[i + 1] = -l[i] * nc;
    } else {
      if (a[i] == 0.0) a[i] = tiny;
      l[i] = sub / a[i];
      a[i + 1] -= l[i] * b[i];
    }
  }
  if (a[n - 1] == 0.0) a[n - 1] = tiny;

  auto solve = [&](std::vector<double>& x) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(x[i], x[i + 1]);
      x[i + 1] -= l[i] * x[i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = x[ii];
      if (ii + 1 < n) s -= b[ii] * x[ii + 1];
      if (ii + 2 < n) s -= c[ii] * x[ii + 2];
      x[ii] = s / (a[ii] == 0.0 ? tiny : a[ii]);
    }
  };

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.01 * std::sin(0.7 * static_cast<double>(i));
  for (int iter = 0; iter < 4; ++iter) {
    solve(x);
    double s = 0.0;
    for (double v : x) s += v * v;
    s = std::sqrt(s);
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("inverse iteration broke down");
    for (double& v : x) v /= s;
  }
  // fix the sign: first significant component positive
  double big = 0.0;
  for (double v : x) big = std::max(big, std::abs(v));
  for (double v : x) {
    if (std::abs(v) > 1e-3 * big) {
      if (v < 0.0) {
        for (double& w : x) w = -w;
      }
      break;
    }
  }
  return x;
}

}  // namespace mie
