#pragma once

#include <vector>

namespace mie {

/// Real symmetric tridiagonal matrix: diag[0..n), off[i] couples rows i, i+1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
  void validate() const;
};

/// Number of eigenvalues strictly below x (Sturm sequence via LDL^T pivots).
int sturm_count(const SymTridiagonal& t, double x);

/// The k smallest eigenvalues in ascending order, by bisection on sturm_count
/// to relative precision ~4 ulp.
std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int k);

/// Unit-norm eigenvector for an eigenvalue computed by lowest_eigenvalues,
/// by inverse iteration with a tridiagonal solve.
std::vector<double> eigenvector(const SymTridiagonal& t, double eigenvalue);

}  // namespace mie
