#pragma once

namespace mie {

/// Degree and order of a generalized Laguerre polynomial L_n^alpha.
struct LaguerreParams {
  int n = 0;
  double alpha = 0.0;

  void validate() const;
};

/// L_n^alpha(x) by the three-term recurrence
///   k L_k = (2k - 1 + alpha - x) L_{k-1} - (k - 1 + alpha) L_{k-2}.
double laguerre(int n, double alpha, double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln C_n for R = C_n r^Lambda e^{-kappa r} L_n^{2 Lambda + 1}(2 kappa r), with
///   C_n^2 = (2 kappa)^{2 Lambda + 3} n! / (2 (n + Lambda + 1) Gamma(n + 2 Lambda + 2)).
double log_normalization_constant(int n, double Lambda, double kappa);

/// exp of the above; throws OverflowError when C_n is not representable.
double normalization_constant(int n, double Lambda, double kappa);

}  // namespace mie
