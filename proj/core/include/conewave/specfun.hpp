// Scalar special-function kernels: log-Gamma, Gegenbauer/Chebyshev polynomials,
// Bessel J of real order, and the Rodrigues / homogeneous-transform constants
// used by the Euler-Lagrange evaluators. All routines are pure and reentrant.
#pragma once

#include <complex>
#include <stdexcept>

namespace conewave::specfun {

/// log Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
/// Accuracy: exp(log_gamma(x)) matches Gamma(x) to better than 1e-13
/// relative on [1e-3, 170] (Lanczos evaluated in extended precision).
double log_gamma(double x);

/// Gamma(x) (x > 0), via exp(log_gamma).
double gamma_fn(double x);

struct SignedLogGamma {
  double log_abs;
  int sign;  // -1, +1; Gamma has no zeros
};

/// log |Gamma(x)| with sign, valid for any non-pole x (reflection formula
/// for x < 0). Throws std::domain_error at poles x = 0, -1, -2, ...
SignedLogGamma signed_log_gamma(double x);

/// Gegenbauer polynomial C_k^alpha(t) by forward three-term recurrence.
/// Requires alpha > -1/2, alpha != 0, 0 <= k <= 60, |t| <= 1.
/// Degrees above 60 are rejected (the recurrence is only certified there).
double gegenbauer(double alpha, int k, double t);

/// Chebyshev polynomial of the first kind, T_k(t) = cos(k arccos t).
double chebyshev_t(int k, double t);

/// C_k^alpha(1) = Gamma(k+2 alpha) / (k! Gamma(2 alpha)), computed as a
/// rising-factorial product (valid for all alpha > -1/2, alpha != 0).
double gegenbauer_at_one(double alpha, int k);

/// Squared L^2 norm of C_k^nu against the weight (1-t^2)^{nu-1/2}:
///   2^{1-2nu} pi Gamma(k+2nu) / (Gamma(nu)^2 k! (k+nu)).
double gegenbauer_norm_sq(double nu, int k);

/// Bessel function J_order(x) for order >= 0, x >= 0.
/// Power series for small x, Miller backward recurrence otherwise.
/// Throws std::domain_error for x < 0 or order < 0.
double bessel_j(double order, double x);

/// Entire part J_order(x) / x^order, stable down to x = 0
/// (value 1 / (2^order Gamma(order+1)) at x = 0).
double bessel_j_over_pow(double order, double x);

/// Rodrigues constant R_k^alpha: for alpha != 0,
///   Gamma(alpha+1/2) Gamma(k+2 alpha) / (2^k k! Gamma(2 alpha) Gamma(alpha+k+1/2)),
/// and for alpha = 0 the Chebyshev branch sqrt(pi) / (2^k Gamma(k+1/2)).
double rodrigues_R(double alpha, int k);

/// Constant H_gamma = 2^{(gamma+1)/2} pi^{-gamma/2} Gamma((gamma+1)/2) / Gamma(-gamma/2),
/// gamma > -1. Exactly zero when gamma is a nonnegative even integer
/// (reciprocal-Gamma zero); sign (-1)^{floor(gamma/2)+1} for 0 < gamma not even.
double homogeneous_H(double gamma);

/// Gamma(a+k)/Gamma(b+k) in log space; requires a+k > 0, b+k > 0.
/// Never overflows for k up to 1e6.
double gamma_ratio(double a, double b, long long k);

/// Surface measure |S^{m-1}| = 2 pi^{m/2} / Gamma(m/2) of the unit sphere
/// in R^m. Requires m >= 1.
double sphere_area(int m);

}  // namespace conewave::specfun
