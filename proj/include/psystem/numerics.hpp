#pragma once

#include <functional>
#include <limits>

namespace psystem::numerics {

using ScalarFn = std::function<double(double)>;

struct Bracket {
  double lo;
  double hi;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct RootOptions {
  /// Absolute bracket width is tol_x * max(1, |x|).
  double tol_x = 1e-13;
  double tol_f = 1e-12;
  int max_iterations = 500;
  /// Optional observer called with every abscissa at which f is evaluated.
  std::function<void(double)> on_iterate;
};

/**
 * Bracketed root finding with Boost.Math TOMS 748 (inverse interpolation and
 * secant steps with a bisection fallback). Every iterate stays inside
 * [lo, hi].
 *
 * Stops when |f(x)| <= tol_f or the bracket is narrower than
 * tol_x * max(1, |x|). `converged` reports whether the residual criterion
 * holds at the returned point.
 *
 * Throws BracketError if f(lo) and f(hi) have the same strict sign and
 * DomainError on a non-finite evaluation.
 */
RootResult find_root(const ScalarFn& f, Bracket bracket, const RootOptions& opts = {});

struct MinimumResult {
  double x;
  double f;
};

/// Scans `grid_points` equispaced abscissae of [lo, hi] and refines the best
/// one with Brent's minimizer (golden section plus parabolic steps) on its
/// neighbouring cells.
MinimumResult minimize_scalar(const ScalarFn& f, double lo, double hi, double tol = 1e-10,
                              int grid_points = 512);

struct IntegrationOptions {
  int max_depth = 60;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature (worst panel first).
/// The estimated absolute error of the returned value is at most `tol`;
/// throws AccuracyError (carrying the best estimate) when that needs more
/// than `max_depth` levels of bisection.
double integrate(const ScalarFn& f, double a, double b, double tol = 1e-12,
                 const IntegrationOptions& opts = {});

/// Principal branch of the Lambert W function, w * exp(w) = x, x >= -1/e.
double lambert_w0(double x);

} // namespace psystem::numerics
