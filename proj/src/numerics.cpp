#include "psystem/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/lambert_w.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "psystem/error.hpp"

namespace psystem::numerics {

namespace {

double checked(const ScalarFn& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw DomainError("non-finite function value at x = " + std::to_string(x));
  }
  return y;
}

} // namespace

RootResult find_root(const ScalarFn& f, Bracket bracket, const RootOptions& opts) {
  if (!(bracket.lo < bracket.hi)) {
    throw BracketError("find_root: bracket requires lo < hi");
  }
  auto eval = [&](double x) {
    if (opts.on_iterate) opts.on_iterate(x);
    return checked(f, x);
  };

  const double flo = eval(bracket.lo);
  const double fhi = eval(bracket.hi);
  if (flo == 0.0) return {bracket.lo, 0.0, 0, true};
  if (fhi == 0.0) return {bracket.hi, 0.0, 0, true};
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw BracketError("find_root: no sign change on [" + std::to_string(bracket.lo) + ", " +
                       std::to_string(bracket.hi) + "]");
  }

  // Residuals inside tol_f are reported as exact zeros so the solver stops there.
  auto g = [&](double x) {
    const double y = eval(x);
    return std::fabs(y) <= opts.tol_f ? 0.0 : y;
  };
  auto narrow = [&](double a, double b) {
    return std::fabs(b - a) <= opts.tol_x * std::max(1.0, std::min(std::fabs(a), std::fabs(b)));
  };
  std::uintmax_t iterations = static_cast<std::uintmax_t>(opts.max_iterations);
  const auto [a, b] = boost::math::tools::toms748_solve(g, bracket.lo, bracket.hi, flo, fhi, narrow,
                                                        iterations);

  RootResult out;
  out.iterations = static_cast<int>(iterations);
  const double fa = eval(a);
  const double fb = a == b ? fa : eval(b);
  out.root = std::fabs(fa) <= std::fabs(fb) ? a : b;
  out.residual = std::fabs(fa) <= std::fabs(fb) ? fa : fb;
  out.converged = std::fabs(out.residual) <= opts.tol_f;
  return out;
}

MinimumResult minimize_scalar(const ScalarFn& f, double lo, double hi, double tol,
                              int grid_points) {
  if (!(lo < hi)) throw UsageError("minimize_scalar: requires lo < hi");
  grid_points = std::max(grid_points, 256);

  const double h = (hi - lo) / (grid_points - 1);
  int best = 0;
  double best_f = checked(f, lo);
  for (int i = 1; i < grid_points; ++i) {
    const double x = i == grid_points - 1 ? hi : lo + i * h;
    const double y = checked(f, x);
    if (y < best_f) {
      best_f = y;
      best = i;
    }
  }

  // Refine on the two cells around the grid minimum.
  const double a = lo + std::max(best - 1, 0) * h;
  const double b = std::min(hi, lo + std::min(best + 1, grid_points - 1) * h);
  const int bits = std::clamp(static_cast<int>(std::ceil(-std::log2(tol / std::max(1.0, std::fabs(b))))), 8,
                              std::numeric_limits<double>::digits);
  std::uintmax_t max_iter = 500;
  const auto [x, fx] = boost::math::tools::brent_find_minima(
      [&](double t) { return checked(f, t); }, a, b, bits, max_iter);
  if (best_f < fx) return {lo + best * h, best_f};
  return {x, fx};
}

namespace {

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;
  bool operator<(const Segment& o) const { return error < o.error; }
};

// One 7/15-point Gauss-Kronrod panel; nodes and weights come from Boost.
// Positive abscissae are listed from 0 upwards and the Gauss nodes sit at the
// even positions.
Segment gk15(const std::function<double(double)>& f, double a, double b, int depth) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using Gauss = boost::math::quadrature::gauss<double, 7>;
  static const auto& xk = Kronrod::abscissa();
  static const auto& wk = Kronrod::weights();
  static const auto& wg = Gauss::weights();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * wk[0];
  double gauss = fc * wg[0];
  for (std::size_t j = 1; j < xk.size(); ++j) {
    const double dx = half * xk[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += wk[j] * fsum;
    if (j % 2 == 0) gauss += wg[j / 2] * fsum;
  }
  return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half), depth};
}

} // namespace

// Globally adaptive: the panel with the largest error estimate is bisected
// first, so the tolerance is absolute for the whole interval. The recursive
// driver in Boost applies a relative tolerance on every panel, which never
// settles when the integrand itself carries quadrature noise.
double integrate(const ScalarFn& f, double a, double b, double tol,
                 const IntegrationOptions& opts) {
  if (a == b) return 0.0;
  if (!(tol > 0.0)) throw UsageError("integrate: tolerance must be positive");
  const double sign = a < b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);
  const std::function<double(double)> g = [&](double x) { return checked(f, x); };

  std::priority_queue<Segment> heap;
  heap.push(gk15(g, a, b, 0));
  double total = heap.top().value;
  double total_err = heap.top().error;
  while (total_err > tol) {
    const Segment worst = heap.top();
    if (worst.depth >= opts.max_depth) {
      throw AccuracyError("integrate: tolerance not reached at maximum subdivision depth",
                          sign * total, total_err);
    }
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gk15(g, worst.a, mid, worst.depth + 1);
    const Segment right = gk15(g, mid, worst.b, worst.depth + 1);
    heap.push(left);
    heap.push(right);
    // Re-summing avoids drift from incremental updates.
    total = 0.0;
    total_err = 0.0;
    for (auto copy = heap; !copy.empty(); copy.pop()) {
      total += copy.top().value;
      total_err += copy.top().error;
    }
  }
  return sign * total;
}

double lambert_w0(double x) {
  if (std::isnan(x)) throw DomainError("lambert_w0: NaN argument");
  if (x < -std::exp(-1.0)) throw DomainError("lambert_w0: argument below -1/e");
  if (std::isinf(x)) return x;
  try {
    return boost::math::lambert_w0(x);
  } catch (const std::domain_error& e) {
    throw DomainError(std::string("lambert_w0: ") + e.what());
  }
}

} // namespace psystem::numerics
