#include "psystem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "psystem/error.hpp"
#include "psystem/numerics.hpp"

namespace psystem {

namespace {

using numerics::Bracket;
using numerics::find_root;

std::vector<double> scan_grid(double lo, double hi, int n) {
  std::vector<double> xs;
  xs.reserve(2 * static_cast<std::size_t>(n) + 2);
  for (int i = 0; i < n; ++i) {
    xs.push_back(i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1));
  }
  // Geometric refinement in s below s = 1, where stresses blow up.
  const double s_lo = 1.0 + lo;
  const double s_hi = std::min(1.0, 1.0 + hi);
  if (s_lo < s_hi) {
    const double l0 = std::log(s_lo);
    const double l1 = std::log(s_hi);
    for (int i = 1; i < n - 1; ++i) {
      xs.push_back(std::expm1(l0 + (l1 - l0) * i / (n - 1)));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  xs.erase(std::remove_if(xs.begin(), xs.end(), [&](double x) { return x < lo || x > hi; }),
           xs.end());
  return xs;
}

// Maximal intervals of `grid` on which pred(value) holds, with interior
// endpoints polished as roots of `value`.
std::vector<Interval> sign_intervals(const std::vector<double>& grid,
                                     const std::function<double(double)>& value,
                                     const std::function<bool(double)>& pred) {
  std::vector<Interval> out;
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = value(grid[i]);

  numerics::RootOptions opts;
  opts.tol_x = 1e-15;
  opts.tol_f = 1e-13;
  auto polish = [&](std::size_t i) {
    if (vals[i] == 0.0) return grid[i];
    if (vals[i + 1] == 0.0) return grid[i + 1];
    return find_root(value, Bracket{grid[i], grid[i + 1]}, opts).root;
  };

  bool inside = pred(vals[0]);
  double start = grid[0];
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const bool next = pred(vals[i + 1]);
    if (next == inside) continue;
    const double edge = polish(i);
    if (inside) {
      if (edge > start) out.push_back({start, edge});
    } else {
      start = edge;
    }
    inside = next;
  }
  if (inside) out.push_back({start, grid.back()});
  return out;
}

double kirchhoff_dp(double s, double alpha) {
  return 3.0 * s * s - 1.0 + alpha * (1.0 - std::log(s)) / (s * s);
}

} // namespace

RegionReport scan_regions(const ModelSpec& model, double gamma_lo, double gamma_hi,
                          const ScanOptions& opts) {
  model.validate();
  if (!(gamma_lo > -1.0 && gamma_lo < gamma_hi && std::isfinite(gamma_hi))) {
    throw UsageError("scan_regions: range must satisfy -1 < lo < hi");
  }
  if (opts.grid_points < 4096) throw UsageError("scan_regions: grid_points must be >= 4096");

  const auto grid = scan_grid(gamma_lo, gamma_hi, opts.grid_points);
  RegionReport r{model, {}, {}, {gamma_lo, gamma_hi}, model_thresholds(model)};
  r.hyperbolic_intervals = sign_intervals(
      grid, [&](double g) { return stress(model, g).dp; }, [](double v) { return v > 0.0; });
  r.gnl_intervals = sign_intervals(
      grid, [&](double g) { return stress(model, g).d2p; }, [](double v) { return v < 0.0; });
  return r;
}

std::vector<Threshold> model_thresholds(const ModelSpec& model) {
  std::vector<Threshold> t;
  const double beta = model.beta();
  switch (model.kind) {
  case ModelKind::StVenantKirchhoff:
    t.push_back({"hyperbolic_onset", stvk_hyperbolic_threshold()});
    break;
  case ModelKind::KirchhoffModified: {
    const double alpha = model.alpha();
    const auto [a1, a2] = kirchhoff_alpha_bounds();
    const double s_alpha = kirchhoff_s_alpha(alpha);
    t.push_back({"alpha", alpha});
    t.push_back({"alpha1", a1});
    t.push_back({"alpha2", a2});
    t.push_back({"s_alpha", s_alpha});
    t.push_back({"gnl_end", s_alpha - 1.0});
    break;
  }
  case ModelKind::Ogden:
    t.push_back({"beta", beta});
    break;
  case ModelKind::BlatzKoOgden:
    t.push_back({"beta", beta});
    if (beta < 0.5) {
      t.push_back({"s_beta", blatzko_s_beta(beta)});
      t.push_back({"f_beta", blatzko_f_threshold(beta)});
    }
    if (beta < 0.5 || beta > 1.0) t.push_back({"s0", blatzko_s0(beta)});
    break;
  case ModelKind::Linear:
    t.push_back({"wave_speed", std::sqrt((model.lambda + 2.0 * model.mu) / model.rho0)});
    break;
  }
  return t;
}

double stvk_hyperbolic_threshold() { return -1.0 + 1.0 / std::sqrt(3.0); }

std::pair<double, double> kirchhoff_hyperbolicity_margin(double alpha) {
  if (!(alpha > 0.0)) throw UsageError("kirchhoff_hyperbolicity_margin: alpha must be positive");
  // Minimise in u = ln s; the minimiser lies well inside [e^-12, e^8] for
  // every alpha of interest.
  const auto m = numerics::minimize_scalar(
      [alpha](double u) { return kirchhoff_dp(std::exp(u), alpha); }, -12.0, 8.0, 1e-12, 4096);
  return {m.f, std::exp(m.x)};
}

std::pair<double, double> kirchhoff_alpha_bounds() {
  auto g = [](double alpha) { return kirchhoff_hyperbolicity_margin(alpha).first; };
  numerics::RootOptions opts;
  opts.tol_x = 1e-14;
  opts.tol_f = 1e-13;
  const double a1 = find_root(g, Bracket{1e-4, 1.0}, opts).root;
  const double a2 = find_root(g, Bracket{1.0, 1e5}, opts).root;
  return {a1, a2};
}

double kirchhoff_alpha_bound_equation(double alpha) {
  const double r = std::sqrt(1.0 + 12.0 * alpha);
  return 6.0 * (5.0 + 4.0 * std::log(6.0)) * alpha -
         (1.0 + 12.0 * alpha * std::log(3.0 + 3.0 * r) + r);
}

double kirchhoff_s_alpha(double alpha) {
  if (!(alpha > 0.0)) throw UsageError("kirchhoff_s_alpha: alpha must be positive");
  const double w = numerics::lambert_w0(12.0 * std::exp(6.0) / alpha);
  return std::pow(alpha / 12.0 * w, 0.25);
}

double blatzko_s_beta(double beta) {
  if (!(beta > 0.0 && beta < 0.5)) throw UsageError("blatzko_s_beta: requires 0 < beta < 1/2");
  return std::pow(3.0 / (1.0 - 2.0 * beta), 1.0 / (2.0 * beta + 2.0));
}

double blatzko_hyperbolicity_q(double s, double beta) {
  const double s2b = std::pow(s, 2.0 * beta);
  const double x = (1.0 - 2.0 * beta) * std::pow(s, 2.0 * beta + 2.0) - 3.0;
  return s2b * x / (s * s * ((1.0 + 2.0 * beta) + std::pow(s, 2.0 * beta + 2.0)) + s2b * x);
}

double blatzko_f_threshold(double beta) {
  if (!(beta > 0.0)) throw UsageError("blatzko_f_threshold: beta must be positive");
  if (beta >= 0.5) {
    throw UsageError("blatzko_f_threshold: for beta >= 1/2 the law is hyperbolic for every f");
  }
  const double sb = blatzko_s_beta(beta);
  auto q = [beta](double s) { return blatzko_hyperbolicity_q(s, beta); };

  // Extend the search window until Q has decreased over three doublings.
  double s_max = 2.0 * sb;
  double prev = q(s_max);
  int decreasing = 0;
  while (decreasing < 3 && s_max < 1e12) {
    s_max *= 2.0;
    const double cur = q(s_max);
    decreasing = cur < prev ? decreasing + 1 : 0;
    prev = cur;
  }
  const auto m = numerics::minimize_scalar([&](double s) { return -q(s); }, sb, s_max, 1e-12,
                                           1 << 16);
  return -m.f;
}

double blatzko_s0(double beta) {
  if (!(beta > 0.0)) throw UsageError("blatzko_s0: beta must be positive");
  if (beta >= 0.5 && beta <= 1.0) {
    throw UsageError("blatzko_s0: for 1/2 <= beta <= 1, P'' < 0 for all s > 0");
  }
  return std::pow(6.0 / ((2.0 * beta - 1.0) * (beta - 1.0)), 1.0 / (2.0 * beta + 2.0));
}

double min_dp_over_s(const ModelSpec& model, double s_lo, double s_hi) {
  if (!(s_lo > 0.0 && s_lo < s_hi)) throw UsageError("min_dp_over_s: requires 0 < s_lo < s_hi");
  const auto m = numerics::minimize_scalar(
      [&](double u) { return stress(model, std::expm1(u)).dp; }, std::log(s_lo), std::log(s_hi),
      1e-12, 4096);
  return m.f;
}

} // namespace psystem
