#include "psystem/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "psystem/error.hpp"
#include "psystem/numerics.hpp"

namespace psystem {

namespace {

constexpr double kBoundaryLo = 1e-6;
constexpr double kBoundaryHi = 1.0 - 1e-4;

double margin_at(const ModelSpec& model, double gamma) {
  return gamma * stress(model, gamma).p - 2.0 * stress_antiderivative(model, gamma);
}

// Geometric grid on [1e-6, 1 - 1e-4]. Closer to s = 1 the margin is O(gamma^3)
// and drowns in cancellation error of the antiderivative.
std::vector<double> geometric_s_grid(int n) {
  std::vector<double> s(n);
  const double l0 = std::log(kBoundaryLo);
  const double l1 = std::log(kBoundaryHi);
  for (int i = 0; i < n; ++i) s[i] = std::exp(l0 + (l1 - l0) * i / (n - 1));
  return s;
}

std::vector<double> polished_roots(const numerics::ScalarFn& fn, const std::vector<double>& xs) {
  std::vector<double> roots;
  double prev = fn(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = fn(xs[i]);
    if (prev == 0.0) {
      roots.push_back(xs[i - 1]);
    } else if ((prev < 0.0) != (cur < 0.0) && cur != 0.0) {
      roots.push_back(numerics::find_root(fn, {xs[i - 1], xs[i]}).root);
    }
    prev = cur;
  }
  return roots;
}

} // namespace

std::pair<double, double> standard_pair(const ModelSpec& model, double v, double gamma) {
  const double phi = 0.5 * v * v + stress_antiderivative(model, gamma);
  const double psi = -stress(model, gamma).p * v;
  return {phi, psi};
}

double jump_excess(const ModelSpec& model, double gamma_l) {
  require_strain(gamma_l);
  if (!(gamma_l < 0.0)) throw UsageError("jump_excess: requires -1 < gamma_l < 0");
  const double gp = gamma_l * stress(model, gamma_l).p;
  if (gp < 0.0) throw DomainError("jump_excess: gamma P(gamma) < 0, no shock with this left state");
  const double eps = -std::sqrt(gp);
  const auto [phi_l, psi_l] = standard_pair(model, 0.0, gamma_l);
  const auto [phi_r, psi_r] = standard_pair(model, eps, 0.0);
  return eps / gamma_l * (phi_l - phi_r) - (psi_l - psi_r);
}

EntropyVerdict check_condition(const ModelSpec& model, double gamma_l) {
  require_strain(gamma_l);
  if (gamma_l > 0.0) throw UsageError("check_condition: requires -1 < gamma_l <= 0");
  EntropyVerdict v;
  v.model = model;
  v.gamma_l = gamma_l;
  v.margin = gamma_l == 0.0 ? 0.0 : margin_at(model, gamma_l);
  v.holds = v.margin >= -kMarginTolerance;
  if (model.kind == ModelKind::KirchhoffModified && model.alpha() < 2.0) {
    v.s_e = kirchhoff_entropy_boundary(model.alpha());
  }
  return v;
}

double kirchhoff_entropy_function(double s) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("kirchhoff_entropy_function: requires 0 < s < 1");
  const double ls = std::log(s);
  const double d = 1.0 - s;
  return s * (s + 1.0) * d * d * d / (2.0 * (s - 1.0 - s * ls) * ls);
}

std::vector<double> kirchhoff_entropy_boundary_roots(double alpha, int grid_points) {
  if (!(alpha > 0.0)) throw UsageError("kirchhoff_entropy_boundary: alpha must be positive");
  std::vector<double> xs(std::max(grid_points, 64));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = kBoundaryLo + (kBoundaryHi - kBoundaryLo) * i / (xs.size() - 1);
  }
  return polished_roots([alpha](double s) { return kirchhoff_entropy_function(s) - alpha; }, xs);
}

double kirchhoff_entropy_boundary(double alpha) {
  if (!(alpha > 0.0)) throw UsageError("kirchhoff_entropy_boundary: alpha must be positive");
  if (alpha >= 2.0) {
    throw UsageError("kirchhoff_entropy_boundary: for alpha >= 2 the condition holds on all of (0, 1)");
  }
  const auto roots = kirchhoff_entropy_boundary_roots(alpha);
  if (roots.empty()) {
    throw NoSolutionError("kirchhoff_entropy_boundary: no root of L(s) = alpha in [1e-6, 1 - 1e-4]");
  }
  return roots.front();
}

double near_zero_certificate(const ModelSpec& model) {
  const auto e = stress(model, 0.0);
  if (!(e.dp > 0.0)) throw HypothesisError("near_zero_certificate: requires P'(0) > 0");
  return -0.5 * e.d2p * std::sqrt(e.dp);
}

std::vector<double> margin_sign_changes(const ModelSpec& model, int grid_points) {
  const auto xs = geometric_s_grid(std::max(grid_points, 64));
  return polished_roots([&](double s) { return margin_at(model, s - 1.0); }, xs);
}

double blatzko_entropy_f_threshold(double beta, int grid_points) {
  if (!(beta > 0.0)) throw UsageError("blatzko_entropy_f_threshold: beta must be positive");
  const auto xs = geometric_s_grid(std::max(grid_points, 64));
  auto holds_everywhere = [&](double f) {
    const auto m = ModelSpec::from_beta(ModelKind::BlatzKoOgden, beta, f);
    return std::all_of(xs.begin(), xs.end(), [&](double s) {
      return margin_at(m, s - 1.0) >= -kMarginTolerance;
    });
  };
  double lo = 1e-6;
  double hi = 1.0 - 1e-6;
  if (holds_everywhere(lo) || !holds_everywhere(hi)) {
    throw NoSolutionError("blatzko_entropy_f_threshold: margin sign does not switch for f in (0, 1)");
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (holds_everywhere(mid) ? hi : lo) = mid;
  }
  return hi;
}

} // namespace psystem
