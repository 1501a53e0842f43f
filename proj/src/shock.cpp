#include "psystem/shock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "psystem/error.hpp"
#include "psystem/numerics.hpp"

namespace psystem {

namespace {

constexpr double kNearZero = -1e-12;

void check_hypotheses(const ModelSpec& model, double v0, std::vector<std::string>& warnings) {
  for (int i = 1; i <= 64; ++i) {
    const double g = -1.0 + i / 65.0;
    if (!(stress(model, g).dp > 0.0)) {
      warnings.push_back("P' is not positive on (-1, 0) (first failure at gamma = " +
                         std::to_string(g) + ")");
      break;
    }
  }
  if (!(stress(model, -1.0 + 1e-8).p < -1e6 * v0 * v0)) {
    warnings.push_back("P does not tend to -infinity as gamma -> -1");
  }
}

} // namespace

ShockSolution solve_rankine_hugoniot(const ModelSpec& model, double v0) {
  model.validate();
  if (!std::isfinite(v0) || v0 < 0.0) throw UsageError("solve_rankine_hugoniot: v0 must be >= 0");

  ShockSolution sol;
  sol.model = model;
  sol.v0 = v0;
  if (v0 == 0.0) {
    sol.trivial = true;
    sol.sigma = std::numeric_limits<double>::quiet_NaN();
    return sol;
  }
  check_hypotheses(model, v0, sol.warnings);

  const double v2 = v0 * v0;
  auto h = [&](double g) { return g * stress(model, g).p - v2; };

  double hi = kNearZero;
  double lo = -0.5;
  int k = 1;
  while (h(lo) < 0.0) {
    if (k >= 40) {
      throw NoSolutionError(
          "solve_rankine_hugoniot: gamma P(gamma) never reaches v0^2 on (-1, 0); "
          "the hypothesis P -> -infinity as gamma -> -1 fails for this model");
    }
    hi = lo;
    ++k;
    lo = -1.0 + std::ldexp(1.0, -k);
  }

  const auto r = numerics::find_root(h, {lo, hi});
  sol.gamma_l = r.root;
  sol.sigma = -v0 / r.root;
  sol.rh_residual = std::fabs(r.root * stress(model, r.root).p - v2);
  sol.iterations = r.iterations;
  if (stress(model, sol.gamma_l).dp <= 0.0) {
    sol.warnings.push_back("left state lies outside the hyperbolic region");
  }
  return sol;
}

FieldState evaluate(const ShockSolution& sol, double x, double t) {
  if (sol.trivial) return {0.0, 0.0};
  if (x < sol.sigma * t) return {0.0, sol.gamma_l};
  return {-sol.v0, 0.0};
}

// ---------------------------------------------------------------------------
// Test functions

namespace {

struct Bump {
  double b;
  double db;
};

Bump bump(double x, double c, double r) {
  const double u = (x - c) / r;
  if (std::fabs(u) >= 1.0) return {0.0, 0.0};
  const double q = 1.0 - u * u;
  const double b = std::exp(-1.0 / q);
  return {b, b * (-2.0 * u / (q * q)) / r};
}

} // namespace

double TestFunction::value(double x, double t) const {
  const double base = bump(x, x0, radius).b * bump(t, t0, radius).b;
  switch (kind) {
  case TestKind::ZeroOnTAxis: return x * base;
  case TestKind::ZeroOnXAxisCorner: return t * base;
  default: return base;
  }
}

double TestFunction::dx(double x, double t) const {
  const Bump bx = bump(x, x0, radius);
  const Bump bt = bump(t, t0, radius);
  switch (kind) {
  case TestKind::ZeroOnTAxis: return (bx.b + x * bx.db) * bt.b;
  case TestKind::ZeroOnXAxisCorner: return t * bx.db * bt.b;
  default: return bx.db * bt.b;
  }
}

double TestFunction::dt(double x, double t) const {
  const Bump bx = bump(x, x0, radius);
  const Bump bt = bump(t, t0, radius);
  switch (kind) {
  case TestKind::ZeroOnTAxis: return x * bx.b * bt.db;
  case TestKind::ZeroOnXAxisCorner: return bx.b * (bt.b + t * bt.db);
  default: return bx.b * bt.db;
  }
}

bool TestFunction::zero_on_t_axis() const {
  return kind == TestKind::ZeroOnTAxis || x0 - radius >= 0.0;
}

Candidate candidate_from(const ShockSolution& sol) {
  Candidate c;
  c.field = [sol](double x, double t) { return evaluate(sol, x, t); };
  if (!sol.trivial) c.discontinuity_speed = sol.sigma;
  return c;
}

// ---------------------------------------------------------------------------
// Weak residuals

namespace {

using Integrand2 = std::function<double(double, double)>;

struct Box {
  double x_lo, x_hi, t_lo, t_hi;
};

Box support(const TestFunction& w) {
  return {std::max(0.0, w.x0 - w.radius), w.x0 + w.radius, std::max(0.0, w.t0 - w.radius),
          w.t0 + w.radius};
}

std::vector<double> breakpoints(double lo, double hi, std::initializer_list<double> cuts) {
  std::vector<double> pts{lo};
  for (double c : cuts) {
    if (c > lo && c < hi) pts.push_back(c);
  }
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  return pts;
}

double integrate_pieces(const numerics::ScalarFn& f, const std::vector<double>& pts, double tol) {
  double sum = 0.0;
  const double share = tol / static_cast<double>(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) sum += numerics::integrate(f, pts[i], pts[i + 1], share);
  return sum;
}

double integrate_2d(const Integrand2& f, const Box& box, std::optional<double> speed, double tol) {
  const double width = box.t_hi - box.t_lo;
  const double inner_tol = 0.1 * tol / width;
  auto inner = [&](double t) {
    const double cut = speed ? *speed * t : box.x_lo;
    return integrate_pieces([&](double x) { return f(x, t); },
                            breakpoints(box.x_lo, box.x_hi, {cut}), inner_tol);
  };
  std::vector<double> outer{box.t_lo, box.t_hi};
  if (speed && *speed > 0.0) {
    outer = breakpoints(box.t_lo, box.t_hi, {box.x_lo / *speed, box.x_hi / *speed});
  }
  return integrate_pieces(inner, outer, 0.9 * tol);
}

double integrate_line(const numerics::ScalarFn& f, double lo, double hi, double tol) {
  if (hi <= lo) return 0.0;
  return numerics::integrate(f, lo, hi, tol);
}

void require_zero_on_axis(const TestFunction& w, const char* which) {
  if (!w.zero_on_t_axis()) {
    throw UsageError(std::string("weak_residual: this boundary family requires ") + which +
                     "(0,t) = 0 for every test function");
  }
}

} // namespace

std::vector<WeakResidual> weak_residual(const Candidate& candidate, const ModelSpec& model,
                                        const BoundarySpec& bc,
                                        const std::vector<TestFunction>& tests, double quad_tol) {
  if (!candidate.field) throw UsageError("weak_residual: candidate field is empty");
  if (!(quad_tol > 0.0)) throw UsageError("weak_residual: quad_tol must be positive");
  model.validate();

  const auto speed = candidate.discontinuity_speed;
  auto P = [&](double x, double t) { return stress(model, candidate.field(x, t).gamma).p; };
  auto V = [&](double x, double t) { return candidate.field(x, t).v; };
  auto G = [&](double x, double t) { return candidate.field(x, t).gamma; };

  std::vector<WeakResidual> out;
  out.reserve(tests.size());
  for (const auto& w : tests) {
    if (!(w.radius > 0.0)) throw UsageError("weak_residual: test radius must be positive");
    const Box box = support(w);
    const double tol = quad_tol;
    auto area = [&](const Integrand2& f) { return integrate_2d(f, box, speed, tol); };
    auto at_t0 = [&](const numerics::ScalarFn& data) {
      return integrate_line([&](double x) { return data(x) * w.value(x, 0.0); }, box.x_lo,
                            box.x_hi, tol);
    };
    auto at_x0 = [&](const numerics::ScalarFn& data) {
      return integrate_line([&](double t) { return data(t) * w.value(0.0, t); }, box.t_lo,
                            box.t_hi, tol);
    };

    // Interior terms shared by all families.
    const double v_eq = area([&](double x, double t) {
      const auto u = candidate.field(x, t);
      return u.v * w.dt(x, t) - stress(model, u.gamma).p * w.dx(x, t);
    });
    const double g_eq = area([&](double x, double t) {
      const auto u = candidate.field(x, t);
      return u.gamma * w.dt(x, t) - u.v * w.dx(x, t);
    });

    WeakResidual r{};
    switch (bc.family) {
    case BoundaryFamily::VelocityDirichlet:
      require_zero_on_axis(w, "phi");
      r.residual1 = v_eq + at_t0(bc.f);
      r.residual2 = g_eq - at_x0(bc.h_or_c) + at_t0(bc.g);
      break;
    case BoundaryFamily::StressDirichlet:
      require_zero_on_axis(w, "psi");
      r.residual1 = v_eq + at_t0(bc.f) - at_x0(bc.h_or_c);
      r.residual2 = g_eq + at_t0(bc.g);
      break;
    case BoundaryFamily::MixedA: {
      require_zero_on_axis(w, "psi");
      const double a0 = bc.coeff(0.0);
      const double coupling = area([&](double x, double t) {
        const double a = bc.coeff(t);
        const double d_aw = bc.coeff_dt(t) * w.value(x, t) + a * w.dt(x, t);
        return -d_aw * G(x, t) + a * w.dx(x, t) * V(x, t);
      });
      r.residual1 = -g_eq - at_t0(bc.g);
      r.residual2 = -v_eq - at_t0(bc.f) + at_x0(bc.h_or_c) - a0 * at_t0(bc.g) + coupling;
      break;
    }
    case BoundaryFamily::MixedB: {
      require_zero_on_axis(w, "phi");
      const double b0 = bc.coeff(0.0);
      const double coupling = area([&](double x, double t) {
        const double b = bc.coeff(t);
        const double d_bw = bc.coeff_dt(t) * w.value(x, t) + b * w.dt(x, t);
        return -d_bw * V(x, t) + b * w.dx(x, t) * P(x, t);
      });
      r.residual1 = -v_eq - at_t0(bc.f);
      r.residual2 = -g_eq - at_t0(bc.g) + at_x0(bc.h_or_c) - b0 * at_t0(bc.f) + coupling;
      break;
    }
    }
    out.push_back(r);
  }
  return out;
}

} // namespace psystem
