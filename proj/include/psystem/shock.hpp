#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "psystem/constitutive.hpp"

namespace psystem {

/// Compression shock S(gamma_l): left state (0, gamma_l) behind the line
/// X = sigma t, right state (-v0, 0) ahead of it.
struct ShockSolution {
  ModelSpec model;
  double v0 = 0.0;
  double gamma_l = 0.0;
  /// NaN for the trivial solution (v0 = 0).
  double sigma = 0.0;
  double rh_residual = 0.0;
  int iterations = 0;
  bool trivial = false;
  /// Hypotheses of the uniqueness argument that failed numerically.
  std::vector<std::string> warnings;
};

/// Solves gamma_l P(gamma_l) = v0^2 on (-1, 0) and sets sigma = -v0 / gamma_l.
///
/// The bracket is grown geometrically towards -1 from [-1/2, -1e-12]
/// until H = gamma P - v0^2 changes sign. v0 = 0 yields the trivial solution.
/// Throws UsageError for v0 < 0 and NoSolutionError when no bracket exists.
ShockSolution solve_rankine_hugoniot(const ModelSpec& model, double v0);

struct FieldState {
  double v;
  double gamma;
};

/// Pointwise value of S(gamma_l); on X = sigma t the right state is returned.
FieldState evaluate(const ShockSolution& sol, double x, double t);

enum class BoundaryFamily { VelocityDirichlet, StressDirichlet, MixedA, MixedB };

/**
 * Initial and boundary data of the impact problem.
 *
 * VelocityDirichlet: V(0,t) = h(t). StressDirichlet: P(Gamma(0,t)) = h(t).
 * MixedA: P(Gamma(0,t)) + a(t) V(0,t) = c(t).
 * MixedB: V(0,t) + b(t) P(Gamma(0,t)) = c(t).
 * In every case V(X,0) = f(X) and Gamma(X,0) = g(X). `coeff` is a or b and
 * `coeff_dt` its time derivative.
 */
struct BoundarySpec {
  using Fn = std::function<double(double)>;
  static double zero(double) { return 0.0; }

  BoundaryFamily family = BoundaryFamily::VelocityDirichlet;
  Fn f = zero;
  Fn g = zero;
  Fn h_or_c = zero;
  Fn coeff = zero;
  Fn coeff_dt = zero;
};

enum class TestKind { FreeBump, ZeroOnTAxis, ZeroOnXAxisCorner };

/**
 * Smooth compactly supported test function on the quarter plane,
 * b((X - x0)/r) b((t - t0)/r) with b(u) = exp(-1/(1 - u^2)) on |u| < 1,
 * multiplied by X (ZeroOnTAxis) or by t (ZeroOnXAxisCorner).
 */
struct TestFunction {
  TestKind kind = TestKind::FreeBump;
  double x0 = 0.0;
  double t0 = 0.0;
  double radius = 1.0;

  double value(double x, double t) const;
  double dx(double x, double t) const;
  double dt(double x, double t) const;

  /// True when the function vanishes identically on X = 0.
  bool zero_on_t_axis() const;
};

/// A candidate field with an optional straight discontinuity X = speed * t.
struct Candidate {
  std::function<FieldState(double, double)> field;
  std::optional<double> discontinuity_speed;
};

Candidate candidate_from(const ShockSolution& sol);

struct WeakResidual {
  double residual1;
  double residual2;
};

/// Evaluates the two weak-form identities of `bc.family` for each test
/// function, used both as phi and psi. The double integrals are split along
/// the declared discontinuity. Throws UsageError when a test function does
/// not vanish where the family requires it.
std::vector<WeakResidual> weak_residual(const Candidate& candidate, const ModelSpec& model,
                                        const BoundarySpec& bc,
                                        const std::vector<TestFunction>& tests,
                                        double quad_tol = 1e-10);

} // namespace psystem
