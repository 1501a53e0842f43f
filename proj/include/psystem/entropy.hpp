#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "psystem/constitutive.hpp"

namespace psystem {

/// Verdict of the standard entropy condition 2 int_0^gamma_l P <= gamma_l P(gamma_l).
struct EntropyVerdict {
  ModelSpec model;
  double gamma_l = 0.0;
  /// gamma_l P(gamma_l) - 2 int_0^gamma_l P.
  double margin = 0.0;
  bool holds = true;
  /// Modified Kirchhoff with alpha < 2 only: the condition holds for
  /// s = 1 + gamma_l in (0, s_e] and fails on (s_e, 1).
  std::optional<double> s_e;
};

inline constexpr double kMarginTolerance = 1e-12;

/// Standard entropy Phi = V^2/2 + int_0^gamma P and its flux Psi = -P(gamma) V.
std::pair<double, double> standard_pair(const ModelSpec& model, double v, double gamma);

/// E(gamma) = (eps/gamma)[Phi(0,gamma) - Phi(eps,0)] - [Psi(0,gamma) - Psi(eps,0)]
/// with eps = -sqrt(gamma P(gamma)). The jump inequality holds iff E <= 0.
/// Requires -1 < gamma < 0; throws DomainError if gamma P(gamma) < 0.
double jump_excess(const ModelSpec& model, double gamma_l);

/// Requires -1 < gamma_l <= 0.
EntropyVerdict check_condition(const ModelSpec& model, double gamma_l);

/// L(s) = s(s+1)(1-s)^3 / (2(s - 1 - s ln s) ln s) for 0 < s < 1. The
/// Modified Kirchhoff margin vanishes exactly where L(s) = alpha.
double kirchhoff_entropy_function(double s);

/// Unique s_e in (0, 1) with L(s_e) = alpha, for 0 < alpha < 2. Throws
/// UsageError for alpha >= 2 (the condition then holds on all of (0, 1)).
double kirchhoff_entropy_boundary(double alpha);

/// All roots of L(s) = alpha found by a sign scan of [1e-6, 1 - 1e-4].
std::vector<double> kirchhoff_entropy_boundary_roots(double alpha, int grid_points = 4096);

/// -P''(0) sqrt(P'(0)) / 2, the limit of E'''(gamma) as gamma -> 0-.
/// A positive value certifies E < 0 near zero. Throws HypothesisError when
/// P'(0) <= 0.
double near_zero_certificate(const ModelSpec& model);

/// Points s in [1e-6, 1 - 1e-4] where the entropy margin at gamma = s - 1
/// changes sign, found by scanning a geometric grid and polishing each change.
std::vector<double> margin_sign_changes(const ModelSpec& model, int grid_points = 2048);

/// Experimental: the smallest f for which the Blatz-Ko margin is
/// non-negative on the sampled range s in [1e-6, 1 - 1e-4], located by bisection
/// in f. Throws NoSolutionError when the margin sign does not switch on (0, 1).
double blatzko_entropy_f_threshold(double beta, int grid_points = 2048);

} // namespace psystem
