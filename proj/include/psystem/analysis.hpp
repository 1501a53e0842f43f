#pragma once

#include <string>
#include <utility>
#include <vector>

#include "psystem/constitutive.hpp"

namespace psystem {

struct Interval {
  double lo;
  double hi;
};

struct Threshold {
  std::string name;
  double value;
};

/// Strain intervals where the system is strictly hyperbolic (P' > 0) and
/// genuinely nonlinear (P'' < 0), with parameter thresholds for the model.
struct RegionReport {
  ModelSpec model;
  std::vector<Interval> hyperbolic_intervals;
  std::vector<Interval> gnl_intervals;
  Interval scan_range;
  std::vector<Threshold> notes;
};

inline constexpr double kDefaultScanLo = -1.0 + 1e-6;
inline constexpr double kDefaultScanHi = 10.0;

struct ScanOptions {
  /// Points of the uniform part of the grid; the same number of
  /// log-spaced points in s = 1 + gamma is added below s = 1.
  int grid_points = 4096;
};

/// Detects sign changes of P' and P'' on a dense grid over
/// (gamma_lo, gamma_hi), polishes each change with a root finder, and
/// returns maximal sign-definite intervals together with the threshold notes
/// of `model_thresholds`.
RegionReport scan_regions(const ModelSpec& model, double gamma_lo = kDefaultScanLo,
                          double gamma_hi = kDefaultScanHi, const ScanOptions& opts = {});

/// Named threshold values relevant for the model kind.
std::vector<Threshold> model_thresholds(const ModelSpec& model);

/// St.Venant-Kirchhoff is hyperbolic exactly for gamma > -1 + 1/sqrt(3).
double stvk_hyperbolic_threshold();

/// min over s > 0 of rho0 P'(s) for the Modified Kirchhoff law with mu = 1 and
/// lambda = alpha; returns (minimum value, minimiser s).
std::pair<double, double> kirchhoff_hyperbolicity_margin(double alpha);

/// The two positive roots alpha1 < alpha2 of the hyperbolicity margin; the
/// Modified Kirchhoff law is hyperbolic for all gamma > -1 iff
/// alpha1 < lambda/mu < alpha2.
std::pair<double, double> kirchhoff_alpha_bounds();

/// Residual of 6(5 + 4 ln 6) alpha = 1 + 12 alpha ln(3 + 3 sqrt(1 + 12 alpha))
/// + sqrt(1 + 12 alpha), whose positive roots are the alpha bounds.
double kirchhoff_alpha_bound_equation(double alpha);

/// S_alpha = [(alpha/12) W0(12 e^6 / alpha)]^{1/4}: the unique s > 0 where the
/// Modified Kirchhoff P'' changes sign (negative on (0, S_alpha)).
double kirchhoff_s_alpha(double alpha);

/// s_beta = (3 / (1 - 2 beta))^{1/(2 beta + 2)}, 0 < beta < 1/2.
double blatzko_s_beta(double beta);

/// Q(s, beta) whose supremum over s > s_beta bounds f from below for
/// hyperbolicity of the Blatz-Ko law when beta < 1/2.
double blatzko_hyperbolicity_q(double s, double beta);

/// f_beta = max over s > s_beta of Q(s, beta); hyperbolic for all gamma iff f > f_beta.
double blatzko_f_threshold(double beta);

/// s0 = [6 / ((2 beta - 1)(beta - 1))]^{1/(2 beta + 2)}; P'' < 0 for s <= s0.
/// Defined for beta in (0, 1/2) or (1, inf).
double blatzko_s0(double beta);

/// min over s in [s_lo, s_hi] of P'(s - 1), searched on a log-spaced grid.
double min_dp_over_s(const ModelSpec& model, double s_lo, double s_hi);

} // namespace psystem
