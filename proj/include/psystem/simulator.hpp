#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "psystem/constitutive.hpp"
#include "psystem/shock.hpp"

namespace psystem {

struct SimConfig {
  ModelSpec model;
  double v0 = 0.0;
  double domain_length = 1.0;
  int cells = 2000;
  double cfl = 0.9;
  double t_end = 0.1;

  /// Throws UsageError unless cells >= 16, 0 < cfl <= 0.9, t_end > 0 and
  /// the expected shock stays inside the domain up to t_end.
  void validate() const;
};

struct SimField {
  std::vector<double> x;
  std::vector<double> v;
  std::vector<double> gamma;
  double t = 0.0;
};

/**
 * First-order finite-volume scheme with a local Lax-Friedrichs flux for
 * u = (V, Gamma), F(u) = (-P(Gamma), -V), on [0, L].
 *
 * The left ghost cell mirrors V and copies Gamma, which enforces V(0,t) = 0;
 * the right ghost copies the last cell. Cells start at (-v0, 0).
 */
class FiniteVolumeSolver {
public:
  explicit FiniteVolumeSolver(SimConfig cfg);

  /// Advances one step of at most `max_dt`; returns the step taken. The
  /// nominal step is cfl dx / (largest characteristic speed); it is halved
  /// while the update would leave the hyperbolic region, reach gamma <= -1,
  /// or exceed CFL number 1 on the updated states. Throws SimulationError
  /// after repeated halving.
  double step(double max_dt);

  /// Runs until t_end.
  void run();

  double time() const { return t_; }
  double dx() const { return dx_; }
  const std::vector<double>& v() const { return v_; }
  const std::vector<double>& gamma() const { return g_; }

  /// Numerical fluxes through X = 0 and X = L during the last step.
  const std::array<double, 2>& left_flux() const { return left_flux_; }
  const std::array<double, 2>& right_flux() const { return right_flux_; }

  SimField field() const;

private:
  void check_state(std::size_t i) const;

  SimConfig cfg_;
  double dx_;
  double t_ = 0.0;
  std::vector<double> v_;
  std::vector<double> g_;
  std::vector<double> p_;
  std::vector<double> c_;
  std::vector<double> flux_v_;
  std::vector<double> flux_g_;
  std::vector<double> next_v_;
  std::vector<double> next_g_;
  std::array<double, 2> left_flux_{};
  std::array<double, 2> right_flux_{};
};

SimField simulate(const SimConfig& cfg);

struct ShockEstimate {
  double sigma;
  double gamma_left;
  double position;
};

/// Locates the rightmost crossing of gamma_l/2 by linear interpolation and
/// averages Gamma over X < position/2.
ShockEstimate extract_shock(const SimField& field, const ShockSolution& hint);

/// Exact S(gamma_l) sampled at the given cell centres.
SimField sample_solution(const ShockSolution& sol, const std::vector<double>& x, double t);

/// Columns x,V,Gamma.
void write_field_csv(std::ostream& os, const SimField& field);

} // namespace psystem
