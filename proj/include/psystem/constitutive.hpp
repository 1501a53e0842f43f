#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace psystem {

enum class ModelKind { StVenantKirchhoff, KirchhoffModified, Ogden, BlatzKoOgden, Linear };

/// "stvk", "kirchhoff_modified", "ogden", "blatz_ko", "linear".
std::string_view to_string(ModelKind kind);
ModelKind model_kind_from_string(std::string_view name);

/**
 * Constitutive law identity plus material parameters.
 *
 * Only (rho0, mu, lambda, f) are stored; the ratios alpha = lambda/mu and
 * beta = lambda/(2 mu) are always derived. `f` is the Blatz-Ko mixing
 * fraction and must be present exactly for BlatzKoOgden.
 */
struct ModelSpec {
  ModelKind kind = ModelKind::Linear;
  double rho0 = 1.0;
  double mu = 1.0;
  double lambda = 1.0;
  std::optional<double> f;

  double alpha() const { return lambda / mu; }
  double beta() const { return lambda / (2.0 * mu); }

  /// Throws UsageError when an invariant is violated.
  void validate() const;

  static ModelSpec stvk(double mu, double lambda, double rho0 = 1.0);
  static ModelSpec kirchhoff_modified(double mu, double lambda, double rho0 = 1.0);
  static ModelSpec ogden(double mu, double lambda, double rho0 = 1.0);
  static ModelSpec blatz_ko(double mu, double lambda, double f, double rho0 = 1.0);
  static ModelSpec linear(double mu, double lambda, double rho0 = 1.0);

  /// mu = rho0 = 1 and lambda = 2 beta, the normalisation of the impact tables.
  static ModelSpec from_beta(ModelKind kind, double beta, std::optional<double> f = {});
};

/// Stress per unit reference density, P = P^11 / rho0, and its first two
/// strain derivatives.
struct StressEval {
  double p;
  double dp;
  double d2p;
};

/// Closed-form P, P', P'' at strain gamma > -1.
StressEval stress(const ModelSpec& model, double gamma);

/// Exact integral of P from 0 to gamma.
double stress_antiderivative(const ModelSpec& model, double gamma);

/// Dimensionless impact function Q = rho0 * gamma * P(gamma) / mu written in
/// terms of beta; defined for KirchhoffModified, Ogden and BlatzKoOgden.
double q_value(const ModelSpec& model, double gamma);

/// Throws StrainDomainError unless gamma > -1.
void require_strain(double gamma);

} // namespace psystem
