#include "psystem/constitutive.hpp"

#include <cmath>
#include <string>

#include "psystem/error.hpp"

namespace psystem {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
  case ModelKind::StVenantKirchhoff: return "stvk";
  case ModelKind::KirchhoffModified: return "kirchhoff_modified";
  case ModelKind::Ogden: return "ogden";
  case ModelKind::BlatzKoOgden: return "blatz_ko";
  case ModelKind::Linear: return "linear";
  }
  return "unknown";
}

ModelKind model_kind_from_string(std::string_view name) {
  if (name == "stvk") return ModelKind::StVenantKirchhoff;
  if (name == "kirchhoff_modified") return ModelKind::KirchhoffModified;
  if (name == "ogden") return ModelKind::Ogden;
  if (name == "blatz_ko") return ModelKind::BlatzKoOgden;
  if (name == "linear") return ModelKind::Linear;
  throw UsageError("unknown model kind '" + std::string(name) + "'");
}

void ModelSpec::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(rho0)) throw UsageError("model: rho0 must be positive");
  if (!positive(mu)) throw UsageError("model: mu must be positive");
  if (!positive(lambda)) throw UsageError("model: lambda must be positive");
  if (kind == ModelKind::BlatzKoOgden) {
    if (!f) throw UsageError("model: blatz_ko requires f");
    if (!(*f > 0.0 && *f < 1.0)) throw UsageError("model: f must lie in (0, 1)");
  } else if (f) {
    throw UsageError("model: f is only meaningful for blatz_ko");
  }
}

ModelSpec ModelSpec::stvk(double mu, double lambda, double rho0) {
  return {ModelKind::StVenantKirchhoff, rho0, mu, lambda, std::nullopt};
}
ModelSpec ModelSpec::kirchhoff_modified(double mu, double lambda, double rho0) {
  return {ModelKind::KirchhoffModified, rho0, mu, lambda, std::nullopt};
}
ModelSpec ModelSpec::ogden(double mu, double lambda, double rho0) {
  return {ModelKind::Ogden, rho0, mu, lambda, std::nullopt};
}
ModelSpec ModelSpec::blatz_ko(double mu, double lambda, double f, double rho0) {
  return {ModelKind::BlatzKoOgden, rho0, mu, lambda, f};
}
ModelSpec ModelSpec::linear(double mu, double lambda, double rho0) {
  return {ModelKind::Linear, rho0, mu, lambda, std::nullopt};
}
ModelSpec ModelSpec::from_beta(ModelKind kind, double beta, std::optional<double> f) {
  return {kind, 1.0, 1.0, 2.0 * beta, f};
}

void require_strain(double gamma) {
  if (!(gamma > -1.0)) {
    throw StrainDomainError("strain must satisfy gamma > -1 (got " + std::to_string(gamma) + ")");
  }
}

// Formulas are written in s = 1 + gamma, factoring gamma out where the
// expression vanishes at gamma = 0 so that P(0) = 0 holds exactly.
StressEval stress(const ModelSpec& m, double gamma) {
  require_strain(gamma);
  const double s = 1.0 + gamma;
  const double ls = std::log1p(gamma);
  switch (m.kind) {
  case ModelKind::StVenantKirchhoff: {
    const double k = (m.lambda + 2.0 * m.mu) / (2.0 * m.rho0);
    return {k * gamma * s * (s + 1.0), k * (3.0 * s * s - 1.0), 6.0 * k * s};
  }
  case ModelKind::KirchhoffModified: {
    const double s2 = s * s;
    const double p = (m.mu * gamma * s * (s + 1.0) + m.lambda * ls / s) / m.rho0;
    const double dp = (m.mu * (3.0 * s2 - 1.0) + m.lambda * (1.0 - ls) / s2) / m.rho0;
    const double d2p = (6.0 * m.mu * s + m.lambda * (2.0 * ls - 3.0) / (s2 * s)) / m.rho0;
    return {p, dp, d2p};
  }
  case ModelKind::Ogden: {
    const double p = (m.lambda * gamma + m.mu * gamma * (2.0 + gamma) / s) / m.rho0;
    const double dp = (m.lambda + m.mu * (1.0 + 1.0 / (s * s))) / m.rho0;
    const double d2p = -2.0 * m.mu / (s * s * s * m.rho0);
    return {p, dp, d2p};
  }
  case ModelKind::BlatzKoOgden: {
    const double f = m.f.value_or(0.5);
    const double b = m.beta();
    const double k = 2.0 * b + 2.0;
    const double scale = m.mu / m.rho0;
    // s - s^{-2b-1} = -s * expm1(-k ln s);  s^{2b-1} - s^{-3} = s^{-3} expm1(k ln s)
    const double p = scale * (-f * s * std::expm1(-k * ls) +
                              (1.0 - f) * std::expm1(k * ls) / (s * s * s));
    const double s_mk = std::exp(-k * ls);       // s^{-2b-2}
    const double s_2b = std::exp(2.0 * b * ls);  // s^{2b}
    const double s2 = s * s;
    const double dp = scale * (f * (1.0 + (2.0 * b + 1.0) * s_mk) +
                               (1.0 - f) * ((2.0 * b - 1.0) * s_2b / s2 + 3.0 / (s2 * s2)));
    const double d2p =
        scale * (-f * (2.0 * b + 1.0) * k * s_mk / s +
                 (1.0 - f) * ((2.0 * b - 1.0) * (2.0 * b - 2.0) * s_2b / (s2 * s) -
                              12.0 / (s2 * s2 * s)));
    return {p, dp, d2p};
  }
  case ModelKind::Linear: {
    const double c2 = (m.lambda + 2.0 * m.mu) / m.rho0;
    return {c2 * gamma, c2, 0.0};
  }
  }
  throw UsageError("stress: unknown model kind");
}

double stress_antiderivative(const ModelSpec& m, double gamma) {
  require_strain(gamma);
  const double ls = std::log1p(gamma);
  const double s2m1 = gamma * (2.0 + gamma); // s^2 - 1
  // (s^4 - 1)/4 - (s^2 - 1)/2 = (s^2 - 1)^2 / 4
  const double quartic = 0.25 * s2m1 * s2m1;
  switch (m.kind) {
  case ModelKind::StVenantKirchhoff:
    return (m.lambda + 2.0 * m.mu) / (2.0 * m.rho0) * quartic;
  case ModelKind::KirchhoffModified:
    return (m.mu * quartic + 0.5 * m.lambda * ls * ls) / m.rho0;
  case ModelKind::Ogden:
    return (0.5 * m.lambda * gamma * gamma + m.mu * (0.5 * s2m1 - ls)) / m.rho0;
  case ModelKind::BlatzKoOgden: {
    const double f = m.f.value_or(0.5);
    const double b = m.beta();
    // integral of s - s^{-2b-1} from 1 to s, and of s^{2b-1} - s^{-3}
    const double part_f = 0.5 * s2m1 + std::expm1(-2.0 * b * ls) / (2.0 * b);
    const double part_g = std::expm1(2.0 * b * ls) / (2.0 * b) + 0.5 * std::expm1(-2.0 * ls);
    return m.mu / m.rho0 * (f * part_f + (1.0 - f) * part_g);
  }
  case ModelKind::Linear:
    return 0.5 * (m.lambda + 2.0 * m.mu) / m.rho0 * gamma * gamma;
  }
  throw UsageError("stress_antiderivative: unknown model kind");
}

double q_value(const ModelSpec& m, double gamma) {
  require_strain(gamma);
  const double b = m.beta();
  const double s = 1.0 + gamma;
  const double ls = std::log1p(gamma);
  switch (m.kind) {
  case ModelKind::KirchhoffModified:
    return gamma * (s * s * s - s + 2.0 * b * ls / s);
  case ModelKind::Ogden:
    return gamma * (2.0 * b * gamma + (2.0 + gamma) * gamma / (gamma + 1.0));
  case ModelKind::BlatzKoOgden: {
    const double f = m.f.value_or(0.5);
    const double k = 2.0 * b + 2.0;
    return gamma * s *
           (f * (1.0 - std::pow(s, -k)) + (1.0 - f) / std::pow(s, 4.0) * (std::pow(s, k) - 1.0));
  }
  default:
    throw UsageError("q_value: defined only for kirchhoff_modified, ogden and blatz_ko");
  }
}

} // namespace psystem
