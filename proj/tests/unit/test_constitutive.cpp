#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "psystem/constitutive.hpp"
#include "psystem/error.hpp"
#include "psystem/io.hpp"
#include "psystem/numerics.hpp"

using namespace psystem;

namespace {

std::vector<ModelSpec> sample_models() {
  return {ModelSpec::stvk(1.0, 1.5),
          ModelSpec::kirchhoff_modified(1.0, 1.0),
          ModelSpec::kirchhoff_modified(0.7, 4.0, 2.0),
          ModelSpec::ogden(1.0, 0.5),
          ModelSpec::ogden(2.0, 3.0, 1.5),
          ModelSpec::blatz_ko(1.0, 0.5, 0.25),
          ModelSpec::blatz_ko(1.0, 4.0, 0.5),
          ModelSpec::blatz_ko(0.5, 0.3, 0.8, 2.0),
          ModelSpec::linear(1.0, 2.0)};
}

} // namespace

TEST_CASE("stress vanishes at zero strain") {
  for (const auto& m : sample_models()) CHECK(stress(m, 0.0).p == 0.0);
  CHECK(stress(ModelSpec::blatz_ko(1.0, 10.0, 0.5), 0.0).p == 0.0);
}

TEST_CASE("stress: reference values") {
  CHECK(stress(ModelSpec::linear(1.0, 2.0), 0.5).p == doctest::Approx(2.0).epsilon(1e-15));

  const auto og = ModelSpec::ogden(1.0, 0.5);
  const double g = -0.1912;
  const double direct = 0.5 * g + (2.0 + g) * g / (g + 1.0);
  CHECK(stress(og, g).p == doctest::Approx(direct).epsilon(1e-14));
  CHECK(stress(og, g).p == doctest::Approx(-0.52301).epsilon(1e-3));
  CHECK(g * stress(og, g).p == doctest::Approx(0.1).epsilon(1e-3));

  const double onset = -1.0 + 1.0 / std::sqrt(3.0);
  CHECK(std::fabs(stress(ModelSpec::stvk(1.0, 1.0), onset).dp) < 1e-14);
}

TEST_CASE("derivatives agree with central differences") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ug(-0.9, 2.0);
  const double h = 1e-6;
  for (const auto& m : sample_models()) {
    for (int i = 0; i < 200; ++i) {
      const double g = ug(rng);
      const auto e = stress(m, g);
      const double fd1 = (stress(m, g + h).p - stress(m, g - h).p) / (2 * h);
      const double fd2 = (stress(m, g + h).dp - stress(m, g - h).dp) / (2 * h);
      CHECK(std::fabs(fd1 - e.dp) <= 1e-6 * std::max(1.0, std::fabs(e.dp)));
      CHECK(std::fabs(fd2 - e.d2p) <= 1e-5 * std::max(1.0, std::fabs(e.d2p)));
      const double fda =
          (stress_antiderivative(m, g + h) - stress_antiderivative(m, g - h)) / (2 * h);
      CHECK(std::fabs(fda - e.p) <= 1e-6 * std::max(1.0, std::fabs(e.p)));
    }
  }
}

TEST_CASE("antiderivative: exact values and quadrature cross-check") {
  for (const auto& m : sample_models()) CHECK(stress_antiderivative(m, 0.0) == 0.0);
  // (lambda + 2 mu) / rho0 = 4
  CHECK(stress_antiderivative(ModelSpec::linear(1.0, 2.0), -0.5) == doctest::Approx(0.5));
  const auto mk = ModelSpec::kirchhoff_modified(1.0, 1.0);
  const double q = numerics::integrate([&](double w) { return stress(mk, w).p; }, 0.0, -0.3);
  CHECK(std::fabs(q - stress_antiderivative(mk, -0.3)) < 1e-10);
}

TEST_CASE("q_value equals rho0 gamma P / mu") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ug(-0.95, 3.0);
  const std::vector<ModelSpec> models{ModelSpec::kirchhoff_modified(2.0, 3.0, 1.7),
                                      ModelSpec::ogden(0.4, 1.1, 0.9),
                                      ModelSpec::blatz_ko(1.3, 0.9, 0.35, 2.5),
                                      ModelSpec::blatz_ko(1.0, 10.0, 0.5)};
  for (const auto& m : models) {
    CHECK(q_value(m, 0.0) == 0.0);
    for (int i = 0; i < 100; ++i) {
      const double g = ug(rng);
      const double ref = m.rho0 * g * stress(m, g).p / m.mu;
      CHECK(std::fabs(q_value(m, g) - ref) <= 1e-12 * std::max(std::fabs(ref), 1e-300) + 1e-300);
    }
  }
  CHECK(q_value(ModelSpec::from_beta(ModelKind::Ogden, 0.25), -0.2929) ==
        doctest::Approx(0.25).epsilon(1e-3));
  CHECK_THROWS_AS(q_value(ModelSpec::stvk(1.0, 1.0), -0.1), UsageError);
  CHECK_THROWS_AS(q_value(ModelSpec::linear(1.0, 1.0), -0.1), UsageError);
}

TEST_CASE("stress is invariant under common scaling of mu, lambda, rho0") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> ug(-0.9, 2.0);
  for (auto m : sample_models()) {
    auto scaled = m;
    scaled.mu *= 3.7;
    scaled.lambda *= 3.7;
    scaled.rho0 *= 3.7;
    for (int i = 0; i < 20; ++i) {
      const double g = ug(rng);
      const auto a = stress(m, g);
      const auto b = stress(scaled, g);
      CHECK(std::fabs(a.p - b.p) <= 1e-12 * std::max(1.0, std::fabs(a.p)));
      CHECK(std::fabs(a.dp - b.dp) <= 1e-12 * std::max(1.0, std::fabs(a.dp)));
    }
  }
}

TEST_CASE("strain domain and parameter validation") {
  const auto m = ModelSpec::ogden(1.0, 1.0);
  CHECK_THROWS_AS(stress(m, -1.0), StrainDomainError);
  CHECK_THROWS_AS(stress_antiderivative(m, -1.2), StrainDomainError);
  CHECK_THROWS_AS(ModelSpec::ogden(-1.0, 1.0).validate(), UsageError);
  CHECK_THROWS_AS(ModelSpec::blatz_ko(1.0, 1.0, 1.0).validate(), UsageError);
  CHECK_THROWS_AS(ModelSpec(ModelSpec{ModelKind::BlatzKoOgden, 1.0, 1.0, 1.0, {}}).validate(),
                  UsageError);
  CHECK_THROWS_AS(ModelSpec(ModelSpec{ModelKind::Ogden, 1.0, 1.0, 1.0, 0.5}).validate(), UsageError);
  CHECK(ModelSpec::from_beta(ModelKind::Ogden, 0.25).lambda == 0.5);
  CHECK(ModelSpec::kirchhoff_modified(2.0, 3.0).alpha() == 1.5);
  CHECK(ModelSpec::kirchhoff_modified(2.0, 3.0).beta() == 0.75);
}

TEST_CASE("model kind names and JSON round trip") {
  for (auto k : {ModelKind::StVenantKirchhoff, ModelKind::KirchhoffModified, ModelKind::Ogden,
                 ModelKind::BlatzKoOgden, ModelKind::Linear}) {
    CHECK(model_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(model_kind_from_string("neo_hookean"), UsageError);

  const auto m = ModelSpec::blatz_ko(1.0, 0.5, 0.25, 2.0);
  const auto back = model_from_json(to_json(m));
  CHECK(back.kind == m.kind);
  CHECK(back.rho0 == m.rho0);
  CHECK(back.lambda == m.lambda);
  CHECK(back.f == m.f);

  const auto og = model_from_json(Json::parse(
      R"({"kind": "ogden", "rho0": 1.0, "mu": 1.0, "lambda": 0.5, "f": null})"));
  CHECK(og.kind == ModelKind::Ogden);
  CHECK_FALSE(og.f.has_value());

  try {
    model_from_json(Json::parse(R"({"kind": "ogden", "mu": "one", "lambda": 1})"));
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("model.mu") != std::string::npos);
  }
}
