#include <doctest.h>

#include <cmath>
#include <random>

#include "psystem/analysis.hpp"
#include "psystem/entropy.hpp"
#include "psystem/error.hpp"
#include "psystem/numerics.hpp"

using namespace psystem;

namespace {

double margin_of(const ModelSpec& m, double g) { return check_condition(m, g).margin; }

} // namespace

TEST_CASE("standard pair") {
  const auto og = ModelSpec::ogden(1.0, 1.0);
  const auto [phi0, psi0] = standard_pair(og, 0.0, 0.0);
  CHECK(phi0 == 0.0);
  CHECK(psi0 == 0.0);

  const auto lin = ModelSpec::linear(1.0, 2.0); // c^2 = 4
  const auto [phi, psi] = standard_pair(lin, 0.3, -0.2);
  CHECK(phi == doctest::Approx(0.045 + 0.08).epsilon(1e-14));
  CHECK(psi == doctest::Approx(0.8 * 0.3 * 1.0).epsilon(1e-14));

  // Psi_V = -Phi_Gamma and Psi_Gamma = -P' Phi_V.
  const double h = 1e-6;
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> ug(-0.8, 1.0), uv(-2.0, 2.0);
  for (const auto& m : {og, ModelSpec::kirchhoff_modified(1.0, 3.0),
                        ModelSpec::blatz_ko(1.0, 2.0, 0.4)}) {
    for (int i = 0; i < 20; ++i) {
      const double g = ug(rng), v = uv(rng);
      auto phi_at = [&](double vv, double gg) { return standard_pair(m, vv, gg).first; };
      auto psi_at = [&](double vv, double gg) { return standard_pair(m, vv, gg).second; };
      const double psi_v = (psi_at(v + h, g) - psi_at(v - h, g)) / (2 * h);
      const double psi_g = (psi_at(v, g + h) - psi_at(v, g - h)) / (2 * h);
      const double phi_v = (phi_at(v + h, g) - phi_at(v - h, g)) / (2 * h);
      const double phi_g = (phi_at(v, g + h) - phi_at(v, g - h)) / (2 * h);
      CHECK(std::fabs(psi_v + phi_g) <= 1e-6 * std::max(1.0, std::fabs(phi_g)));
      CHECK(std::fabs(psi_g + stress(m, g).dp * phi_v) <= 1e-6 * std::max(1.0, std::fabs(psi_g)));
    }
  }
}

TEST_CASE("jump excess") {
  const auto lin = ModelSpec::linear(1.0, 1.0);
  for (double g : {-0.9, -0.5, -0.1, -1e-3}) CHECK(std::fabs(jump_excess(lin, g)) < 1e-12);

  const auto og = ModelSpec::ogden(1.0, 1.0);
  double prev = 1.0;
  for (double g : {-1e-1, -1e-2, -1e-3, -1e-4}) {
    const double e = std::fabs(jump_excess(og, g));
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev < 1e-12);

  CHECK(jump_excess(ModelSpec::stvk(1.0, 1.0), -0.2) > 0.0);
  CHECK_THROWS_AS(jump_excess(og, 0.0), UsageError);
  CHECK_THROWS_AS(jump_excess(og, -1.0), StrainDomainError);
  // St.Venant-Kirchhoff stress is positive for gamma < -1, so gamma P < 0 is
  // unreachable there; a synthetic case needs P of the wrong sign, which
  // none of the laws produce on (-1, 0).
}

TEST_CASE("jump excess and margin encode the same inequality") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> ug(-0.95, -0.01);
  const std::vector<ModelSpec> models{
      ModelSpec::ogden(1.0, 0.5),          ModelSpec::kirchhoff_modified(1.0, 1.0),
      ModelSpec::kirchhoff_modified(1.0, 3.0), ModelSpec::blatz_ko(1.0, 0.5, 0.25),
      ModelSpec::blatz_ko(1.0, 10.0, 0.1), ModelSpec::stvk(1.0, 1.0)};
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& m = models[i % models.size()];
    const double g = m.kind == ModelKind::StVenantKirchhoff ? -0.4 * (i + 1) / 101.0 : ug(rng);
    const double e = jump_excess(m, g);
    const double margin = margin_of(m, g);
    if (std::fabs(margin) < 1e-12) continue;
    CHECK((e > 0) == (margin < 0));
    CHECK(e == doctest::Approx(-(-std::sqrt(g * stress(m, g).p) / g) * margin / 2).epsilon(1e-8));
    ++checked;
  }
  CHECK(checked > 90);
}

TEST_CASE("check_condition") {
  const auto og = ModelSpec::ogden(1.0, 1.0);
  const auto zero = check_condition(og, 0.0);
  CHECK(zero.holds);
  CHECK(zero.margin == 0.0);
  CHECK_FALSE(zero.s_e.has_value());

  std::mt19937 rng(29);
  std::uniform_real_distribution<double> ug(-0.999, -1e-3), ul(0.1, 10.0);
  for (int i = 0; i < 20; ++i) {
    CHECK(check_condition(ModelSpec::ogden(ul(rng), ul(rng)), ug(rng)).holds);
  }
  CHECK(check_condition(ModelSpec::from_beta(ModelKind::BlatzKoOgden, 2.0, 0.3), -0.5).holds);
  for (int i = 1; i <= 50; ++i) {
    CHECK_FALSE(check_condition(ModelSpec::stvk(1.0, 1.0), -0.4 * i / 51.0).holds);
  }
  for (double g : {-0.9, -0.3, -1e-5}) {
    CHECK(std::fabs(check_condition(ModelSpec::linear(2.0, 0.7), g).margin) <= 1e-12);
  }
  CHECK(check_condition(ModelSpec::kirchhoff_modified(1.0, 1.0), -0.5).s_e.has_value());
  CHECK_FALSE(check_condition(ModelSpec::kirchhoff_modified(1.0, 3.0), -0.5).s_e.has_value());
  CHECK_THROWS_AS(check_condition(og, 0.1), UsageError);
  CHECK_THROWS_AS(check_condition(og, -1.0), StrainDomainError);
}

TEST_CASE("P'' < 0 on (-1, 0) implies the condition") {
  const std::vector<ModelSpec> models{ModelSpec::ogden(1.0, 0.2),
                                      ModelSpec::kirchhoff_modified(1.0, 5.0),
                                      ModelSpec::blatz_ko(1.0, 0.5, 0.3),
                                      ModelSpec::blatz_ko(1.0, 4.0, 0.6)};
  for (const auto& m : models) {
    const auto r = scan_regions(m, -1.0 + 1e-6, -1e-9);
    if (r.gnl_intervals.size() != 1 || r.gnl_intervals[0].lo != r.scan_range.lo ||
        r.gnl_intervals[0].hi != r.scan_range.hi) {
      continue;
    }
    double prev_g = -1e300;
    for (int i = 1; i <= 50; ++i) {
      const double g = -1.0 + i / 51.0;
      CHECK(check_condition(m, g).holds);
      // G = -margin increases with gamma.
      const double big_g = -margin_of(m, g);
      CHECK(big_g >= prev_g);
      prev_g = big_g;
    }
  }
}

TEST_CASE("Modified Kirchhoff entropy boundary") {
  CHECK(kirchhoff_entropy_function(1.0 - 1e-4) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(kirchhoff_entropy_function(1e-6) < 1e-6);

  const double se = kirchhoff_entropy_boundary(1.0);
  CHECK(kirchhoff_entropy_boundary_roots(1.0).size() == 1);
  CHECK(std::fabs(kirchhoff_entropy_function(se) - 1.0) < 1e-12);

  // Independent bisection on L(s) - 1.
  double a = 1e-6, b = 1.0 - 1e-4;
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    (kirchhoff_entropy_function(m) < 1.0 ? a : b) = m;
  }
  CHECK(std::fabs(se - 0.5 * (a + b)) < 1e-12);

  const auto mk = ModelSpec::kirchhoff_modified(1.0, 1.0);
  CHECK(margin_of(mk, se - 0.01 - 1.0) >= 0.0);
  CHECK(margin_of(mk, se + 0.01 - 1.0) < 0.0);
  CHECK(std::fabs(margin_of(mk, se - 1.0)) < 1e-12);

  CHECK(kirchhoff_entropy_boundary(1.999) > 0.99);
  CHECK_THROWS_AS(kirchhoff_entropy_boundary(2.0), UsageError);
  CHECK_THROWS_AS(kirchhoff_entropy_boundary(0.0), UsageError);

  const auto mk3 = ModelSpec::kirchhoff_modified(1.0, 3.0);
  for (int i = 1; i <= 50; ++i) CHECK(check_condition(mk3, -1.0 + i / 51.0).holds);
}

TEST_CASE("near-zero certificate") {
  // P'(0) = 3, P''(0) = -2 for Ogden with lambda = mu = rho0 = 1.
  CHECK(near_zero_certificate(ModelSpec::ogden(1.0, 1.0)) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(near_zero_certificate(ModelSpec::linear(1.0, 1.0)) == 0.0);
  CHECK(near_zero_certificate(ModelSpec::kirchhoff_modified(1.0, 3.0)) > 0.0);

  // Third difference of E close to zero approaches the limit.
  for (const auto& m : {ModelSpec::ogden(1.0, 1.0), ModelSpec::kirchhoff_modified(1.0, 3.0)}) {
    const double g = -1e-4, h = 2e-5;
    const double d3 = (jump_excess(m, g + 2 * h) - 2 * jump_excess(m, g + h) +
                       2 * jump_excess(m, g - h) - jump_excess(m, g - 2 * h)) /
                      (2 * h * h * h);
    CHECK(d3 == doctest::Approx(near_zero_certificate(m)).epsilon(0.01));
  }
}

TEST_CASE("Blatz-Ko beyond beta = 5/2: experimental f threshold") {
  const double fb = blatzko_entropy_f_threshold(3.0);
  CHECK(fb > 0.0);
  CHECK(fb < 1.0);
  CHECK(margin_sign_changes(ModelSpec::from_beta(ModelKind::BlatzKoOgden, 3.0, fb + 0.01)).empty());
  CHECK_FALSE(
      margin_sign_changes(ModelSpec::from_beta(ModelKind::BlatzKoOgden, 3.0, fb - 0.01)).empty());
  // For beta <= 5/2 nothing switches.
  CHECK_THROWS_AS(blatzko_entropy_f_threshold(2.0), NoSolutionError);
}
