#include <cmath>
#include <numbers>

#include "bergman/scaling.hpp"
#include "bergman/verify.hpp"
#include "doctest.h"

using namespace bergman;

TEST_CASE("deviation examples") {
  for (double r : {0.1, 1.0, 5.0}) CHECK(deviation(fubini_study_model(), 10, r) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(deviation(spindle_model({0.5, 0.0}), 100, 1.0) == doctest::Approx(0.005).epsilon(1e-9));
  CHECK(deviation(poincare_disc_model(), 60, 0.3) == doctest::Approx(1.0 / 120.0).epsilon(1e-9));
  CHECK_THROWS_AS(deviation(spindle_model({0.5, 0.0}), 10, 0.0), DomainError);
  CHECK_THROWS_AS(deviation(poincare_disc_model(), 10, 1.0), DomainError);
}

TEST_CASE("bound check on the explicit models") {
  const std::vector<int> p_set = doubling_set(6, 11);
  const BoundReport spindle = bound_check(spindle_model({0.5, 0.0}), p_set, {});
  CHECK(spindle.pass);
  CHECK(spindle.alpha == 2.0);
  CHECK(spindle.stability_ratio == doctest::Approx(1.0).epsilon(0.05));
  const BoundReport fs = bound_check(fubini_study_model(), p_set, {});
  CHECK(fs.pass);
  // deviation 1/p over the shape p^{-1/8} + p^{-3/8}, largest at p = 64
  CHECK(fs.fitted_constant == doctest::Approx(1.0 / 64.0 / (std::pow(64.0, -0.125) + std::pow(64.0, -0.375))));
}

TEST_CASE("bound check through the chart at infinity") {
  BoundCheckOptions options;
  options.chart = Chart::infinity;
  CHECK(bound_check(spindle_model({0.5, 0.0}), doubling_set(6, 11), {}, options).pass);
  CHECK_THROWS_AS(bound_check(poincare_disc_model(), {64}, {}, options), DomainError);
}

TEST_CASE("empty admissible set is a configuration error") {
  BoundCheckOptions options;
  options.c0 = 1e9;
  CHECK_THROWS_AS(bound_check(spindle_model({0.5, 0.0}), {64}, {}, options), DomainError);
  CHECK_THROWS_AS(bound_check(spindle_model({0.5, 0.0}), {}, {}), DomainError);
}

TEST_CASE("corollary check") {
  const std::vector<int> p_set = doubling_set(6, 11);
  for (double eta : {0.0, 0.5, 1.0}) {
    CAPTURE(eta);
    CHECK(corollary_check(spindle_model({0.5, 0.0}), eta, p_set).pass);
    CHECK(corollary_check(log_singular_demo_model(), eta, p_set).pass);
  }
  CHECK_THROWS_AS(corollary_check(spindle_model({0.5, 0.0}), 1.5, p_set), DomainError);
}

TEST_CASE("gamma lemma") {
  const CheckReport report = gamma_lemma_check(linear_grid(0.0, 10.0, 199), linear_grid(1.0, 100.0, 199));
  CHECK(report.pass);
  CHECK(report.metrics.at("violations") == 0.0);
  CHECK(report.metrics.at("limit_max_deviation") < 1e-3);
  Eigen::ArrayXd r(1), s(1);
  r << 0.0;
  s << 3.0;
  CHECK(gamma_lemma_check(r, s).metrics.at("max_log_excess") == doctest::Approx(-1.0 / 12.0));
  s << 0.5;
  CHECK_THROWS_AS(gamma_lemma_check(r, s), DomainError);
}

TEST_CASE("b0 gaps") {
  const CheckReport fs = b0_check(fubini_study_model(), 0.5, {8, 16, 32});
  CHECK(fs.pass);
  CHECK(fs.metrics.at("gap_p16") == doctest::Approx(1.0 / 16.0));
  const CheckReport spindle = b0_check(spindle_model({1.0 / 3.0, 0.0}), 1.5, {8, 16, 32, 64});
  CHECK(spindle.pass);
  CHECK(spindle.metrics.at("gap_p64") == doctest::Approx(1.0 / 192.0).epsilon(1e-6));
  CHECK_THROWS_AS(b0_check(fubini_study_model(), 0.5, {8}), DomainError);
}

TEST_CASE("punctured disc two-term check reports the fitted subleading term") {
  const CheckReport report = two_term_check(poincare_disc_model(), 60, {0.2, 0.3, 0.5});
  CHECK(report.metrics.at("fitted_subleading") == doctest::Approx(-1.0 / std::numbers::pi).epsilon(1e-9));
  CHECK(report.metrics.at("expected_subleading") == doctest::Approx(-4.0 / std::numbers::pi));
}
