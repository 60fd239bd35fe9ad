#include <cmath>
#include <numbers>

#include "bergman/quadrature.hpp"
#include "bergman/specfn.hpp"
#include "doctest.h"

using namespace bergman;

TEST_CASE("Gaussian on a finite window") {
  const auto g = [](double t) { return -0.5 * t * t; };
  const LogIntegral result = integrate_exp(g, -40.0, 40.0, 0.0);
  CHECK(result.log_value == doctest::Approx(0.5 * std::log(2.0 * std::numbers::pi)).epsilon(1e-13));
  CHECK(result.relative_error < 1e-11);
}

TEST_CASE("shift does not change the value") {
  const auto g = [](double t) { return 800.0 - t * t; };
  const LogIntegral a = integrate_exp(g, -10.0, 10.0, 800.0);
  CHECK(a.log_value == doctest::Approx(800.0 + 0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("unimodal integrand on the whole line: Gamma function") {
  // int_R exp(x t - e^t) dt = Gamma(x)
  for (double x : {0.05, 1.0, 7.5, 300.0, 4e4}) {
    CAPTURE(x);
    const auto g = [x](double t) { return x * t - std::exp(t); };
    const LogIntegral result = integrate_unimodal_exp(g, -INFINITY, INFINITY, 0.0);
    CHECK(result.log_value == doctest::Approx(log_gamma(x)).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("unimodal integrand on a half line: Beta function") {
  // t = ln u on (0, 1): int u^{x} (1-u)^{y-1} du/u, y > 1 so both ends vanish
  for (auto [x, y] : {std::pair{0.5, 4.0}, {3.0, 2.0}, {120.0, 1.5}}) {
    CAPTURE(x);
    CAPTURE(y);
    const auto g = [x, y](double t) { return x * t + (y - 1.0) * std::log1p(-std::exp(t)); };
    const LogIntegral result = integrate_unimodal_exp(g, -INFINITY, 0.0, -1.0);
    CHECK(result.log_value == doctest::Approx(log_beta(x, y)).epsilon(1e-10).scale(1.0));
  }
}
