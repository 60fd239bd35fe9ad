#include <cmath>

#include "bergman/kernel.hpp"
#include "bergman/scaling.hpp"
#include "bergman/specfn.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bergman;

TEST_CASE("grids") {
  const Eigen::ArrayXd lin = linear_grid(0.0, 2.0, 200);
  CHECK(lin.size() == 201);
  CHECK(lin(0) == 0.0);
  CHECK(lin(200) == 2.0);
  CHECK(lin(100) == doctest::Approx(1.0));
  const Eigen::ArrayXd geo = geometric_grid(0.1, 10.0, 4);
  CHECK(geo.size() == 5);
  CHECK(geo(2) == doctest::Approx(1.0));
  CHECK(geo(4) == 10.0);
  const Eigen::ArrayXd mixed = scaling_grid(0.1, 10.0, 40);
  CHECK(mixed.size() > 41);
  for (Eigen::Index i = 1; i < mixed.size(); ++i) CHECK(mixed(i) > mixed(i - 1));
  CHECK_THROWS_AS(linear_grid(1.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(geometric_grid(0.0, 1.0, 3), DomainError);
}

TEST_CASE("scaled radius") {
  CHECK(scaled_radius(0.5, 100, 0.0) == 0.0);
  const double r = scaled_radius(0.5, 100, 3.0);
  CHECK(std::pow(r, 1.0) == doctest::Approx(0.015));
  CHECK_THROWS_AS(scaled_radius(0.5, 100, -1.0), DomainError);
}

TEST_CASE("limit profile collapses at a = 1") {
  for (double y : {0.0, 0.1, 1.0, 10.0, 300.0}) CHECK(limit_profile({1.0, 0.0}, y) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("limit profile against a 50-digit Mittag-Leffler series") {
  for (auto params : {SpindleParams{0.5, 0.0}, {1.0 / 3.0, 0.0}, {0.5, 0.25}, {2.0 / 3.0, 0.9}}) {
    const double kappa = (flux_lowest_index(params) - params.nu) / params.a;
    for (double y : {0.1, 1.0, 4.0, 10.0}) {
      const oracle::Big x = oracle::Big(y);
      const oracle::Big ml = oracle::mittag_leffler(1.0 / params.a, 1.0 + kappa, std::pow(y, 1.0 / params.a));
      const double ref = static_cast<double>(boost::multiprecision::pow(x, kappa) * boost::multiprecision::exp(-x) * ml / params.a);
      CAPTURE(params.a);
      CAPTURE(params.nu);
      CAPTURE(y);
      CHECK(limit_profile(params, y) == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("limit profile at the origin") {
  CHECK(limit_profile({0.5, 0.0}, 0.0) == doctest::Approx(2.0));
  CHECK(limit_profile({0.5, 0.7}, 0.0) == 0.0);
  CHECK_THROWS_AS(limit_profile({0.5, 0.2}, 0.0), DomainError);
}

TEST_CASE("scaled profile tends to the limit") {
  const Eigen::ArrayXd y = linear_grid(0.1, 10.0, 99);
  for (auto params : {SpindleParams{0.5, 0.0}, {1.0 / 3.0, 0.0}, {0.5, 0.25}, {2.0 / 3.0, 0.9}}) {
    double previous = INFINITY;
    for (int p : {50, 100, 200, 400}) {
      const double gap = max_limit_gap(params, p, y);
      CHECK(gap < previous);
      previous = gap;
    }
    CHECK(previous < 0.05);
  }
  for (int p : {50, 100, 200, 400}) {
    CHECK(max_limit_gap({1.0, 0.0}, p, y) == doctest::Approx(1.0 / p).epsilon(1e-10));
  }
}

TEST_CASE("scaled profile marks divergence at y = 0") {
  Eigen::ArrayXd y(2);
  y << 0.0, 1.0;
  const ScaledProfile profile = scaled_profile({0.5, 0.2}, 20, y, Variant::flux);
  CHECK(profile.divergent(0));
  CHECK(std::isinf(profile.value(0)));
  CHECK_FALSE(profile.divergent(1));
}

TEST_CASE("theta stays in (-a, 1-a]") {
  for (double a : {0.2, 0.5, 1.0}) {
    for (double nu : {0.1, 0.3, 1.0 / 3.0, 0.77, 1.0}) {
      for (int p = 1; p <= 500; ++p) {
        const double theta = theta_sequence({a, nu}, p);
        CHECK(theta > -a - 1e-12);
        CHECK(theta <= 1.0 - a + 1e-12);
      }
    }
  }
  // rational nu = 1/4: theta is periodic in p with period 4
  for (int p = 1; p <= 40; ++p) {
    CHECK(theta_sequence({0.5, 0.25}, p) == doctest::Approx(theta_sequence({0.5, 0.25}, p + 4)).epsilon(1e-12));
  }
}

TEST_CASE("pole profile follows its theta subsequence") {
  // nu = 1/4, p = 4k: theta = 0 along the whole subsequence
  const SpindleParams params{0.5, 0.25};
  Eigen::ArrayXd y(3);
  y << 0.5, 1.0, 3.0;
  double previous = INFINITY;
  for (int p : {40, 80, 160, 320}) {
    CHECK(theta_sequence(params, p) == doctest::Approx(0.0).scale(1.0));
    const ScaledProfile profile = scaled_profile(params, p, y, Variant::pole);
    double gap = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      gap = std::max(gap, std::abs(profile.value(i) - pole_limit_profile(params, 0.0, y(i))));
    }
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK_THROWS_AS(pole_limit_profile(params, 0.6, 1.0), DomainError);
  CHECK_THROWS_AS(pole_limit_profile({0.5, 1.0}, 0.0, 1.0), DomainError);
}
