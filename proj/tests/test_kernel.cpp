#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "bergman/kernel.hpp"
#include "bergman/specfn.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bergman;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

// ln ||z^j||^2 on the flux spindle: B((j - nu)/a + 1, (p - j)/a + 1).
double spindle_log_norm(double a, double nu, int p, long j) {
  return oracle::log_beta((j - nu) / a + 1.0, (p - j) / a + 1.0);
}

// Petersson kernel of K^p on the punctured disc summed by hand in 50 digits:
// ||z^j||^2 = 2 pi 2^{2p-2} Gamma(2p-1) / (2j+2p)^{2p-1}, j > -p.
double disc_kernel_by_hand(int p, double r, int terms) {
  using oracle::Big;
  const Big br = r;
  const Big weight = boost::multiprecision::pow(2 * br * boost::multiprecision::log(1 / br), 2 * p);
  const Big norm_scale = 2 * boost::math::constants::pi<Big>() *
                         boost::multiprecision::pow(Big(2), 2 * p - 2) * boost::math::tgamma(Big(2 * p - 1));
  Big sum = 0;
  for (int j = 1 - p; j < 1 - p + terms; ++j) {
    sum += boost::multiprecision::pow(br, 2 * j) *
           boost::multiprecision::pow(Big(2 * j + 2 * p), 2 * p - 1);
  }
  return static_cast<double>(sum * weight / norm_scale);
}

}  // namespace

TEST_CASE("snapped floor") {
  CHECK(snapped_floor(2.9999999999999996) == 3);
  CHECK(snapped_floor(3.0000000000000004) == 3);
  CHECK(snapped_floor(2.5) == 2);
  CHECK(snapped_floor(-0.5) == -1);
  CHECK(snapped_floor(0.1 * 3 * 10 - 3) == 0);
}

TEST_CASE("lowest indices") {
  CHECK(flux_lowest_index({0.5, 0.0}) == 0);
  CHECK(flux_lowest_index({0.5, 0.2}) == 0);
  CHECK(flux_lowest_index({0.5, 0.7}) == 1);
  CHECK(flux_lowest_index({0.5, 2.5}) == 3);
  CHECK(flux_lowest_index({0.5, -3.0}) == 0);
  CHECK(pole_lowest_index({0.5, 0.3}, 10) == 3);
  CHECK(pole_lowest_index({1.0, 1.0}, 7) == 7);
}

TEST_CASE("puncture values") {
  for (int p = 1; p <= 200; ++p) {
    CHECK(rel(spindle_kernel({0.5, 0.0}, p, 0.0), 2.0 * p + 1.0) < 1e-12);
    CHECK(rel(spindle_kernel({0.5, 1.0}, p, 0.0), 2.0 * p - 1.0) < 1e-12);
    for (int s = 1; s <= 5; ++s) CHECK(rel(spindle_kernel_closed(s, p, 0.0), s * p + 1.0) < 1e-12);
  }
  CHECK(spindle_kernel({0.5, 0.7}, 10, 0.0) == 0.0);
  CHECK(spindle_kernel({0.5, 0.5}, 10, 0.0) == 0.0);
  CHECK_THROWS_AS(spindle_kernel({0.5, 0.2}, 10, 0.0), PunctureDivergence);
}

TEST_CASE("Beta sum against roots of unity") {
  double worst = 0.0;
  for (int s = 1; s <= 5; ++s) {
    for (int p : {1, 10, 50, 200}) {
      for (int i = 0; i < 50; ++i) {
        const double r = 0.01 * std::pow(1000.0, i / 49.0);
        worst = std::max(worst, rel(spindle_kernel({1.0 / s, 0.0}, p, r), spindle_kernel_closed(s, p, r)));
      }
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("Fubini-Study collapse") {
  for (int p : {1, 7, 100, 1000}) {
    for (double r : {1e-8, 0.3, 1.0, 4.0, 1e5}) {
      CHECK(rel(spindle_kernel({1.0, 0.0}, p, r), p + 1.0) < 1e-12);
    }
  }
  // the same identity term by term: (p+1) sum binom(p,j) x^j / (1+x)^p
  for (double x : {0.2, 3.0}) {
    const double ratio = static_cast<double>(oracle::binomial_sum(40, x) / boost::multiprecision::pow(oracle::Big(1 + x), 40));
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("quadrature norms match Beta values on the spindle") {
  for (auto [a, nu, p] : {std::tuple{0.5, 0.25, 12}, {0.7, -0.3, 20}, {1.0 / 3.0, 0.0, 6}, {1.0, 0.9, 3}}) {
    const RadialModel model = spindle_model({a, nu});
    const MonomialBasis basis = radial_norms(model, p, -2, p + 2);
    CHECK(basis.j_min == flux_lowest_index({a, nu}));
    CHECK(basis.j_max == p);
    CHECK_FALSE(basis.excluded.empty());
    for (long j = basis.j_min; j <= basis.j_max; ++j) {
      CAPTURE(a);
      CAPTURE(j);
      CHECK(rel(std::exp(basis.log_norm(j)), std::exp(spindle_log_norm(a, nu, p, j))) < 1e-9);
    }
  }
}

TEST_CASE("admissible index sets") {
  const IndexRange spindle = admissible_indices(spindle_model({0.5, 0.7}), 9);
  CHECK(spindle.bounded);
  CHECK(spindle.lo == 1);
  CHECK(spindle.hi == 9);
  const IndexRange disc = admissible_indices(poincare_disc_model(), 5);
  CHECK_FALSE(disc.bounded);
  CHECK(disc.lo == -4);
  CHECK(norm_is_finite(poincare_disc_model(), 5, -4));
  CHECK_FALSE(norm_is_finite(poincare_disc_model(), 5, -5));
  const IndexRange pole = admissible_indices(spindle_pole_model({0.5, 0.3}), 10);
  CHECK(pole.lo == pole_lowest_index({0.5, 0.3}, 10));
}

TEST_CASE("quadrature engine reproduces the closed forms") {
  for (auto params : {SpindleParams{0.5, 0.25}, {1.0 / 3.0, 0.0}, {0.8, -0.4}}) {
    const RadialModel model = spindle_model(params);
    for (int p : {1, 12, 40}) {
      const MonomialBasis basis = radial_basis(model, p, 3.0);
      for (double r : {0.05, 0.6, 3.0}) {
        CHECK(rel(radial_kernel(basis, model, p, r), spindle_kernel(params, p, r)) < 1e-9);
      }
    }
  }
  const SpindleParams pole{0.5, 0.3};
  const RadialModel model = spindle_pole_model(pole);
  for (int p : {1, 12, 40}) {
    const MonomialBasis basis = radial_basis(model, p, 2.0);
    for (double r : {0.05, 0.6, 2.0}) {
      CHECK(rel(radial_kernel(basis, model, p, r), pole_kernel(pole, p, r)) < 1e-9);
    }
  }
  const RadialModel fs = fubini_study_model();
  const MonomialBasis basis = radial_basis(fs, 30, 5.0);
  for (double r : {0.0, 0.5, 5.0}) CHECK(rel(radial_kernel(basis, fs, 30, r), 31.0) < 1e-9);
}

TEST_CASE("pole kernel with a full pole is identically one") {
  for (int p : {1, 5, 80}) {
    for (double r : {0.0, 0.1, 1.0, 7.0}) CHECK(pole_kernel({0.5, 1.0}, p, r) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("flat model kernel equals p") {
  const RadialModel flat = flat_model();
  for (int p : {1, 4, 30}) {
    const MonomialBasis basis = radial_basis(flat, p, 1.0);
    for (double r : {0.0, 0.3, 1.0}) CHECK(rel(radial_kernel(basis, flat, p, r), p) < 1e-9);
  }
}

TEST_CASE("Petersson kernel on the punctured disc against a hand sum") {
  const RadialModel disc = poincare_disc_model();
  for (int p : {2, 10, 60}) {
    for (double r : {0.05, 0.2, 0.3, 0.5}) {
      CAPTURE(p);
      CAPTURE(r);
      const MonomialBasis basis = radial_basis(disc, p, r);
      CHECK(rel(radial_kernel(basis, disc, p, r), disc_kernel_by_hand(p, r, 3000)) < 1e-9);
    }
  }
}

TEST_CASE("punctured disc: leading and subleading terms") {
  // P_p = (2p - 1)/pi up to an exponentially small remainder
  const RadialModel disc = poincare_disc_model();
  for (double r : {0.2, 0.3, 0.5}) {
    const MonomialBasis basis = radial_basis(disc, 60, r);
    CHECK(std::abs(radial_kernel(basis, disc, 60, r) - 119.0 / std::numbers::pi) < 1e-9);
  }
  const MonomialBasis basis = radial_basis(disc, 60, 0.3);
  const double rho = disc.density(0.3);
  CHECK(petersson_kernel(basis, disc, 60, 0.3) ==
        doctest::Approx(radial_kernel(basis, disc, 60, 0.3) * std::pow(rho, 60)).epsilon(1e-12));
}

TEST_CASE("trichotomy at the puncture") {
  for (double nu : {-0.5, 0.2, 0.7, 1.3}) {
    const SpindleParams params{0.5, nu};
    const double expected = 2.0 * (flux_lowest_index(params) - nu);
    const double r1 = 1e-8;
    const double r2 = 1e-7;
    const double slope = std::log(spindle_kernel(params, 10, r2) / spindle_kernel(params, 10, r1)) / std::log(r2 / r1);
    CAPTURE(nu);
    CHECK(std::abs(slope - expected) < 1e-3);
  }
}

TEST_CASE("extremal property of the kernel") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal;
  const RadialModel models[] = {spindle_model({0.5, 0.25}), spindle_pole_model({0.5, 0.3}),
                                poincare_disc_model(), fubini_study_model(), log_singular_demo_model()};
  for (const RadialModel& model : models) {
    const int p = 12;
    const double r = 0.4;
    const MonomialBasis basis = radial_basis(model, p, r);
    const double kernel = radial_kernel(basis, model, p, r);
    for (int trial = 0; trial < 100; ++trial) {
      Eigen::VectorXcd c(basis.size());
      for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = {normal(rng), normal(rng)};
      c.normalize();
      CHECK(section_density(basis, model, p, r, c) <= kernel * (1.0 + 1e-9));
    }
    const Eigen::VectorXd values = orthonormal_values(basis, model, p, r);
    const Eigen::VectorXcd extremal = values.cast<std::complex<double>>().normalized();
    CAPTURE(model.name);
    CHECK(rel(section_density(basis, model, p, r, extremal), kernel) < 1e-9);
  }
}

TEST_CASE("kernel profile marks divergent puncture values") {
  const Eigen::ArrayXd radius = Eigen::ArrayXd::LinSpaced(3, 0.0, 1.0);
  const KernelProfile profile = kernel_profile(spindle_model({0.5, 0.2}), 5, radius);
  CHECK(std::isinf(profile.value(0)));
  CHECK(std::isfinite(profile.value(1)));
}

TEST_CASE("kernel rejects invalid input") {
  CHECK_THROWS_AS(spindle_kernel({0.5, 0.0}, 0, 1.0), DomainError);
  CHECK_THROWS_AS(spindle_kernel({0.5, 0.0}, 3, -1.0), DomainError);
  CHECK_THROWS_AS(spindle_kernel_closed(0, 3, 1.0), DomainError);
  CHECK_THROWS_AS(pole_kernel({0.5, 0.0}, 3, 1.0), DomainError);
}

TEST_CASE("kernel values at small parameters") {
  CHECK(spindle_kernel({0.5, 0.0}, 4, 1.0) == doctest::Approx(4.5).epsilon(1e-13));
  CHECK(spindle_kernel_closed(2, 4, 1.0) == doctest::Approx(4.5).epsilon(1e-13));
  CHECK(spindle_kernel_closed(3, 5, 0.0) == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(spindle_kernel({0.5, 0.0}, 10, 0.0) == doctest::Approx(21.0).epsilon(1e-14));
  for (double r : {0.0, 0.4, 3.0}) CHECK(spindle_kernel_closed(1, 9, r) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(rel(spindle_kernel_closed(2, 40, 0.8), spindle_kernel({0.5, 0.0}, 40, 0.8)) < 1e-10);
}
