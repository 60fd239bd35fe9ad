#pragma once

// Independent reference values for the tests. Nothing here calls the library.

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;

inline double log_gamma(double x) {
  return static_cast<double>(boost::multiprecision::log(boost::math::tgamma(Big(x))));
}

inline double log_beta(double x, double y) {
  const Big gx = boost::math::tgamma(Big(x));
  const Big gy = boost::math::tgamma(Big(y));
  const Big gxy = boost::math::tgamma(Big(x) + Big(y));
  return static_cast<double>(boost::multiprecision::log(gx * gy / gxy));
}

// B(x, y) = int_0^1 t^{x-1} (1-t)^{y-1} dt by tanh-sinh quadrature.
inline double beta_quadrature(double x, double y) {
  boost::math::quadrature::tanh_sinh<double> rule;
  return rule.integrate(
      [x, y](double t, double tc) {
        const double u = t <= 0.5 ? t : 1.0 - tc;
        const double v = t <= 0.5 ? 1.0 - t : tc;
        return std::pow(u, x - 1.0) * std::pow(v, y - 1.0);
      },
      0.0, 1.0);
}

// E_{r,s}(z) = sum_j z^j / Gamma(r j + s), summed in 50-digit arithmetic.
inline Big mittag_leffler(double r, double s, double z) {
  Big sum = 0;
  Big power = 1;
  const Big zz = z;
  for (int j = 0; j < 100000; ++j) {
    const Big term = power / boost::math::tgamma(Big(r) * j + Big(s));
    sum += term;
    if (j > 2 && term < sum * Big("1e-40") && Big(r) * j + s > z) break;
    power *= zz;
  }
  return sum;
}

// sum_{j=0}^{n} binom(n, j) x^j = (1 + x)^n, with each term computed
// separately in 50 digits; used as a brute-force Fubini-Study oracle.
inline Big binomial_sum(int n, double x) {
  Big sum = 0;
  Big coefficient = 1;
  Big power = 1;
  for (int j = 0; j <= n; ++j) {
    sum += coefficient * power;
    coefficient = coefficient * (n - j) / (j + 1);
    power *= Big(x);
  }
  return sum;
}

}  // namespace oracle
