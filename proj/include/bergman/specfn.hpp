#pragma once

#include "bergman/errors.hpp"

namespace bergman {

/// Parameters (r, s) of the two-parameter Mittag-Leffler function
/// E_{r,s}(zeta) = sum_j zeta^j / Gamma(r j + s).
struct MLParams {
  double r = 1.0;
  double s = 1.0;
};

/// ln Gamma(x) for x > 0. Relative error below 1e-13 on [1e-3, 1e6]
/// (absolute error near the zeros at x = 1 and x = 2).
double log_gamma(double x);

/// ln B(x, y). Large arguments use Stirling corrections so that the
/// leading terms cancel analytically instead of numerically.
double log_beta(double x, double y);

/// ln E_{r,s}(zeta) by direct summation in the log domain. Returns -inf when
/// the sum is zero (zeta = 0 and s = 0).
double log_mittag_leffler(const MLParams& params, double zeta);

/// E_{r,s}(zeta) for zeta >= 0. Throws ConvergenceError if the series needs
/// more than 10^6 terms.
double mittag_leffler(const MLParams& params, double zeta);

/// Stable ln(exp(a) + exp(b)).
double log_add_exp(double a, double b);

}  // namespace bergman
