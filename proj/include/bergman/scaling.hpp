#pragma once

#include <Eigen/Dense>

#include "bergman/models.hpp"

namespace bergman {

enum class Variant { flux, pole };

/// Samples of F_p(y) = P_p((a y / p)^{1/(2a)}) / p.
struct ScaledProfile {
  int p = 0;
  Eigen::ArrayXd y;
  Eigen::ArrayXd value;          // +inf where the puncture value diverges
  Eigen::Array<bool, Eigen::Dynamic, 1> divergent;
};

/// Radius corresponding to the rescaled coordinate y: r^{2a} = a y / p.
double scaled_radius(double a, int p, double y);

ScaledProfile scaled_profile(const SpindleParams& params, int p, const Eigen::ArrayXd& y_grid,
                             Variant variant);

/// (1/a) y^{(j0-nu)/a} e^{-y} E_{1/a, 1+(j0-nu)/a}(y^{1/a}), the p -> infinity
/// limit of F_p for the flux spindle.
double limit_profile(const SpindleParams& params, double y);

/// ((1-nu)/a) ((1-nu) y)^{theta/a} e^{-(1-nu) y} E_{1/a, 1+theta/a}(((1-nu) y)^{1/a}),
/// the limit of F_{p_k} along subsequences with j_{p_k} - p_k nu -> theta.
/// At y = 0 the same rules as limit_profile apply.
double pole_limit_profile(const SpindleParams& params, double theta, double y);

/// theta_p = j_p - p nu, which lies in (-a, 1-a].
double theta_sequence(const SpindleParams& params, int p);

/// Evenly spaced grid with `intervals` subintervals (intervals + 1 points).
Eigen::ArrayXd linear_grid(double lo, double hi, int intervals);
/// Geometrically spaced grid, lo > 0.
Eigen::ArrayXd geometric_grid(double lo, double hi, int intervals);
/// Geometric grid on [lo, hi] merged with a linear refinement on [0.5, 2].
Eigen::ArrayXd scaling_grid(double lo, double hi, int intervals);

/// max_i |F_p(y_i) - limit(y_i)| for the flux spindle.
double max_limit_gap(const SpindleParams& params, int p, const Eigen::ArrayXd& y_grid);

}  // namespace bergman
