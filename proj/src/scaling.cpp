#include "bergman/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bergman/kernel.hpp"
#include "bergman/specfn.hpp"

namespace bergman {

double scaled_radius(double a, int p, double y) {
  if (!(y >= 0.0)) throw DomainError("scaled profile: y must be nonnegative");
  if (y == 0.0) return 0.0;
  return std::exp(std::log(a * y / p) / (2.0 * a));
}

ScaledProfile scaled_profile(const SpindleParams& params, int p, const Eigen::ArrayXd& y_grid,
                             Variant variant) {
  validate_spindle(params, variant == Variant::pole);
  ScaledProfile profile;
  profile.p = p;
  profile.y = y_grid;
  profile.value.resize(y_grid.size());
  profile.divergent = Eigen::Array<bool, Eigen::Dynamic, 1>::Constant(y_grid.size(), false);
  for (Eigen::Index i = 0; i < y_grid.size(); ++i) {
    const double r = scaled_radius(params.a, p, y_grid(i));
    try {
      const double kernel = variant == Variant::flux ? spindle_kernel(params, p, r)
                                                     : pole_kernel(params, p, r);
      profile.value(i) = kernel / p;
    } catch (const PunctureDivergence&) {
      profile.value(i) = std::numeric_limits<double>::infinity();
      profile.divergent(i) = true;
    }
  }
  return profile;
}

namespace {

// scale * (c y)^{shift/a} e^{-c y} E_{1/a, 1+shift/a}((c y)^{1/a}), log domain.
double mittag_leffler_profile(double a, double shift, double scale, double c, double y) {
  const double x = c * y;
  const MLParams ml{1.0 / a, 1.0 + shift / a};
  if (x == 0.0) {
    if (std::abs(shift) <= 1e-12) return scale / std::exp(log_gamma(ml.s));
    if (shift > 0.0) return 0.0;
    throw DomainError("limit profile: y = 0 is outside the domain when the exponent is negative");
  }
  const double log_x = std::log(x);
  const double log_value =
      std::log(scale) + shift / a * log_x - x + log_mittag_leffler(ml, std::exp(log_x / a));
  return std::exp(log_value);
}

}  // namespace

double limit_profile(const SpindleParams& params, double y) {
  validate_spindle(params);
  if (!(y >= 0.0)) throw DomainError("limit_profile: y must be nonnegative");
  const double shift = static_cast<double>(flux_lowest_index(params)) - params.nu;
  return mittag_leffler_profile(params.a, shift, 1.0 / params.a, 1.0, y);
}

double pole_limit_profile(const SpindleParams& params, double theta, double y) {
  if (!(params.a > 0.0 && params.a <= 1.0)) {
    throw DomainError("pole_limit_profile: cone order a must satisfy 0 < a <= 1");
  }
  if (!(params.nu >= 0.0 && params.nu < 1.0)) {
    throw DomainError("pole_limit_profile: requires 0 <= nu < 1");
  }
  if (!(theta >= -params.a && theta <= 1.0 - params.a)) {
    throw DomainError("pole_limit_profile: theta must lie in [-a, 1-a]");
  }
  if (!(y >= 0.0)) throw DomainError("pole_limit_profile: y must be nonnegative");
  const double c = 1.0 - params.nu;
  return mittag_leffler_profile(params.a, theta, c / params.a, c, y);
}

double theta_sequence(const SpindleParams& params, int p) {
  validate_spindle(params, true);
  return static_cast<double>(pole_lowest_index(params, p)) - p * params.nu;
}

Eigen::ArrayXd linear_grid(double lo, double hi, int intervals) {
  if (intervals < 1 || !(lo < hi)) throw DomainError("grid: requires min < max and count >= 1");
  Eigen::ArrayXd grid(intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    grid(i) = lo + (hi - lo) * static_cast<double>(i) / intervals;
  }
  grid(intervals) = hi;
  return grid;
}

Eigen::ArrayXd geometric_grid(double lo, double hi, int intervals) {
  if (!(lo > 0.0)) throw DomainError("geometric grid: requires min > 0");
  if (intervals < 1 || !(lo < hi)) throw DomainError("grid: requires min < max and count >= 1");
  Eigen::ArrayXd grid(intervals + 1);
  const double ratio = std::log(hi / lo);
  for (int i = 0; i <= intervals; ++i) {
    grid(i) = lo * std::exp(ratio * static_cast<double>(i) / intervals);
  }
  grid(0) = lo;
  grid(intervals) = hi;
  return grid;
}

Eigen::ArrayXd scaling_grid(double lo, double hi, int intervals) {
  const Eigen::ArrayXd geometric = geometric_grid(lo, hi, intervals);
  std::vector<double> points(geometric.begin(), geometric.end());
  const double refine_lo = std::max(lo, 0.5);
  const double refine_hi = std::min(hi, 2.0);
  if (refine_lo < refine_hi) {
    const Eigen::ArrayXd linear = linear_grid(refine_lo, refine_hi, std::max(4, intervals / 4));
    points.insert(points.end(), linear.begin(), linear.end());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end(),
                           [](double x, double y) { return std::abs(x - y) <= 1e-12 * y; }),
               points.end());
  return Eigen::Map<Eigen::ArrayXd>(points.data(), static_cast<Eigen::Index>(points.size()));
}

double max_limit_gap(const SpindleParams& params, int p, const Eigen::ArrayXd& y_grid) {
  const ScaledProfile profile = scaled_profile(params, p, y_grid, Variant::flux);
  double gap = 0.0;
  for (Eigen::Index i = 0; i < y_grid.size(); ++i) {
    gap = std::max(gap, std::abs(profile.value(i) - limit_profile(params, y_grid(i))));
  }
  return gap;
}

}  // namespace bergman
