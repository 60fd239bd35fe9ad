#include "bergman/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bergman/scaling.hpp"
#include "bergman/specfn.hpp"

namespace bergman {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string join_p(const std::vector<int>& p_set) {
  std::ostringstream out;
  out << "p={";
  for (std::size_t i = 0; i < p_set.size(); ++i) out << (i ? "," : "") << p_set[i];
  out << "}";
  return out.str();
}

bool supports_infinity_chart(const RadialModel& model) {
  return model.kind == ModelKind::spindle || model.kind == ModelKind::fubini_study;
}

double ratio_of(double refined, double coarse) {
  if (coarse == 0.0) return refined == 0.0 ? 1.0 : kInf;
  return refined / coarse;
}

BoundReport finish(const RadialModel& model, std::string grid, double coarse, double refined) {
  BoundReport report;
  report.model = model.name;
  report.alpha = model.profile.alpha;
  report.beta = model.profile.beta;
  report.delta = model.profile.delta;
  report.grid = std::move(grid);
  report.fitted_constant = coarse;
  report.stability_ratio = ratio_of(refined, coarse);
  report.pass = std::isfinite(report.fitted_constant) && report.stability_ratio >= 0.5 &&
                report.stability_ratio <= 2.0;
  return report;
}

}  // namespace

Eigen::ArrayXd RadialGrid::points() const {
  return geometric ? geometric_grid(lo, hi, intervals) : linear_grid(lo, hi, intervals);
}

RadialGrid RadialGrid::refined(int factor) const {
  RadialGrid grid = *this;
  grid.intervals *= factor;
  return grid;
}

std::string RadialGrid::describe() const {
  std::ostringstream out;
  out.precision(17);
  out << (geometric ? "geo" : "lin") << "[" << lo << "," << hi << "]x" << intervals;
  return out.str();
}

namespace {

void require_interior(const RadialModel& model, double r) {
  if (!(r > model.r_min) || !(r < model.r_max)) {
    throw DomainError("deviation: r must lie strictly inside the model domain (not at a puncture)");
  }
}

}  // namespace

double deviation(const KernelEvaluator& kernel, int p, double r) {
  const RadialModel& model = kernel.model();
  require_interior(model, r);
  return std::abs(kernel(r) / (p * model.c1_over_omega(r)) - 1.0);
}

double deviation(const RadialModel& model, int p, double r) {
  require_interior(model, r);
  const KernelEvaluator kernel(model, p, r);
  return deviation(kernel, p, r);
}

BoundReport bound_check(const RadialModel& model, const std::vector<int>& p_set,
                        const RadialGrid& grid, const BoundCheckOptions& options) {
  if (p_set.empty()) throw DomainError("bound_check: empty p set");
  if (options.chart == Chart::infinity && !supports_infinity_chart(model)) {
    throw DomainError("bound_check: the chart at infinity needs an explicit kernel formula");
  }
  const SingularityProfile& prof = model.profile;
  const RadialGrid fine = grid.refined(options.refinement);
  const Eigen::ArrayXd coarse_r = grid.points();
  const Eigen::ArrayXd fine_r = fine.points();

  double coarse_sup = 0.0;
  double fine_sup = 0.0;
  long admissible = 0;
  for (int p : p_set) {
    const double r_eval = options.chart == Chart::origin ? grid.hi : 1.0 / grid.lo;
    const KernelEvaluator kernel(model, p, r_eval);
    auto sweep = [&](const Eigen::ArrayXd& radii, double& sup, bool count) {
      for (double r : radii) {
        if (!(p > options.c0 * std::pow(r, -prof.delta))) continue;
        if (count) ++admissible;
        const double at = options.chart == Chart::origin ? r : 1.0 / r;
        const double shape =
            std::pow(p, -0.125) * std::pow(r, -prof.alpha) + std::pow(p, -0.375) * std::pow(r, -prof.beta);
        sup = std::max(sup, deviation(kernel, p, at) / shape);
      }
    };
    sweep(coarse_r, coarse_sup, true);
    sweep(fine_r, fine_sup, false);
  }
  if (admissible == 0) {
    throw DomainError("bound_check: empty admissible set (no p > C0 r^-delta on the grid)");
  }
  std::ostringstream desc;
  desc.precision(17);
  desc << join_p(p_set) << "; r=" << grid.describe() << "; refined x" << options.refinement
       << "; C0=" << options.c0 << "; chart=" << (options.chart == Chart::origin ? "0" : "inf");
  return finish(model, desc.str(), coarse_sup, fine_sup);
}

BoundReport corollary_check(const RadialModel& model, double eta, const std::vector<int>& p_set,
                            const BoundCheckOptions& options, int samples) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("corollary_check: eta must lie in [0, 1]");
  if (samples < 2) throw DomainError("corollary_check: need at least two samples");
  const double chart = model.chart_radius;
  double coarse_sup = 0.0;
  double fine_sup = 0.0;
  long admissible = 0;
  for (int p : p_set) {
    if (!(p > options.c0)) continue;
    const double boundary = std::pow(options.c0 / p, eta / model.profile.delta);
    RadialGrid grid;
    if (boundary >= chart) {
      grid = {0.5 * chart, chart, samples, true};
    } else {
      grid = {boundary * (1.0 + 1e-3), std::min(chart, 2.0 * boundary), samples, true};
      if (!(grid.lo < grid.hi)) grid = {0.5 * chart, chart, samples, true};
    }
    const KernelEvaluator kernel(model, p, chart);
    const double scale = std::pow(p, -(1.0 - eta) / 8.0);
    for (double r : grid.points()) {
      ++admissible;
      coarse_sup = std::max(coarse_sup, deviation(kernel, p, r) / scale);
    }
    for (double r : grid.refined(options.refinement).points()) {
      fine_sup = std::max(fine_sup, deviation(kernel, p, r) / scale);
    }
  }
  if (admissible == 0) throw DomainError("corollary_check: empty admissible set (need p > C0)");
  std::ostringstream desc;
  desc.precision(17);
  desc << join_p(p_set) << "; eta=" << eta << "; r in ((C0/p)^(eta/delta), min(R, 2x)] x"
       << samples << "; refined x" << options.refinement << "; C0=" << options.c0
       << "; R=" << chart;
  return finish(model, desc.str(), coarse_sup, fine_sup);
}

CheckReport gamma_lemma_check(const Eigen::ArrayXd& r_grid, const Eigen::ArrayXd& s_grid,
                              double limit_s) {
  CheckReport report;
  report.model = "gamma";
  report.suite = "gamma-lemma";
  std::ostringstream desc;
  desc.precision(17);
  desc << "r=[" << r_grid.minCoeff() << "," << r_grid.maxCoeff() << "]x" << r_grid.size()
       << "; s=[" << s_grid.minCoeff() << "," << s_grid.maxCoeff() << "]x" << s_grid.size()
       << "; limit s=" << limit_s;
  report.grid = desc.str();

  const double log_bound_const = 1.0 / 12.0;
  long violations = 0;
  double max_excess = -kInf;
  for (double r : r_grid) {
    if (!(r >= 0.0)) throw DomainError("gamma_lemma_check: r must be nonnegative");
    for (double s : s_grid) {
      if (!(s >= 1.0)) throw DomainError("gamma_lemma_check: s must be at least 1");
      const double lhs = log_gamma(r + s) - log_gamma(s);
      const double rhs = log_bound_const + r * std::log(r + s);
      max_excess = std::max(max_excess, lhs - rhs);
      if (lhs > rhs + 1e-12 * std::max(1.0, std::abs(rhs))) ++violations;
    }
  }
  double limit_deviation = 0.0;
  for (double r : r_grid) {
    const double log_ratio = log_gamma(r + limit_s) - log_gamma(limit_s) - r * std::log(limit_s);
    limit_deviation = std::max(limit_deviation, std::abs(std::expm1(log_ratio)));
  }
  report.metrics["points"] = static_cast<double>(r_grid.size() * s_grid.size());
  report.metrics["violations"] = static_cast<double>(violations);
  report.metrics["max_log_excess"] = max_excess;
  report.metrics["limit_max_deviation"] = limit_deviation;
  report.pass = violations == 0 && limit_deviation <= 1e-3;
  return report;
}

CheckReport b0_check(const RadialModel& model, double r, const std::vector<int>& p_set) {
  if (p_set.size() < 2) throw DomainError("b0_check: need at least two powers");
  CheckReport report;
  report.model = model.name;
  report.suite = "b0";
  std::ostringstream desc;
  desc.precision(17);
  desc << join_p(p_set) << "; r=" << r;
  report.grid = desc.str();
  bool decreasing = true;
  double previous = kInf;
  for (int p : p_set) {
    const KernelEvaluator kernel(model, p, r);
    const double gap = std::abs(kernel(r) / p - model.c1_over_omega(r));
    report.metrics["gap_p" + std::to_string(p)] = gap;
    if (!(gap < previous)) decreasing = false;
    previous = gap;
  }
  report.pass = decreasing;
  return report;
}

CheckReport two_term_check(const RadialModel& model, int p, const std::vector<double>& radii, int p_lo,
                      int p_hi) {
  if (radii.empty()) throw DomainError("two_term_check: no radii");
  const double lead = 2.0 / std::numbers::pi;
  const double sub = -4.0 / std::numbers::pi;
  const double r_max = *std::max_element(radii.begin(), radii.end());
  auto residuals = [&](int power) {
    const KernelEvaluator kernel(model, power, r_max);
    std::vector<double> out;
    for (double r : radii) out.push_back(kernel(r) - (lead * power + sub));
    return out;
  };
  const std::vector<double> at_p = residuals(p);
  const std::vector<double> at_lo = residuals(p_lo);
  const std::vector<double> at_hi = residuals(p_hi);

  double max_relative = 0.0;
  double min_shrink = kInf;
  double fitted_sub = 0.0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    max_relative = std::max(max_relative, std::abs(at_p[i]) / p);
    min_shrink = std::min(min_shrink, std::abs(at_lo[i]) / std::abs(at_hi[i]));
    fitted_sub += (at_p[i] + sub) / static_cast<double>(radii.size());
  }
  CheckReport report;
  report.model = model.name;
  report.suite = "two-term";
  std::ostringstream desc;
  desc.precision(17);
  desc << "p=" << p << "; shrink " << p_lo << "->" << p_hi << "; r={";
  for (std::size_t i = 0; i < radii.size(); ++i) desc << (i ? "," : "") << radii[i];
  desc << "}";
  report.grid = desc.str();
  report.metrics["expected_subleading"] = sub;
  report.metrics["fitted_subleading"] = fitted_sub;
  report.metrics["max_residual_over_p"] = max_relative;
  report.metrics["min_residual_shrink"] = min_shrink;
  report.pass = max_relative < 1e-6 && min_shrink >= 10.0;
  return report;
}

std::vector<int> doubling_set(int lo_exponent, int hi_exponent) {
  std::vector<int> p_set;
  for (int e = lo_exponent; e <= hi_exponent; ++e) p_set.push_back(1 << e);
  return p_set;
}

}  // namespace bergman
