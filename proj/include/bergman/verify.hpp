#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "bergman/kernel.hpp"
#include "bergman/models.hpp"

namespace bergman {

/// Outcome of an existential-constant check: the empirical sup of
/// deviation / bound-shape and its stability under grid refinement.
/// pass <=> fitted_constant is finite and stability_ratio is in [0.5, 2].
struct BoundReport {
  std::string model;
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  std::string grid;
  double fitted_constant = 0.0;
  double stability_ratio = 0.0;
  bool pass = false;

  bool operator==(const BoundReport&) const = default;
};

/// Outcome of the remaining checks, with named metrics.
struct CheckReport {
  std::string model;
  std::string suite;
  std::string grid;
  std::map<std::string, double> metrics;
  bool pass = false;

  bool operator==(const CheckReport&) const = default;
};

/// Radius grid for sweeps; `intervals` subintervals.
struct RadialGrid {
  double lo = 0.05;
  double hi = 1.0;
  int intervals = 40;
  bool geometric = true;

  Eigen::ArrayXd points() const;
  RadialGrid refined(int factor) const;
  std::string describe() const;
};

/// Which puncture of the spindle the distance is measured from. At infinity
/// the kernel is evaluated at 1/r through the explicit formula.
enum class Chart { origin, infinity };

struct BoundCheckOptions {
  double c0 = 1.0;        // trial constant in the regime p > c0 r^{-delta}
  int refinement = 4;
  Chart chart = Chart::origin;
};

/// |P_p(r)/p * omega/c1 - 1|. Canonical-bundle models use c1/omega = -R/(2 pi).
double deviation(const RadialModel& model, int p, double r);
double deviation(const KernelEvaluator& kernel, int p, double r);

/// sup over admissible (p, r) of
/// deviation / (p^{-1/8} r^{-alpha} + p^{-3/8} r^{-beta}).
BoundReport bound_check(const RadialModel& model, const std::vector<int>& p_set,
                        const RadialGrid& grid, const BoundCheckOptions& options = {});

/// sup of deviation / p^{-(1-eta)/8} over radii just inside
/// r > (c0/p)^{eta/delta} (a fixed compact [R/2, R] once that bound leaves
/// the chart of radius R).
BoundReport corollary_check(const RadialModel& model, double eta, const std::vector<int>& p_set,
                            const BoundCheckOptions& options = {}, int samples = 8);

/// Gamma(r+s)/Gamma(s) <= e^{1/12} (r+s)^r on the grid, and
/// |Gamma(r+s)/(Gamma(s) s^r) - 1| <= 1e-3 at s = limit_s.
CheckReport gamma_lemma_check(const Eigen::ArrayXd& r_grid, const Eigen::ArrayXd& s_grid,
                              double limit_s = 1e6);

/// |P_p(r)/p - c1/omega(r)| strictly decreasing along p_set.
CheckReport b0_check(const RadialModel& model, double r, const std::vector<int>& p_set);

/// Two-term expansion P_p = (2/pi) p - (4/pi) on the Poincare disc: the
/// residual at p is below 1e-6 p on every radius and shrinks at least tenfold
/// from p_lo to p_hi. Also reports the fitted subleading coefficient.
CheckReport two_term_check(const RadialModel& model, int p, const std::vector<double>& radii,
                      int p_lo = 40, int p_hi = 80);

/// Powers of two 2^lo .. 2^hi.
std::vector<int> doubling_set(int lo_exponent, int hi_exponent);

}  // namespace bergman
