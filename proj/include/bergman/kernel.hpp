#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "bergman/errors.hpp"
#include "bergman/models.hpp"

namespace bergman {

/// Sampled (radius, P_p) pairs for one tensor power.
struct KernelProfile {
  int p = 0;
  Eigen::ArrayXd radius;
  Eigen::ArrayXd value;  // +inf marks a divergent puncture value
};

/// floor(x), treating values within a few ulps of an integer as that integer
/// so that products such as p * nu with rational nu land on the right side.
long snapped_floor(double x);

/// j0 = max{floor(nu - a) + 1, 0}: lowest monomial with finite norm in the
/// flux spindle.
long flux_lowest_index(const SpindleParams& params);

/// j_p = floor(p nu - a) + 1 for the logarithmic-pole spindle.
long pole_lowest_index(const SpindleParams& params, int p);

/// Bergman kernel of the spindle with cone order a and flux nu, as a finite
/// sum of Beta reciprocals evaluated in the log domain. At r = 0 returns the
/// limit (p - nu)/a + 1 when j0 = nu, zero when j0 > nu, and throws
/// PunctureDivergence when j0 < nu.
double spindle_kernel(const SpindleParams& params, int p, double r);

/// Roots-of-unity closed form for a = 1/s, nu = 0:
/// (p + 1/s) (1 + sum_{l=1}^{s-1} ((1 + e^{2 pi i l/s} y) / (1 + y))^{ps}), y = r^{2/s}.
double spindle_kernel_closed(int s, int p, double r);

/// Bergman kernel of the spindle whose bundle weight carries a logarithmic
/// pole of Lelong number nu at the origin. Identically 1 when nu = 1.
double pole_kernel(const SpindleParams& params, int p, double r);

/// Inclusive index interval [lo, hi]; when bounded is false, hi is unused and
/// the interval extends to +infinity.
struct IndexRange {
  long lo = 0;
  long hi = 0;
  bool bounded = true;
};

/// Monomials z^j with finite L2 norm, found from the endpoint exponents of
/// the norm integrand, and j >= model.lowest_index.
IndexRange admissible_indices(const RadialModel& model, int p);
bool norm_is_finite(const RadialModel& model, int p, long j);

/// Log norms ln ||z^j||_p^2 for a contiguous run of admissible monomials.
struct MonomialBasis {
  int p = 0;
  long j_min = 0;
  long j_max = -1;
  bool bounded = true;           // false: the true index set continues past j_max
  std::vector<double> log_norms; // index j - j_min
  std::vector<long> excluded;    // requested indices outside the admissible set

  long size() const { return j_max - j_min + 1; }
  double log_norm(long j) const { return log_norms.at(static_cast<std::size_t>(j - j_min)); }
};

/// ||z^j||_p^2 = 2 pi int r^{2j+1} exp(-2 Phi_p(r)) rho(r) dr by adaptive
/// quadrature in t = ln r, for j in [j_lo, j_hi]. Inadmissible indices are
/// skipped and listed.
MonomialBasis radial_norms(const RadialModel& model, int p, long j_lo, long j_hi);

/// Basis covering every admissible index; for infinite index sets, extended
/// until the omitted tail at radius r_eval is below 1e-14 of the sum.
MonomialBasis radial_basis(const RadialModel& model, int p, double r_eval);

/// P_p(r) = sum_j r^{2j} exp(-2 Phi_p(r)) / ||z^j||^2. Infinite index sets are
/// truncated once a term drops below 1e-16 of the partial sum behind a
/// geometric tail certificate; ConvergenceError if the basis ends first.
/// r = 0 is resolved from the puncture exponents.
double radial_kernel(const MonomialBasis& basis, const RadialModel& model, int p, double r);

/// Petersson-normalized kernel Pi_p = P_p rho^p (canonical-bundle models).
double petersson_kernel(const MonomialBasis& basis, const RadialModel& model, int p, double r);

/// Pointwise norms |e_j(r)|_{h_p} of the orthonormal basis e_j = z^j/||z^j||
/// at the point z = r.
Eigen::VectorXd orthonormal_values(const MonomialBasis& basis, const RadialModel& model, int p,
                                   double r);

/// |S(r)|^2_{h_p} for S = sum_j c_j e_j at z = r.
double section_density(const MonomialBasis& basis, const RadialModel& model, int p, double r,
                       const Eigen::VectorXcd& coefficients);

/// P_p for one model and power: closed forms for the spindle family, the
/// quadrature engine otherwise (basis sized for radii up to r_max).
class KernelEvaluator {
 public:
  KernelEvaluator(const RadialModel& model, int p, double r_max);
  double operator()(double r) const;
  bool closed_form() const { return !basis_.has_value(); }
  const RadialModel& model() const { return model_; }

 private:
  RadialModel model_;
  int p_;
  std::optional<MonomialBasis> basis_;
};

/// Samples P_p on a radius grid; divergent puncture values become +inf.
KernelProfile kernel_profile(const RadialModel& model, int p, const Eigen::ArrayXd& radius);

}  // namespace bergman
