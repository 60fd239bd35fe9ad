#include "bergman/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bergman/quadrature.hpp"
#include "bergman/specfn.hpp"

namespace bergman {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kExponentTol = 1e-9;
constexpr double kLogTwoPi = 1.837877066409345483560659;

// ln sum exp(terms), two passes.
double log_sum(const std::vector<double>& terms) {
  double peak = kNegInf;
  for (double t : terms) peak = std::max(peak, t);
  if (peak == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - peak);
  return peak + std::log(sum);
}

// Sum over j = 0..count-1 of r^{2(j+shift)} / B(1 + (j+shift)/a, 1 + (top - j)/a),
// divided by (1 + r^{2a})^{(shift + top)/a}; the common kernel of both spindle
// variants. With x = u/(1+u), u = r^{2a}, each term is
// x^{(j+shift)/a} (1-x)^{(top-j)/a} / B, which keeps the logs of the dominant
// terms small at every radius.
double beta_sum_kernel(double a, double shift, long count, double top, double r) {
  const double log_u = 2.0 * a * std::log(r);
  const double log_x = log_u <= 0.0 ? log_u - std::log1p(std::exp(log_u))
                                    : -std::log1p(std::exp(-log_u));
  const double log_1mx = log_u <= 0.0 ? -std::log1p(std::exp(log_u))
                                      : -log_u - std::log1p(std::exp(-log_u));
  std::vector<double> terms(static_cast<std::size_t>(count));
  for (long j = 0; j < count; ++j) {
    const double m = static_cast<double>(j) + shift;
    const double rest = top - static_cast<double>(j);
    terms[static_cast<std::size_t>(j)] =
        m / a * log_x + rest / a * log_1mx - log_beta(1.0 + m / a, 1.0 + rest / a);
  }
  return std::exp(log_sum(terms));
}

// Integrability of r^{2j+1} * (weight * density asymptotics) at r -> 0.
bool inner_integrable(double power, double log_power) {
  if (power > kExponentTol) return true;
  if (power < -kExponentTol) return false;
  return log_power < -1.0;
}

}  // namespace

long snapped_floor(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 64.0 * std::numeric_limits<double>::epsilon() *
                                   std::max(1.0, std::abs(x))) {
    return static_cast<long>(nearest);
  }
  return static_cast<long>(std::floor(x));
}

long flux_lowest_index(const SpindleParams& params) {
  return std::max(snapped_floor(params.nu - params.a) + 1, 0L);
}

long pole_lowest_index(const SpindleParams& params, int p) {
  return snapped_floor(p * params.nu - params.a) + 1;
}

double spindle_kernel(const SpindleParams& params, int p, double r) {
  validate_spindle(params);
  if (p < 1) throw DomainError("spindle_kernel: p must be a positive integer");
  if (!(r >= 0.0) || std::isinf(r)) throw DomainError("spindle_kernel: requires 0 <= r < inf");
  const long j0 = flux_lowest_index(params);
  if (p < j0) {
    throw DomainError("spindle_kernel: p < j0, the space of L2 sections is trivial");
  }
  const double a = params.a;
  const double nu = params.nu;
  const double shift = static_cast<double>(j0) - nu;  // j0 - nu
  if (r == 0.0) {
    if (std::abs(shift) <= kExponentTol) return (p - nu) / a + 1.0;
    if (shift > 0.0) return 0.0;
    throw PunctureDivergence("kernel diverges at puncture (j0 - nu < 0)");
  }
  return beta_sum_kernel(a, shift, p - j0 + 1, static_cast<double>(p - j0), r);
}

double spindle_kernel_closed(int s, int p, double r) {
  if (s < 1 || p < 1) throw DomainError("spindle_kernel_closed: requires s >= 1 and p >= 1");
  if (!(r >= 0.0) || std::isinf(r)) {
    throw DomainError("spindle_kernel_closed: requires 0 <= r < inf");
  }
  if (r == 0.0) return static_cast<double>(s) * p + 1.0;
  const double y = std::pow(r, 2.0 / s);
  const double power = static_cast<double>(p) * s;
  // 4y / (1+y)^2 without forming (1+y)^2.
  const double spread = 4.0 / (y + 2.0 + 1.0 / y);
  std::complex<double> sum = 1.0;
  for (int l = 1; l < s; ++l) {
    const double angle = 2.0 * std::numbers::pi * l / s;
    const double half_sin = std::sin(0.5 * angle);
    const double log_modulus = 0.5 * std::log1p(-spread * half_sin * half_sin);
    const double phase = std::atan2(y * std::sin(angle), 1.0 + y * std::cos(angle));
    sum += std::polar(std::exp(power * log_modulus), power * phase);
  }
  if (std::abs(sum.imag()) > 1e-10 * std::abs(sum.real())) {
    throw std::logic_error("spindle_kernel_closed: imaginary residue exceeds 1e-10");
  }
  return (p + 1.0 / s) * sum.real();
}

double pole_kernel(const SpindleParams& params, int p, double r) {
  validate_spindle(params, true);
  if (p < 1) throw DomainError("pole_kernel: p must be a positive integer");
  if (!(r >= 0.0) || std::isinf(r)) throw DomainError("pole_kernel: requires 0 <= r < inf");
  if (params.nu == 1.0) return 1.0;
  const double a = params.a;
  const long jp = pole_lowest_index(params, p);
  const double theta = static_cast<double>(jp) - p * params.nu;
  if (r == 0.0) {
    if (std::abs(theta) <= kExponentTol) return 1.0 + static_cast<double>(p - jp) / a;
    if (theta > 0.0) return 0.0;
    throw PunctureDivergence("kernel diverges at puncture (j_p - p nu < 0)");
  }
  return beta_sum_kernel(a, theta, p - jp + 1, static_cast<double>(p - jp), r);
}

bool norm_is_finite(const RadialModel& model, int p, long j) {
  const Asymptotics w_in = model.inner_weight(p);
  const double inner_power = 2.0 * j + 2.0 + w_in.power + model.inner_density.power;
  const double inner_log = w_in.log_power + model.inner_density.log_power;
  if (!inner_integrable(inner_power, inner_log)) return false;

  const Asymptotics w_out = model.outer_weight(p);
  const double outer_log = w_out.log_power + model.outer_density.log_power;
  if (model.outer_is_finite()) {
    // (R - r)^mu with mu independent of j.
    const double mu = w_out.power + model.outer_density.power;
    return mu > -1.0 + kExponentTol || (std::abs(mu + 1.0) <= kExponentTol && outer_log < -1.0);
  }
  const double outer_power = 2.0 * j + 2.0 + w_out.power + model.outer_density.power;
  if (outer_power < -kExponentTol) return true;
  if (outer_power > kExponentTol) return false;
  return outer_log < -1.0;
}

IndexRange admissible_indices(const RadialModel& model, int p) {
  const Asymptotics w_in = model.inner_weight(p);
  // Smallest j with 2j + 2 + powers > 0, adjusted by the log-power tie rule.
  long lo = static_cast<long>(
      std::floor(-(2.0 + w_in.power + model.inner_density.power) / 2.0)) - 1;
  while (!norm_is_finite(model, p, lo)) {
    ++lo;
    if (lo > 1000000000L) throw DomainError("admissible_indices: no finite norm");
  }
  while (norm_is_finite(model, p, lo - 1)) --lo;
  lo = std::max(lo, model.lowest_index);

  const Asymptotics w_out = model.outer_weight(p);
  const double outer_total = w_out.power + model.outer_density.power;
  if (model.outer_is_finite() || !std::isfinite(outer_total)) {
    return {lo, 0, false};
  }
  long hi = static_cast<long>(std::ceil(-(2.0 + outer_total) / 2.0)) + 1;
  while (!norm_is_finite(model, p, hi) && hi >= lo) --hi;
  while (norm_is_finite(model, p, hi + 1)) ++hi;
  if (hi < lo) throw DomainError("admissible_indices: no finite norm");
  return {lo, hi, true};
}

namespace {

double log_norm_by_quadrature(const RadialModel& model, int p, long j) {
  const double twice_power = 2.0 * static_cast<double>(j) + 2.0;
  auto log_integrand = [&](double t) {
    const long double r = std::exp(static_cast<long double>(t));
    const long double value =
        twice_power * t - 2.0L * model.log_weight(p, r) + model.log_density(r);
    return static_cast<double>(value);
  };
  const double t_hi = model.outer_is_finite() ? std::log(model.r_max) : std::numeric_limits<double>::infinity();
  const double t_lo = model.r_min > 0.0 ? std::log(model.r_min) : kNegInf;
  const double start = std::isfinite(t_hi) ? t_hi - 1.0 : 0.0;
  QuadratureOptions options;
  options.relative_tolerance = 1e-11;
  try {
    const LogIntegral result = integrate_unimodal_exp(log_integrand, t_lo, t_hi, start, options);
    return kLogTwoPi + result.log_value;
  } catch (const ConvergenceError& e) {
    throw ConvergenceError("radial_norms: quadrature failed for j = " + std::to_string(j) + ": " +
                           e.what());
  }
}

}  // namespace

MonomialBasis radial_norms(const RadialModel& model, int p, long j_lo, long j_hi) {
  if (p < 1) throw DomainError("radial_norms: p must be a positive integer");
  MonomialBasis basis;
  basis.p = p;
  basis.bounded = true;
  bool started = false;
  for (long j = j_lo; j <= j_hi; ++j) {
    if (j < model.lowest_index || !norm_is_finite(model, p, j)) {
      basis.excluded.push_back(j);
      continue;
    }
    if (!started) {
      basis.j_min = j;
      started = true;
    }
    basis.log_norms.push_back(log_norm_by_quadrature(model, p, j));
    basis.j_max = j;
  }
  if (!started) {
    basis.j_min = j_lo;
    basis.j_max = j_lo - 1;
  }
  const IndexRange range = admissible_indices(model, p);
  basis.bounded = range.bounded && basis.j_max >= range.hi;
  return basis;
}

MonomialBasis radial_basis(const RadialModel& model, int p, double r_eval) {
  const IndexRange range = admissible_indices(model, p);
  if (range.bounded) return radial_norms(model, p, range.lo, range.hi);
  if (!(r_eval > model.r_min && r_eval < model.r_max)) {
    throw DomainError("radial_basis: evaluation radius outside the model domain");
  }

  MonomialBasis basis;
  basis.p = p;
  basis.bounded = false;
  basis.j_min = range.lo;
  const double log_r = std::log(r_eval);
  double log_partial = kNegInf;
  double previous_term = kNegInf;
  double previous_ratio = std::numeric_limits<double>::infinity();
  constexpr long kMaxTerms = 1000000;
  for (long j = range.lo; j < range.lo + kMaxTerms; ++j) {
    const double log_norm = log_norm_by_quadrature(model, p, j);
    basis.log_norms.push_back(log_norm);
    basis.j_max = j;
    const double term = 2.0 * static_cast<double>(j) * log_r - log_norm;
    log_partial = log_add_exp(log_partial, term);
    const double log_ratio = term - previous_term;
    // Stop after a small term with shrinking ratios; the tail is then at most
    // term * q / (1 - q).
    if (log_ratio < 0.0 && log_ratio <= previous_ratio && term - log_partial < std::log(1e-16)) {
      const double q = std::exp(log_ratio);
      if (term + std::log(q / (1.0 - q)) - log_partial < std::log(1e-14)) {
        // Two extra indices so radial_kernel can certify the ratio trend.
        for (long extra = 1; extra <= 2; ++extra) {
          basis.log_norms.push_back(log_norm_by_quadrature(model, p, j + extra));
          basis.j_max = j + extra;
        }
        return basis;
      }
    }
    previous_ratio = log_ratio;
    previous_term = term;
  }
  throw ConvergenceError("radial_basis: tail did not become negligible");
}

double radial_kernel(const MonomialBasis& basis, const RadialModel& model, int p, double r) {
  if (basis.p != p) throw DomainError("radial_kernel: basis built for a different p");
  if (basis.size() <= 0) return 0.0;
  if (r == 0.0 && model.r_min == 0.0) {
    const Asymptotics w = model.inner_weight(p);
    const double power = 2.0 * static_cast<double>(basis.j_min) + w.power;
    const bool zero_power = std::abs(power) <= kExponentTol;
    if (power > kExponentTol || (zero_power && w.log_power > 0.0)) return 0.0;
    if (power < -kExponentTol || (zero_power && w.log_power < 0.0)) {
      throw PunctureDivergence("kernel diverges at puncture");
    }
    const long double tiny = 1e-300L;
    const long double log_limit = -2.0L * model.log_weight(p, tiny) - w.power * std::log(tiny);
    return std::exp(static_cast<double>(log_limit) - basis.log_norm(basis.j_min));
  }
  if (!(r > model.r_min && r < model.r_max)) {
    throw DomainError("radial_kernel: radius outside the model domain");
  }
  const double log_r = std::log(r);
  const double log_weight = static_cast<double>(-2.0L * model.log_weight(p, r));

  if (basis.bounded) {
    std::vector<double> terms(static_cast<std::size_t>(basis.size()));
    for (long j = basis.j_min; j <= basis.j_max; ++j) {
      terms[static_cast<std::size_t>(j - basis.j_min)] =
          2.0 * static_cast<double>(j) * log_r + log_weight - basis.log_norm(j);
    }
    return std::exp(log_sum(terms));
  }

  double log_partial = kNegInf;
  double previous_term = kNegInf;
  double previous_ratio = std::numeric_limits<double>::infinity();
  for (long j = basis.j_min; j <= basis.j_max; ++j) {
    const double term = 2.0 * static_cast<double>(j) * log_r + log_weight - basis.log_norm(j);
    log_partial = log_add_exp(log_partial, term);
    const double log_ratio = term - previous_term;
    if (log_ratio < 0.0 && term - log_partial < std::log(1e-16)) {
      if (log_ratio <= previous_ratio) {
        const double q = std::exp(log_ratio);
        const double tail = term + std::log(q / (1.0 - q));
        if (tail - log_partial < std::log(1e-14)) return std::exp(log_partial);
      }
    }
    previous_ratio = log_ratio;
    previous_term = term;
  }
  throw ConvergenceError("radial_kernel: tail not certified within the stored basis (r = " +
                         std::to_string(r) + ")");
}

double petersson_kernel(const MonomialBasis& basis, const RadialModel& model, int p, double r) {
  const double kernel = radial_kernel(basis, model, p, r);
  return std::exp(std::log(kernel) + p * static_cast<double>(model.log_density(r)));
}

Eigen::VectorXd orthonormal_values(const MonomialBasis& basis, const RadialModel& model, int p,
                                   double r) {
  if (!(r > model.r_min && r < model.r_max)) {
    throw DomainError("orthonormal_values: radius outside the model domain");
  }
  const double log_r = std::log(r);
  const double log_weight = static_cast<double>(-2.0L * model.log_weight(p, r));
  Eigen::VectorXd values(basis.size());
  for (long j = basis.j_min; j <= basis.j_max; ++j) {
    values(j - basis.j_min) =
        std::exp(0.5 * (2.0 * static_cast<double>(j) * log_r + log_weight - basis.log_norm(j)));
  }
  return values;
}

double section_density(const MonomialBasis& basis, const RadialModel& model, int p, double r,
                       const Eigen::VectorXcd& coefficients) {
  const Eigen::VectorXd values = orthonormal_values(basis, model, p, r);
  if (coefficients.size() != values.size()) {
    throw DomainError("section_density: coefficient count does not match the basis");
  }
  return std::norm(coefficients.dot(values.cast<std::complex<double>>().conjugate()));
}

KernelEvaluator::KernelEvaluator(const RadialModel& model, int p, double r_max)
    : model_(model), p_(p) {
  switch (model.kind) {
    case ModelKind::spindle:
    case ModelKind::spindle_pole:
    case ModelKind::fubini_study:
      break;
    default: {
      const double r_eval = std::min(r_max, std::nextafter(model.r_max, 0.0));
      basis_ = radial_basis(model, p, r_eval);
    }
  }
}

double KernelEvaluator::operator()(double r) const {
  switch (model_.kind) {
    case ModelKind::spindle:
    case ModelKind::fubini_study:
      return spindle_kernel(model_.spindle, p_, r);
    case ModelKind::spindle_pole:
      return pole_kernel(model_.spindle, p_, r);
    default:
      return radial_kernel(*basis_, model_, p_, r);
  }
}

KernelProfile kernel_profile(const RadialModel& model, int p, const Eigen::ArrayXd& radius) {
  KernelProfile profile;
  profile.p = p;
  profile.radius = radius;
  profile.value.resize(radius.size());
  const double r_max = radius.size() > 0 ? radius.maxCoeff() : 1.0;
  const KernelEvaluator kernel(model, p, r_max > 0.0 ? r_max : 1.0);
  for (Eigen::Index i = 0; i < radius.size(); ++i) {
    try {
      profile.value(i) = kernel(radius(i));
    } catch (const PunctureDivergence&) {
      profile.value(i) = std::numeric_limits<double>::infinity();
    }
  }
  return profile;
}

}  // namespace bergman
