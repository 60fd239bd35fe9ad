#include "bergman/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bergman {
namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ln(1 + r^e) without overflow for large r.
long double log1p_pow(long double r, long double e) {
  const long double log_r = std::log(r);
  if (e * log_r <= 0.0L) return std::log1p(std::exp(e * log_r));
  return e * log_r + std::log1p(std::exp(-e * log_r));
}

std::string describe(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

RadialModel spindle_like(const SpindleParams& params, bool pole) {
  RadialModel model;
  model.spindle = params;
  model.r_min = 0.0;
  model.r_max = kInf;
  model.chart_radius = 1.0;
  model.lowest_index = 0;
  model.profile = SingularityProfile::make(params.nu, 1.0 + 2.0 * params.a, 1.0 + 2.0 * params.a);

  const long double a = params.a;
  const long double nu = params.nu;
  model.log_density = [a](long double r) {
    return std::log(a / kPiL) - 2.0L * (1.0L - a) * std::log(r) - 2.0L * log1p_pow(r, 2.0L * a);
  };
  model.inner_density = {-2.0 * (1.0 - params.a), 0.0};
  model.outer_density = {-2.0 - 2.0 * params.a, 0.0};
  model.outer_weight = [](int p) { return Asymptotics{-2.0 * p, 0.0}; };

  if (pole) {
    model.name = "spindle-pole";
    model.kind = ModelKind::spindle_pole;
    model.log_weight = [a, nu](int p, long double r) {
      return p * (nu * std::log(r) + (1.0L - nu) / (2.0L * a) * log1p_pow(r, 2.0L * a));
    };
    model.inner_weight = [nu = params.nu](int p) { return Asymptotics{-2.0 * p * nu, 0.0}; };
    const double c1 = 1.0 - params.nu;
    model.c1_over_omega = [c1](double) { return c1; };
  } else {
    model.name = "spindle";
    model.kind = ModelKind::spindle;
    model.log_weight = [a, nu](int p, long double r) {
      return nu * std::log(r) + (p - nu) / (2.0L * a) * log1p_pow(r, 2.0L * a);
    };
    model.inner_weight = [nu = params.nu](int) { return Asymptotics{-2.0 * nu, 0.0}; };
    model.c1_over_omega = [](double) { return 1.0; };
  }
  return model;
}

}  // namespace

void validate_spindle(const SpindleParams& params, bool pole_variant) {
  if (!(params.a > 0.0 && params.a <= 1.0)) {
    throw DomainError("cone order a must satisfy 0 < a <= 1 (got " + describe(params.a) + ")");
  }
  if (!std::isfinite(params.nu)) {
    throw DomainError("flux nu must be finite");
  }
  if (pole_variant && !(params.nu > 0.0 && params.nu <= 1.0)) {
    throw DomainError("pole flux nu must satisfy 0 < nu <= 1 (got " + describe(params.nu) + ")");
  }
}

SingularityProfile SingularityProfile::make(double nu, double alpha, double beta, double A,
                                            double A_prime) {
  SingularityProfile profile;
  profile.nu = nu;
  profile.alpha = alpha;
  profile.A = A;
  profile.beta = beta;
  profile.A_prime = A_prime;
  profile.delta = std::max({8.0 / 3.0, 8.0 * beta / 3.0, 8.0 * alpha});
  return profile;
}

double RadialModel::density(double r) const {
  return static_cast<double>(std::exp(log_density(r)));
}

double spindle_density(const SpindleParams& params, double r) {
  validate_spindle(params);
  if (!(r > 0.0) || std::isinf(r)) {
    throw DomainError("spindle_density: requires 0 < r < inf");
  }
  const double a = params.a;
  const double u = std::pow(r, 2.0 * a);
  return a / (std::numbers::pi * std::pow(r, 2.0 * (1.0 - a)) * (1.0 + u) * (1.0 + u));
}

double poincare_disc_density(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("poincare_disc_density: requires 0 < r < 1");
  }
  const double s = 2.0 * r * std::log(r);
  return 1.0 / (s * s);
}

RadialModel spindle_model(const SpindleParams& params) {
  validate_spindle(params);
  return spindle_like(params, false);
}

RadialModel spindle_pole_model(const SpindleParams& params) {
  validate_spindle(params, true);
  return spindle_like(params, true);
}

RadialModel poincare_disc_model() {
  RadialModel model;
  model.name = "poincare-disc";
  model.kind = ModelKind::poincare_disc;
  model.bundle = BundleKind::canonical;
  model.r_min = 0.0;
  model.r_max = 1.0;
  model.chart_radius = 0.9;
  model.profile = SingularityProfile::make(-1.0, 3.0, 3.0);
  model.log_density = [](long double r) {
    return -2.0L * std::log(2.0L * r * -std::log(r));
  };
  // Petersson normalization |dz|^2 = 1/rho. The canonical weight adds a
  // constant ln 2 / 2, which rescales every norm and pointwise value by 2^p
  // and cancels in the kernel.
  const auto log_density = model.log_density;
  model.log_weight = [log_density](int p, long double r) {
    return 0.5L * p * log_density(r);
  };
  model.inner_weight = [](int p) { return Asymptotics{2.0 * p, 2.0 * p}; };
  model.inner_density = {-2.0, -2.0};
  model.outer_weight = [](int p) { return Asymptotics{2.0 * p, 0.0}; };
  model.outer_density = {-2.0, 0.0};
  // c1(K, h)/omega = -R/(2 pi) with R = -4.
  model.c1_over_omega = [](double) { return 2.0 / std::numbers::pi; };
  return model;
}

RadialModel fubini_study_model() {
  RadialModel model = spindle_like({1.0, 0.0}, false);
  model.name = "fubini-study";
  model.kind = ModelKind::fubini_study;
  model.lowest_index = 0;
  model.profile = SingularityProfile::make(0.0, 0.0, 0.0);
  return model;
}

RadialModel log_singular_demo_model(double nu) {
  if (!(nu > 0.0 && nu < 1.0)) {
    throw DomainError("log-singular-demo flux nu must satisfy 0 < nu < 1 (got " + describe(nu) +
                      ")");
  }
  RadialModel model;
  model.name = "log-singular-demo";
  model.kind = ModelKind::log_singular_demo;
  model.lowest_index = 0;
  model.spindle = {1.0, nu};
  model.r_min = 0.0;
  model.r_max = kInf;
  model.chart_radius = 1.0;
  model.profile = SingularityProfile::make(nu, 0.0, 0.0);
  model.log_density = [](long double r) {
    return -std::log(kPiL) - 2.0L * log1p_pow(r, 2.0L);
  };
  const long double nul = nu;
  model.log_weight = [nul](int p, long double r) {
    return p * (nul * std::log(r) + 0.5L * (1.0L - nul) * log1p_pow(r, 2.0L));
  };
  model.inner_weight = [nu](int p) { return Asymptotics{-2.0 * p * nu, 0.0}; };
  model.inner_density = {0.0, 0.0};
  model.outer_weight = [](int p) { return Asymptotics{-2.0 * p, 0.0}; };
  model.outer_density = {-4.0, 0.0};
  model.c1_over_omega = [c1 = 1.0 - nu](double) { return c1; };
  return model;
}

RadialModel flat_model() {
  RadialModel model;
  model.name = "flat";
  model.kind = ModelKind::flat;
  model.lowest_index = 0;
  model.r_min = 0.0;
  model.r_max = kInf;
  model.chart_radius = 1.0;
  model.profile = SingularityProfile::make(0.0, 0.0, 0.0);
  model.log_density = [](long double) { return 0.0L; };
  model.log_weight = [](int p, long double r) { return p * 0.5L * kPiL * r * r; };
  model.inner_weight = [](int) { return Asymptotics{0.0, 0.0}; };
  model.inner_density = {0.0, 0.0};
  model.outer_weight = [](int) { return Asymptotics{-kInf, 0.0}; };
  model.outer_density = {0.0, 0.0};
  model.c1_over_omega = [](double) { return 1.0; };
  return model;
}

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names = {
      "spindle", "spindle-pole", "poincare-disc", "fubini-study", "log-singular-demo"};
  return names;
}

RadialModel make_model(std::string_view name, const SpindleParams& params) {
  if (name == "spindle") return spindle_model(params);
  if (name == "spindle-pole") return spindle_pole_model(params);
  if (name == "poincare-disc") return poincare_disc_model();
  if (name == "fubini-study") return fubini_study_model();
  if (name == "log-singular-demo") return log_singular_demo_model(params.nu);
  throw DomainError("unknown model '" + std::string(name) + "'");
}

double gauss_curvature(const RadialModel& model, double r, double h) {
  if (!(h > 0.0)) throw DomainError("gauss_curvature: step must be positive");
  if (!(r - 2.0 * h > model.r_min) || !(r + 2.0 * h < model.r_max)) {
    throw DomainError("gauss_curvature: stencil leaves the model domain");
  }
  const long double x = r;
  const long double step = h;
  const long double fm2 = model.log_density(x - 2 * step);
  const long double fm1 = model.log_density(x - step);
  const long double f0 = model.log_density(x);
  const long double fp1 = model.log_density(x + step);
  const long double fp2 = model.log_density(x + 2 * step);
  const long double second = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * step * step);
  const long double first = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * step);
  const long double laplacian = second + first / x;
  return static_cast<double>(-laplacian / (2.0L * std::exp(f0)));
}

}  // namespace bergman
