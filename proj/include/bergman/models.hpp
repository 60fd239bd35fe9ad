#pragma once

#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman {

/// Cone order a and flux nu of the spindle family.
struct SpindleParams {
  double a = 1.0;
  double nu = 0.0;
};

/// Throws DomainError unless 0 < a <= 1 (and 0 < nu <= 1 for the pole variant).
void validate_spindle(const SpindleParams& params, bool pole_variant = false);

/// Singularity exponents of a model at its puncture. delta is derived:
/// delta = max{8/3, 8 beta / 3, 8 alpha}.
struct SingularityProfile {
  double nu = 0.0;       // log-pole coefficient of the bundle weight
  double alpha = 0.0;    // growth exponent of third derivatives of the regular weight
  double A = 1.0;
  double beta = 0.0;     // growth exponent of the density gradient
  double A_prime = 1.0;
  double delta = 8.0 / 3.0;

  static SingularityProfile make(double nu, double alpha, double beta, double A = 1.0,
                                 double A_prime = 1.0);
};

/// Leading behaviour f ~ r^power |ln r|^log_power at the puncture r -> 0, or
/// r^power (ln r)^log_power as r -> infinity, or (R - r)^power near a finite
/// outer edge. power = -inf means faster than any power (Gaussian tails).
struct Asymptotics {
  double power = 0.0;
  double log_power = 0.0;
};

enum class ModelKind { spindle, spindle_pole, poincare_disc, fubini_study, log_singular_demo, flat };

/// Whether the bundle is a power of a line bundle with its own weight, or a
/// power of the canonical bundle with the weight induced by the metric.
enum class BundleKind { line, canonical };

/// A radially symmetric metric density rho(r) on an open radial interval
/// plus the weight of the p-th bundle power. Sections z^j have pointwise norm
/// |z^j|^2_{h_p} = r^{2j} exp(-2 log_weight(p, r)).
struct RadialModel {
  std::string name;
  ModelKind kind = ModelKind::flat;
  BundleKind bundle = BundleKind::line;
  SpindleParams spindle{};      // set for spindle-type models
  double r_min = 0.0;           // open domain (r_min, r_max)
  double r_max = std::numeric_limits<double>::infinity();
  double chart_radius = 1.0;    // radius of the coordinate disc around the puncture
  /// Sections must extend holomorphically across the puncture on the compact
  /// models, so z^j with j below this are excluded even if their norm is finite.
  long lowest_index = std::numeric_limits<long>::min();
  SingularityProfile profile{};

  std::function<long double(long double)> log_density;
  std::function<long double(int, long double)> log_weight;
  std::function<double(double)> c1_over_omega;

  /// exp(-2 log_weight) and rho as r -> r_min.
  std::function<Asymptotics(int)> inner_weight;
  Asymptotics inner_density{};
  /// Same at the outer end of the domain.
  std::function<Asymptotics(int)> outer_weight;
  Asymptotics outer_density{};

  double density(double r) const;
  bool outer_is_finite() const { return r_max < std::numeric_limits<double>::infinity(); }
};

/// rho_a(r) = a / (pi r^{2(1-a)} (1 + r^{2a})^2).
double spindle_density(const SpindleParams& params, double r);

/// rho(r) = (2 r ln r)^{-2} on 0 < r < 1.
double poincare_disc_density(double r);

RadialModel spindle_model(const SpindleParams& params);
RadialModel spindle_pole_model(const SpindleParams& params);
RadialModel poincare_disc_model();
RadialModel fubini_study_model();
RadialModel log_singular_demo_model(double nu = 0.5);
/// Euclidean plane with weight (pi/2) r^2: rho = 1, kernel identically p.
RadialModel flat_model();

/// Names accepted by make_model.
const std::vector<std::string>& model_names();

/// Builds a model by CLI name. nu is only read by the flux-carrying models.
RadialModel make_model(std::string_view name, const SpindleParams& params);

/// Finite-difference Gauss curvature -(2/rho) d^2/dz dz-bar log rho using a
/// central five-point stencil in r (evaluated in extended precision).
/// Expected values: -4 on the Poincare disc, 4 pi a on the spindle, 0 on the
/// flat model.
double gauss_curvature(const RadialModel& model, double r, double h = 1e-4);

}  // namespace bergman
