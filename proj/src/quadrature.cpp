#include "bergman/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace bergman {
namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for Kronrod nodes 1, 3, 5, 7.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod_panel(const std::function<double(double)>& log_f, double lo, double hi,
                    double shift, int& evaluations) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  auto f = [&](double t) {
    ++evaluations;
    const double g = log_f(t);
    return std::isnan(g) ? 0.0 : std::exp(g - shift);
  };
  std::array<double, 15> values{};
  for (std::size_t i = 0; i < 7; ++i) {
    values[2 * i] = f(center - half * kKronrodNodes[i]);
    values[2 * i + 1] = f(center + half * kKronrodNodes[i]);
  }
  values[14] = f(center);

  double kronrod = kKronrodWeights[7] * values[14];
  double gauss = kGaussWeights[3] * values[14];
  for (std::size_t i = 0; i < 7; ++i) {
    const double pair = values[2 * i] + values[2 * i + 1];
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(values[14] - mean);
  for (std::size_t i = 0; i < 7; ++i) {
    asc += kKronrodWeights[i] *
           (std::abs(values[2 * i] - mean) + std::abs(values[2 * i + 1] - mean));
  }
  kronrod *= half;
  gauss *= half;
  asc *= std::abs(half);

  double error = std::abs(kronrod - gauss);
  if (asc != 0.0 && error != 0.0) {
    error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
  }
  return {lo, hi, kronrod, error};
}

}  // namespace

LogIntegral integrate_exp(const std::function<double(double)>& log_f, double lo,
                          double hi, double shift, const QuadratureOptions& options) {
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("integrate_exp: requires a finite interval lo < hi");
  }
  int evaluations = 0;
  constexpr int kInitialPanels = 8;
  std::priority_queue<Panel> panels;
  double total = 0.0;
  double total_error = 0.0;
  const double width = (hi - lo) / kInitialPanels;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double a = lo + i * width;
    const double b = (i + 1 == kInitialPanels) ? hi : a + width;
    Panel panel = kronrod_panel(log_f, a, b, shift, evaluations);
    total += panel.value;
    total_error += panel.error;
    panels.push(panel);
  }

  while (total_error > options.relative_tolerance * std::abs(total)) {
    if (static_cast<int>(panels.size()) >= options.max_intervals) {
      throw ConvergenceError("integrate_exp: refinement cap reached");
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = kronrod_panel(log_f, worst.lo, mid, shift, evaluations);
    const Panel right = kronrod_panel(log_f, mid, worst.hi, shift, evaluations);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw ConvergenceError("integrate_exp: interval underflow");
    }
  }
  // Recompute the sums to shed accumulated cancellation from the updates.
  total = 0.0;
  total_error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    total_error += panels.top().error;
    panels.pop();
  }
  if (!(total > 0.0)) {
    return {kNegInf, 0.0, evaluations};
  }
  return {shift + std::log(total), total_error / total, evaluations};
}

LogIntegral integrate_unimodal_exp(const std::function<double(double)>& log_f, double lo,
                                   double hi, double start,
                                   const QuadratureOptions& options) {
  auto g = [&](double t) {
    const double v = log_f(t);
    return std::isnan(v) ? kNegInf : v;
  };
  // Interior points stay a relative hair away from finite endpoints.
  auto inside = [&](double t) {
    if (std::isfinite(lo)) t = std::max(t, lo + 1e-13 * std::max(1.0, std::abs(lo)));
    if (std::isfinite(hi)) t = std::min(t, hi - 1e-13 * std::max(1.0, std::abs(hi)));
    return t;
  };

  // Bracket the peak by doubling steps uphill.
  double a = inside(start);
  double fa = g(a);
  double step = 0.5;
  double b = inside(a + step);
  double fb = g(b);
  if (fb < fa) {
    step = -step;
    b = inside(a + step);
    fb = g(b);
  }
  int guard = 0;
  while (fb >= fa && b != a) {
    const double next = inside(b + step);
    a = b;
    fa = fb;
    if (next == b) break;  // reached an endpoint while still climbing
    b = next;
    fb = g(b);
    step *= 2.0;
    if (++guard > 200) throw ConvergenceError("integrate_unimodal_exp: no peak found");
  }
  // Golden-section refinement on [a - |step|, b] (or the endpoint itself).
  double left = inside(std::min(a - std::abs(step), b));
  double right = inside(std::max(a + std::abs(step), b));
  constexpr double kPhi = 0.6180339887498949;
  double x1 = right - kPhi * (right - left);
  double x2 = left + kPhi * (right - left);
  double f1 = g(x1);
  double f2 = g(x2);
  for (int it = 0; it < 80 && (right - left) > 1e-9 * std::max(1.0, std::abs(a)); ++it) {
    if (f1 < f2) {
      left = x1;
      x1 = x2;
      f1 = f2;
      x2 = left + kPhi * (right - left);
      f2 = g(x2);
    } else {
      right = x2;
      x2 = x1;
      f2 = f1;
      x1 = right - kPhi * (right - left);
      f1 = g(x1);
    }
  }
  double peak = (f1 > f2) ? x1 : x2;
  double fpeak = std::max(f1, f2);
  if (fa > fpeak) {
    peak = a;
    fpeak = fa;
  }
  if (!std::isfinite(fpeak)) {
    throw DomainError("integrate_unimodal_exp: log-integrand is not finite at its peak");
  }

  // Width scale from local curvature and slope.
  const double h = 1e-3 * std::max(1.0, std::abs(peak));
  const double gp = g(inside(peak + h));
  const double gm = g(inside(peak - h));
  double curvature = 0.0;
  double slope = 0.0;
  if (std::isfinite(gp) && std::isfinite(gm)) {
    curvature = -(gp - 2.0 * fpeak + gm) / (h * h);
    slope = (gp - gm) / (2.0 * h);
  }
  const double sigma = 1.0 / std::sqrt(std::max({curvature, slope * slope, 1e-6}));

  auto walk = [&](double direction) {
    double t = peak;
    double stride = sigma;
    for (int it = 0; it < 400; ++it) {
      const double next = inside(t + direction * stride);
      if (next == t) return t;
      t = next;
      if (g(t) < fpeak - options.tail_drop) return t;
      stride *= 1.5;
    }
    throw ConvergenceError("integrate_unimodal_exp: integrand does not decay");
  };
  double window_lo = walk(-1.0);
  double window_hi = walk(+1.0);
  if (std::isfinite(lo) && window_lo <= lo + 1e-12 * std::max(1.0, std::abs(lo))) window_lo = lo;
  if (std::isfinite(hi) && window_hi >= hi - 1e-12 * std::max(1.0, std::abs(hi))) window_hi = hi;
  return integrate_exp(g, window_lo, window_hi, fpeak, options);
}

}  // namespace bergman
