#include "bergman/specfn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>
#include <string>

namespace bergman {
namespace {

constexpr double kEulerGamma = 0.577215664901532860607;
constexpr double kHalfLogTwoPi = 0.918938533204672741780;

// zeta(k) - 1 for k = 2..31.
constexpr std::array<double, 30> kZetaMinusOne = {
    0.644934066848226436472,   0.2020569031595942854,
    0.082323233711138191516,   0.0369277551433699263314,
    0.0173430619844491397145,  0.0083492773819228268398,
    0.00407735619794433937869, 0.00200839282608221441785,
    0.000994575127818085337146, 0.000494188604119464558702,
    0.000246086553308048298638, 0.000122713347578489146752,
    0.0000612481350587048292585, 0.0000305882363070204935517,
    0.0000152822594086518717326, 0.0000076371976378997622736,
    0.00000381729326499983985646, 0.00000190821271655393892566,
    9.53962033872796113152e-7, 4.76932986787806463117e-7,
    2.38450502727732990004e-7, 1.19219925965311073068e-7,
    5.96081890512594796124e-8, 2.98035035146522801861e-8,
    1.49015548283650412347e-8, 7.45071178983542949198e-9,
    3.72533402478845705482e-9, 1.8626597235130490064e-9,
    9.31327432419668182872e-10, 4.65662906503378407299e-10,
};

// B_{2k} / (2k (2k-1)), k = 1..9.
constexpr std::array<double, 9> kStirling = {
    0.0833333333333333333333,  -0.00277777777777777777778,
    0.000793650793650793650794, -0.000595238095238095238095,
    0.000841750841750841750842, -0.00191752691752691752692,
    0.00641025641025641025641,  -0.0295506535947712418301,
    0.179644372368830573165,
};

// ln Gamma(x) - [(x - 1/2) ln x - x + ln sqrt(2 pi)], valid for x >= 10.
double stirling_correction(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double sum = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    sum = sum * inv2 + *it;
  }
  return sum * inv;
}

// ln Gamma(1 + z) for |z| <= 1/2.
double log_gamma_one_plus(double z) {
  double sum = 0.0;
  double zk = -z;
  for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
    const int k = static_cast<int>(i) + 2;
    zk *= -z;  // (-z)^k
    sum += kZetaMinusOne[i] * zk / k;
  }
  return -std::log1p(z) + z * (1.0 - kEulerGamma) + sum;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || std::isnan(x)) {
    throw DomainError("log_gamma: argument must be positive (got " +
                      std::to_string(x) + ")");
  }
  if (std::isinf(x)) return x;
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  if (x < 1.5) return log_gamma_one_plus(x - 1.0);
  if (x < 2.5) return std::log1p(x - 2.0) + log_gamma_one_plus(x - 2.0);
  if (x < 10.0) {
    double product = 1.0;
    double y = x;
    while (y >= 2.5) {
      y -= 1.0;
      product *= y;
    }
    return std::log(product) + log_gamma(y);
  }
  return (x - 0.5) * std::log(x) - x + kHalfLogTwoPi + stirling_correction(x);
}

double log_beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError("log_beta: arguments must be positive");
  }
  const double p = std::min(x, y);
  const double q = std::max(x, y);
  if (p >= 10.0) {
    const double corr =
        stirling_correction(p) + stirling_correction(q) - stirling_correction(p + q);
    return -0.5 * std::log(q) + kHalfLogTwoPi + corr +
           (p - 0.5) * std::log(p / (p + q)) + q * std::log1p(-p / (p + q));
  }
  if (q >= 10.0) {
    const double corr = stirling_correction(q) - stirling_correction(p + q);
    return log_gamma(p) + corr + p - p * std::log(p + q) +
           (q - 0.5) * std::log1p(-p / (p + q));
  }
  return log_gamma(p) + log_gamma(q) - log_gamma(p + q);
}

double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

double log_mittag_leffler(const MLParams& params, double zeta) {
  if (!(params.r > 0.0) || !(params.s >= 0.0)) {
    throw DomainError("mittag_leffler: requires r > 0 and s >= 0");
  }
  if (!(zeta >= 0.0)) {
    throw DomainError("mittag_leffler: requires zeta >= 0");
  }
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (zeta == 0.0) {
    return params.s == 0.0 ? kNegInf : -log_gamma(params.s);
  }

  constexpr long kMaxTerms = 1000000;
  const double log_zeta = std::log(zeta);
  const double stop = std::log(1e-16);
  double log_sum = kNegInf;
  double previous = kNegInf;
  for (long j = 0; j < kMaxTerms; ++j) {
    const double arg = params.r * static_cast<double>(j) + params.s;
    if (arg == 0.0) continue;  // 1/Gamma(0) = 0
    const double term = static_cast<double>(j) * log_zeta - log_gamma(arg);
    log_sum = log_add_exp(log_sum, term);
    if (term < previous && term - log_sum < stop) return log_sum;
    previous = term;
  }
  throw ConvergenceError("mittag_leffler: series did not converge within 10^6 terms");
}

double mittag_leffler(const MLParams& params, double zeta) {
  return std::exp(log_mittag_leffler(params, zeta));
}

}  // namespace bergman
