#pragma once

#include <functional>

#include "bergman/errors.hpp"

namespace bergman {

/// Result of integrating exp(g) where g is a log-integrand. The value itself
/// is exp(log_value); it is never formed when it would overflow.
struct LogIntegral {
  double log_value = 0.0;
  double relative_error = 0.0;  // Kronrod error estimate / value
  int evaluations = 0;
};

struct QuadratureOptions {
  double relative_tolerance = 1e-11;
  int max_intervals = 4000;
  /// Tails whose log-integrand is this far below the peak are dropped
  /// (e^-60 ~ 1e-26).
  double tail_drop = 60.0;
};

/// Adaptive 7/15-point Gauss-Kronrod integration of exp(log_f(t) - shift) on
/// the finite interval [lo, hi]. Returned log_value includes the shift.
LogIntegral integrate_exp(const std::function<double(double)>& log_f, double lo,
                          double hi, double shift, const QuadratureOptions& options = {});

/// Integral of exp(log_f) over (lo, hi) for a unimodal log_f. Either end may be
/// infinite; log_f must tend to -inf there. The peak is bracketed from
/// `start`, the tails are cut where log_f falls `tail_drop` below the peak,
/// and the remaining window is integrated adaptively.
LogIntegral integrate_unimodal_exp(const std::function<double(double)>& log_f, double lo,
                                   double hi, double start,
                                   const QuadratureOptions& options = {});

}  // namespace bergman
