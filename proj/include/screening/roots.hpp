#pragma once

#include <cmath>
#include <sstream>

#include "screening/error.hpp"

namespace screening {

struct BisectionOptions {
  // Stop once the bracket is no wider than this (0: run to one ulp).
  double x_tol = 0.0;
  // ... and the residual at the midpoint is below this.
  double f_tol = 1e-10;
  int max_iterations = 2000;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  double lo = 0.0;  // final bracket
  double hi = 0.0;
  int iterations = 0;
};

/// Bisection on a continuous function with a sign change on [lo, hi]. Works
/// for either direction of monotonicity. Throws NumericError when the
/// endpoints do not bracket a root.
template <typename F>
RootResult bisect(F&& f, double lo, double hi, const BisectionOptions& opts = {}) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  RootResult r;
  if (f_lo == 0.0) {
    r.root = r.lo = r.hi = lo;
    return r;
  }
  if (f_hi == 0.0) {
    r.root = r.lo = r.hi = hi;
    return r;
  }
  if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) || std::isnan(f_hi)) {
    std::ostringstream os;
    os.precision(17);
    os << "bisection: no sign change on [" << lo << ", " << hi << "] (f = " << f_lo
       << ", " << f_hi << ")";
    throw NumericError(os.str());
  }
  const bool lo_negative = f_lo < 0.0;
  double mid = 0.5 * (lo + hi);
  double f_mid = f(mid);
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    if (f_mid == 0.0) break;
    if ((f_mid < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
    const double next = 0.5 * (lo + hi);
    if (next == lo || next == hi) break;
    mid = next;
    f_mid = f(mid);
    if (hi - lo <= opts.x_tol && std::abs(f_mid) < opts.f_tol) break;
  }
  if (it == opts.max_iterations) {
    throw NumericError("bisection: iteration limit reached");
  }
  r.root = mid;
  r.residual = f_mid;
  r.lo = lo;
  r.hi = hi;
  r.iterations = it;
  return r;
}

}  // namespace screening
