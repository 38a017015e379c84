#pragma once

#include <cmath>

#include "univoque/error.hpp"

namespace univoque {

/// Bisection for a continuous f with a sign change on [lo, hi]. Runs until
/// the midpoint no longer moves (the bracket is a couple of ulps wide).
/// Throws SolveError when f(lo) and f(hi) are both nonzero with equal signs.
template <typename F>
double bisect(F&& f, double lo, double hi) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw SolveError("no sign change on the bracket");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace univoque
