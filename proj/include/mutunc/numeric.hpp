#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "mutunc/errors.hpp"

namespace mutunc {

// Root of f on [lo, hi] by bisection until the bracket is narrower than tol.
// Throws ValidationError when f(lo) and f(hi) have the same sign.
inline double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw ValidationError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// `steps` evenly spaced points from `from` to `to` inclusive.
inline double grid_point(double from, double to, std::size_t steps, std::size_t i) {
  if (steps < 2) return from;
  return from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

}  // namespace mutunc
