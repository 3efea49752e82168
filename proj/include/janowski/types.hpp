#pragma once

#include <complex>
#include <numbers>

namespace janowski {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  bool contains(const Interval& other, double slack = 0.0) const noexcept {
    return lo <= other.lo + slack && other.hi <= hi + slack;
  }
};

}  // namespace janowski
