#pragma once

#include <cmath>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "janowski/error.hpp"

namespace janowski::quadrature {

struct Options {
  double abs_tolerance = 1e-10;
  double rel_tolerance = 1e-11;
  unsigned max_depth = 20;
};

// Adaptive 15-point Gauss-Kronrod on [a, b]; throws QuadratureFailure when the
// error estimate misses abs_tolerance (scaled by the L1 norm for large integrands).
template <class F>
auto integrate(F&& f, double a, double b, const Options& options = {}) {
  double error = 0.0;
  double l1 = 0.0;
  auto value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, options.max_depth, options.rel_tolerance, &error, &l1);
  if (!std::isfinite(error) || error > options.abs_tolerance * (1.0 + l1)) {
    throw Error(ErrorCode::QuadratureFailure, "quadrature error estimate above tolerance");
  }
  return value;
}

}  // namespace janowski::quadrature
