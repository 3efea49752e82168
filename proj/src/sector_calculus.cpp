#include "janowski/sector_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "janowski/error.hpp"

namespace janowski {
namespace {

void finish(SectorParams& s) {
  const double sum = s.mu1 + s.mu2;
  s.delta = 0.5 * sum;
  s.mu = sum > 0.0 ? (s.mu2 - s.mu1) / sum : 0.0;
}

double tan_quarter(double m) { return std::abs(std::tan(m * kPi / 4.0)); }

void check_alpha_m(double alpha, double m) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorCode::OutOfRange, "alpha must lie in (0, 1]");
  if (!(m >= -1.0 && m < 1.0)) throw Error(ErrorCode::OutOfRange, "m must lie in [-1, 1)");
  if (tan_quarter(m) >= 1.0 - 1e-15) throw Error(ErrorCode::OutOfRange, "|tan(m pi/4)| must be below 1");
}

// asin sqrt(|x e^{i theta} + y|^2 / |1 + x y e^{i theta}|^2)
double half_opening(double x, double y, double theta) {
  const double num = x * x + y * y + 2.0 * x * y * std::cos(theta);
  const double den = 1.0 + x * x * y * y + 2.0 * x * y * std::cos(theta);
  if (den <= 0.0) return kPi / 2.0;
  return std::asin(std::sqrt(std::clamp(num / den, 0.0, 1.0)));
}

double centre_angle(double x, double y, double theta) {
  return std::atan2(x * y * std::sin(theta), x * y * std::cos(theta) + 1.0);
}

double quotient(const std::function<Complex(Complex)>& lambda, double beta, Complex z,
                double& min_re) {
  const Complex v = lambda(z);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    return std::numeric_limits<double>::infinity();
  }
  min_re = std::min(min_re, v.real());
  return beta * v.real() / (1.0 + beta * std::abs(v.imag()));
}

}  // namespace

SectorParams quotient_sector_params(double alpha, double m, double beta, double arg_ratio) {
  check_alpha_m(alpha, m);
  if (!(beta > 0.0 && beta <= 1.0)) throw Error(ErrorCode::OutOfRange, "beta must lie in (0, 1]");
  SectorParams s;
  s.a_mag = tan_quarter(m);
  const double k = alpha * beta * (1.0 - s.a_mag);
  const double c = std::cos(arg_ratio);
  const double sn = std::sin(arg_ratio);
  const double scale = 2.0 / (alpha * kPi);
  s.mu1 = 1.0 - m + scale * std::atan(k * c / (1.0 + s.a_mag + k * sn));
  s.mu2 = 1.0 + m + scale * std::atan(k * c / (1.0 + s.a_mag - k * sn));
  finish(s);
  s.exponent = alpha * s.delta;
  return s;
}

DerivativeSectorResult derivative_sector_params(double alpha, double m) {
  check_alpha_m(alpha, m);
  DerivativeSectorResult out;
  SectorParams& s = out.params;
  s.a_mag = tan_quarter(m);
  const double correction = std::atan(alpha * (1.0 - s.a_mag) / (1.0 + s.a_mag));
  s.mu1 = 1.0 - m + 2.0 / (alpha * kPi) * correction;
  s.mu2 = 1.0 + m + 2.0 / (alpha * kPi) * correction;
  finish(s);
  s.exponent = alpha * s.delta;
  out.arg_bound = alpha * kPi + correction;
  return out;
}

SectorParams power_sector_params(double alpha, double beta, double gamma, double m, double eta) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::OutOfRange, "alpha must be positive");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error(ErrorCode::OutOfRange, "gamma must lie in [0, 1]");
  if (!(m >= -1.0 && m < 1.0)) throw Error(ErrorCode::OutOfRange, "m must lie in [-1, 1)");
  if (!(eta >= 0.0)) throw Error(ErrorCode::OutOfRange, "eta must be non-negative");
  if (!std::isfinite(beta)) throw Error(ErrorCode::InvalidParams, "beta must be finite");
  SectorParams s;
  s.a_mag = std::abs(std::tan(m * kPi / 4.0));
  s.eta = eta;
  const double shift = 2.0 * gamma / kPi * std::atan(eta);
  s.mu1 = alpha * beta * (1.0 - m) + shift;
  s.mu2 = alpha * beta * (1.0 + m) + shift;
  s.beta0 = std::max(0.0, -shift / (alpha * (1.0 - m)));
  finish(s);
  s.exponent = s.delta;
  return s;
}

double eta_infimum(const std::function<Complex(Complex)>& lambda, double beta, std::size_t n) {
  if (!(beta > 0.0)) throw Error(ErrorCode::OutOfRange, "beta must be positive");
  if (n < 4) throw Error(ErrorCode::InvalidParams, "grid too coarse");
  double min_re = std::numeric_limits<double>::infinity();
  double best = quotient(lambda, beta, 0.0, min_re);
  std::size_t best_angle = 0;
  double best_boundary = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const double radius = static_cast<double>(k) / static_cast<double>(n);
      const double q = quotient(lambda, beta, std::polar(radius, t), min_re);
      best = std::min(best, q);
      if (k == n && q < best_boundary) {
        best_boundary = q;
        best_angle = j;
      }
    }
  }
  if (min_re < 0.0) {
    throw Error(ErrorCode::NegativeRealPart, "Re lambda takes negative values on the disk");
  }

  // Golden-section refinement along the unit circle around the best boundary sample.
  const double step = kTwoPi / static_cast<double>(n);
  double lo = (static_cast<double>(best_angle) - 1.0) * step;
  double hi = (static_cast<double>(best_angle) + 1.0) * step;
  auto f = [&](double t) { return quotient(lambda, beta, std::polar(1.0, t), min_re); };
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > 1e-13) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1; x1 = hi - ratio * (hi - lo); f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2; x2 = lo + ratio * (hi - lo); f2 = f(x2);
    }
  }
  best = std::min({best, f1, f2});
  if (min_re < 0.0) {
    throw Error(ErrorCode::NegativeRealPart, "Re lambda takes negative values on the disk");
  }
  return best;
}

double reciprocal_order_sector(double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorCode::OutOfRange, "alpha must lie in [0, 1)");
  if (!(beta > 0.0 && beta <= 1.0)) throw Error(ErrorCode::OutOfRange, "beta must lie in (0, 1]");
  const double ratio = beta / (1.0 - alpha);
  if (ratio > 1.0 + 1e-15) throw Error(ErrorCode::OutOfRange, "beta must not exceed 1 - alpha");
  return 2.0 / kPi * std::asin(std::min(1.0, ratio));
}

DoubleTilt tilt_parameters(double a, double b, double c, double d, double l, double m, double alpha) {
  for (double v : {a, b, c, d}) {
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::OutOfRange, "a, b, c, d must lie in [0, 1]");
  }
  if (!(l >= -1.0 && l <= 1.0 && m >= -1.0 && m <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "l, m must lie in [-1, 1]");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorCode::OutOfRange, "alpha must lie in (0, 1]");
  if (std::abs(a * std::polar(1.0, l * kPi) + b) <= 1e-14 ||
      std::abs(c * std::polar(1.0, m * kPi) + d) <= 1e-14) {
    throw Error(ErrorCode::DegenerateMap, "a e^{il pi} + b and c e^{im pi} + d must not vanish");
  }
  DoubleTilt out;
  out.mu = half_opening(c, d, m * kPi) + half_opening(a, b, l * kPi);
  const double turn = centre_angle(c, d, m * kPi) - centre_angle(a, b, l * kPi);
  out.gamma = out.mu > 0.0 ? turn / out.mu : 0.0;
  out.excess = out.mu - alpha * kPi / 2.0;
  out.admissible = out.excess <= 1e-12;
  return out;
}

DoubleTilt double_subordination_tilt(double a, double b, double c, double d, double l, double m,
                                     double alpha) {
  DoubleTilt out = tilt_parameters(a, b, c, d, l, m, alpha);
  if (!out.admissible) {
    throw Error(ErrorCode::ConditionFailed, "opening exceeds alpha pi/2", out.excess);
  }
  return out;
}

}  // namespace janowski
