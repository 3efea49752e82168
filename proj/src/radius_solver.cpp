#include "janowski/radius_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "janowski/error.hpp"

namespace janowski {
namespace {

bool at_most(double lhs, double rhs) { return lhs <= rhs + 1e-12 * std::max(1.0, std::abs(rhs)); }

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double f_lo = f(lo);
  for (int i = 0; i < 300 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void check_power(double alpha, const char* message) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorCode::OutOfRange, message);
}

}  // namespace

SubordinationRadius subordination_radius(const RadiusProblem& problem) {
  const JanowskiParams& t = problem.target;
  const JanowskiParams& s = problem.source;
  const Complex A = t.A(), B = t.B(), gamma = t.gamma();
  const Complex C = s.A(), D = s.B(), delta = s.gamma();
  const double alpha = t.alpha();
  const double beta = s.alpha();

  const Complex base = 1.0 - gamma;
  const Complex root = std::pow(base, 1.0 / alpha);
  const Complex root_minus = std::pow(base, 1.0 / alpha - 1.0);
  const double num = alpha * std::abs((A - B) * root);
  const double den =
      std::abs((C - D) * beta * root_minus * (delta - 1.0)) +
      beta * std::abs(root_minus * (A * D * (gamma - 1.0) + B * (C * (1.0 - delta) + D * (delta - gamma))));

  SubordinationRadius out;
  out.unclamped = den > 0.0 ? num / den : std::numeric_limits<double>::infinity();
  out.radius = std::min(out.unclamped, 1.0);
  return out;
}

InclusionResult class_inclusion(Complex A, Complex B, double alpha, Complex C, Complex D, double beta) {
  check_power(alpha, "alpha must lie in (0, 1]");
  check_power(beta, "beta must lie in (0, 1]");
  if (std::abs(A - B) <= 1e-14 || std::abs(C - D) <= 1e-14) {
    throw Error(ErrorCode::DegenerateMap, "A = B or C = D");
  }
  if (std::abs(B) > 1.0 + 1e-12 || std::abs(D) > 1.0 + 1e-12) {
    throw Error(ErrorCode::InvalidParams, "|B| and |D| must not exceed 1");
  }
  InclusionResult out;
  out.lhs = beta * (std::abs(C - D) + std::abs(A * D - B * C));
  out.rhs = alpha * std::abs(A - B);
  out.included = at_most(out.lhs, out.rhs);
  out.into_target_from_strong = at_most(beta * (2.0 + std::abs(A + B)), alpha * std::abs(A - B));
  out.into_strong_from_source = at_most(beta * (std::abs(C + D) + std::abs(C - D)), 2.0 * alpha);
  return out;
}

double uralegaddi_radius(Complex A, Complex B, double alpha, double beta2) {
  check_power(alpha, "alpha must lie in (0, 1]");
  if (!(beta2 > 1.0)) throw Error(ErrorCode::OutOfRange, "beta2 must exceed 1");
  if (std::abs(A - B) <= 1e-14) throw Error(ErrorCode::DegenerateMap, "A = B");
  const double den = 2.0 * (beta2 + 1.0) + std::abs(A - B * (2.0 * beta2 - 1.0));
  return std::min(alpha * std::abs(A - B) / den, 1.0);
}

double reciprocal_radius(Complex A, Complex B, double alpha, double beta2) {
  check_power(alpha, "alpha must lie in (0, 1]");
  if (!(beta2 >= 0.0 && beta2 < 1.0)) throw Error(ErrorCode::OutOfRange, "beta2 must lie in [0, 1)");
  if (std::abs(A - B) <= 1e-14) throw Error(ErrorCode::DegenerateMap, "A = B");
  const double den = 2.0 * beta2 + std::abs(A - B * (2.0 * beta2 - 1.0));
  if (den <= 0.0) return 1.0;
  return std::min(alpha * std::abs(A - B) / den, 1.0);
}

double alpha_star() {
  return bisect([](double a) { return 2.0 * a + 2.0 / kPi * std::atan(a) - 1.0; }, 0.0, 1.0);
}

double alpha_star_without_pi() {
  return bisect([](double a) { return std::atan(a) - (1.0 - 2.0 * a) / 2.0; }, 0.0, 1.0);
}

StarlikeRadius starlike_radius(double A, double B, double beta) {
  if (!(A > 0.0 && A <= 1.0)) throw Error(ErrorCode::OutOfRange, "A must lie in (0, 1]");
  if (!(B >= -1.0 && B < 0.0)) throw Error(ErrorCode::OutOfRange, "B must lie in [-1, 0)");
  StarlikeRadius out;
  out.alpha_star = alpha_star();
  const double a = out.alpha_star;
  if (!(std::atan(a) <= (beta - a) * kPi / 2.0 + 1e-12)) {
    throw Error(ErrorCode::OutOfRange, "beta below 1 - alpha*");
  }
  const double lhs = (a + 2.0 / kPi * std::atan(a)) * kPi / 2.0;
  out.theta = lhs / beta;
  const double s = std::sin(out.theta);
  const double diff = A - B;
  const double ab = A * B;

  auto f = [&](double x) {
    const double arg = diff * x / (1.0 - ab * x * x);
    return beta * std::asin(std::min(1.0, arg)) - lhs;
  };
  if (f(1.0) < 0.0) {
    throw Error(ErrorCode::NoRoot, "the argument bound never reaches the starlike threshold on (0, 1)");
  }
  out.r0 = (-diff + std::sqrt(diff * diff + 4.0 * ab * s * s)) / (2.0 * ab * s);
  out.r0_bisection = bisect(f, 0.0, 1.0);

  // Smallest positive root: no sign change before the bisection root.
  constexpr int kScan = 1000;
  for (int k = 1; k < kScan; ++k) {
    const double x = out.r0_bisection * k / kScan;
    if (f(x) >= 0.0) {
      out.r0_bisection = bisect(f, 0.0, x);
      break;
    }
  }
  out.residual = std::abs(f(out.r0));
  return out;
}

}  // namespace janowski
