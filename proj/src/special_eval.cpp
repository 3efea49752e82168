#include "janowski/special_eval.hpp"

#include <algorithm>
#include <cmath>

#include "janowski/error.hpp"
#include "janowski/quadrature.hpp"

namespace janowski {
namespace {

constexpr std::size_t kMaxTerms = 100000;

template <class T>
SeriesResult<T> hyper_series(const std::array<double, 3>& a, const std::array<double, 2>& b, T x,
                             double tol) {
  if (!(std::abs(x) < 1.0)) throw Error(ErrorCode::OutOfRange, "|x| must be below 1");
  for (double v : b) {
    if (v <= 0.0 && v == std::floor(v)) {
      throw Error(ErrorCode::InvalidParams, "lower parameters must not be non-positive integers");
    }
  }
  T term = 1.0;
  T sum = 1.0;
  int small = 0;
  for (std::size_t n = 0; n < kMaxTerms; ++n) {
    const double k = static_cast<double>(n);
    term *= (a[0] + k) * (a[1] + k) * (a[2] + k) / ((b[0] + k) * (b[1] + k) * (k + 1.0)) * x;
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum)) {
      if (++small == 3) return {sum, n + 2};
    } else {
      small = 0;
    }
  }
  throw Error(ErrorCode::NoConvergence, "3F2 series did not converge within 1e5 terms");
}

// (e^x - 1)/x
Complex expm1_over(Complex x) {
  if (std::abs(x) < 1e-5) return 1.0 + x * (0.5 + x * (1.0 / 6.0 + x / 24.0));
  return (std::exp(x) - 1.0) / x;
}

// (Log(1+At) - Log(1+Bt))/t, by its series near t = 0.
Complex log_ratio_over_t(Complex A, Complex B, Complex t) {
  if (std::abs(t) < 1e-2) {
    Complex sum = 0.0;
    Complex a_pow = 1.0, b_pow = 1.0, t_pow = 1.0;
    for (int k = 1; k <= 16; ++k) {
      a_pow *= A;
      b_pow *= B;
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      sum += sign * (a_pow - b_pow) * t_pow / static_cast<double>(k);
      t_pow *= t;
    }
    return sum;
  }
  return (std::log(1.0 + A * t) - std::log(1.0 + B * t)) / t;
}

// (J(t) - 1)/t with J = ((1+At)/(1+Bt))^alpha.
Complex janowski_minus_one_over_t(Complex A, Complex B, double alpha, Complex t) {
  const Complex l = log_ratio_over_t(A, B, t);
  return alpha * l * expm1_over(alpha * t * l);
}

Complex radial(const std::function<Complex(Complex)>& g, Complex w) {
  if (w == Complex(0.0)) return 0.0;
  return w * quadrature::integrate([&](double u) { return g(u * w); }, 0.0, 1.0);
}

void check_K_inputs(Complex A, double b, double alpha, Complex z) {
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorCode::OutOfRange, "b must lie in [0, 1]");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorCode::OutOfRange, "alpha must lie in (0, 1]");
  if (std::abs(A) > 1.0 + 1e-12) throw Error(ErrorCode::BranchUndefined, "|A| must not exceed 1");
  if (b * std::abs(z) >= 1.0) throw Error(ErrorCode::OutOfRange, "|z| must be below 1/b");
  if (std::abs(A * z) > 1.0 + 1e-12 || std::abs(1.0 + A * z) <= 1e-14) {
    throw Error(ErrorCode::OutOfRange, "1 + At must stay off zero along [0, z]");
  }
}

}  // namespace

SeriesResult<double> hyper_3f2(const std::array<double, 3>& upper, const std::array<double, 2>& lower,
                               double x, double tol) {
  return hyper_series<double>(upper, lower, x, tol);
}

SeriesResult<Complex> hyper_3f2(const std::array<double, 3>& upper,
                                const std::array<double, 2>& lower, Complex x, double tol) {
  return hyper_series<Complex>(upper, lower, x, tol);
}

Complex K_closed_form(Complex A, double b, Complex z) {
  check_K_inputs(A, b, 1.0, z);
  const bool a_zero = A == Complex(0.0);
  const bool b_zero = b == 0.0;
  if (a_zero && b_zero) return z;
  if (b_zero) return z * expm1_over(A * z);
  if (a_zero) return -std::log(1.0 - b * z) / b;
  return (std::exp(-(A / b) * std::log(1.0 - b * z)) - 1.0) / A;
}

Complex K_quadrature(Complex A, double b, double alpha, Complex z) {
  check_K_inputs(A, b, alpha, z);
  if (z == Complex(0.0)) return 0.0;
  const Complex B = -b;
  auto inner = [&](Complex w) {
    return radial([&](Complex t) { return janowski_minus_one_over_t(A, B, alpha, t); }, w);
  };
  return radial([&](Complex w) { return std::exp(inner(w)); }, z);
}

Complex K_function(Complex A, double b, double alpha, Complex z) {
  if (alpha == 1.0) return K_closed_form(A, b, z);
  return K_quadrature(A, b, alpha, z);
}

Complex K_hypergeometric(Complex A, double b, double alpha, Complex z) {
  check_K_inputs(A, b, alpha, z);
  if (A != Complex(0.0) && b != 0.0) {
    throw Error(ErrorCode::InvalidParams, "hypergeometric form needs A = 0 or b = 0");
  }
  if (z == Complex(0.0)) return 0.0;
  auto exponent = [&](Complex w) -> Complex {
    if (b == 0.0) {
      return alpha * A * w * hyper_3f2({1.0 - alpha, 1.0, 1.0}, {2.0, 2.0}, -A * w).value;
    }
    return alpha * b * w * hyper_3f2({1.0 + alpha, 1.0, 1.0}, {2.0, 2.0}, b * w).value;
  };
  return radial([&](Complex w) { return std::exp(exponent(w)); }, z);
}

double macgregor_gamma(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw Error(ErrorCode::OutOfRange, "beta must lie in [0, 1)");
  const double x = 1.0 - 2.0 * beta;
  if (x == 0.0) return 1.0 / (2.0 * std::log(2.0));
  if (std::abs(x) < 1e-4) return x / (2.0 * std::expm1(x * std::log(2.0)));
  return x / (2.0 * (std::pow(2.0, x) - 1.0));
}

bool DominantSpec::satisfies_dominant_conditions(double slack) const noexcept {
  if (eta == Complex(0.0)) return false;
  return (mu / eta).real() > 0.0 && delta.real() > 0.0 && rho.real() >= -slack &&
         std::abs(A) <= 1.0 + slack && (1.0 + A * b).real() >= std::abs(A + b) - slack;
}

Complex dominant_h(const DominantSpec& s, Complex z) {
  if (std::abs(s.A) > 1.0 + 1e-12) throw Error(ErrorCode::BranchUndefined, "|A| must not exceed 1");
  if (!(s.b >= 0.0 && s.b <= 1.0)) throw Error(ErrorCode::OutOfRange, "b must lie in [0, 1]");
  if (!(s.alpha >= 0.0 && s.alpha <= 1.0 && s.gamma >= 0.0 && s.gamma <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "alpha and gamma must lie in [0, 1]");
  }
  if (std::abs(s.A + s.b) <= 1e-14) throw Error(ErrorCode::DegenerateMap, "A + b vanishes");
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::OutOfRange, "|z| must be below 1");
  const Complex num = 1.0 + s.A * z;
  const Complex den = 1.0 - s.b * z;
  const Complex log_g = std::log(num) - std::log(den);
  const Complex bracket = s.mu * s.delta + s.mu * s.rho * std::exp(s.gamma * log_g) +
                          s.eta * s.gamma * (s.A + s.b) * z / (num * den);
  return std::exp(s.alpha * s.gamma * log_g) * bracket;
}

Complex best_dominant_q(const std::function<Complex(Complex)>& lambda, double alpha, Complex A,
                        Complex B, Complex beta, Complex gamma, Complex z) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorCode::OutOfRange, "alpha must lie in (0, 1]");
  if (std::abs(A - B) <= 1e-14) throw Error(ErrorCode::DegenerateMap, "A = B");
  if (std::abs(B) > 1.0 + 1e-12) throw Error(ErrorCode::InvalidParams, "|B| must not exceed 1");
  if (std::abs(A - B) > 1.0 - (A * std::conj(B)).real() + 1e-12) {
    throw Error(ErrorCode::InvalidParams, "|A - B| must not exceed 1 - Re(A conj(B))");
  }
  if (beta == Complex(0.0) || !((beta + gamma).real() > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "beta must be nonzero with Re(beta + gamma) > 0");
  }
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::OutOfRange, "|z| must be below 1");
  if (z == Complex(0.0)) return 1.0;

  const double reach = std::abs(z);
  for (int i = 0; i <= 16; ++i) {
    for (int j = 0; j < 64; ++j) {
      const Complex t = std::polar(reach * i / 16.0, kTwoPi * j / 64.0);
      if (!(lambda(t).real() > 0.0)) {
        throw Error(ErrorCode::NonCaratheodoryLambda, "Re lambda must be positive");
      }
      if (i == 0) break;
    }
  }

  // S(w) = log(g(w)/w) + int_0^w (J(t) - 1)/(t lambda(t)) dt, so H(w) = w exp(S(w)).
  auto S = [&](Complex w) {
    return radial(
        [&](Complex t) {
          const Complex lam = lambda(t);
          return ((1.0 / lam - 1.0) / t) + janowski_minus_one_over_t(A, B, alpha, t) / lam;
        },
        w);
  };
  const Complex denominator =
      quadrature::integrate([&](double s) { return std::exp(S(s * z)) / lambda(s * z); }, 0.0, 1.0);
  return std::exp(S(z)) / denominator;
}

bool silverman_inclusion(Complex A, double b, double alpha, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw Error(ErrorCode::OutOfRange, "beta must lie in (0, 1]");
  return beta <= silverman_bound(A, b, alpha) * (1.0 + 1e-12);
}

double silverman_bound(Complex A, double b, double alpha) {
  if (std::abs(A) > 1.0 + 1e-12) throw Error(ErrorCode::OutOfRange, "|A| must not exceed 1");
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorCode::OutOfRange, "b must lie in [0, 1]");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorCode::OutOfRange, "alpha must lie in (0, 1]");
  if (std::abs(A + b) <= 1e-14) throw Error(ErrorCode::DegenerateMap, "A + b vanishes");
  return alpha * std::abs(A + b) /
         (std::pow(1.0 + b, alpha - 1.0) * std::pow(1.0 + std::abs(A), alpha + 1.0));
}

}  // namespace janowski
