#include "doctest.h"

#include <cmath>

#include "janowski/error.hpp"
#include "janowski/rng.hpp"
#include "janowski/special_eval.hpp"

using namespace janowski;
using doctest::Approx;

namespace {

// Li2 by its defining series.
double dilog(double x) {
  double sum = 0.0, power = 1.0;
  for (int k = 1; k < 2000; ++k) {
    power *= x;
    sum += power / (static_cast<double>(k) * k);
  }
  return sum;
}

}  // namespace

TEST_CASE("3F2 series") {
  CHECK(hyper_3f2({0.3, 1.7, 2.2}, {1.5, 0.4}, 0.0).value == 1.0);
  const auto half = hyper_3f2({1.0, 1.0, 1.0}, {2.0, 2.0}, 0.5);
  CHECK(half.value == Approx(2.0 * (kPi * kPi / 12.0 - std::log(2.0) * std::log(2.0) / 2.0)).epsilon(1e-14));
  CHECK(half.value == Approx(1.16448105293002501).epsilon(1e-14));
  CHECK(half.terms > 3);
  for (int k = 1; k <= 9; ++k) {
    const double x = 0.1 * k;
    CHECK(x * hyper_3f2({1.0, 1.0, 1.0}, {2.0, 2.0}, x).value == Approx(dilog(x)).epsilon(1e-13));
    // {1,1,2},{2,2} sums x^n/(n+1).
    CHECK(hyper_3f2({1.0, 1.0, 2.0}, {2.0, 2.0}, x).value == Approx(-std::log1p(-x) / x).epsilon(1e-13));
  }
  const auto c = hyper_3f2({1.0, 1.0, 1.0}, {2.0, 2.0}, Complex(0.0, 0.5));
  CHECK(std::abs(c.value - Complex(1.0, 0.0)) < 0.2);
  CHECK_THROWS_AS(hyper_3f2({1.0, 1.0, 1.0}, {2.0, 2.0}, 1.0), Error);
  CHECK_THROWS_AS(hyper_3f2({1.0, 1.0, 1.0}, {-1.0, 2.0}, 0.5), Error);
  try {
    hyper_3f2({1.0, 1.0, 1.0}, {2.0, 2.0}, 0.99999, 1e-15);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoConvergence);
  }
}

TEST_CASE("K closed forms") {
  CHECK(K_function(Complex(0.4, 0.2), 0.5, 0.7, 0.0) == Complex(0.0));
  CHECK(std::abs(K_function(1.0, 1.0, 1.0, 0.5) - Complex(1.0)) < 1e-14);
  CHECK(std::abs(K_function(1.0, 0.0, 1.0, 1.0) - Complex(std::exp(1.0) - 1.0)) < 1e-14);
  CHECK(std::abs(K_function(0.0, 0.5, 1.0, 0.5) + Complex(std::log(0.75) / 0.5)) < 1e-14);
}

TEST_CASE("K quadrature matches the closed forms") {
  CounterRng rng(81);
  struct Case {
    bool a_zero;
    bool b_zero;
  };
  for (const Case c : {Case{false, false}, Case{true, false}, Case{false, true}}) {
    for (int k = 0; k < 20; ++k) {
      const Complex A = c.a_zero ? Complex(0.0) : rng.disk(1.0);
      const double b = c.b_zero ? 0.0 : rng.uniform(0.05, 1.0);
      const Complex z = rng.disk(0.9);
      CHECK(std::abs(K_quadrature(A, b, 1.0, z) - K_closed_form(A, b, z)) < 1e-8);
    }
  }
}

TEST_CASE("K hypergeometric form matches quadrature for alpha < 1") {
  CounterRng rng(83);
  for (int k = 0; k < 10; ++k) {
    const double alpha = rng.uniform(0.1, 0.95);
    const Complex z = rng.disk(0.8);
    const Complex A = rng.disk(1.0);
    CHECK(std::abs(K_hypergeometric(A, 0.0, alpha, z) - K_quadrature(A, 0.0, alpha, z)) < 1e-8);
    const double b = rng.uniform(0.1, 1.0);
    CHECK(std::abs(K_hypergeometric(0.0, b, alpha, z) - K_quadrature(0.0, b, alpha, z)) < 1e-8);
  }
  CHECK_THROWS_AS(K_hypergeometric(0.5, 0.5, 0.5, 0.3), Error);
}

TEST_CASE("K input checks") {
  CHECK_THROWS_AS(K_function(0.5, 1.0, 0.5, 1.0), Error);
  CHECK_THROWS_AS(K_function(1.5, 0.5, 0.5, 0.3), Error);
  CHECK_THROWS_AS(K_function(0.5, 1.5, 0.5, 0.3), Error);
}

TEST_CASE("MacGregor gamma") {
  CHECK(macgregor_gamma(0.5) == Approx(1.0 / (2.0 * std::log(2.0))).epsilon(1e-15));
  CHECK(std::abs(macgregor_gamma(0.5) - 0.721347520444481704) < 1e-9);
  CHECK(macgregor_gamma(0.0) == 0.5);
  CHECK(macgregor_gamma(0.25) == Approx((std::sqrt(2.0) + 1.0) / 4.0).epsilon(1e-15));
  CHECK(std::abs(macgregor_gamma(0.5 + 1e-6) - macgregor_gamma(0.5)) < 1e-5);
  CHECK(std::abs(macgregor_gamma(0.5 - 1e-6) - macgregor_gamma(0.5)) < 1e-5);
  for (double beta = 0.0; beta < 0.99; beta += 0.01) {
    CHECK(macgregor_gamma(beta + 0.005) > macgregor_gamma(beta));
  }
  CHECK_THROWS_AS(macgregor_gamma(1.0), Error);
}

TEST_CASE("dominant h") {
  DominantSpec s;
  s.mu = Complex(0.8, 0.1);
  s.delta = Complex(1.2, -0.1);
  s.rho = Complex(0.4, 0.2);
  s.eta = Complex(0.5, 0.3);
  s.alpha = 0.6;
  s.gamma = 0.7;
  s.A = Complex(0.3, 0.4);
  s.b = 0.5;
  CHECK(dominant_h(s, 0.0) == s.mu * s.delta + s.mu * s.rho);

  // Linear-operator case: mu = 1 - lambda, delta = 1, rho = 0, eta = lambda, alpha = 1.
  DominantSpec lin;
  lin.mu = 0.5;
  lin.delta = 1.0;
  lin.rho = 0.0;
  lin.eta = 0.5;
  lin.alpha = 1.0;
  lin.gamma = 1.0;
  lin.A = 1.0;
  lin.b = 1.0;
  const Complex z(0.5);
  CHECK(std::abs(dominant_h(lin, z) - Complex(3.5)) < 1e-14);
  // Twice that is (1 + 2z - z^2)/(1 - z)^2, the dominant for p + z p'.
  CHECK(std::abs(2.0 * dominant_h(lin, z) - (1.0 + 2.0 * z - z * z) / ((1.0 - z) * (1.0 - z))) < 1e-14);

  DominantSpec flat = s;
  flat.rho = 0.0;
  flat.gamma = 0.0;
  CHECK(std::abs(dominant_h(flat, Complex(0.3, -0.5)) - flat.mu * flat.delta) < 1e-15);

  CHECK(lin.satisfies_dominant_conditions());
  DominantSpec bad = lin;
  bad.delta = -1.0;
  CHECK_FALSE(bad.satisfies_dominant_conditions());
  CHECK_THROWS_AS(dominant_h(lin, 1.0), Error);
}

TEST_CASE("best dominant") {
  const auto one = [](Complex) { return Complex(1.0); };
  for (Complex z : {Complex(0.5), Complex(0.3, 0.6), Complex(-0.7, 0.2), Complex(0.0, -0.8)}) {
    const Complex expected = z * std::exp(z) / (std::exp(z) - 1.0);
    CHECK(std::abs(best_dominant_q(one, 1.0, 1.0, 0.0, 1.0, 0.0, z) - expected) < 1e-8);
  }
  CHECK(std::abs(best_dominant_q(one, 1.0, 1.0, 0.0, 1.0, 0.0, 0.5) - Complex(1.27074704126839914)) < 1e-10);
  CHECK(best_dominant_q(one, 0.5, Complex(0.3, 0.2), -0.5, 1.0, 0.2, 0.0) == Complex(1.0));
  CHECK(std::abs(best_dominant_q(one, 0.5, Complex(0.3, 0.2), -0.5, 1.0, 0.2, 1e-6) - 1.0) < 1e-5);
  // With lambda = 1, beta = 1, gamma = 0 the best dominant is z K'(z)/K(z).
  for (Complex z : {Complex(0.4, 0.1), Complex(-0.3, 0.5)}) {
    const double alpha = 0.6;
    const Complex A(0.5, 0.2);
    const double h = 1e-5;
    const Complex K = K_quadrature(A, 0.0, alpha, z);
    const Complex dK = (K_quadrature(A, 0.0, alpha, z + h) - K_quadrature(A, 0.0, alpha, z - h)) / (2.0 * h);
    CHECK(std::abs(best_dominant_q(one, alpha, A, 0.0, 1.0, 0.0, z) - z * dK / K) < 1e-6);
  }
  const auto negative = [](Complex z) { return 0.2 + z; };
  try {
    best_dominant_q(negative, 1.0, 1.0, 0.0, 1.0, 0.0, 0.3);
    FAIL("expected NonCaratheodoryLambda");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCaratheodoryLambda);
  }
  CHECK_THROWS_AS(best_dominant_q(one, 1.0, 1.0, 0.0, -1.0, 0.0, 0.3), Error);
}

TEST_CASE("Silverman inclusion") {
  CHECK(silverman_inclusion(1.0, 1.0, 1.0, 0.5));
  CHECK_FALSE(silverman_inclusion(1.0, 1.0, 1.0, 0.51));
  CHECK(silverman_bound(1.0, 1.0, 1.0) == Approx(0.5));
  CHECK(silverman_inclusion(Complex(0.2, -0.7), 0.3, 0.4, 1e-9));
  CHECK_THROWS_AS(silverman_inclusion(-0.5, 0.5, 1.0, 0.5), Error);
}
