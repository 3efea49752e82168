#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "janowski/types.hpp"

namespace janowski {

template <class T>
struct SeriesResult {
  T value{};
  std::size_t terms = 0;
};

SeriesResult<double> hyper_3f2(const std::array<double, 3>& upper, const std::array<double, 2>& lower,
                               double x, double tol = 1e-15);

SeriesResult<Complex> hyper_3f2(const std::array<double, 3>& upper,
                                const std::array<double, 2>& lower, Complex x, double tol = 1e-15);

// K(z) = int_0^z exp(int_0^w (J(t) - 1)/t dt) dw with J(t) = ((1+At)/(1-bt))^alpha.
// alpha = 1 uses the closed forms.
Complex K_function(Complex A, double b, double alpha, Complex z);
Complex K_quadrature(Complex A, double b, double alpha, Complex z);
Complex K_closed_form(Complex A, double b, Complex z);
// Inner exponent through 3F2; only for A = 0 or b = 0.
Complex K_hypergeometric(Complex A, double b, double alpha, Complex z);

double macgregor_gamma(double beta);

struct DominantSpec {
  Complex mu{1.0};
  Complex delta{1.0};
  Complex rho{0.0};
  Complex eta{1.0};
  double alpha = 1.0;
  double gamma = 1.0;
  Complex A{1.0};
  double b = 1.0;

  // Re(mu/eta) > 0, Re delta > 0, Re rho >= 0, Re(1+Ab) >= |A+b|.
  bool satisfies_dominant_conditions(double slack = 1e-12) const noexcept;
};

Complex dominant_h(const DominantSpec& spec, Complex z);

Complex best_dominant_q(const std::function<Complex(Complex)>& lambda, double alpha, Complex A,
                        Complex B, Complex beta, Complex gamma, Complex z);

bool silverman_inclusion(Complex A, double b, double alpha, double beta);

// Largest beta passing silverman_inclusion.
double silverman_bound(Complex A, double b, double alpha);

}  // namespace janowski
