#pragma once

#include "janowski/moebius_geometry.hpp"
#include "janowski/types.hpp"

namespace janowski {

// Source (C, D, beta, delta) and target (A, B, alpha, gamma).
struct RadiusProblem {
  JanowskiParams source;
  JanowskiParams target;
};

struct SubordinationRadius {
  double radius = 1.0;
  double unclamped = 1.0;
};

struct InclusionResult {
  bool included = false;
  double lhs = 0.0;  // beta (|C-D| + |AD-BC|)
  double rhs = 0.0;  // alpha |A-B|
  bool into_target_from_strong = false;   // beta (2 + |A+B|) <= alpha |A-B|
  bool into_strong_from_source = false;   // beta (|C+D| + |C-D|) <= 2 alpha
};

struct StarlikeRadius {
  double r0 = 0.0;            // closed form
  double r0_bisection = 0.0;  // root of the defining equation
  double alpha_star = 0.0;
  double theta = 0.0;
  double residual = 0.0;
};

SubordinationRadius subordination_radius(const RadiusProblem& problem);

InclusionResult class_inclusion(Complex A, Complex B, double alpha, Complex C, Complex D,
                                double beta);

double uralegaddi_radius(Complex A, Complex B, double alpha, double beta2);

double reciprocal_radius(Complex A, Complex B, double alpha, double beta2);

// Root of 2a + (2/pi) atan a = 1.
double alpha_star();

// Root of atan a = (1 - 2a)/2, the equation with pi dropped.
double alpha_star_without_pi();

StarlikeRadius starlike_radius(double A, double B, double beta);

}  // namespace janowski
