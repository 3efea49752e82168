#pragma once

#include <cstddef>
#include <functional>

#include "janowski/types.hpp"

namespace janowski {

struct SectorParams {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double mu = 0.0;
  double delta = 0.0;     // (mu1 + mu2) / 2
  double exponent = 0.0;  // power of the hypothesis dominant
  double a_mag = 0.0;     // |tan(m pi / 4)|
  double beta0 = 0.0;
  double eta = 0.0;
};

struct DerivativeSectorResult {
  SectorParams params;
  double arg_bound = 0.0;  // raw bound on |arg(z f'/f)|, may exceed pi/2
};

struct DoubleTilt {
  double mu = 0.0;
  double gamma = 0.0;
  bool admissible = false;  // mu <= alpha pi / 2
  double excess = 0.0;      // mu - alpha pi / 2
};

// f'/g' sector hypothesis implying f/g in the oblique power domain.
// beta in (0, 1]; arg_ratio bounds arg(g/(z g')).
SectorParams quotient_sector_params(double alpha, double m, double beta, double arg_ratio);

DerivativeSectorResult derivative_sector_params(double alpha, double m);

// p^alpha (1 + lambda z p'/p)^gamma sector hypothesis implying p^{1/beta} oblique.
SectorParams power_sector_params(double alpha, double beta, double gamma, double m, double eta);

// Grid infimum of beta Re(lambda)/(1 + beta |Im lambda|) over the closed disk,
// refined along the boundary.
double eta_infimum(const std::function<Complex(Complex)>& lambda, double beta, std::size_t n = 256);

double reciprocal_order_sector(double alpha, double beta);

DoubleTilt tilt_parameters(double a, double b, double c, double d, double l, double m, double alpha);

// As tilt_parameters, but throws ConditionFailed (carrying the excess) when mu > alpha pi/2.
DoubleTilt double_subordination_tilt(double a, double b, double c, double d, double l, double m,
                                     double alpha);

}  // namespace janowski
