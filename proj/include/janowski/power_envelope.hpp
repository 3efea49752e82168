#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "janowski/moebius_geometry.hpp"
#include "janowski/types.hpp"

namespace janowski {

struct CurveSample {
  double t = 0.0;
  double u = 0.0;
  double v = 0.0;
  double modulus = 0.0;  // M(t)
  double phase = 0.0;    // N(t), continuous
};

struct EnvelopeCurve {
  double r = 1.0;
  std::vector<CurveSample> samples;
};

// Circle parameters t (w(t) = C + R e^{it}) of the extremes; angles in (-pi, pi].
struct CriticalPoints {
  double t1 = 0.0;      // max of Re
  double t1_min = 0.0;  // min of Re
  double t2 = 0.0;      // max of Im
  double t2_min = 0.0;  // min of Im
  double tau = 0.0;     // max of modulus
  double residual_re = 0.0;
  double residual_im = 0.0;
  bool fallback_used = false;
};

// Bounds for h itself when gamma != 0; modulus is not affine and is omitted.
struct ShiftedBounds {
  Interval arg_shifted;  // arg(h - gamma)
  Interval re;
  Interval im;
};

struct BoundReport {
  Interval arg;
  Interval modulus;
  Interval re;
  Interval im;
  CriticalPoints critical;
  bool fallback_used = false;
  std::optional<ShiftedBounds> shifted;
};

struct Sector {
  double lo = 0.0;
  double hi = 0.0;
  // Re(e^{-i rotation} w) > 0 contains the sector.
  double rotation = 0.0;
};

// (1-gamma) w^alpha + gamma with the principal branch, continuous on argument-safe images.
Complex eval_powered(const JanowskiParams& p, Complex z);

// z with eval_powered(p, z) = w, or nullopt when w is outside the range of the branch
// (or maps to the pole).
std::optional<Complex> inverse_powered(const JanowskiParams& p, Complex w);

EnvelopeCurve envelope_curve(const JanowskiParams& p, double r, std::size_t n);

CriticalPoints critical_points(const JanowskiParams& p, double r);

BoundReport envelope_bounds(const JanowskiParams& p, double r);

Sector sector_image(double m, double alpha);

double tilt_angle(double b, double m);

bool alpha_nesting(const JanowskiParams& p, double a1, double a2);

}  // namespace janowski
