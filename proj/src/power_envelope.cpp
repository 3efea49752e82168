#include "janowski/power_envelope.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "janowski/error.hpp"

namespace janowski {
namespace {

constexpr std::size_t kScanPoints = 720;
constexpr double kRootTol = 1e-12;
constexpr double kGoldenTol = 1e-12;

double wrap(double t) {
  t = std::remainder(t, kTwoPi);
  return t <= -kPi ? t + kTwoPi : t;
}

Complex power(Complex w, double alpha) {
  if (w == Complex(0.0)) return 0.0;
  if (alpha == 1.0) return w;
  return std::exp(alpha * std::log(w));
}

// w(t) = C + R e^{it} together with its derivative.
struct Circle {
  Complex center;
  double radius;

  // Points within rounding of the origin are snapped to it, so w^alpha vanishes there.
  Complex at(double t) const {
    const Complex w = center + std::polar(radius, t);
    return std::abs(w) <= 4e-16 * (std::abs(center) + radius) ? Complex(0.0) : w;
  }
  Complex velocity(double t) const { return Complex(0.0, 1.0) * std::polar(radius, t); }
};

// Re(e^{i phi} w(t)^alpha) and its t-derivative.
struct Objective {
  Circle circle;
  double alpha;
  Complex rotation;

  double value(double t) const { return (rotation * power(circle.at(t), alpha)).real(); }
  double slope(double t) const {
    const Complex w = circle.at(t);
    if (w == Complex(0.0)) return std::numeric_limits<double>::quiet_NaN();
    return (rotation * alpha * power(w, alpha) / w * circle.velocity(t)).real();
  }
};

struct Extremes {
  double t_max = 0.0;
  double t_min = 0.0;
  double v_max = 0.0;
  double v_min = 0.0;
  bool fallback = false;
};

double bisect_slope(const Objective& f, double lo, double hi, double f_lo) {
  for (int i = 0; i < 200 && hi - lo > kRootTol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f.slope(mid);
    if (f_mid == 0.0 || !std::isfinite(f_mid)) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double golden(const Objective& f, double lo, double hi, double sign) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = sign * f.value(x1);
  double f2 = sign * f.value(x2);
  while (hi - lo > kGoldenTol) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = sign * f.value(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = sign * f.value(x2);
    }
  }
  return 0.5 * (lo + hi);
}

Extremes fallback_extremes(const Objective& f) {
  constexpr std::size_t n = 8 * kScanPoints;
  const double step = kTwoPi / n;
  std::size_t i_max = 0;
  std::size_t i_min = 0;
  double v_max = -std::numeric_limits<double>::infinity();
  double v_min = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double v = f.value(k * step);
    if (v > v_max) { v_max = v; i_max = k; }
    if (v < v_min) { v_min = v; i_min = k; }
  }
  Extremes e;
  e.fallback = true;
  e.t_max = golden(f, (i_max - 1.0) * step, (i_max + 1.0) * step, 1.0);
  e.t_min = golden(f, (i_min - 1.0) * step, (i_min + 1.0) * step, -1.0);
  e.v_max = f.value(e.t_max);
  e.v_min = f.value(e.t_min);
  e.t_max = wrap(e.t_max);
  e.t_min = wrap(e.t_min);
  return e;
}

std::vector<double> slope_roots(const Objective& f) {
  const double step = kTwoPi / kScanPoints;
  std::vector<double> slopes(kScanPoints + 1);
  for (std::size_t k = 0; k <= kScanPoints; ++k) slopes[k] = f.slope(k * step);
  std::vector<double> roots;
  for (std::size_t k = 0; k < kScanPoints; ++k) {
    const double a = slopes[k];
    const double b = slopes[k + 1];
    if (!std::isfinite(a) || !std::isfinite(b)) continue;
    if (a == 0.0) {
      roots.push_back(k * step);
    } else if ((a < 0.0) != (b < 0.0) && b != 0.0) {
      roots.push_back(bisect_slope(f, k * step, (k + 1) * step, a));
    }
  }
  return roots;
}

// Extremes among the slope roots (plus extra candidates); ties go to the smallest t.
Extremes extremize(const Objective& f, std::span<const double> extra) {
  std::vector<double> candidates = slope_roots(f);
  if (candidates.empty()) return fallback_extremes(f);
  candidates.insert(candidates.end(), extra.begin(), extra.end());
  for (double& t : candidates) t = wrap(t);
  std::sort(candidates.begin(), candidates.end());

  Extremes e;
  e.v_max = -std::numeric_limits<double>::infinity();
  e.v_min = std::numeric_limits<double>::infinity();
  for (double t : candidates) {
    const double v = f.value(t);
    const double tie = 1e-14 * (1.0 + std::abs(v));
    if (v > e.v_max + tie) { e.v_max = v; e.t_max = t; }
    if (v < e.v_min - tie) { e.v_min = v; e.t_min = t; }
  }
  return e;
}

DiskGeometry bounded_disk(const JanowskiParams& p, double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "r must lie in (0, 1]");
  }
  if (std::abs(p.B()) * r >= 1.0 - 1e-12) {
    throw Error(ErrorCode::OutOfRange, "curve is unbounded for |B| r = 1");
  }
  return image_disk(p, r);
}

void require_branch(const JanowskiParams& p) {
  if (!p.argument_safe()) {
    throw Error(ErrorCode::BranchUndefined,
                "origin is interior to the image; |A - B| <= |1 - A conj(B)| and |A| <= 1 required");
  }
}

// Phase mismatch of the extremum conditions: cos for Re, sin for Im.
double residual(const Circle& circle, double alpha, double t, bool real_part) {
  const Complex w = circle.at(t);
  if (w == Complex(0.0)) return 0.0;
  const double phase = std::arg(std::conj(w) * circle.velocity(t)) + alpha * std::arg(w);
  return std::abs(real_part ? std::cos(phase) : std::sin(phase));
}

}  // namespace

Complex eval_powered(const JanowskiParams& p, Complex z) {
  const Complex w = eval_map(p, z);
  if (p.alpha() != 1.0) require_branch(p);
  return (1.0 - p.gamma()) * power(w, p.alpha()) + p.gamma();
}

std::optional<Complex> inverse_powered(const JanowskiParams& p, Complex w) {
  const Complex xi = (w - p.gamma()) / (1.0 - p.gamma());
  Complex base = xi;
  if (p.alpha() != 1.0) {
    if (xi == Complex(0.0)) {
      base = 0.0;
    } else {
      if (std::abs(std::arg(xi)) >= p.alpha() * kPi) return std::nullopt;
      base = std::exp(std::log(xi) / p.alpha());
    }
  }
  const Complex den = p.A() - p.B() * base;
  if (std::abs(den) <= 1e-300) return std::nullopt;
  return (base - 1.0) / den;
}

EnvelopeCurve envelope_curve(const JanowskiParams& p, double r, std::size_t n) {
  const DiskGeometry g = bounded_disk(p, r);
  if (p.alpha() != 1.0) require_branch(p);
  if (n < 2) throw Error(ErrorCode::InvalidParams, "at least two samples required");
  const Circle circle{g.center, g.radius};

  EnvelopeCurve curve;
  curve.r = r;
  curve.samples.resize(n);
  std::vector<double> principal(n);
  double previous = 0.0;
  double unwrapped = 0.0;
  std::size_t nearest = 0;
  double nearest_distance = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    const Complex w = circle.at(t);
    principal[k] = std::arg(w);
    unwrapped = k == 0 ? principal[k] : unwrapped + std::remainder(principal[k] - previous, kTwoPi);
    previous = principal[k];
    CurveSample& s = curve.samples[k];
    s.t = t;
    s.u = w.real();
    s.v = w.imag();
    s.modulus = std::pow(std::abs(w), p.alpha());
    s.phase = unwrapped;
    if (std::abs(w - 1.0) < nearest_distance) {
      nearest_distance = std::abs(w - 1.0);
      nearest = k;
    }
  }
  const double shift =
      kTwoPi * std::round((principal[nearest] - curve.samples[nearest].phase) / kTwoPi);
  for (CurveSample& s : curve.samples) s.phase = p.alpha() * (s.phase + shift);
  return curve;
}

CriticalPoints critical_points(const JanowskiParams& p, double r) {
  const DiskGeometry g = bounded_disk(p, r);
  if (p.alpha() != 1.0) require_branch(p);
  const Circle circle{g.center, g.radius};

  // The origin can sit on the curve (|A| r = 1); its parameter is a candidate extreme.
  std::vector<double> extra;
  if (std::abs(std::abs(g.center) - g.radius) <= 1e-12 * (1.0 + g.radius)) {
    extra.push_back(std::arg(-g.center));
  }
  const Objective re{circle, p.alpha(), Complex(1.0)};
  const Objective im{circle, p.alpha(), Complex(0.0, -1.0)};
  const Extremes e_re = extremize(re, extra);
  const Extremes e_im = extremize(im, extra);
  if (e_re.fallback || e_im.fallback) {
    throw Error(ErrorCode::NoBracket, "no sign change of the derivative on the coarse scan");
  }

  CriticalPoints c;
  c.t1 = e_re.t_max;
  c.t1_min = e_re.t_min;
  c.t2 = e_im.t_max;
  c.t2_min = e_im.t_min;
  c.tau = g.tau;
  c.residual_re = residual(circle, p.alpha(), c.t1, true);
  c.residual_im = residual(circle, p.alpha(), c.t2, false);
  return c;
}

BoundReport envelope_bounds(const JanowskiParams& p, double r) {
  const DiskGeometry g = bounded_disk(p, r);
  require_branch(p);
  const Circle circle{g.center, g.radius};
  const double alpha = p.alpha();

  std::vector<double> extra;
  if (std::abs(std::abs(g.center) - g.radius) <= 1e-12 * (1.0 + g.radius)) {
    extra.push_back(std::arg(-g.center));
  }
  const Objective re{circle, alpha, Complex(1.0)};
  const Objective im{circle, alpha, Complex(0.0, -1.0)};
  const Extremes e_re = extremize(re, extra);
  const Extremes e_im = extremize(im, extra);

  BoundReport report;
  const double zeta = g.zeta.value_or(kPi / 2.0);
  report.arg = {alpha * (g.tau - zeta), alpha * (g.tau + zeta)};
  const double c_abs = std::abs(g.center);
  report.modulus = {std::pow(std::max(0.0, c_abs - g.radius), alpha),
                    std::pow(c_abs + g.radius, alpha)};
  report.re = {e_re.v_min, e_re.v_max};
  report.im = {e_im.v_min, e_im.v_max};
  report.critical.t1 = e_re.t_max;
  report.critical.t1_min = e_re.t_min;
  report.critical.t2 = e_im.t_max;
  report.critical.t2_min = e_im.t_min;
  report.critical.tau = g.tau;
  report.critical.residual_re = residual(circle, alpha, e_re.t_max, true);
  report.critical.residual_im = residual(circle, alpha, e_im.t_max, false);
  report.critical.fallback_used = e_re.fallback || e_im.fallback;
  report.fallback_used = report.critical.fallback_used;

  const Complex gamma = p.gamma();
  if (gamma != Complex(0.0)) {
    const Complex factor = 1.0 - gamma;
    const double scale = std::abs(factor);
    const double turn = std::arg(factor);
    const Objective re_h{circle, alpha, std::polar(1.0, turn)};
    const Objective im_h{circle, alpha, std::polar(1.0, turn - kPi / 2.0)};
    const Extremes s_re = extremize(re_h, extra);
    const Extremes s_im = extremize(im_h, extra);
    ShiftedBounds shifted;
    shifted.arg_shifted = {report.arg.lo + turn, report.arg.hi + turn};
    shifted.re = {scale * s_re.v_min + gamma.real(), scale * s_re.v_max + gamma.real()};
    shifted.im = {scale * s_im.v_min + gamma.imag(), scale * s_im.v_max + gamma.imag()};
    report.shifted = shifted;
    report.fallback_used = report.fallback_used || s_re.fallback || s_im.fallback;
  }
  return report;
}

Sector sector_image(double m, double alpha) {
  if (!(m > -1.0 && m < 1.0)) throw Error(ErrorCode::OutOfRange, "m must lie in (-1, 1)");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorCode::OutOfRange, "alpha must lie in (0, 1]");
  return {-alpha * (1.0 - m) * kPi / 2.0, alpha * (1.0 + m) * kPi / 2.0, alpha * m * kPi / 2.0};
}

double tilt_angle(double b, double m) {
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorCode::OutOfRange, "b must lie in [0, 1]");
  if (!(m >= -1.0 && m <= 1.0)) throw Error(ErrorCode::OutOfRange, "m must lie in [-1, 1]");
  const Complex e = std::polar(1.0, m * kPi);
  if (std::abs(b + e) <= 1e-14) {
    throw Error(ErrorCode::DegenerateMap, "b + e^{i m pi} vanishes");
  }
  return std::atan2(b * e.imag(), b * e.real() + 1.0);
}

bool alpha_nesting(const JanowskiParams& p, double a1, double a2) {
  if (std::abs(p.A()) > 1.0 + 1e-12) throw Error(ErrorCode::OutOfRange, "|A| must not exceed 1");
  if (!(a1 > 0.0 && a1 <= 1.0 && a2 > 0.0 && a2 <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "powers must lie in (0, 1]");
  }
  return a1 <= a2;
}

}  // namespace janowski
