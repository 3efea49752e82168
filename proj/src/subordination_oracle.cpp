#include "janowski/subordination_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "janowski/error.hpp"
#include "janowski/rng.hpp"

namespace janowski {
namespace {

constexpr double kSchwarzCap = 1.0 - 1e-6;
constexpr std::uint64_t kSchwarzStream = 0x5c4a;
constexpr double kInf = std::numeric_limits<double>::infinity();

Complex poly(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double boundary_modulus(const std::vector<Complex>& c, double t) {
  return std::abs(poly(c, std::polar(1.0, t)));
}

double refine_max(const std::vector<Complex>& c, double lo, double hi) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = boundary_modulus(c, x1);
  double f2 = boundary_modulus(c, x2);
  while (hi - lo > 1e-12) {
    if (f1 > f2) {
      hi = x2; x2 = x1; f2 = f1; x1 = hi - ratio * (hi - lo); f1 = boundary_modulus(c, x1);
    } else {
      lo = x1; x1 = x2; f1 = f2; x2 = lo + ratio * (hi - lo); f2 = boundary_modulus(c, x2);
    }
  }
  return std::max(f1, f2);
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

SchwarzPoly::SchwarzPoly(std::vector<Complex> coefficients, double scale)
    : coefficients_(std::move(coefficients)), scale_(scale) {}

SchwarzPoly SchwarzPoly::identity() { return SchwarzPoly({Complex(1.0)}, kSchwarzCap); }

Complex SchwarzPoly::operator()(Complex z) const noexcept {
  return scale_ * z * poly(coefficients_, z);
}

Complex SchwarzPoly::derivative(Complex z) const noexcept {
  Complex acc = 0.0;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    acc = acc * z + static_cast<double>(k + 1) * coefficients_[k];
  }
  return scale_ * acc;
}

Complex SchwarzPoly::integral_over_t(Complex z) const noexcept {
  Complex acc = 0.0;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    acc = acc * z + coefficients_[k] / static_cast<double>(k + 1);
  }
  return scale_ * z * acc;
}

SchwarzPoly SchwarzPoly::scaled(double factor) const { return {coefficients_, scale_ * factor}; }

SchwarzPoly random_schwarz(std::uint64_t seed, int degree) {
  if (degree < 1 || degree > 16) throw Error(ErrorCode::OutOfRange, "degree must lie in 1..16");
  CounterRng rng(seed, kSchwarzStream);
  std::vector<Complex> c(static_cast<std::size_t>(degree));
  for (Complex& v : c) v = rng.unit_square();
  if (std::all_of(c.begin(), c.end(), [](Complex v) { return v == Complex(0.0); })) c[0] = 1.0;

  constexpr std::size_t n = 4096;
  const double step = kTwoPi / n;
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = boundary_modulus(c, k * step);
  double sup = *std::max_element(values.begin(), values.end());
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = values[(k + n - 1) % n];
    const double next = values[(k + 1) % n];
    if (values[k] >= prev && values[k] >= next) {
      sup = std::max(sup, refine_max(c, (k - 1.0) * step, (k + 1.0) * step));
    }
  }
  return SchwarzPoly(std::move(c), kSchwarzCap / sup);
}

double sampled_sup(const SchwarzPoly& omega, std::size_t n) {
  double sup = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sup = std::max(sup, std::abs(omega(std::polar(1.0, kTwoPi * k / n))));
  }
  return sup;
}

SubordinationCheck verify_subordination(std::span<const Complex> samples,
                                        const JanowskiParams& target, double r, double tol) {
  if (target.alpha() != 1.0 && !target.argument_safe()) {
    throw Error(ErrorCode::BranchUndefined, "target power has no continuous branch");
  }
  SubordinationCheck check;
  for (Complex w : samples) {
    const auto pre = inverse_powered(target, w);
    if (!pre || !finite(*pre)) {
      ++check.outside;
      check.max_preimage = kInf;
      continue;
    }
    check.max_preimage = std::max(check.max_preimage, std::abs(*pre));
  }
  check.margin = r - check.max_preimage;
  check.holds = check.outside == 0 && check.max_preimage <= r + tol;
  return check;
}

std::vector<Complex> sample_circle(const std::function<Complex(Complex)>& f, double r,
                                   std::size_t n) {
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = f(std::polar(r, kTwoPi * k / n));
  return out;
}

BoundReport empirical_bounds(const JanowskiParams& p, double r, std::size_t n) {
  if (!p.argument_safe()) throw Error(ErrorCode::BranchUndefined, "origin is interior to the image");
  if (n < 2) throw Error(ErrorCode::InvalidParams, "at least two samples required");
  BoundReport report;
  report.arg = {kInf, -kInf};
  report.modulus = {kInf, -kInf};
  report.re = {kInf, -kInf};
  report.im = {kInf, -kInf};
  double previous = 0.0;
  double unwrapped = 0.0;
  std::vector<double> phase(n);
  std::size_t nearest = 0;
  double nearest_distance = kInf;
  std::vector<Complex> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex z = std::polar(r, kTwoPi * k / n);
    const Complex w = (1.0 + p.A() * z) / (1.0 + p.B() * z);
    values[k] = std::pow(w, p.alpha());
    const double a = std::arg(w);
    unwrapped = k == 0 ? a : unwrapped + std::remainder(a - previous, kTwoPi);
    previous = a;
    phase[k] = unwrapped;
    if (std::abs(w - 1.0) < nearest_distance) {
      nearest_distance = std::abs(w - 1.0);
      nearest = k;
    }
  }
  const double shift = kTwoPi * std::round((std::arg(values[nearest]) / p.alpha() - phase[nearest]) / kTwoPi);
  auto update = [](Interval& iv, double v, double t, double* t_max, double* t_min) {
    if (v < iv.lo) { iv.lo = v; if (t_min) *t_min = t; }
    if (v > iv.hi) { iv.hi = v; if (t_max) *t_max = t; }
  };
  for (std::size_t k = 0; k < n; ++k) {
    const double t = kTwoPi * k / n;
    const Complex v = values[k];
    update(report.arg, p.alpha() * (phase[k] + shift), t, nullptr, nullptr);
    update(report.modulus, std::abs(v), t, &report.critical.tau, nullptr);
    update(report.re, v.real(), t, &report.critical.t1, &report.critical.t1_min);
    update(report.im, v.imag(), t, &report.critical.t2, &report.critical.t2_min);
  }
  return report;
}

std::optional<std::vector<double>> continuous_arg_on_circle(
    const std::function<Complex(Complex)>& f, double r, std::size_t n) {
  Complex value = f(0.0);
  if (value == Complex(0.0) || !finite(value)) return std::nullopt;
  double phase = std::arg(value);

  // Follows f along path(s) from s_from to s_to, halving steps that turn by more than pi/4.
  auto advance = [&](auto&& self, const auto& path, double s_from, double s_to, int depth) -> bool {
    const Complex next = f(path(s_to));
    if (next == Complex(0.0) || !finite(next)) return false;
    const double turn = std::arg(next / value);
    if (std::abs(turn) > kPi / 4.0) {
      if (depth >= 24) return false;
      const double mid = 0.5 * (s_from + s_to);
      return self(self, path, s_from, mid, depth + 1) && self(self, path, mid, s_to, depth + 1);
    }
    phase += turn;
    value = next;
    return true;
  };

  auto radial = [](double s) { return Complex(s, 0.0); };
  constexpr int kRadialSteps = 256;
  for (int i = 0; i < kRadialSteps; ++i) {
    if (!advance(advance, radial, r * i / kRadialSteps, r * (i + 1) / kRadialSteps, 0)) {
      return std::nullopt;
    }
  }
  auto circle = [r](double s) { return std::polar(r, s); };
  std::vector<double> phases(n);
  const double start = phase;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && !advance(advance, circle, kTwoPi * (k - 1) / n, kTwoPi * k / n, 0)) {
      return std::nullopt;
    }
    phases[k] = phase;
  }
  if (!advance(advance, circle, kTwoPi * (n - 1) / n, kTwoPi, 0)) return std::nullopt;
  if (std::abs(phase - start) > kPi) return std::nullopt;
  return phases;
}

double sector_margin(std::span<const double> phases, double lo, double hi) {
  double margin = kInf;
  for (double a : phases) margin = std::min({margin, a - lo, hi - a});
  return margin;
}

TrackedCheck track_preimage(const std::function<Complex(Complex)>& f,
                            const std::function<Complex(Complex)>& h, double r, std::size_t n) {
  TrackedCheck out;
  const Complex w0 = f(0.0);
  const Complex h0 = h(0.0);
  if (std::abs(w0 - h0) > 1e-9 * (1.0 + std::abs(h0))) {
    out.max_preimage = kInf;
    return out;
  }

  enum class Step { Converged, Failed, LeftDisk };
  Complex zeta = 0.0;
  bool escaped = false;

  auto safe_h = [&](Complex z, Complex& value) {
    if (!(std::abs(z) < 1.0)) return false;
    try {
      value = h(z);
    } catch (const Error&) {
      return false;
    }
    return finite(value);
  };
  auto newton = [&](Complex w, Complex& z) {
    constexpr double eps = 1e-7;
    for (int it = 0; it < 50; ++it) {
      Complex hz, hp, hm;
      if (!safe_h(z, hz)) return Step::LeftDisk;
      if (std::abs(hz - w) <= 1e-11 * (1.0 + std::abs(w))) return Step::Converged;
      if (!safe_h(z + eps, hp) || !safe_h(z - eps, hm)) return Step::LeftDisk;
      const Complex slope = (hp - hm) / (2.0 * eps);
      if (slope == Complex(0.0) || !finite(slope)) return Step::Failed;
      z -= (hz - w) / slope;
    }
    return Step::Failed;
  };
  auto advance = [&](auto&& self, const auto& path, double s_from, double s_to, int depth) -> bool {
    const Complex w = f(path(s_to));
    Complex z = zeta;
    const Step step = finite(w) ? newton(w, z) : Step::Failed;
    if (step == Step::Converged && std::abs(z - zeta) < 0.05) {
      zeta = z;
      return true;
    }
    if (depth >= 20) {
      if (step == Step::LeftDisk) escaped = true;
      return false;
    }
    const double mid = 0.5 * (s_from + s_to);
    return self(self, path, s_from, mid, depth + 1) && self(self, path, mid, s_to, depth + 1);
  };

  auto radial = [](double s) { return Complex(s, 0.0); };
  constexpr int kRadialSteps = 64;
  for (int i = 0; i < kRadialSteps; ++i) {
    if (!advance(advance, radial, r * i / kRadialSteps, r * (i + 1) / kRadialSteps, 0)) {
      out.tracked = escaped;
      out.max_preimage = escaped ? std::max(1.0, std::abs(zeta)) : kInf;
      return out;
    }
  }
  auto circle = [r](double s) { return std::polar(r, s); };
  out.max_preimage = std::abs(zeta);
  for (std::size_t k = 1; k <= n; ++k) {
    if (!advance(advance, circle, kTwoPi * (k - 1) / n, kTwoPi * k / n, 0)) {
      out.tracked = escaped;
      out.max_preimage = escaped ? std::max({1.0, out.max_preimage, std::abs(zeta)}) : kInf;
      return out;
    }
    out.max_preimage = std::max(out.max_preimage, std::abs(zeta));
  }
  out.tracked = true;
  return out;
}

bool alpha_nesting_sampled(const JanowskiParams& p, double a1, double a2, double r, std::size_t n) {
  const JanowskiParams inner = p.with_alpha(a1);
  const JanowskiParams outer = p.with_alpha(a2);
  const auto samples = sample_circle([&](Complex z) { return eval_powered(inner, z); }, r, n);
  return verify_subordination(samples, outer, 1.0, 0.0).holds;
}

bool sampled_containment(const JanowskiParams& outer, double r_outer, const JanowskiParams& inner,
                         double r_inner, std::size_t n, double tol) {
  std::vector<Complex> samples;
  samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex z = std::polar(r_inner, kTwoPi * k / n);
    if (std::abs(1.0 + inner.B() * z) < 1e-9) continue;
    samples.push_back(eval_powered(inner, z));
  }
  return verify_subordination(samples, outer, r_outer, tol).holds;
}

}  // namespace janowski
