#include "doctest.h"

#include <cmath>

#include "janowski/error.hpp"
#include "janowski/power_envelope.hpp"
#include "janowski/rng.hpp"
#include "janowski/subordination_oracle.hpp"

using namespace janowski;
using doctest::Approx;

namespace {

JanowskiParams random_safe(CounterRng& rng) {
  for (;;) {
    const Complex A = rng.disk(1.0);
    const Complex B = rng.disk(1.0);
    if (std::abs(A - B) < 1e-2) continue;
    const JanowskiParams p(A, B, rng.uniform(0.1, 1.0));
    if (p.argument_safe()) return p;
  }
}

}  // namespace

TEST_CASE("eval_powered") {
  CHECK(eval_powered(JanowskiParams(Complex(0.3, 0.2), Complex(-0.5, 0.1), 0.7), 0.0) == Complex(1.0));
  const JanowskiParams sqrt_map(1.0, 0.0, 0.5);
  for (double r : {0.1, 0.5, 0.9}) CHECK(eval_powered(sqrt_map, r).real() == Approx(std::sqrt(1.0 + r)));
  const Complex v = eval_powered(JanowskiParams(1.0, -1.0, 0.5), 0.5);
  CHECK(std::abs(v - std::sqrt(3.0)) < 1e-15);
  CHECK_THROWS_AS(eval_powered(JanowskiParams(2.0, 0.0, 0.5), 0.5), Error);
  // Shift: (1 - gamma) w^alpha + gamma.
  const Complex g(0.25, -0.5);
  CHECK(std::abs(eval_powered(JanowskiParams(1.0, 0.0, 0.5, g), 0.5) - ((1.0 - g) * std::sqrt(1.5) + g)) < 1e-15);
}

TEST_CASE("inverse_powered round trip") {
  CounterRng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    JanowskiParams p = random_safe(rng);
    p = p.with_gamma(rng.disk(0.5));
    for (int k = 0; k < 100; ++k) {
      const Complex z = rng.disk(0.99);
      const auto back = inverse_powered(p, eval_powered(p, z));
      REQUIRE(back.has_value());
      CHECK(std::abs(*back - z) < 1e-10);
    }
  }
}

TEST_CASE("square-root example") {
  const BoundReport b = envelope_bounds(JanowskiParams(1.0, 0.0, 0.5), 1.0);
  CHECK(std::abs(b.critical.t1) < 1e-9);
  CHECK(std::abs(b.critical.t2 - 2.0 * kPi / 3.0) < 1e-9);
  CHECK(std::abs(b.re.lo) < 1e-6);
  CHECK(std::abs(b.re.hi - std::sqrt(2.0)) < 1e-6);
  CHECK(std::abs(b.im.lo + 0.5) < 1e-6);
  CHECK(std::abs(b.im.hi - 0.5) < 1e-6);
  CHECK(b.modulus.lo == 0.0);
  CHECK(b.modulus.hi == Approx(std::sqrt(2.0)));
  CHECK(b.arg.hi == Approx(kPi / 4.0));
  CHECK(b.arg.lo == Approx(-kPi / 4.0));
  CHECK(b.critical.residual_re < 1e-10);
  CHECK(b.critical.residual_im < 1e-10);
  CHECK_FALSE(b.fallback_used);
}

TEST_CASE("real symmetric disk") {
  const BoundReport b = envelope_bounds(JanowskiParams(0.5, -0.5), 0.5);
  CHECK(b.re.lo == Approx(3.0 / 5.0));
  CHECK(b.re.hi == Approx(5.0 / 3.0));
  CHECK(b.modulus.lo == Approx(3.0 / 5.0));
  CHECK(b.modulus.hi == Approx(5.0 / 3.0));
  CHECK(b.arg.hi == Approx(std::asin(8.0 / 17.0)));
  CHECK(std::abs(b.critical.t1) < 1e-12);
  for (double r : {0.1, 0.4, 0.8}) {
    CHECK(std::abs(critical_points(JanowskiParams(0.8, -0.3), r).t1) < 1e-12);
  }
}

TEST_CASE("small radius collapses to the point 1") {
  const BoundReport b = envelope_bounds(JanowskiParams(Complex(0.4, 0.5), Complex(0.2, -0.6), 0.6), 1e-9);
  CHECK(b.arg.width() < 1e-8);
  CHECK(b.modulus.lo == Approx(1.0));
  CHECK(b.re.hi == Approx(1.0));
  CHECK(std::abs(b.im.lo) < 1e-8);
}

TEST_CASE("critical points match sampled extremes") {
  const JanowskiParams p(Complex(0.0, 0.5), 0.0, 0.5);
  const CriticalPoints c = critical_points(p, 0.5);
  const EnvelopeCurve curve = envelope_curve(p, 0.5, 1 << 16);
  double best_re = -1e300, best_im = -1e300, t_re = 0.0, t_im = 0.0;
  for (const CurveSample& s : curve.samples) {
    const double re = s.modulus * std::cos(s.phase);
    const double im = s.modulus * std::sin(s.phase);
    if (re > best_re) { best_re = re; t_re = s.t; }
    if (im > best_im) { best_im = im; t_im = s.t; }
  }
  const auto close = [](double a, double b) { return std::abs(std::remainder(a - b, kTwoPi)) < 1e-3; };
  CHECK(close(c.t1, t_re));
  CHECK(close(c.t2, t_im));
  CHECK(c.residual_re < 1e-10);
  CHECK(c.residual_im < 1e-10);
}

TEST_CASE("bounds agree with the sampling oracle") {
  CounterRng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const JanowskiParams p = random_safe(rng);
    const double r = rng.uniform(0.05, 0.95) * std::min(1.0, 0.98 / std::max(std::abs(p.B()), 1e-9));
    const BoundReport b = envelope_bounds(p, r);
    const BoundReport e = empirical_bounds(p, r, 200000);
    CHECK(std::abs(b.arg.lo - e.arg.lo) < 1e-5);
    CHECK(std::abs(b.arg.hi - e.arg.hi) < 1e-5);
    CHECK(std::abs(b.modulus.lo - e.modulus.lo) < 1e-5);
    CHECK(std::abs(b.modulus.hi - e.modulus.hi) < 1e-5);
    CHECK(std::abs(b.re.lo - e.re.lo) < 1e-5);
    CHECK(std::abs(b.re.hi - e.re.hi) < 1e-5);
    CHECK(std::abs(b.im.lo - e.im.lo) < 1e-5);
    CHECK(std::abs(b.im.hi - e.im.hi) < 1e-5);
  }
}

TEST_CASE("shifted view is affine") {
  const Complex g(0.3, 0.2);
  const JanowskiParams p(Complex(0.5, 0.3), Complex(-0.4, 0.1), 0.8, g);
  const BoundReport b = envelope_bounds(p, 0.7);
  REQUIRE(b.shifted.has_value());
  double re_lo = 1e300, re_hi = -1e300, im_lo = 1e300, im_hi = -1e300;
  for (int k = 0; k < 200000; ++k) {
    const Complex h = eval_powered(p, std::polar(0.7, kTwoPi * k / 200000.0));
    re_lo = std::min(re_lo, h.real());
    re_hi = std::max(re_hi, h.real());
    im_lo = std::min(im_lo, h.imag());
    im_hi = std::max(im_hi, h.imag());
  }
  CHECK(std::abs(b.shifted->re.lo - re_lo) < 1e-8);
  CHECK(std::abs(b.shifted->re.hi - re_hi) < 1e-8);
  CHECK(std::abs(b.shifted->im.lo - im_lo) < 1e-8);
  CHECK(std::abs(b.shifted->im.hi - im_hi) < 1e-8);
}

TEST_CASE("intervals grow with r") {
  CounterRng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const JanowskiParams p = random_safe(rng);
    const double r_max = std::min(1.0, 0.98 / std::max(std::abs(p.B()), 1e-9));
    const double r1 = rng.uniform(0.05, 0.5) * r_max;
    const double r2 = rng.uniform(0.5, 1.0) * r_max;
    const BoundReport a = envelope_bounds(p, r1);
    const BoundReport b = envelope_bounds(p, r2);
    CHECK(b.arg.contains(a.arg, 1e-12));
    CHECK(b.modulus.contains(a.modulus, 1e-12));
    CHECK(b.re.contains(a.re, 1e-12));
    CHECK(b.im.contains(a.im, 1e-12));
  }
}

TEST_CASE("curve phase is continuous and anchored") {
  CounterRng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const JanowskiParams p = random_safe(rng);
    const double r = 0.9 * std::min(1.0, 0.98 / std::max(std::abs(p.B()), 1e-9));
    const EnvelopeCurve c = envelope_curve(p, r, 4096);
    for (std::size_t k = 1; k < c.samples.size(); ++k) {
      CHECK(std::abs(c.samples[k].phase - c.samples[k - 1].phase) < kPi / 2.0);
    }
    const CurveSample& s = c.samples[1000];
    const Complex w(s.u, s.v);
    CHECK(s.modulus == Approx(std::pow(std::abs(w), p.alpha())));
    CHECK(std::abs(std::polar(s.modulus, s.phase) - std::exp(p.alpha() * std::log(w))) < 1e-12);
  }
}

TEST_CASE("unbounded and unsafe inputs") {
  CHECK_THROWS_AS(envelope_bounds(JanowskiParams(1.0, -1.0), 1.0), Error);
  CHECK_THROWS_AS(envelope_bounds(JanowskiParams(2.0, 0.0, 0.5), 0.5), Error);
  CHECK_THROWS_AS(envelope_curve(JanowskiParams(1.0, 0.0), 0.5, 1), Error);
}

TEST_CASE("sector image") {
  Sector s = sector_image(0.0, 1.0);
  CHECK(s.lo == Approx(-kPi / 2.0));
  CHECK(s.hi == Approx(kPi / 2.0));
  s = sector_image(0.0, 0.3);
  CHECK(s.hi == Approx(0.3 * kPi / 2.0));
  s = sector_image(0.5, 0.5);
  CHECK(s.lo == Approx(-kPi / 8.0));
  CHECK(s.hi == Approx(3.0 * kPi / 8.0));
  CHECK(s.rotation == Approx(kPi / 8.0));
  // The oblique sector is the r -> 1 limit of the envelope for A = e^{i pi/2}, B = -1.
  const BoundReport b = envelope_bounds(JanowskiParams(Complex(0.0, 1.0), -1.0, 0.5), 0.999999);
  CHECK(std::abs(b.arg.lo - s.lo) < 1e-3);
  CHECK(std::abs(b.arg.hi - s.hi) < 1e-3);
  CHECK_THROWS_AS(sector_image(1.0, 0.5), Error);
}

TEST_CASE("tilt angle") {
  CHECK(tilt_angle(1.0, 0.0) == 0.0);
  CHECK(tilt_angle(1.0, 0.5) == Approx(kPi / 4.0));
  CHECK(tilt_angle(0.0, 0.7) == 0.0);
  CHECK_THROWS_AS(tilt_angle(1.0, 1.0), Error);
  // Re(e^{-i lambda} h) > 0 on the image of (1 + e^{im pi} z)/(1 - bz).
  for (double m : {-0.8, -0.3, 0.4, 0.9}) {
    for (double b : {0.2, 0.7, 1.0}) {
      const double lambda = tilt_angle(b, m);
      const Complex e = std::polar(1.0, m * kPi);
      for (int k = 0; k < 720; ++k) {
        const Complex z = std::polar(0.999, kTwoPi * k / 720.0);
        CHECK((std::polar(1.0, -lambda) * (1.0 + e * z) / (1.0 - b * z)).real() > -1e-9);
      }
    }
  }
}

TEST_CASE("alpha nesting") {
  const JanowskiParams p(1.0, -1.0);
  CHECK(alpha_nesting(p, 0.5, 0.5));
  CHECK(alpha_nesting(p, 0.25, 0.5));
  CHECK_FALSE(alpha_nesting(p, 0.5, 0.25));
  CHECK(alpha_nesting_sampled(p, 0.25, 0.5, 0.999, 4096));
  CHECK_FALSE(alpha_nesting_sampled(p, 0.5, 0.25, 0.999, 4096));
  const JanowskiParams q(Complex(0.3, 0.6), Complex(-0.2, 0.5));
  CHECK(alpha_nesting_sampled(q, 0.4, 0.9, 0.99, 4096) == alpha_nesting(q, 0.4, 0.9));
  CHECK(alpha_nesting_sampled(q, 0.9, 0.4, 0.99, 4096) == alpha_nesting(q, 0.9, 0.4));
}
