#include "doctest.h"

#include <cmath>

#include "janowski/error.hpp"
#include "janowski/power_envelope.hpp"
#include "janowski/rng.hpp"
#include "janowski/subordination_oracle.hpp"

using namespace janowski;
using doctest::Approx;

TEST_CASE("random Schwarz polynomials") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int degree = 1 + static_cast<int>(seed % 16);
    const SchwarzPoly w = random_schwarz(seed, degree);
    CHECK(w.degree() == degree);
    CHECK(w(0.0) == Complex(0.0));
    CHECK(sampled_sup(w, 16384) <= 1.0 - 1e-6 + 1e-12);
    CHECK(sampled_sup(w, 16384) > 0.999);
    const SchwarzPoly again = random_schwarz(seed, degree);
    CHECK(again.coefficients() == w.coefficients());
    CHECK(again.scale() == w.scale());
  }
  const SchwarzPoly linear = random_schwarz(5, 1);
  for (double t : {0.1, 1.0, 2.5}) {
    CHECK(std::abs(linear(std::polar(0.7, t))) == Approx(0.7 * (1.0 - 1e-6)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(random_schwarz(1, 0), Error);
  CHECK_THROWS_AS(random_schwarz(1, 17), Error);
}

TEST_CASE("Schwarz polynomial calculus") {
  const SchwarzPoly w({Complex(0.5, 0.1), Complex(-0.2, 0.3), Complex(0.1, 0.0)}, 0.8);
  const Complex z(0.3, -0.4);
  const double h = 1e-6;
  CHECK(std::abs(w.derivative(z) - (w(z + h) - w(z - h)) / (2.0 * h)) < 1e-8);
  // d/dz of int_0^z omega(t)/t dt is omega(z)/z.
  CHECK(std::abs((w.integral_over_t(z + h) - w.integral_over_t(z - h)) / (2.0 * h) - w(z) / z) < 1e-8);
  CHECK(std::abs(w.scaled(0.5)(z) - 0.5 * w(z)) < 1e-15);
  CHECK(SchwarzPoly()(z) == Complex(0.0));
  // Kept strictly inside the disk.
  CHECK(SchwarzPoly::identity().scale() < 1.0);
  CHECK(std::abs(SchwarzPoly::identity()(z) - z) < 1e-6);
}

TEST_CASE("inverse-map subordination test") {
  const JanowskiParams target(Complex(0.4, 0.3), Complex(-0.5, 0.2), 0.7, Complex(0.1, 0.1));
  const auto psi = [&](Complex z) { return eval_powered(target, z); };

  const auto self = sample_circle(psi, 0.8, 2048);
  const SubordinationCheck a = verify_subordination(self, target, 0.8, 1e-9);
  CHECK(a.holds);
  CHECK(std::abs(a.margin) < 1e-10);

  const auto half = sample_circle([&](Complex z) { return psi(z / 2.0); }, 1.0, 2048);
  const SubordinationCheck b = verify_subordination(half, target, 1.0, 1e-9);
  CHECK(b.holds);
  CHECK(b.max_preimage == Approx(0.5));

  const JanowskiParams disk(1.0, 0.0);
  const auto scaled = sample_circle([&](Complex z) { return 1.05 * eval_powered(disk, z); }, 0.5, 2048);
  const SubordinationCheck c = verify_subordination(scaled, disk, 0.5, 1e-9);
  CHECK_FALSE(c.holds);
  CHECK(c.margin < 0.0);

  CHECK_THROWS_AS(verify_subordination(self, JanowskiParams(2.0, 0.0, 0.5), 1.0, 0.0), Error);
}

TEST_CASE("empirical bounds for the square root") {
  const BoundReport e = empirical_bounds(JanowskiParams(1.0, 0.0, 0.5), 1.0, 200000);
  CHECK(std::abs(e.re.lo) < 1e-4);
  CHECK(std::abs(e.re.hi - std::sqrt(2.0)) < 1e-4);
  CHECK(std::abs(e.im.lo + 0.5) < 1e-4);
  CHECK(std::abs(e.im.hi - 0.5) < 1e-4);
  const BoundReport tiny = empirical_bounds(JanowskiParams(Complex(0.3, 0.3), 0.2, 0.5), 1e-9, 1000);
  CHECK(tiny.re.lo == Approx(1.0));
  CHECK(std::abs(tiny.im.hi) < 1e-8);
}

TEST_CASE("continuous argument") {
  const auto phases = continuous_arg_on_circle([](Complex z) { return std::exp(Complex(0.0, 3.0) * z); }, 0.9, 512);
  REQUIRE(phases.has_value());
  for (std::size_t k = 0; k < phases->size(); ++k) {
    CHECK((*phases)[k] == Approx(3.0 * 0.9 * std::cos(kTwoPi * k / 512.0)).epsilon(1e-12));
  }
  // z + 0.5 vanishes inside |z| < 0.9.
  CHECK_FALSE(continuous_arg_on_circle([](Complex z) { return z + 0.5; }, 0.9, 512).has_value());
  const std::vector<double> sample{-0.2, 0.1, 0.3};
  CHECK(sector_margin(sample, -0.5, 0.5) == Approx(0.2));
}

TEST_CASE("preimage tracking") {
  const auto h = [](Complex z) { return (1.0 + z) / (1.0 - 0.5 * z); };
  const TrackedCheck inside = track_preimage([&](Complex z) { return h(0.6 * z * z); }, h, 0.9, 1024);
  CHECK(inside.tracked);
  CHECK(inside.max_preimage == Approx(0.6 * 0.81).epsilon(1e-8));
  const TrackedCheck outside = track_preimage([&](Complex z) { return h(1.2 * z); }, h, 0.95, 1024);
  CHECK(outside.max_preimage >= 1.0);
}
