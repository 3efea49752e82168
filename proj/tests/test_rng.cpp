#include "doctest.h"

#include <set>

#include "janowski/rng.hpp"

using namespace janowski;

TEST_CASE("same seed and stream reproduce the sequence") {
  CounterRng a(42, 3), b(42, 3);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("streams and seeds are distinct") {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (std::uint64_t stream = 0; stream < 20; ++stream) firsts.insert(CounterRng(seed, stream).next());
  }
  CHECK(firsts.size() == 400);
}

TEST_CASE("draws depend only on the counter") {
  CounterRng a(7, 1);
  a.next();
  a.next();
  const std::uint64_t third = a.next();
  CounterRng b(7, 1);
  for (int i = 0; i < 2; ++i) b.uniform();
  CHECK(b.counter() == 2);
  CHECK(b.next() == third);
}

TEST_CASE("uniform ranges") {
  CounterRng rng(1);
  double lo = 1.0, hi = 0.0, mean = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    mean += u / 20000.0;
    const Complex d = rng.disk(0.5);
    REQUIRE(std::abs(d) <= 0.5);
    const Complex s = rng.unit_square();
    REQUIRE(std::abs(s.real()) <= 1.0);
    REQUIRE(std::abs(s.imag()) <= 1.0);
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  CHECK(mean == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("split streams are deterministic and independent of the parent position") {
  CounterRng a(9), b(9);
  a.next();
  CHECK(a.split(4).next() == b.split(4).next());
  CHECK(a.split(4).next() != a.split(5).next());
}
