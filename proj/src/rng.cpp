#include "janowski/rng.hpp"

#include <cmath>

namespace janowski {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : seed_(seed), key_(mix(mix(seed + kGolden) ^ (stream * kGolden + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t CounterRng::next() noexcept {
  return mix(key_ + kGolden * ++counter_);
}

double CounterRng::uniform() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) noexcept {
  return lo + (hi - lo) * uniform();
}

Complex CounterRng::unit_square() noexcept {
  const double re = uniform(-1.0, 1.0);
  const double im = uniform(-1.0, 1.0);
  return {re, im};
}

Complex CounterRng::disk(double radius) noexcept {
  const double rho = radius * std::sqrt(uniform());
  const double t = uniform(-kPi, kPi);
  return std::polar(rho, t);
}

CounterRng CounterRng::split(std::uint64_t stream) const noexcept {
  return CounterRng(seed_ ^ mix(key_), stream);
}

}  // namespace janowski
