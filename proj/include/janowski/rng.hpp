#pragma once

#include <cstdint>

#include "janowski/types.hpp"

namespace janowski {

// Counter-based generator: the n-th draw of (seed, stream) is a pure function of
// (seed, stream, n), so streams can be split and consumed in any order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  std::uint64_t next() noexcept;
  double uniform() noexcept;  // [0, 1)
  double uniform(double lo, double hi) noexcept;
  // Uniform in the square [-1,1]^2.
  Complex unit_square() noexcept;
  // Uniform in the closed disk of the given radius.
  Complex disk(double radius) noexcept;

  CounterRng split(std::uint64_t stream) const noexcept;
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace janowski
