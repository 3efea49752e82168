#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "janowski/moebius_geometry.hpp"
#include "janowski/power_envelope.hpp"
#include "janowski/types.hpp"

namespace janowski {

// omega(z) = scale * z * P(z), P with the given coefficients (P(z) = sum c_k z^k).
class SchwarzPoly {
 public:
  SchwarzPoly() = default;  // omega == 0
  SchwarzPoly(std::vector<Complex> coefficients, double scale);

  static SchwarzPoly identity();

  Complex operator()(Complex z) const noexcept;
  Complex derivative(Complex z) const noexcept;
  // int_0^z omega(t)/t dt
  Complex integral_over_t(Complex z) const noexcept;
  SchwarzPoly scaled(double factor) const;

  const std::vector<Complex>& coefficients() const noexcept { return coefficients_; }
  double scale() const noexcept { return scale_; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()); }

 private:
  std::vector<Complex> coefficients_;
  double scale_ = 0.0;
};

SchwarzPoly random_schwarz(std::uint64_t seed, int degree);

double sampled_sup(const SchwarzPoly& omega, std::size_t n);

struct SubordinationCheck {
  bool holds = false;
  double max_preimage = 0.0;  // +inf when some sample is outside the branch range
  double margin = 0.0;        // r - max_preimage
  std::size_t outside = 0;    // samples with no preimage
};

SubordinationCheck verify_subordination(std::span<const Complex> samples,
                                        const JanowskiParams& target, double r, double tol);

std::vector<Complex> sample_circle(const std::function<Complex(Complex)>& f, double r, std::size_t n);

BoundReport empirical_bounds(const JanowskiParams& p, double r, std::size_t n);

// Continuous argument of f at n equally spaced points of |z| = r, anchored at f(0) by
// following the radial segment. nullopt if f vanishes or winds around 0.
std::optional<std::vector<double>> continuous_arg_on_circle(
    const std::function<Complex(Complex)>& f, double r, std::size_t n);

// min over samples of (phase - lo, hi - phase).
double sector_margin(std::span<const double> phases, double lo, double hi);

// Preimages h^{-1}(f(z)) followed by Newton continuation from f(0) = h(0).
struct TrackedCheck {
  bool tracked = false;
  double max_preimage = 0.0;
};

TrackedCheck track_preimage(const std::function<Complex(Complex)>& f,
                            const std::function<Complex(Complex)>& h, double r, std::size_t n);

// Samples psi_a1 on |z| = r and checks them against psi_a2 on the full disk.
bool alpha_nesting_sampled(const JanowskiParams& p, double a1, double a2, double r, std::size_t n);

// Region containment by boundary sampling of inner against the inverse map of outer.
bool sampled_containment(const JanowskiParams& outer, double r_outer, const JanowskiParams& inner,
                         double r_inner, std::size_t n, double tol = 1e-12);

}  // namespace janowski
