#pragma once

#include <limits>
#include <optional>

#include "janowski/types.hpp"

namespace janowski {

// (A, B) with power alpha and shift gamma: psi(z) = (1-gamma)((1+Az)/(1+Bz))^alpha + gamma.
class JanowskiParams {
 public:
  JanowskiParams(Complex A, Complex B, double alpha = 1.0, Complex gamma = 0.0);

  Complex A() const noexcept { return A_; }
  Complex B() const noexcept { return B_; }
  double alpha() const noexcept { return alpha_; }
  Complex gamma() const noexcept { return gamma_; }

  // 0 is not an interior point of the first-order image, so a continuous
  // argument (and every power w^alpha) exists on it.
  bool argument_safe() const noexcept;

  JanowskiParams with_alpha(double alpha) const { return {A_, B_, alpha, gamma_}; }
  JanowskiParams with_gamma(Complex gamma) const { return {A_, B_, alpha_, gamma}; }

 private:
  Complex A_;
  Complex B_;
  double alpha_;
  Complex gamma_;
};

enum class RegionKind { Disk, HalfPlane };

struct DiskGeometry {
  RegionKind kind = RegionKind::Disk;
  double r = 1.0;
  Complex center;
  double radius = 0.0;  // +inf for a half-plane
  double tau = 0.0;     // arg of the center (disk) or of the inward normal (half-plane)
  std::optional<double> zeta;
  // Half-plane only: {w : Re((w - boundary_point) * conj(normal)) > 0}.
  Complex boundary_point;
  Complex normal;

  bool contains_point(Complex w, double slack = 0.0) const noexcept;
};

enum class OriginPosition { Exterior, Boundary, Interior };

struct CanonicalParams {
  Complex A;
  double b = 0.0;
};

Complex eval_map(const JanowskiParams& p, Complex z);

DiskGeometry image_disk(const JanowskiParams& p, double r);

OriginPosition origin_position(const JanowskiParams& p);

CanonicalParams canonicalize(Complex A, Complex B);

bool contains(const DiskGeometry& outer, const DiskGeometry& inner);

const char* to_string(RegionKind kind) noexcept;
const char* to_string(OriginPosition position) noexcept;

}  // namespace janowski
