#include "janowski/moebius_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "janowski/error.hpp"

namespace janowski {
namespace {

constexpr double kSlack = 1e-12;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

JanowskiParams::JanowskiParams(Complex A, Complex B, double alpha, Complex gamma)
    : A_(A), B_(B), alpha_(alpha), gamma_(gamma) {
  if (!finite(A) || !finite(B) || !finite(gamma) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidParams, "parameters must be finite");
  }
  if (std::abs(A - B) <= 1e-14) {
    throw Error(ErrorCode::DegenerateMap, "A and B coincide, the map is constant");
  }
  if (std::abs(B) > 1.0 + kSlack) {
    throw Error(ErrorCode::InvalidParams, "|B| must not exceed 1");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::InvalidParams, "alpha must lie in (0, 1]");
  }
  if (std::abs(gamma - 1.0) <= 1e-14) {
    throw Error(ErrorCode::InvalidParams, "gamma must differ from 1");
  }
}

bool JanowskiParams::argument_safe() const noexcept {
  // For |B| = 1 the distance test is an identity, so |A| <= 1 is checked as well.
  return std::abs(A_ - B_) <= std::abs(1.0 - A_ * std::conj(B_)) + kSlack &&
         std::abs(A_) <= 1.0 + kSlack;
}

bool DiskGeometry::contains_point(Complex w, double slack) const noexcept {
  if (kind == RegionKind::HalfPlane) {
    return ((w - boundary_point) * std::conj(normal)).real() >= -slack;
  }
  return std::abs(w - center) <= radius + slack;
}

Complex eval_map(const JanowskiParams& p, Complex z) {
  if (std::abs(z) > 1.0 + kSlack) {
    throw Error(ErrorCode::OutOfRange, "|z| must not exceed 1");
  }
  const Complex den = 1.0 + p.B() * z;
  if (std::abs(den) <= 1e-15) {
    throw Error(ErrorCode::PoleOnBoundary, "1 + Bz vanishes");
  }
  return (1.0 + p.A() * z) / den;
}

DiskGeometry image_disk(const JanowskiParams& p, double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "r must lie in (0, 1]");
  }
  const Complex A = p.A();
  const Complex B = p.B();
  const Complex ab = A * std::conj(B);
  const double den = 1.0 - std::norm(B) * r * r;

  DiskGeometry g;
  g.r = r;
  if (den <= kSlack) {
    // |w - 1| < |w - A conj(B)|: the perpendicular bisector of 1 and A conj(B).
    g.kind = RegionKind::HalfPlane;
    g.boundary_point = 0.5 * (1.0 + ab);
    g.normal = (1.0 - ab) / std::abs(1.0 - ab);
    g.center = g.boundary_point;
    g.radius = std::numeric_limits<double>::infinity();
    g.tau = std::arg(g.normal);
    if (std::abs(A) <= 1.0 + kSlack) {
      g.zeta = kPi / 2.0;
    }
    return g;
  }

  const Complex c_num = 1.0 - ab * r * r;
  g.kind = RegionKind::Disk;
  g.center = c_num / den;
  g.radius = std::abs(A - B) * r / den;
  g.tau = std::arg(c_num);
  g.normal = std::polar(1.0, g.tau);
  g.boundary_point = g.center - g.radius * g.normal;
  const double ratio = std::abs(A - B) * r / std::abs(c_num);
  if (ratio <= 1.0 + kSlack) {
    g.zeta = std::asin(std::min(1.0, ratio));
  }
  return g;
}

OriginPosition origin_position(const JanowskiParams& p) {
  const double a = std::abs(p.A());
  if (std::abs(a - 1.0) <= kSlack) return OriginPosition::Boundary;
  return a < 1.0 ? OriginPosition::Exterior : OriginPosition::Interior;
}

CanonicalParams canonicalize(Complex A, Complex B) {
  if (std::abs(A - B) <= 1e-14) {
    throw Error(ErrorCode::DegenerateMap, "A and B coincide");
  }
  if (std::abs(B) > 1.0 + kSlack) {
    throw Error(ErrorCode::InvalidParams, "|B| must not exceed 1");
  }
  const double b = std::abs(B);
  if (b == 0.0) return {A, 0.0};
  // Rotating z by e^{i(arg B - pi)} turns B into -|B| and keeps A conj(B).
  const Complex rotation = std::polar(1.0, -(std::arg(B) - kPi));
  return {A * rotation, std::min(b, 1.0)};
}

bool contains(const DiskGeometry& outer, const DiskGeometry& inner) {
  if (inner.kind == RegionKind::Disk && outer.kind == RegionKind::Disk) {
    return std::abs(inner.center - outer.center) + inner.radius <= outer.radius + kSlack;
  }
  if (inner.kind == RegionKind::Disk) {
    const double distance = ((inner.center - outer.boundary_point) * std::conj(outer.normal)).real();
    return distance >= inner.radius - kSlack;
  }
  if (outer.kind == RegionKind::Disk) return false;
  if (std::abs(inner.normal - outer.normal) > 1e-9) return false;
  return ((inner.boundary_point - outer.boundary_point) * std::conj(outer.normal)).real() >= -kSlack;
}

const char* to_string(RegionKind kind) noexcept {
  return kind == RegionKind::Disk ? "disk" : "half-plane";
}

const char* to_string(OriginPosition position) noexcept {
  switch (position) {
    case OriginPosition::Exterior: return "exterior";
    case OriginPosition::Boundary: return "boundary";
    case OriginPosition::Interior: return "interior";
  }
  return "unknown";
}

}  // namespace janowski
