#include "jspec/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jspec/errors.hpp"

namespace jspec {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double t) {
  t = std::remainder(t, 2.0 * kPi);
  if (t <= -kPi) t += 2.0 * kPi;
  return t;
}

}  // namespace

double principal_arg(cplx z) noexcept {
  double t = std::arg(z);
  return t <= -kPi ? kPi : t;
}

double BoundaryCurve::vertex_theta() const noexcept {
  return 0.5 * (principal_arg(a_prod) - principal_arg(c_prod));
}

std::string_view to_string(CurveKind kind) noexcept {
  switch (kind) {
    case CurveKind::Ellipse: return "ellipse";
    case CurveKind::Segment: return "segment";
    case CurveKind::Point: return "point";
  }
  return "point";
}

std::string_view to_string(RegionLocation loc) noexcept {
  switch (loc) {
    case RegionLocation::InteriorW: return "interior";
    case RegionLocation::OnCurve: return "on_curve";
    case RegionLocation::Exterior: return "exterior";
  }
  return "exterior";
}

BoundaryCurve classify_curve(cplx a_prod, cplx c_prod, double tol) {
  BoundaryCurve curve;
  curve.a_prod = a_prod;
  curve.c_prod = c_prod;
  curve.ra = std::abs(a_prod);
  curve.rc = std::abs(c_prod);
  curve.phi = 0.5 * (principal_arg(a_prod) + principal_arg(c_prod));
  const double scale = std::max({curve.ra, curve.rc, 1.0});
  const double gap = std::abs(curve.ra - curve.rc);
  if (curve.ra <= tol * scale && curve.rc <= tol * scale) {
    curve.kind = CurveKind::Point;
  } else if (gap <= tol * scale) {
    curve.kind = CurveKind::Segment;
  } else {
    curve.kind = CurveKind::Ellipse;
    curve.near_degenerate = gap <= 10.0 * tol * scale;
  }
  return curve;
}

cplx curve_point(const BoundaryCurve& curve, cplx theta) {
  if (curve.kind == CurveKind::Point) throw DegenerateCurve("boundary curve is the point {0}");
  const cplx i{0.0, 1.0};
  return curve.a_prod * std::exp(-i * theta) + curve.c_prod * std::exp(i * theta);
}

cplx curve_tangent(const BoundaryCurve& curve, cplx theta) noexcept {
  const cplx i{0.0, 1.0};
  return -i * curve.a_prod * std::exp(-i * theta) + i * curve.c_prod * std::exp(i * theta);
}

double curve_offset(const BoundaryCurve& curve, cplx z) noexcept {
  const cplx w = z * std::polar(1.0, -curve.phi);
  switch (curve.kind) {
    case CurveKind::Point:
      return std::abs(z);
    case CurveKind::Segment: {
      const double len = 2.0 * curve.half_radius();
      return std::max(std::abs(w.imag()) / len, std::abs(w.real()) / len - 1.0);
    }
    case CurveKind::Ellipse: {
      const double x = w.real() / curve.semi_major();
      const double y = w.imag() / curve.semi_minor();
      return std::hypot(x, y) - 1.0;
    }
  }
  return 0.0;
}

RegionLocation locate(const BoundaryCurve& curve, cplx z, double tol) noexcept {
  const double off = curve_offset(curve, z);
  if (curve.kind == CurveKind::Ellipse) {
    if (std::abs(off) <= tol) return RegionLocation::OnCurve;
    return off < 0.0 ? RegionLocation::InteriorW : RegionLocation::Exterior;
  }
  return off <= tol ? RegionLocation::OnCurve : RegionLocation::Exterior;
}

std::vector<double> solve_theta(const BoundaryCurve& curve, cplx z) {
  if (curve.kind == CurveKind::Point) throw DegenerateCurve("boundary curve is the point {0}");
  const cplx w = z * std::polar(1.0, -curve.phi);
  const double shift = curve.vertex_theta();
  if (curve.kind == CurveKind::Ellipse) {
    const double x = w.real() / curve.semi_major();
    const double y = w.imag() / (curve.rc - curve.ra);
    return {wrap_angle(std::atan2(y, x) + shift)};
  }
  const double x = std::clamp(w.real() / (2.0 * curve.half_radius()), -1.0, 1.0);
  const double t = std::acos(x);
  if (t == 0.0 || t == kPi) return {wrap_angle(t + shift)};
  std::vector<double> out{wrap_angle(t + shift), wrap_angle(-t + shift)};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jspec
