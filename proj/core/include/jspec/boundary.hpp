#pragma once

#include <string_view>

#include "jspec/polynomial.hpp"

namespace jspec {

enum class CurveKind { Ellipse, Segment, Point };

/// The boundary set {a e^{-iθ} + c e^{iθ} : θ ∈ (−π, π]}.
///
/// With a = r_a e^{iφ_a}, c = r_c e^{iφ_c} and φ = (φ_a + φ_c)/2, the set is
/// e^{iφ}·{(r_a + r_c) cos θ̂ + i (r_c − r_a) sin θ̂}: an ellipse with semi-axes
/// A = r_a + r_c and B = |r_c − r_a| when r_a ≠ r_c, the segment e^{iφ}[−2R, 2R]
/// when r_a = r_c = R > 0, and {0} when both products vanish.
struct BoundaryCurve {
  CurveKind kind = CurveKind::Point;
  double ra = 0.0;
  double rc = 0.0;
  double phi = 0.0;
  cplx a_prod{0.0};
  cplx c_prod{0.0};
  /// Ellipse whose |r_a − r_c| lies within 10× the classification tolerance.
  bool near_degenerate = false;

  double semi_major() const noexcept { return ra + rc; }
  double semi_minor() const noexcept { return std::abs(rc - ra); }
  /// R for a segment; (r_a + r_c)/2 in general.
  double half_radius() const noexcept { return 0.5 * (ra + rc); }
  /// θ increases counterclockwise around the ellipse iff r_c > r_a.
  bool counterclockwise() const noexcept { return rc > ra; }
  /// θ at which the curve passes the endpoint +2R e^{iφ} (segment) or the
  /// major-axis vertex (ellipse).
  double vertex_theta() const noexcept;
};

enum class RegionLocation { InteriorW, OnCurve, Exterior };

std::string_view to_string(CurveKind kind) noexcept;
std::string_view to_string(RegionLocation loc) noexcept;

/// Argument in (−π, π].
double principal_arg(cplx z) noexcept;

BoundaryCurve classify_curve(cplx a_prod, cplx c_prod, double tol = 1e-9);

/// a e^{-iθ} + c e^{iθ}; θ may be complex. Throws DegenerateCurve for a Point.
cplx curve_point(const BoundaryCurve& curve, cplx theta);

/// Derivative of curve_point with respect to θ.
cplx curve_tangent(const BoundaryCurve& curve, cplx theta) noexcept;

/// Signed normalized offset from the curve: for an ellipse sqrt(x²/A² + y²/B²) − 1
/// in the rotated frame; for a segment the larger of |Im ẑ|/(2R) and
/// |Re ẑ|/(2R) − 1; for a point |z|. Negative only inside an ellipse.
double curve_offset(const BoundaryCurve& curve, cplx z) noexcept;

RegionLocation locate(const BoundaryCurve& curve, cplx z, double tol = 1e-7) noexcept;

/// Real θ values in (−π, π] with curve_point(θ) = z, for z on the curve.
/// One value for an ellipse, one or two for a segment.
std::vector<double> solve_theta(const BoundaryCurve& curve, cplx z);

}  // namespace jspec
