#pragma once

#include <functional>
#include <span>
#include <vector>

#include "jspec/boundary.hpp"
#include "jspec/periodic_operator.hpp"
#include "jspec/polynomial.hpp"

namespace jspec {

struct StationaryPoint {
  cplx lambda;
  int order = 1;
  cplx image;
  RegionLocation location = RegionLocation::Exterior;
  /// Signed normalized distance of the image from the boundary curve.
  double offset = 0.0;
  /// |offset| lies within two decades of the locate tolerance, so the
  /// location would flip under a modest change of tolerance.
  bool borderline = false;
};

struct FlowerProfile {
  cplx center;
  int petals = 0;
};

struct StructureReport {
  CurveKind kind = CurveKind::Point;
  std::vector<StationaryPoint> stationary;
  int petal_count = 0;
  int bouquet_count = 0;
  std::vector<FlowerProfile> flowers;
  int sum_tau = 0;
  /// Segment case only; true elsewhere.
  bool decomposition_unique = true;
  bool degenerate = false;
  /// Point case: σ(J) is the root set of P.
  std::vector<cplx> point_spectrum;
  bool near_degenerate_curve = false;
};

struct StructureOptions {
  /// Relative tolerance for locating stationary images against the curve.
  double locate_tol = 1e-7;
  RootOptions roots;
};

std::vector<StationaryPoint> stationary_points(const Polynomial& p, const BoundaryCurve& curve,
                                               const StructureOptions& options = {});

using RegionSelector = std::function<bool(RegionLocation)>;

/// m_P(ℂ, F): Σ τ over stationary points whose image location is selected.
int m_count(std::span<const StationaryPoint> stationary, const RegionSelector& selector);

StructureReport structure_report(const Discriminant& disc, const StructureOptions& options = {});

/// Winding number of the closed polyline (last vertex joins the first) about z.
int winding_number(std::span<const cplx> polyline, cplx z);

/// Distance from z to the closed polyline.
double polyline_distance(std::span<const cplx> polyline, cplx z);

struct WindingCount {
  int bands = 0;
  /// +1 when P maps the polyline counterclockwise around P(λ0), −1 otherwise.
  int orientation = 1;
};

/// Number of zeros of P(λ) − P(λ0) enclosed by the petal, from the argument
/// increment of P − P(λ0) along the polyline. Chords whose step, or its
/// first-order estimate, turns by π/2 or more are halved up to 16 times; throws InsufficientSampling when that is
/// not enough, when the polyline hits λ0's image, or when the total is not near
/// a multiple of 2π.
WindingCount winding_band_count(std::span<const cplx> petal, cplx lambda0, const Polynomial& p);

/// Σ τ over stationary points strictly inside the petal. Points whose image is
/// on the curve lie on σ(J) itself and are skipped; any other point within
/// `tol` of the polyline throws OnBoundaryAmbiguous.
int enclosed_stationary(std::span<const cplx> petal, std::span<const StationaryPoint> stationary,
                        double tol);

}  // namespace jspec
