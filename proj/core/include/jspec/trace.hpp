#pragma once

#include <string>
#include <vector>

#include "jspec/periodic_operator.hpp"
#include "jspec/structure.hpp"

namespace jspec {

struct BandSample {
  double theta = 0.0;
  cplx lambda;
};

/// One continuation branch λ_n(θ) of P(λ) = 𝓔(θ). For an ellipse θ runs over
/// [−π, π]; for a segment over the half turn [θ_v, θ_v + π] that sweeps the
/// segment once, θ_v being the angle of the endpoint +2R e^{iφ}.
struct Band {
  int index = 0;
  std::vector<BandSample> samples;
};

/// Stationary point with image on the curve, crossed during continuation.
struct TraceEvent {
  cplx lambda;
  int order = 1;
  double theta = 0.0;
  /// Bands that pass through the point (sorted).
  std::vector<int> bands;
  /// Sample snapped onto the stationary point itself.
  bool snapped = false;
};

struct FlowerCenter {
  cplx lambda;
  int order = 1;
  /// Incident petals (ellipse) or bands (segment), sorted.
  std::vector<int> members;
};

struct TraceResult {
  CurveKind kind = CurveKind::Ellipse;
  std::vector<Band> bands;
  /// Band i continues into band monodromy[i] across the end of the θ range.
  /// Identity for a segment.
  std::vector<int> monodromy;
  /// Monodromy cycles, each starting at its smallest band index. Empty for a
  /// segment.
  std::vector<std::vector<int>> petals;
  /// Ellipse: groups of petal indices. Segment: groups of band indices.
  std::vector<std::vector<int>> bouquets;
  std::vector<FlowerCenter> flower_centers;
  std::vector<TraceEvent> events;
  /// Largest |P(λ) − 𝓔(θ)| / max(1, Σ|c_k||λ|^k) over all samples.
  double max_residual = 0.0;
  int bisections = 0;
  int samples_requested = 0;
  /// True when θ runs clockwise around the ellipse (r_a > r_c).
  bool clockwise = false;

  std::size_t sample_count() const noexcept;
};

struct TraceOptions {
  /// Uniform θ nodes over the range; 0 selects 256·N.
  int min_samples = 0;
  /// Residual tolerance for every emitted sample.
  double tol = 1e-8;
  int max_depth = 40;
  /// Half-width of the complex-θ detour around a collision.
  double event_delta = 1e-6;
  double locate_tol = 1e-7;
  int detour_steps = 32;
};

/// The N roots of P(λ) = 𝓔(θ), with multiplicity, ordered by descending real
/// then imaginary part.
std::vector<cplx> roots_at(const Discriminant& disc, double theta);

TraceResult trace_bands(const Discriminant& disc, std::span<const StationaryPoint> stationary,
                        const TraceOptions& options = {});

/// Group petals (ellipse) or bands (segment) through shared stationary points
/// with image on the curve, and fill the flower centers. Throws
/// StructureMismatch when the number of groups differs from
/// `expected.bouquet_count`, or the cycle count from `expected.petal_count`.
TraceResult assemble_bouquets(TraceResult tr, std::span<const StationaryPoint> stationary,
                              const StructureReport& expected, double tol);

/// Closed polyline of petal `petal`: its bands end to end without repeated
/// junction vertices.
std::vector<cplx> petal_polyline(const TraceResult& tr, int petal);

struct PetalCheck {
  int petal = 0;
  int cycle_length = 0;
  int winding_bands = 0;
  int orientation = 1;
  int enclosed = 0;
  cplx interior_point;
  bool consistent() const noexcept {
    return winding_bands == cycle_length && cycle_length == 1 + enclosed;
  }
};

/// Winding count, cycle length and enclosed stationary order per petal. The
/// interior point is a zero of P enclosed by the petal.
std::vector<PetalCheck> petal_checks(const TraceResult& tr, const Discriminant& disc,
                                     std::span<const StationaryPoint> stationary);

/// Sorted angular gaps between the arcs leaving `center`, estimated from the
/// neighbouring trace samples. Throws InsufficientSampling with fewer than two
/// arcs within `tol` of the center.
std::vector<double> angle_check(const TraceResult& tr, const StationaryPoint& center, double tol);

struct SpectrumTrace {
  StructureReport structure;
  TraceResult trace;
  std::vector<PetalCheck> checks;
  int attempts = 1;
};

/// Structure report, trace and bouquet assembly. Retries once with twice the
/// samples on StructureMismatch or InsufficientSampling.
SpectrumTrace trace_spectrum(const Discriminant& disc, const TraceOptions& options = {},
                             const StructureOptions& structure_options = {});

std::string export_csv(const TraceResult& tr);
/// Point case: the N roots of P with band_id −1.
std::string export_point_csv(std::span<const cplx> roots);
std::string export_svg(const TraceResult& tr, const Discriminant& disc,
                       std::span<const StationaryPoint> stationary);

}  // namespace jspec
