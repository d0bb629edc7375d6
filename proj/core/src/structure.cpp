#include "jspec/structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "jspec/errors.hpp"

namespace jspec {

namespace {

constexpr double kPi = std::numbers::pi;

double segment_distance(cplx p, cplx q, cplx z) {
  const cplx d = q - p;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - p);
  double t = ((z - p) * std::conj(d)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (p + t * d));
}

bool is_segment_endpoint(const BoundaryCurve& curve, cplx z, double tol) {
  const double len = 2.0 * curve.half_radius();
  const cplx end = std::polar(len, curve.phi);
  return std::abs(z - end) <= tol * len || std::abs(z + end) <= tol * len;
}

}  // namespace

std::vector<StationaryPoint> stationary_points(const Polynomial& p, const BoundaryCurve& curve,
                                               const StructureOptions& options) {
  std::vector<StationaryPoint> out;
  if (p.degree() < 2) return out;
  const RootSet crit = roots(derivative(p), options.roots);
  for (const Root& r : crit.entries) {
    StationaryPoint s;
    s.lambda = r.value;
    s.order = r.multiplicity;
    s.image = p(r.value);
    s.offset = curve_offset(curve, s.image);
    s.location = locate(curve, s.image, options.locate_tol);
    const double mag = std::abs(s.offset);
    s.borderline = mag >= 1e-2 * options.locate_tol && mag <= 1e2 * options.locate_tol;
    out.push_back(s);
  }
  return out;
}

int m_count(std::span<const StationaryPoint> stationary, const RegionSelector& selector) {
  int total = 0;
  for (const auto& s : stationary)
    if (selector(s.location)) total += s.order;
  return total;
}

StructureReport structure_report(const Discriminant& disc, const StructureOptions& options) {
  StructureReport rep;
  rep.kind = disc.curve.kind;
  rep.near_degenerate_curve = disc.curve.near_degenerate;
  rep.stationary = stationary_points(disc.p, disc.curve, options);
  for (const auto& s : rep.stationary) rep.sum_tau += s.order;

  const auto on = [](RegionLocation l) { return l == RegionLocation::OnCurve; };
  const auto out = [](RegionLocation l) { return l == RegionLocation::Exterior; };
  switch (disc.curve.kind) {
    case CurveKind::Point:
      rep.degenerate = true;
      rep.point_spectrum = roots(disc.p, options.roots).expanded();
      break;
    case CurveKind::Ellipse:
      rep.petal_count = 1 + m_count(rep.stationary, [](RegionLocation l) {
                          return l != RegionLocation::InteriorW;
                        });
      rep.bouquet_count = 1 + m_count(rep.stationary, out);
      for (const auto& s : rep.stationary)
        if (on(s.location)) rep.flowers.push_back({s.lambda, s.order + 1});
      break;
    case CurveKind::Segment:
      rep.petal_count = 0;
      rep.bouquet_count = 1 + m_count(rep.stationary, out);
      for (const auto& s : rep.stationary)
        if (on(s.location) && !is_segment_endpoint(disc.curve, s.image, options.locate_tol))
          rep.decomposition_unique = false;
      break;
  }
  return rep;
}

int winding_number(std::span<const cplx> polyline, cplx z) {
  const std::size_t n = polyline.size();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx u = polyline[k] - z;
    const cplx v = polyline[(k + 1) % n] - z;
    total += std::arg(v / u);
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

double polyline_distance(std::span<const cplx> polyline, cplx z) {
  const std::size_t n = polyline.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k)
    best = std::min(best, segment_distance(polyline[k], polyline[(k + 1) % n], z));
  return best;
}

namespace {

struct ChordEnd {
  cplx at;
  cplx value;
  cplx slope;
};

// Argument increment of p − w0 along the chord [u, v]. The chord is halved
// while the step, or its first-order estimate from p', reaches a quarter turn.
double chord_increment(const Polynomial& p, const Polynomial& dp, cplx w0, const ChordEnd& u,
                       const ChordEnd& v, int depth) {
  if (u.value == cplx{0.0} || v.value == cplx{0.0})
    throw InsufficientSampling("petal polyline passes through λ0's image");
  const double len = std::abs(v.at - u.at);
  const double est = len * std::max(std::abs(u.slope) / std::abs(u.value), std::abs(v.slope) / std::abs(v.value));
  const double step = std::arg(v.value / u.value);
  if (std::abs(step) < 0.5 * kPi && est < 0.5 * kPi) return step;
  if (depth == 0) {
    std::ostringstream os;
    os << "argument step " << step << " stays too large after chord refinement";
    throw InsufficientSampling(os.str());
  }
  const cplx m = 0.5 * (u.at + v.at);
  const ChordEnd mid{m, p(m) - w0, dp(m)};
  return chord_increment(p, dp, w0, u, mid, depth - 1) + chord_increment(p, dp, w0, mid, v, depth - 1);
}

}  // namespace

WindingCount winding_band_count(std::span<const cplx> petal, cplx lambda0, const Polynomial& p) {
  const cplx w0 = p(lambda0);
  const std::size_t n = petal.size();
  if (n < 3) throw InsufficientSampling("petal polyline needs at least three vertices");
  const Polynomial dp = derivative(p);
  auto end = [&](cplx z) { return ChordEnd{z, p(z) - w0, dp(z)}; };
  double total = 0.0;
  ChordEnd prev = end(petal[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    const ChordEnd cur = end(petal[k % n]);
    total += chord_increment(p, dp, w0, prev, cur, 16);
    prev = cur;
  }
  const double turns = total / (2.0 * kPi);
  const double k = std::round(turns);
  if (std::abs(turns - k) > 0.1) {
    std::ostringstream os;
    os << "argument increment " << turns << " turns is not near an integer";
    throw InsufficientSampling(os.str());
  }
  WindingCount wc;
  wc.bands = static_cast<int>(std::abs(k));
  wc.orientation = k < 0 ? -1 : 1;
  return wc;
}

int enclosed_stationary(std::span<const cplx> petal, std::span<const StationaryPoint> stationary,
                        double tol) {
  int total = 0;
  for (const auto& s : stationary) {
    if (s.location == RegionLocation::OnCurve) continue;
    if (polyline_distance(petal, s.lambda) <= tol) {
      std::ostringstream os;
      os << "stationary point (" << s.lambda.real() << ", " << s.lambda.imag()
         << ") lies on the petal polyline";
      throw OnBoundaryAmbiguous(os.str());
    }
    if (winding_number(petal, s.lambda) != 0) total += s.order;
  }
  return total;
}

}  // namespace jspec
