#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "jspec/errors.hpp"
#include "jspec/inverse.hpp"
#include "jspec/trace.hpp"
#include "oracles.hpp"

using namespace jspec;
using namespace jspec::testing;

namespace {

constexpr double kPi = std::numbers::pi;

int line_count(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

std::vector<int> cycle_lengths(const TraceResult& tr) {
  std::vector<int> out;
  for (const auto& p : tr.petals) out.push_back(static_cast<int>(p.size()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(RootsAt, CrossOnSegment) {
  const auto d = discriminant(example_cross());
  // θ_v = 0 sits on the endpoint 𝓔 = 2, so λ² = 3.
  const auto r0 = roots_at(d, 0.0);
  ASSERT_EQ(r0.size(), 2u);
  EXPECT_NEAR(std::abs(r0[0] - std::sqrt(3.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r0[1] + std::sqrt(3.0)), 0.0, 1e-12);
  const auto r1 = roots_at(d, kPi / 2.0);
  EXPECT_NEAR(std::abs(r1[0] - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r1[1] + 1.0), 0.0, 1e-12);
}

TEST(RootsAt, LaplacianTwo) {
  const auto r = roots_at(discriminant(laplacian(2)), kPi / 2.0);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(std::abs(r[0] - std::sqrt(2.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r[1] + std::sqrt(2.0)), 0.0, 1e-12);
}

TEST(RootsAt, SortedAndSatisfyEquation) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = discriminant(random_operator(rng, 1 + trial % 6));
    if (d.degenerate()) continue;
    const double theta = 0.37 * trial;
    const auto r = roots_at(d, theta);
    ASSERT_EQ(static_cast<int>(r.size()), d.degree());
    for (std::size_t k = 1; k < r.size(); ++k) EXPECT_GE(r[k - 1].real(), r[k].real() - 1e-15);
    const cplx e = d.a_prod * std::polar(1.0, -theta) + d.c_prod * std::polar(1.0, theta);
    for (cplx z : r) EXPECT_LE(std::abs(d.p(z) - e), 1e-8 * std::max(1.0, eval_bound(d.p, std::abs(z))));
  }
}

TEST(TraceBands, SmallPetalsAreFixedPoints) {
  const auto d = discriminant(example_petals(0.12));
  const auto tr = trace_bands(d, stationary_points(d.p, d.curve));
  EXPECT_EQ(tr.bands.size(), 5u);
  EXPECT_EQ(cycle_lengths(tr), (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_TRUE(tr.clockwise);
}

TEST(TraceBands, LargePetalIsOneCycle) {
  const auto d = discriminant(example_petals(0.13));
  const auto tr = trace_bands(d, stationary_points(d.p, d.curve));
  EXPECT_EQ(cycle_lengths(tr), (std::vector<int>{5}));
}

TEST(TraceBands, SegmentHasIdentityMonodromy) {
  const auto d = discriminant(laplacian(3));
  const auto tr = trace_bands(d, stationary_points(d.p, d.curve));
  EXPECT_EQ(tr.kind, CurveKind::Segment);
  EXPECT_EQ(tr.monodromy, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(tr.petals.empty());
}

TEST(TraceBands, RejectsTooFewSamples) {
  const auto d = discriminant(laplacian(2));
  TraceOptions opt;
  opt.min_samples = 15;
  EXPECT_THROW(trace_bands(d, stationary_points(d.p, d.curve), opt), InputError);
}

TEST(AssembleBouquets, CriticalPetalExample) {
  const auto st = trace_spectrum(discriminant(example_petals(0.125)));
  EXPECT_EQ(st.trace.petals.size(), 5u);
  EXPECT_EQ(st.trace.bouquets.size(), 1u);
  ASSERT_EQ(st.trace.flower_centers.size(), 2u);
  std::vector<std::pair<double, int>> centers;
  for (const auto& f : st.trace.flower_centers)
    centers.emplace_back(std::round(f.lambda.real() * 1e6) / 1e6, static_cast<int>(f.members.size()));
  std::sort(centers.begin(), centers.end());
  EXPECT_EQ(centers[0], (std::pair<double, int>{0.0, 4}));
  EXPECT_EQ(centers[1], (std::pair<double, int>{1.0, 2}));
}

TEST(AssembleBouquets, ScalarEllipse) {
  const auto st = trace_spectrum(discriminant(PeriodicOperator({0.5}, {0.2}, {1.0})));
  EXPECT_EQ(st.trace.petals.size(), 1u);
  EXPECT_EQ(st.trace.bouquets.size(), 1u);
  EXPECT_TRUE(st.trace.flower_centers.empty());
  ASSERT_EQ(st.checks.size(), 1u);
  EXPECT_TRUE(st.checks[0].consistent());
}

TEST(AssembleBouquets, MismatchThrows) {
  const auto d = discriminant(example_petals(0.12));
  const auto stationary = stationary_points(d.p, d.curve);
  auto tr = trace_bands(d, stationary);
  auto rep = structure_report(d);
  rep.bouquet_count += 1;
  EXPECT_THROW(assemble_bouquets(tr, stationary, rep, 1e-6), StructureMismatch);
}

TEST(PetalPolyline, NoRepeatedVertices) {
  const auto st = trace_spectrum(discriminant(example_petals(0.13)));
  const auto poly = petal_polyline(st.trace, 0);
  for (std::size_t k = 1; k < poly.size(); ++k) EXPECT_NE(poly[k], poly[k - 1]);
  EXPECT_GT(poly.size(), 5u * 256u);
}

TEST(AngleCheck, LaplacianCenterIsStraight) {
  const auto d = discriminant(laplacian(2));
  const auto st = trace_spectrum(d);
  StationaryPoint center;
  center.lambda = 0.0;
  center.order = 1;
  const auto gaps = angle_check(st.trace, center, 1e-6);
  ASSERT_EQ(gaps.size(), 2u);
  EXPECT_NEAR(gaps[0], kPi, 1e-3);
  EXPECT_NEAR(gaps[1], kPi, 1e-3);
}

TEST(AngleCheck, PetalCentres) {
  const auto st = trace_spectrum(discriminant(example_petals(0.125)));
  for (const auto& f : st.trace.flower_centers) {
    StationaryPoint c;
    c.lambda = f.lambda;
    c.order = f.order;
    const auto gaps = angle_check(st.trace, c, 1e-6);
    const double expected = kPi / (f.order + 1);
    ASSERT_EQ(static_cast<int>(gaps.size()), 2 * (f.order + 1));
    for (double g : gaps) EXPECT_NEAR(g, expected, 0.05);
  }
}

TEST(AngleCheck, FarPointThrows) {
  const auto st = trace_spectrum(discriminant(laplacian(2)));
  StationaryPoint c;
  c.lambda = cplx(5.0, 5.0);
  EXPECT_THROW(angle_check(st.trace, c, 1e-6), InsufficientSampling);
}

TEST(Export, CsvRowsMatchSamples) {
  const auto st = trace_spectrum(discriminant(example_petals(0.125)));
  const auto csv = export_csv(st.trace);
  EXPECT_EQ(csv.rfind("band_id,petal_id,bouquet_id,theta,re,im\n", 0), 0u);
  EXPECT_EQ(line_count(csv), 1 + static_cast<int>(st.trace.sample_count()));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5);
    EXPECT_EQ(line.rfind("-1,", 0), std::string::npos);
  }
}

TEST(Export, CsvSegmentHasNoPetals) {
  const auto st = trace_spectrum(discriminant(example_cross()));
  std::istringstream in(export_csv(st.trace));
  std::string line;
  std::getline(in, line);
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_NE(line.find(",-1,"), std::string::npos);
}

TEST(Export, PointCsv) {
  const std::vector<cplx> roots{1.0, cplx(0.0, -2.0), 0.5};
  const auto csv = export_point_csv(roots);
  EXPECT_EQ(line_count(csv), 4);
  EXPECT_NE(csv.find("-1,-1,-1,0,0,-2\n"), std::string::npos);
  EXPECT_NE(csv.find("-1,-1,-1,0,0.5,0\n"), std::string::npos);
}

TEST(Export, SvgIsWellFormed) {
  const auto d = discriminant(example_petals(0.125));
  const auto st = trace_spectrum(d);
  const auto svg = export_svg(st.trace, d, st.structure.stationary);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
}

TEST(TraceSpectrum, PointCurveThrows) {
  EXPECT_THROW(trace_spectrum(discriminant(PeriodicOperator({0.0, 1.0}, {1.0, 2.0}, {1.0, 0.0}))),
               DegenerateCurve);
}

// Properties.

TEST(TraceProperty, SamplesSatisfyEquation) {
  std::mt19937_64 rng(42);
  int traced = 0;
  for (int trial = 0; traced < 30 && trial < 200; ++trial) {
    const auto d = discriminant(random_operator(rng, 1 + trial % 5));
    if (d.degenerate() || !well_separated(d, 1e-3)) continue;
    const auto st = trace_spectrum(d);
    ++traced;
    EXPECT_LE(st.trace.max_residual, 1e-8);
    EXPECT_EQ(static_cast<int>(st.trace.bands.size()), d.degree());
    for (const auto& b : st.trace.bands) {
      for (std::size_t k = 1; k < b.samples.size(); ++k) EXPECT_GT(b.samples[k].theta, b.samples[k - 1].theta);
      for (const auto& s : b.samples) {
        const cplx e = d.a_prod * std::polar(1.0, -s.theta) + d.c_prod * std::polar(1.0, s.theta);
        EXPECT_LE(std::abs(d.p(s.lambda) - e), 1e-8 * std::max(1.0, eval_bound(d.p, std::abs(s.lambda))));
      }
    }
    for (const auto& c : st.checks) EXPECT_TRUE(c.consistent());
  }
  EXPECT_GE(traced, 20);
}

TEST(TraceProperty, MonodromyIsPermutation) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = discriminant(random_operator(rng, 2 + trial % 4));
    if (d.degenerate() || !well_separated(d, 1e-3)) continue;
    const auto tr = trace_bands(d, stationary_points(d.p, d.curve));
    auto m = tr.monodromy;
    std::sort(m.begin(), m.end());
    for (int k = 0; k < static_cast<int>(m.size()); ++k) EXPECT_EQ(m[k], k);
    std::size_t covered = 0;
    for (const auto& p : tr.petals) covered += p.size();
    EXPECT_EQ(covered, tr.bands.size());
  }
}

// Distinct petals of a well-separated ellipse meet at most in flower centres,
// which are absent here.
TEST(TraceProperty, PetalsDisjointWithoutCentres) {
  const auto st = trace_spectrum(discriminant(example_petals(0.12)));
  ASSERT_EQ(st.trace.petals.size(), 5u);
  double closest = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < 5; ++p)
    for (std::size_t q = p + 1; q < 5; ++q) {
      const auto a = petal_polyline(st.trace, static_cast<int>(p));
      const auto b = petal_polyline(st.trace, static_cast<int>(q));
      for (cplx z : a)
        for (cplx w : b) closest = std::min(closest, std::abs(z - w));
    }
  EXPECT_GT(closest, 1e-3);
}
