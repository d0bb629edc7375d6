// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "jspec/criteria.hpp"
#include "jspec/errors.hpp"
#include "jspec/inverse.hpp"
#include "jspec/trace.hpp"
#include "oracles.hpp"

using namespace jspec;
using namespace jspec::testing;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << why;
  }
};

double coeff_distance(const Polynomial& p, const Polynomial& q) {
  double worst = 0.0;
  for (int k = 0; k <= std::max(p.degree(), q.degree()); ++k)
    worst = std::max(worst, std::abs(p.coeff(k) - q.coeff(k)));
  return worst;
}

// 1
void discriminant_fixtures(Outcome& out) {
  double worst_cross = coeff_distance(discriminant(example_cross()).p, Polynomial({-1.0, 0.0, 1.0}));
  if (worst_cross > 1e-10) out.fail("cross P off by " + std::to_string(worst_cross));
  double worst_lap = 0.0;
  for (int n = 1; n <= 8; ++n)
    worst_lap = std::max(worst_lap, coeff_distance(discriminant(laplacian(n)).p, chebyshev_like(n)));
  if (worst_lap > 1e-9) out.fail("laplacian P off by " + std::to_string(worst_lap));
  const Polynomial target({0.125, 0.0, 0.0, 0.0, -1.25, 1.0});
  double worst_ex = 0.0;
  for (double a5 : {0.12, 0.125, 0.13})
    worst_ex = std::max(worst_ex, coeff_distance(discriminant(example_petals(a5)).p, target));
  if (worst_ex > 1e-9) out.fail("petal example P off by " + std::to_string(worst_ex));
  if (out.pass)
    out.detail << "cross " << worst_cross << ", laplacian N<=8 " << worst_lap << ", petal example " << worst_ex;
}

// 2
void figure_sweep(Outcome& out) {
  struct Case {
    double a5;
    int petals, bouquets;
    std::vector<std::pair<double, int>> flowers;
  };
  const Case cases[] = {{0.12, 5, 5, {}}, {0.125, 5, 1, {{0.0, 4}, {1.0, 2}}}, {0.13, 1, 1, {}}};
  for (const auto& cs : cases) {
    const auto disc = discriminant(example_petals(cs.a5));
    const auto st = trace_spectrum(disc);
    const auto& rep = st.structure;
    std::ostringstream tag;
    tag << "a=" << cs.a5;
    if (rep.petal_count != cs.petals || rep.bouquet_count != cs.bouquets) {
      out.fail(tag.str() + " counts " + std::to_string(rep.petal_count) + "/" + std::to_string(rep.bouquet_count));
      continue;
    }
    if (rep.flowers.size() != cs.flowers.size()) {
      out.fail(tag.str() + " flower count");
      continue;
    }
    for (const auto& [center, petals] : cs.flowers) {
      bool found = false;
      for (const auto& f : rep.flowers)
        if (std::abs(f.center - center) < 1e-6 && f.petals == petals) found = true;
      bool traced = false;
      for (const auto& f : st.trace.flower_centers)
        if (std::abs(f.lambda - center) < 1e-6 && static_cast<int>(f.members.size()) == petals) traced = true;
      if (!found || !traced) out.fail(tag.str() + " flower at " + std::to_string(center));
    }
    if (static_cast<int>(st.trace.petals.size()) != cs.petals ||
        static_cast<int>(st.trace.bouquets.size()) != cs.bouquets)
      out.fail(tag.str() + " trace cycles/components disagree");
    if (cs.petals == 1 && st.trace.petals[0].size() != 5) out.fail(tag.str() + " petal is not 5 bands");
  }
  if (out.pass) out.detail << "(5,5,-), (5,1,{0:4,1:2}), (1,1,-) from formula and from trace";
}

// 3
void winding_law(Outcome& out) {
  std::mt19937_64 rng(3);
  std::vector<Discriminant> corpus;
  for (double a5 : {0.12, 0.125, 0.13}) corpus.push_back(discriminant(example_petals(a5)));
  std::uniform_int_distribution<int> pick_n(1, 6);
  while (corpus.size() < 103) {
    const auto disc = discriminant(random_operator(rng, pick_n(rng)));
    if (disc.curve.kind != CurveKind::Ellipse || !well_separated(disc, 1e-3)) continue;
    corpus.push_back(disc);
  }
  int petals = 0, exceptions = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    try {
      const auto st = trace_spectrum(corpus[k]);
      for (const auto& c : st.checks) {
        ++petals;
        if (!c.consistent()) {
          ++exceptions;
          out.fail("case " + std::to_string(k) + " petal " + std::to_string(c.petal));
        }
      }
    } catch (const Error& e) {
      ++exceptions;
      out.fail("case " + std::to_string(k) + ": " + e.kind());
    }
  }
  if (out.pass) out.detail << corpus.size() << " operators, " << petals << " petals, 0 exceptions";
  else out.detail << " (" << exceptions << " exceptions)";
}

// 4
void cross_spectrum(Outcome& out) {
  const auto disc = discriminant(example_cross());
  const auto st = trace_spectrum(disc);
  const double s3 = std::sqrt(3.0);
  // Sample→set direction.
  double to_set = 0.0;
  for (cplx z : all_samples(st.trace)) {
    const double d_real = std::hypot(std::max(0.0, std::abs(z.real()) - s3), z.imag());
    const double d_imag = std::hypot(z.real(), std::max(0.0, std::abs(z.imag()) - 1.0));
    to_set = std::max(to_set, std::min(d_real, d_imag));
  }
  // Set→trace direction on a fine grid of the cross.
  double to_trace = 0.0;
  for (int k = 0; k <= 2000; ++k) {
    const double t = -1.0 + 2.0 * k / 2000.0;
    to_trace = std::max(to_trace, trace_distance(st.trace, cplx{s3 * t, 0.0}));
    to_trace = std::max(to_trace, trace_distance(st.trace, cplx{0.0, t}));
  }
  const double hausdorff = std::max(to_set, to_trace);
  if (hausdorff > 1e-6) out.fail("Hausdorff " + std::to_string(hausdorff));
  if (st.structure.decomposition_unique) out.fail("decomposition reported unique");
  if (out.pass) out.detail << "Hausdorff " << hausdorff << ", decomposition not unique";
}

// Gaps between consecutive real bands: β_{n+1} ≤ λ_n ≤ α_n with λ_n the
// stationary point between them.
bool interlaced(const TraceResult& tr, const std::vector<double>& stationary_desc, double tol,
                std::string& why) {
  std::vector<std::pair<double, double>> bands;
  for (const auto& b : tr.bands) {
    double lo = b.samples.front().lambda.real(), hi = lo;
    for (const auto& s : b.samples) lo = std::min(lo, s.lambda.real()), hi = std::max(hi, s.lambda.real());
    bands.emplace_back(lo, hi);
  }
  std::sort(bands.begin(), bands.end(), [](auto l, auto r) { return l.first > r.first; });
  for (std::size_t k = 0; k + 1 < bands.size(); ++k) {
    const double lam = stationary_desc.at(k);
    const double beta_lower = bands[k + 1].second;
    const double alpha_upper = bands[k].first;
    if (!(bands[k + 1].first < beta_lower) || beta_lower > lam + tol || lam > alpha_upper + tol) {
      std::ostringstream os;
      os << "gap " << k << ": [" << bands[k + 1].first << "," << beta_lower << "] " << lam << " ["
         << alpha_upper << ",...]";
      why = os.str();
      return false;
    }
  }
  return true;
}

// 5
void real_criterion(Outcome& out) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick_n(1, 6);
  double worst_im = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto op = random_self_adjoint(rng, pick_n(rng));
    const auto disc = discriminant(op);
    const auto rep = check_real(disc);
    if (!rep.is_real) {
      out.fail("self-adjoint case " + std::to_string(k) + " rejected");
      continue;
    }
    try {
      const auto st = trace_spectrum(disc);
      for (cplx z : all_samples(st.trace)) worst_im = std::max(worst_im, std::abs(z.imag()));
      std::string why;
      if (!interlaced(st.trace, rep.witness.stationary, 1e-6, why))
        out.fail("case " + std::to_string(k) + " interlacing " + why);
    } catch (const Error& e) {
      out.fail("self-adjoint case " + std::to_string(k) + ": " + e.kind());
    }
  }
  if (worst_im > 1e-6) out.fail("self-adjoint max |Im| " + std::to_string(worst_im));

  int perturbed = 0;
  double least_im = 1e300;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> pick_m(2, 6);
  while (perturbed < 50) {
    auto op = random_self_adjoint(rng, pick_m(rng));
    for (auto& b : op.b) b += cplx{0.0, 0.5 * u(rng)};
    const auto disc = discriminant(op);
    const auto rep = check_real(disc);
    bool witness = false;
    for (cplx v : rep.witness.signed_values)
      if (v.real() < 2.0 * rep.witness.r - 1e-3) witness = true;
    if (!witness) continue;
    ++perturbed;
    if (rep.is_real) out.fail("perturbed case " + std::to_string(perturbed) + " accepted");
    try {
      const auto st = trace_spectrum(disc);
      double m = 0.0;
      for (cplx z : all_samples(st.trace)) m = std::max(m, std::abs(z.imag()));
      least_im = std::min(least_im, m);
      if (m <= 1e-6) out.fail("perturbed case " + std::to_string(perturbed) + " traces real");
    } catch (const Error& e) {
      out.fail("perturbed case " + std::to_string(perturbed) + ": " + e.kind());
    }
  }
  if (out.pass)
    out.detail << "50 self-adjoint pass, max|Im| " << worst_im << "; 50 perturbed fail, min max|Im| " << least_im;
}

// 6
void interval_criteria(Outcome& out) {
  for (int n = 2; n <= 6; ++n) {
    const auto iv = check_interval(discriminant(laplacian(n)));
    if (!iv.interval || std::abs(iv.interval->first + 2.0) > 1e-8 || std::abs(iv.interval->second - 2.0) > 1e-8)
      out.fail("laplacian N=" + std::to_string(n));
  }
  const Polynomial p3 = chebyshev_like(3);
  const auto solved = solve_b(p3, example_interval3_a(), example_interval3_c());
  double solved_dev = -1.0;
  if (!solved) {
    out.fail("solve_b found no b for the N=3 fixture");
  } else {
    const auto disc = discriminant(solved->op);
    solved_dev = coeff_distance(disc.p, p3);
    const auto iv = check_interval(disc);
    if (solved_dev > 1e-7) out.fail("solved N=3 P off by " + std::to_string(solved_dev));
    if (!iv.interval || std::abs(iv.interval->first + 2.0) > 1e-7 || std::abs(iv.interval->second - 2.0) > 1e-7)
      out.fail("solved N=3 interval: " + iv.reason);
  }
  const auto closed = discriminant(example_interval3());
  if (coeff_distance(closed.p, p3) > 1e-7 || !check_interval(closed).interval)
    out.fail("closed-form N=3 fixture");

  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> s_dist(0.3, 3.0), mu_dist(-3.0, 3.0);
  std::uniform_int_distribution<int> pick_n(1, 6);
  double worst = 0.0;
  for (int k = 0; k < 40; ++k) {
    const int n = pick_n(rng);
    const double s = s_dist(rng), mu = mu_dist(rng);
    auto op = laplacian(n);
    for (auto& v : op.a) v *= s;
    for (auto& v : op.c) v *= s;
    for (auto& v : op.b) v = s * v + mu;
    const auto iv = check_interval(discriminant(op));
    if (!iv.interval) {
      out.fail("affine case " + std::to_string(k) + ": " + iv.reason);
      continue;
    }
    worst = std::max({worst, std::abs(iv.interval->first - (mu - 2.0 * s)),
                      std::abs(iv.interval->second - (mu + 2.0 * s))});
  }
  if (worst > 1e-7) out.fail("affine endpoints off by " + std::to_string(worst));
  if (out.pass) out.detail << "N=2..6 exact; N=3 fixture dev " << solved_dev << "; 40 affine, worst " << worst;
}

// 7
void line_spectrum(Outcome& out) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  std::uniform_int_distribution<int> pick_n(1, 6);
  double worst_phi = 0.0, worst_c0 = 0.0;
  int cases = 0;
  for (int k = 0; k < 40; ++k) {
    const int n = pick_n(rng);
    const auto base = random_self_adjoint(rng, n);
    const double phi = ang(rng);
    const cplx c0 = random_disk(rng, 2.0);
    const cplx u = std::polar(1.0, phi);
    std::vector<cplx> a(n), b(n), c(n);
    for (int j = 0; j < n; ++j) {
      a[j] = u * base.a[j];
      b[j] = u * base.b[j] + c0;
      c[j] = u * base.c[j];
    }
    const auto disc = discriminant(PeriodicOperator(a, b, c));
    const auto lr = check_line(disc);
    ++cases;
    if (!lr) {
      out.fail("case " + std::to_string(k) + " not detected");
      continue;
    }
    // Directions agree modulo π/N and C0 lies on the recovered line.
    const double step = kPi / n;
    double d = std::fmod(std::abs(lr->phi - phi), step);
    d = std::min(d, step - d);
    worst_phi = std::max(worst_phi, d);
    const cplx dir = std::polar(1.0, lr->phi);
    const double off_line = std::abs((std::conj(dir) * (c0 - lr->c0)).imag());
    worst_c0 = std::max(worst_c0, off_line);
    // The true line must also be among the passing directions.
    double best = std::abs(std::remainder(phi - lr->phi, kPi));
    for (double alt : lr->alternatives) best = std::min(best, std::abs(std::remainder(phi - alt, kPi)));
    if (best > 1e-6) out.fail("case " + std::to_string(k) + " true direction not among candidates");
  }
  if (worst_phi > 1e-6) out.fail("phi off by " + std::to_string(worst_phi));
  if (worst_c0 > 1e-6) out.fail("C0 off the line by " + std::to_string(worst_c0));
  if (out.pass) out.detail << cases << " fixtures, phi err " << worst_phi << ", C0 offset " << worst_c0;
}

// 8
void period_invariance(Outcome& out) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> pick_n(1, 4);
  int done = 0;
  double worst = 0.0;
  while (done < 20) {
    const auto op = random_operator(rng, pick_n(rng));
    const auto disc = discriminant(op);
    if (disc.curve.kind != CurveKind::Ellipse || !well_separated(disc, 1e-3)) continue;
    ++done;
    try {
      const auto base = trace_spectrum(disc);
      for (int k : {2, 3}) {
        const auto dk = discriminant(period_multiply(op, k));
        const auto tk = trace_spectrum(dk);
        if (tk.structure.petal_count != base.structure.petal_count ||
            tk.structure.bouquet_count != base.structure.bouquet_count) {
          out.fail("case " + std::to_string(done) + " k=" + std::to_string(k) + " counts differ");
          continue;
        }
        // Each trace's samples against the other operator's exact spectrum.
        double h = 0.0;
        for (cplx z : all_samples(tk.trace)) h = std::max(h, spectrum_distance(disc, z));
        for (cplx z : all_samples(base.trace)) h = std::max(h, spectrum_distance(dk, z));
        worst = std::max(worst, h);
      }
    } catch (const Error& e) {
      out.fail("case " + std::to_string(done) + ": " + e.kind() + " " + e.what());
    }
  }
  if (worst > 1e-5) out.fail("Hausdorff " + std::to_string(worst));
  if (out.pass) out.detail << "20 operators, k in {2,3}, worst Hausdorff " << worst;
}

// 9
void angle_structure(Outcome& out) {
  auto gaps_at = [](const Discriminant& disc, cplx center) {
    const auto st = trace_spectrum(disc);
    for (const auto& s : st.structure.stationary)
      if (std::abs(s.lambda - center) < 1e-6) return angle_check(st.trace, s, 1e-9);
    throw std::runtime_error("center not stationary");
  };
  const auto flower = gaps_at(discriminant(example_petals(0.125)), 0.0);
  double dev_flower = 0.0;
  for (double g : flower) dev_flower = std::max(dev_flower, std::abs(g - kPi / 4.0));
  if (flower.size() != 8 || dev_flower > 0.05)
    out.fail("flower center: " + std::to_string(flower.size()) + " gaps, dev " + std::to_string(dev_flower));
  const auto cross = gaps_at(discriminant(example_cross()), 0.0);
  double dev_cross = 0.0;
  for (double g : cross) dev_cross = std::max(dev_cross, std::abs(g - kPi / 2.0));
  if (cross.size() != 4 || dev_cross > 0.05)
    out.fail("cross center: " + std::to_string(cross.size()) + " gaps, dev " + std::to_string(dev_cross));
  if (out.pass) out.detail << "8 gaps within " << dev_flower << " of pi/4, 4 gaps within " << dev_cross << " of pi/2";
}

// 10
void invariant_suite(Outcome& out) {
  std::vector<Discriminant> corpus;
  for (double a5 : {0.12, 0.125, 0.13}) corpus.push_back(discriminant(example_petals(a5)));
  corpus.push_back(discriminant(example_cross()));
  corpus.push_back(discriminant(example_interval3()));
  for (int n = 1; n <= 8; ++n) corpus.push_back(discriminant(laplacian(n)));
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> pick_n(1, 6);
  for (int k = 0; k < 60; ++k) corpus.push_back(discriminant(random_operator(rng, pick_n(rng))));
  for (int k = 0; k < 30; ++k) corpus.push_back(discriminant(random_self_adjoint(rng, pick_n(rng))));

  int traces = 0;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& disc = corpus[idx];
    const std::string tag = "disc " + std::to_string(idx);
    const int n = disc.degree();
    if (!disc.p.is_monic()) out.fail(tag + " not monic");
    const RootSet rs = roots(disc.p);
    if (rs.total_multiplicity() != n) out.fail(tag + " root multiplicities");
    for (std::size_t i = 0; i < rs.entries.size(); ++i)
      for (std::size_t j = i + 1; j < rs.entries.size(); ++j)
        if (std::abs(rs.entries[i].value - rs.entries[j].value) <= rs.radius) out.fail(tag + " roots not separated");
    const auto rep = structure_report(disc);
    if (rep.sum_tau != n - 1) out.fail(tag + " sum tau " + std::to_string(rep.sum_tau));
    if (disc.curve.kind == CurveKind::Ellipse) {
      if (!(1 <= rep.bouquet_count && rep.bouquet_count <= rep.petal_count && rep.petal_count <= n))
        out.fail(tag + " count ordering");
    }
    if (disc.degenerate()) continue;
    // Skip operators whose images sit near the curve; the trace corpus keeps
    // them off 𝓔.
    if (!well_separated(disc, 1e-3) && idx >= 13) continue;
    try {
      const auto st = trace_spectrum(disc);
      ++traces;
      const auto& tr = st.trace;
      if (tr.max_residual > 1e-8) out.fail(tag + " residual " + std::to_string(tr.max_residual));
      if (static_cast<int>(tr.bands.size()) != n) out.fail(tag + " band count");
      std::vector<int> seen(n, 0);
      for (int m : tr.monodromy) {
        if (m < 0 || m >= n || seen[m]++) out.fail(tag + " monodromy not a bijection");
      }
      for (const auto& b : tr.bands) {
        for (std::size_t k = 1; k < b.samples.size(); ++k)
          if (!(b.samples[k].theta > b.samples[k - 1].theta)) {
            out.fail(tag + " band theta not increasing");
            break;
          }
        for (const auto& s : b.samples) {
          const cplx r = disc.p(s.lambda) - curve_point(disc.curve, s.theta);
          double sc = 0.0;
          for (int k = 0; k <= n; ++k) sc += std::abs(disc.p.coeff(k)) * std::pow(std::abs(s.lambda), k);
          if (std::abs(r) > 1e-8 * std::max(1.0, sc)) {
            out.fail(tag + " sample residual");
            break;
          }
        }
      }
    } catch (const Error& e) {
      out.fail(tag + ": " + e.kind() + " " + e.what());
    }
  }
  if (out.pass) out.detail << corpus.size() << " discriminants, " << traces << " traces, 0 violations";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"discriminant fixtures", discriminant_fixtures},
      {"structure sweep", figure_sweep},
      {"winding law", winding_law},
      {"cross spectrum", cross_spectrum},
      {"real-spectrum criterion", real_criterion},
      {"interval criteria", interval_criteria},
      {"line spectrum", line_spectrum},
      {"period-multiplication invariance", period_invariance},
      {"angle structure", angle_structure},
      {"invariant suite", invariant_suite},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("unexpected exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!out.pass) ++failed;
    std::printf("%s criterion %2d %-34s %6.2fs  %s\n", out.pass ? "PASS" : "FAIL", index, name, secs,
                out.detail.str().c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
