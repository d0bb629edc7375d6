#include "jspec/trace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "jspec/assignment.hpp"
#include "jspec/errors.hpp"

namespace jspec {

namespace {

constexpr double kPi = std::numbers::pi;

bool descending(cplx lhs, cplx rhs) {
  if (lhs.real() != rhs.real()) return lhs.real() > rhs.real();
  return lhs.imag() > rhs.imag();
}

double residual_scale(const Polynomial& p, cplx z) {
  return std::max(1.0, eval_bound(p, std::abs(z)));
}

CostMatrix distance_costs(const std::vector<cplx>& from, const std::vector<cplx>& to) {
  CostMatrix cost(from.size(), std::vector<double>(to.size()));
  for (std::size_t i = 0; i < from.size(); ++i)
    for (std::size_t j = 0; j < to.size(); ++j) cost[i][j] = std::norm(from[i] - to[j]);
  return cost;
}

double min_separation(const std::vector<cplx>& z) {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) sep = std::min(sep, std::abs(z[i] - z[j]));
  return sep;
}

struct EventGroup {
  double theta = 0.0;
  double radius = 0.0;
  std::vector<const StationaryPoint*> points;
};

class Tracker {
 public:
  Tracker(const Discriminant& disc, const TraceOptions& opt) : disc_(disc), opt_(opt) {}

  std::vector<cplx> solve(cplx theta, const std::vector<cplx>& warm) const {
    const Polynomial q = disc_.p - Polynomial::constant(curve_point(disc_.curve, theta));
    return simultaneous_roots(q, warm);
  }

  // New roots reordered to follow `from`, or nothing when the step is too
  // large for an unambiguous matching.
  std::optional<std::vector<cplx>> match(const std::vector<cplx>& from,
                                         const std::vector<cplx>& to) const {
    if (from.size() == 1) return to;
    const auto m = min_cost_assignment(distance_costs(from, to));
    std::vector<cplx> out(from.size());
    double disp = 0.0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      out[i] = to[static_cast<std::size_t>(m[i])];
      disp = std::max(disp, std::abs(out[i] - from[i]));
    }
    if (!(disp < 0.5 * min_separation(to))) return std::nullopt;
    return out;
  }

  template <class Path, class Sink>
  void advance(std::vector<cplx>& z, double ta, double tb, const Path& path, const Sink& sink,
               int depth = 0) {
    if (auto next = match(z, solve(path(tb), z))) {
      z = std::move(*next);
      sink(tb, z);
      return;
    }
    if (depth >= opt_.max_depth) {
      std::ostringstream os;
      os << "continuation could not separate roots after " << depth << " bisections";
      throw TraceAmbiguous(os.str(), path(ta).real(), path(tb).real());
    }
    ++bisections;
    const double tm = 0.5 * (ta + tb);
    advance(z, ta, tm, path, sink, depth + 1);
    advance(z, tm, tb, path, sink, depth + 1);
  }

  // Continue from θ_e − r to θ_e + r through the half-disc on the interior
  // side of the curve.
  void detour(std::vector<cplx>& z, double theta, double radius) {
    const bool upper = disc_.curve.kind == CurveKind::Segment || disc_.curve.counterclockwise();
    const double sign = upper ? -1.0 : 1.0;
    auto path = [&](double t) {
      return cplx{theta} + std::polar(radius, kPi + sign * kPi * t);
    };
    auto sink = [](double, const std::vector<cplx>&) {};
    const int steps = std::max(4, opt_.detour_steps);
    for (int k = 1; k <= steps; ++k)
      advance(z, static_cast<double>(k - 1) / steps, static_cast<double>(k) / steps, path, sink);
  }

  // Sample at a collision θ: match raw roots to the neighbouring state and
  // snap the τ+1 colliding bands onto each stationary point.
  std::vector<cplx> event_sample(const std::vector<cplx>& near, const EventGroup& group,
                                 double theta, std::vector<TraceEvent>& events) const {
    const cplx w = curve_point(disc_.curve, theta);
    const auto raw = solve(theta, near);
    const auto m = min_cost_assignment(distance_costs(near, raw));
    std::vector<cplx> vals(near.size());
    for (std::size_t i = 0; i < near.size(); ++i) vals[i] = raw[static_cast<std::size_t>(m[i])];

    std::vector<char> claimed(near.size(), 0);
    for (const StationaryPoint* s : group.points) {
      std::vector<int> order(near.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
        return std::abs(near[l] - s->lambda) < std::abs(near[r] - s->lambda);
      });
      TraceEvent ev;
      ev.lambda = s->lambda;
      ev.order = s->order;
      ev.theta = theta;
      const double res = std::abs(disc_.p(s->lambda) - w) / residual_scale(disc_.p, s->lambda);
      ev.snapped = res <= opt_.tol;
      for (int i : order) {
        if (static_cast<int>(ev.bands.size()) == s->order + 1) break;
        if (claimed[i]) continue;
        claimed[i] = 1;
        ev.bands.push_back(i);
        if (ev.snapped) vals[i] = s->lambda;
      }
      std::sort(ev.bands.begin(), ev.bands.end());
      events.push_back(std::move(ev));
    }
    return vals;
  }

  int bisections = 0;

 private:
  const Discriminant& disc_;
  const TraceOptions& opt_;
};

std::vector<EventGroup> collect_events(const Discriminant& disc,
                                       std::span<const StationaryPoint> stationary, double t0,
                                       double delta) {
  const auto& curve = disc.curve;
  std::vector<EventGroup> raw;
  for (const auto& s : stationary) {
    if (s.location != RegionLocation::OnCurve) continue;
    double theta;
    if (curve.kind == CurveKind::Segment) {
      const cplx w = s.image * std::polar(1.0, -curve.phi);
      theta = t0 + std::acos(std::clamp(w.real() / (2.0 * curve.half_radius()), -1.0, 1.0));
    } else {
      theta = solve_theta(curve, s.image).front();
    }
    const cplx on = curve_point(curve, theta);
    const double speed = std::abs(curve_tangent(curve, theta));
    double radius = delta;
    if (speed > 1e-3 * (curve.ra + curve.rc))
      radius = std::clamp(10.0 * std::abs(on - s.image) / speed, delta, 1e-3);
    raw.push_back({theta, radius, {&s}});
  }
  std::sort(raw.begin(), raw.end(), [](const auto& l, const auto& r) { return l.theta < r.theta; });
  std::vector<EventGroup> groups;
  for (auto& e : raw) {
    if (!groups.empty()) {
      auto& g = groups.back();
      const double lo = std::min(g.theta - g.radius, e.theta - e.radius);
      const double hi = std::max(g.theta + g.radius, e.theta + e.radius);
      if (e.theta - g.theta <= 2.0 * (g.radius + e.radius)) {
        g.theta = 0.5 * (lo + hi);
        g.radius = 0.5 * (hi - lo) + delta;
        g.points.insert(g.points.end(), e.points.begin(), e.points.end());
        continue;
      }
    }
    groups.push_back(e);
  }
  return groups;
}

}  // namespace

std::size_t TraceResult::sample_count() const noexcept {
  std::size_t n = 0;
  for (const auto& b : bands) n += b.samples.size();
  return n;
}

std::vector<cplx> roots_at(const Discriminant& disc, double theta) {
  const Polynomial q = disc.p - Polynomial::constant(curve_point(disc.curve, theta));
  auto z = roots(q).expanded();
  std::sort(z.begin(), z.end(), descending);
  return z;
}

TraceResult trace_bands(const Discriminant& disc, std::span<const StationaryPoint> stationary,
                        const TraceOptions& opt) {
  if (disc.degenerate()) throw DegenerateCurve("cannot trace the point curve; σ(J) is the zero set of P");
  const int n = disc.degree();
  const int samples = opt.min_samples > 0 ? opt.min_samples : 256 * n;
  if (samples < 8 * n) {
    std::ostringstream os;
    os << "at least " << 8 * n << " samples are required, got " << samples;
    throw InputError("InvalidArgument", os.str());
  }
  const bool segment = disc.curve.kind == CurveKind::Segment;
  const double t0 = segment ? disc.curve.vertex_theta() : -kPi;
  const double t1 = t0 + (segment ? kPi : 2.0 * kPi);
  const double h = (t1 - t0) / samples;

  TraceResult tr;
  tr.kind = disc.curve.kind;
  tr.samples_requested = samples;
  tr.clockwise = !segment && !disc.curve.counterclockwise();

  auto groups = collect_events(disc, stationary, t0, opt.event_delta);
  std::optional<EventGroup> start_group, end_group;
  std::vector<EventGroup> interior;
  const double edge = opt.event_delta;
  EventGroup wrap;
  wrap.theta = t1;
  wrap.radius = edge;
  for (auto& g : groups) {
    const bool at_start = g.theta - g.radius <= t0 + edge;
    const bool at_end = g.theta + g.radius >= t1 - edge;
    if (!at_start && !at_end) {
      interior.push_back(g);
      continue;
    }
    if (segment) {
      g.radius = at_start ? std::max(g.radius, g.theta + g.radius - t0)
                          : std::max(g.radius, t1 - g.theta + g.radius);
      g.theta = at_start ? t0 : t1;
      (at_start ? start_group : end_group) = g;
      continue;
    }
    // θ = −π and θ = π are the same point of the ellipse.
    const double dist = std::min(std::abs(g.theta - t0), std::abs(t1 - g.theta));
    wrap.radius = std::max(wrap.radius, dist + g.radius);
    wrap.points.insert(wrap.points.end(), g.points.begin(), g.points.end());
  }
  if (!wrap.points.empty()) {
    start_group = wrap;
    start_group->theta = t0;
    end_group = wrap;
  }

  Tracker tracker(disc, opt);
  std::vector<std::vector<BandSample>> rec(static_cast<std::size_t>(n));
  auto record = [&](double theta, const std::vector<cplx>& z) {
    for (int i = 0; i < n; ++i) rec[i].push_back({theta, z[i]});
  };
  auto real_path = [](double t) { return cplx{t}; };

  const double s0 = start_group ? t0 + start_group->radius : t0;
  std::vector<cplx> z = simultaneous_roots(disc.p - Polynomial::constant(curve_point(disc.curve, s0)));
  std::sort(z.begin(), z.end(), descending);
  const std::vector<cplx> start_state = z;

  std::vector<TraceEvent> events;
  std::vector<cplx> start_sample;
  if (start_group) start_sample = tracker.event_sample(z, *start_group, t0, events);
  if (start_group) record(t0, start_sample);
  record(s0, z);

  auto run_to = [&](double from, double to) {
    for (long k = static_cast<long>(std::floor((from - t0) / h)) + 1;; ++k) {
      const double t = t0 + static_cast<double>(k) * h;
      if (t >= to - 1e-3 * h) break;
      if (t <= from + 1e-3 * h) continue;
      tracker.advance(z, from, t, real_path, record);
      from = t;
    }
    tracker.advance(z, from, to, real_path, record);
  };

  double cur = s0;
  for (const auto& g : interior) {
    run_to(cur, g.theta - g.radius);
    const auto at = tracker.event_sample(z, g, g.theta, events);
    record(g.theta, at);
    tracker.detour(z, g.theta, g.radius);
    record(g.theta + g.radius, z);
    cur = g.theta + g.radius;
  }
  const double s1 = end_group ? t1 - end_group->radius : t1;
  run_to(cur, s1);

  tr.monodromy.resize(static_cast<std::size_t>(n));
  std::iota(tr.monodromy.begin(), tr.monodromy.end(), 0);
  if (end_group) {
    std::vector<TraceEvent> end_events;
    const auto at = tracker.event_sample(z, *end_group, t1, segment ? events : end_events);
    record(t1, at);
    if (!segment) {
      // Bands meeting at the wrap point: union of both sides.
      for (std::size_t e = 0; e < end_events.size(); ++e) {
        auto& ev = end_events[e];
        ev.theta = kPi;
        for (auto& sev : events)
          if (sev.theta == t0 && sev.lambda == ev.lambda) {
            ev.bands.insert(ev.bands.end(), sev.bands.begin(), sev.bands.end());
            sev.bands.clear();
          }
        std::sort(ev.bands.begin(), ev.bands.end());
        ev.bands.erase(std::unique(ev.bands.begin(), ev.bands.end()), ev.bands.end());
      }
      std::erase_if(events, [&](const TraceEvent& ev) { return ev.theta == t0 && ev.bands.empty(); });
      events.insert(events.end(), end_events.begin(), end_events.end());
    }
  }

  if (!segment) {
    std::vector<cplx> end_state = z;
    std::vector<cplx> target = start_state;
    if (end_group) {
      tracker.detour(end_state, kPi, end_group->radius);
    } else {
      target.assign(n, 0.0);
      for (int i = 0; i < n; ++i) target[i] = rec[i].front().lambda;
    }
    const auto m = min_cost_assignment(distance_costs(end_state, target));
    double disp = 0.0;
    for (int i = 0; i < n; ++i) disp = std::max(disp, std::abs(end_state[i] - target[m[i]]));
    if (n > 1 && !(disp < 0.5 * min_separation(target)))
      throw TraceAmbiguous("monodromy matching across θ = ±π is ambiguous", kPi - h, kPi);
    tr.monodromy.assign(m.begin(), m.end());

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      std::vector<int> cycle;
      for (int j = i; !seen[j]; j = tr.monodromy[j]) {
        seen[j] = 1;
        cycle.push_back(j);
      }
      tr.petals.push_back(std::move(cycle));
    }
  }

  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Band band;
    band.index = i;
    band.samples = std::move(rec[i]);
    for (const auto& s : band.samples) {
      const double r = std::abs(disc.p(s.lambda) - curve_point(disc.curve, s.theta)) /
                       residual_scale(disc.p, s.lambda);
      worst = std::max(worst, r);
    }
    tr.bands.push_back(std::move(band));
  }
  tr.max_residual = worst;
  tr.events = std::move(events);
  tr.bisections = tracker.bisections;
  return tr;
}

std::vector<cplx> petal_polyline(const TraceResult& tr, int petal) {
  std::vector<cplx> out;
  for (int b : tr.petals.at(static_cast<std::size_t>(petal))) {
    const auto& s = tr.bands[static_cast<std::size_t>(b)].samples;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      if (!out.empty() && out.back() == s[k].lambda) continue;
      out.push_back(s[k].lambda);
    }
  }
  return out;
}

TraceResult assemble_bouquets(TraceResult tr, std::span<const StationaryPoint> stationary,
                              const StructureReport& expected, double tol) {
  const bool segment = tr.kind == CurveKind::Segment;
  if (!segment && static_cast<int>(tr.petals.size()) != expected.petal_count) {
    std::ostringstream os;
    os << "traced " << tr.petals.size() << " monodromy cycles, structure predicts "
       << expected.petal_count << " petals";
    throw StructureMismatch(os.str());
  }
  const std::size_t items = segment ? tr.bands.size() : tr.petals.size();
  std::vector<int> owner(tr.bands.size());
  if (segment) {
    std::iota(owner.begin(), owner.end(), 0);
  } else {
    for (std::size_t p = 0; p < tr.petals.size(); ++p)
      for (int b : tr.petals[p]) owner[static_cast<std::size_t>(b)] = static_cast<int>(p);
  }

  std::vector<std::size_t> parent(items);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };

  tr.flower_centers.clear();
  for (const auto& s : stationary) {
    if (s.location != RegionLocation::OnCurve) continue;
    std::vector<int> members;
    for (const auto& ev : tr.events)
      if (std::abs(ev.lambda - s.lambda) <= tol)
        for (int b : ev.bands) members.push_back(owner[static_cast<std::size_t>(b)]);
    for (const auto& band : tr.bands)
      for (const auto& smp : band.samples)
        if (std::abs(smp.lambda - s.lambda) <= tol) {
          members.push_back(owner[static_cast<std::size_t>(band.index)]);
          break;
        }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t k = 1; k < members.size(); ++k) {
      const auto a = find(static_cast<std::size_t>(members[0]));
      const auto b = find(static_cast<std::size_t>(members[k]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    tr.flower_centers.push_back({s.lambda, s.order, std::move(members)});
  }

  tr.bouquets.clear();
  std::vector<int> slot(items, -1);
  for (std::size_t i = 0; i < items; ++i) {
    const auto r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(tr.bouquets.size());
      tr.bouquets.emplace_back();
    }
    tr.bouquets[static_cast<std::size_t>(slot[r])].push_back(static_cast<int>(i));
  }
  if (static_cast<int>(tr.bouquets.size()) != expected.bouquet_count) {
    std::ostringstream os;
    os << "traced " << tr.bouquets.size() << " connected components, structure predicts "
       << expected.bouquet_count << " bouquets";
    throw StructureMismatch(os.str());
  }
  return tr;
}

std::vector<PetalCheck> petal_checks(const TraceResult& tr, const Discriminant& disc,
                                     std::span<const StationaryPoint> stationary) {
  std::vector<PetalCheck> out;
  if (tr.kind == CurveKind::Segment) return out;
  const auto zeros = roots(disc.p);
  const double scale = std::max(1.0, root_scale(disc.p));
  for (std::size_t p = 0; p < tr.petals.size(); ++p) {
    const auto poly = petal_polyline(tr, static_cast<int>(p));
    PetalCheck c;
    c.petal = static_cast<int>(p);
    c.cycle_length = static_cast<int>(tr.petals[p].size());
    bool found = false;
    for (const auto& z : zeros.entries)
      if (winding_number(poly, z.value) != 0) {
        c.interior_point = z.value;
        found = true;
        break;
      }
    if (!found) {
      std::ostringstream os;
      os << "no zero of P found inside petal " << p;
      throw InsufficientSampling(os.str());
    }
    const auto wc = winding_band_count(poly, c.interior_point, disc.p);
    c.winding_bands = wc.bands;
    c.orientation = wc.orientation;
    c.enclosed = enclosed_stationary(poly, stationary, 1e-9 * scale);
    out.push_back(c);
  }
  return out;
}

std::vector<double> angle_check(const TraceResult& tr, const StationaryPoint& center, double tol) {
  std::vector<double> arcs;
  auto scan = [&](const std::vector<cplx>& v, bool closed) {
    const long n = static_cast<long>(v.size());
    for (long k = 0; k < n; ++k) {
      if (std::abs(v[k] - center.lambda) > tol) continue;
      for (long dir : {-1L, 1L}) {
        long j = k + dir;
        for (; closed || (j >= 0 && j < n); j += dir) {
          const cplx q = v[static_cast<std::size_t>(((j % n) + n) % n)];
          if (std::abs(q - center.lambda) > tol) {
            arcs.push_back(std::arg(q - center.lambda));
            break;
          }
          if (std::abs(j - k) >= n) break;
        }
      }
    }
  };
  if (tr.kind == CurveKind::Segment) {
    for (const auto& b : tr.bands) {
      std::vector<cplx> v;
      for (const auto& s : b.samples) v.push_back(s.lambda);
      scan(v, false);
    }
  } else {
    for (std::size_t p = 0; p < tr.petals.size(); ++p) scan(petal_polyline(tr, static_cast<int>(p)), true);
  }
  if (arcs.size() < 2) {
    std::ostringstream os;
    os << "found " << arcs.size() << " arcs at the center; need at least two";
    throw InsufficientSampling(os.str());
  }
  std::sort(arcs.begin(), arcs.end());
  std::vector<double> gaps;
  for (std::size_t k = 0; k + 1 < arcs.size(); ++k) gaps.push_back(arcs[k + 1] - arcs[k]);
  gaps.push_back(2.0 * kPi + arcs.front() - arcs.back());
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

SpectrumTrace trace_spectrum(const Discriminant& disc, const TraceOptions& options,
                             const StructureOptions& structure_options) {
  SpectrumTrace out;
  out.structure = structure_report(disc, structure_options);
  if (disc.degenerate()) throw DegenerateCurve("cannot trace the point curve; σ(J) is the zero set of P");
  TraceOptions opt = options;
  opt.locate_tol = structure_options.locate_tol;
  const double tol = 1e-6 * std::max(1.0, root_scale(disc.p));
  for (int attempt = 1;; ++attempt) {
    try {
      out.trace = trace_bands(disc, out.structure.stationary, opt);
      out.trace = assemble_bouquets(std::move(out.trace), out.structure.stationary, out.structure, tol);
      out.checks = petal_checks(out.trace, disc, out.structure.stationary);
      out.attempts = attempt;
      return out;
    } catch (const StructureMismatch&) {
      if (attempt >= 2) throw;
    } catch (const InsufficientSampling&) {
      if (attempt >= 2) throw;
    }
    opt.min_samples = 2 * (opt.min_samples > 0 ? opt.min_samples : 256 * disc.degree());
  }
}

namespace {

// Shortest representation that round-trips.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string export_csv(const TraceResult& tr) {
  std::vector<int> petal_of(tr.bands.size(), -1);
  std::vector<int> bouquet_of(tr.bands.size(), -1);
  for (std::size_t p = 0; p < tr.petals.size(); ++p)
    for (int b : tr.petals[p]) petal_of[static_cast<std::size_t>(b)] = static_cast<int>(p);
  for (std::size_t q = 0; q < tr.bouquets.size(); ++q)
    for (int item : tr.bouquets[q]) {
      if (tr.kind == CurveKind::Segment) {
        bouquet_of[static_cast<std::size_t>(item)] = static_cast<int>(q);
      } else {
        for (int b : tr.petals[static_cast<std::size_t>(item)])
          bouquet_of[static_cast<std::size_t>(b)] = static_cast<int>(q);
      }
    }
  std::ostringstream os;
  os << "band_id,petal_id,bouquet_id,theta,re,im\n";
  for (const auto& b : tr.bands)
    for (const auto& s : b.samples)
      os << b.index << ',' << petal_of[static_cast<std::size_t>(b.index)] << ','
         << bouquet_of[static_cast<std::size_t>(b.index)] << ',' << fmt(s.theta) << ','
         << fmt(s.lambda.real()) << ',' << fmt(s.lambda.imag()) << '\n';
  return os.str();
}

std::string export_point_csv(std::span<const cplx> roots) {
  std::ostringstream os;
  os << "band_id,petal_id,bouquet_id,theta,re,im\n";
  for (cplx r : roots) os << "-1,-1,-1,0," << fmt(r.real()) << ',' << fmt(r.imag()) << '\n';
  return os.str();
}

std::string export_svg(const TraceResult& tr, const Discriminant& disc,
                       std::span<const StationaryPoint> stationary) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  auto grow = [&](cplx z) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  };
  for (const auto& b : tr.bands)
    for (const auto& s : b.samples) grow(s.lambda);
  std::vector<cplx> curve;
  for (int k = 0; k <= 512; ++k) {
    const cplx w = curve_point(disc.curve, -kPi + 2.0 * kPi * k / 512.0);
    curve.push_back(w);
    grow(w);
  }
  for (const auto& s : stationary) grow(s.image);
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double pad = 0.05 * span;
  xmin -= pad;
  ymin -= pad;
  const double size = span + 2.0 * pad;
  const double px = 800.0;
  auto X = [&](cplx z) { return fmt((z.real() - xmin) / size * px); };
  auto Y = [&](cplx z) { return fmt((ymin + size - z.imag()) / size * px); };
  const double stroke = 1.0;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px
     << "\" viewBox=\"0 0 " << px << ' ' << px << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto polyline = [&](const std::vector<cplx>& pts, const char* color, bool closed) {
    os << "<" << (closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"" << stroke << "\" points=\"";
    for (cplx z : pts) os << X(z) << ',' << Y(z) << ' ';
    os << "\"/>\n";
  };
  polyline(curve, "red", true);
  for (const auto& b : tr.bands) {
    std::vector<cplx> pts;
    for (const auto& s : b.samples) pts.push_back(s.lambda);
    polyline(pts, "black", false);
  }
  for (const auto& s : stationary) {
    std::ostringstream pts;
    for (int k = 0; k < 10; ++k) {
      const double r = (k % 2 == 0 ? 8.0 : 3.5) / px * size;
      pts << X(s.image + std::polar(r, kPi / 2 + k * kPi / 5)) << ','
          << Y(s.image + std::polar(r, kPi / 2 + k * kPi / 5)) << ' ';
    }
    os << "<polygon fill=\"blue\" stroke=\"none\" points=\"" << pts.str() << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace jspec
