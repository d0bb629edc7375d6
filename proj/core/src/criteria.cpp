#include "jspec/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "jspec/errors.hpp"

namespace jspec {

namespace {

constexpr double kPi = std::numbers::pi;

double coeff_scale(const Polynomial& p) {
  double s = 1.0;
  for (cplx c : p.coeffs()) s = std::max(s, std::abs(c));
  return s;
}

double max_deviation(const Polynomial& p, const Polynomial& target) {
  const int deg = std::max(p.degree(), target.degree());
  double worst = 0.0;
  for (int k = 0; k <= deg; ++k) worst = std::max(worst, std::abs(p.coeff(k) - target.coeff(k)));
  return worst / coeff_scale(target);
}

bool near_pi_multiple(double x, double tol) {
  return std::abs(x / kPi - std::round(x / kPi)) <= tol;
}

double mod_pi(double x) {
  double r = std::fmod(x, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi - 1e-12) r = 0.0;
  return r;
}

// s^N P_N((λ − μ)/s) for complex s.
Polynomial scaled_chebyshev(int n, cplx s, cplx mu) {
  return compose_affine(chebyshev_like(n), 1.0 / s, -mu / s) * std::pow(s, n);
}

}  // namespace

CriteriaReport check_real(const Discriminant& disc, double tol) {
  if (disc.degenerate()) throw DegenerateCurve("real-spectrum test needs a nondegenerate curve");
  CriteriaReport rep;
  const int n = disc.degree();
  const double r = std::abs(disc.a_prod);
  rep.witness.r = r;

  const double pscale = std::max({1.0, std::abs(disc.a_prod), std::abs(disc.c_prod)});
  if (std::abs(disc.a_prod - std::conj(disc.c_prod)) > tol * pscale)
    rep.failures.push_back("products: a != conj(c)");

  if (n == 1) {
    const cplx b = -disc.p.coeff(0);
    if (std::abs(b.imag()) > tol * std::max(1.0, std::abs(b)))
      rep.failures.push_back("diagonal: b is not real");
    rep.is_real = rep.failures.empty();
    return rep;
  }

  const RootSet crit = roots(derivative(disc.p));
  bool ok = static_cast<int>(crit.entries.size()) == n - 1;
  for (const auto& e : crit.entries) {
    if (e.multiplicity != 1) ok = false;
    if (std::abs(e.value.imag()) > tol * std::max(1.0, std::abs(e.value))) ok = false;
    rep.witness.stationary.push_back(e.value.real());
  }
  std::sort(rep.witness.stationary.begin(), rep.witness.stationary.end(), std::greater<>());
  for (std::size_t k = 1; k < rep.witness.stationary.size(); ++k)
    if (!(rep.witness.stationary[k - 1] > rep.witness.stationary[k])) ok = false;
  if (!ok) {
    std::ostringstream os;
    os << "stationary: " << crit.entries.size() << " distinct points, not " << n - 1
       << " simple real ones in strict order";
    rep.failures.push_back(os.str());
  }

  // Values are taken at the sorted real parts when (2) failed as well, so the
  // witness is always reported.
  bool values_ok = true;
  const double vscale = std::max(1.0, 2.0 * r);
  std::vector<cplx> points;
  for (const auto& e : crit.entries)
    for (int m = 0; m < e.multiplicity; ++m) points.push_back(e.value);
  std::sort(points.begin(), points.end(), [](cplx l, cplx r2) { return l.real() > r2.real(); });
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (−1)^n with n = k + 1
    const cplx v = sign * disc.p(points[k]);
    rep.witness.signed_values.push_back(v);
    if (v.real() < 2.0 * r - tol * vscale || std::abs(v.imag()) > tol * vscale) values_ok = false;
  }
  if (!values_ok) rep.failures.push_back("values: some (-1)^n P(lambda_n) is not real and >= 2R");
  rep.is_real = rep.failures.empty();
  return rep;
}

IntervalResult check_interval(const Discriminant& disc, double tol) {
  IntervalResult res;
  if (disc.curve.kind != CurveKind::Segment) {
    res.reason = "curve is not a segment";
    return res;
  }
  if (!near_pi_multiple(disc.curve.phi, tol)) {
    res.reason = "segment is not on the real axis";
    return res;
  }
  const int n = disc.degree();
  const double r = disc.curve.half_radius();
  const cplx mu = -disc.p.coeff(n - 1) / static_cast<double>(n);
  if (std::abs(mu.imag()) > tol * std::max(1.0, std::abs(mu))) {
    res.reason = "center is not real";
    return res;
  }
  double s = r;
  if (n >= 2) {
    const Polynomial centered = compose_affine(disc.p, 1.0, mu);
    const cplx s2 = -centered.coeff(n - 2) / static_cast<double>(n);
    if (std::abs(s2.imag()) > tol * std::max(1.0, std::abs(s2)) || !(s2.real() > 0.0)) {
      res.reason = "scale^2 is not positive real";
      return res;
    }
    s = std::sqrt(s2.real());
  }
  const Polynomial target = scaled_chebyshev(n, s, mu.real());
  res.max_deviation = max_deviation(disc.p, target);
  if (res.max_deviation > tol) {
    std::ostringstream os;
    os << "coefficients deviate from the scaled P_N by " << res.max_deviation;
    res.reason = os.str();
    return res;
  }
  const double sn = std::pow(s, n);
  if (std::abs(r - sn) > tol * std::max(1.0, sn)) {
    std::ostringstream os;
    os << "R = " << r << " differs from s^N = " << sn;
    res.reason = os.str();
    return res;
  }
  res.interval = std::make_pair(mu.real() - 2.0 * s, mu.real() + 2.0 * s);
  return res;
}

bool check_interval_conditions(const Discriminant& disc, double alpha, double beta, double tol) {
  if (!(alpha < beta)) return false;
  if (disc.curve.kind != CurveKind::Segment) return false;
  const double pscale = std::max({1.0, std::abs(disc.a_prod), std::abs(disc.c_prod)});
  if (std::abs(disc.a_prod - std::conj(disc.c_prod)) > tol * pscale) return false;
  const int n = disc.degree();
  const double r = std::abs(disc.a_prod);
  const double vscale = std::max(1.0, 2.0 * r);
  auto on_ends = [&](cplx v) {
    return std::min(std::abs(v - 2.0 * r), std::abs(v + 2.0 * r)) <= tol * vscale;
  };
  std::vector<cplx> crit;
  if (n >= 2) {
    const RootSet rs = roots(derivative(disc.p));
    if (static_cast<int>(rs.entries.size()) != n - 1) return false;
    for (const auto& e : rs.entries) {
      if (e.multiplicity != 1) return false;
      crit.push_back(e.value);
    }
  }
  for (cplx l : crit)
    if (!on_ends(disc.p(l))) return false;
  if (!on_ends(disc.p(alpha)) || !on_ends(disc.p(beta))) return false;
  for (cplx l : crit)
    for (double e : {alpha, beta})
      if (std::abs(l - e) <= 10.0 * tol * std::max(1.0, std::abs(l))) return false;
  return true;
}

std::optional<LineResult> check_line(const Discriminant& disc, double tol) {
  if (disc.degenerate()) return std::nullopt;
  const double ra = disc.curve.ra, rc = disc.curve.rc;
  const double pscale = std::max({1.0, ra, rc});
  if (std::abs(ra - rc) > tol * pscale || ra <= tol * pscale) return std::nullopt;
  const int n = disc.degree();

  if (n == 1) {
    LineResult lr;
    lr.c0 = -disc.p.coeff(0);
    lr.phi = mod_pi(disc.curve.phi);
    return lr;
  }

  std::vector<cplx> crit = roots(derivative(disc.p)).expanded();
  std::vector<std::pair<double, cplx>> passing;
  for (int k = 0; k < 2 * n; ++k) {
    const double phik = (disc.curve.phi + k * kPi) / n;
    const cplx u = std::polar(1.0, phik);
    double mean_im = 0.0;
    for (cplx l : crit) mean_im += (std::conj(u) * l).imag();
    mean_im /= static_cast<double>(crit.size());
    const cplx c0 = u * cplx{0.0, mean_im};
    const cplx rot = std::polar(1.0, -n * phik);
    Polynomial hat = compose_affine(disc.p, u, c0) * rot;
    std::vector<cplx> c(hat.coeffs().begin(), hat.coeffs().end());
    c.back() = 1.0;
    const Discriminant dh = make_discriminant(Polynomial(std::move(c)), disc.a_prod * rot,
                                              disc.c_prod * rot);
    if (dh.degenerate()) continue;
    if (check_real(dh, tol).is_real) passing.emplace_back(mod_pi(phik), c0);
  }
  if (passing.empty()) return std::nullopt;
  std::sort(passing.begin(), passing.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  LineResult lr;
  lr.phi = passing.front().first;
  lr.c0 = passing.front().second;
  for (std::size_t k = 1; k < passing.size(); ++k) {
    const double p = passing[k].first;
    const double last = lr.alternatives.empty() ? lr.phi : lr.alternatives.back();
    if (std::abs(p - last) > 1e-9 && std::abs(p - lr.phi - kPi) > 1e-9) lr.alternatives.push_back(p);
  }
  return lr;
}

bool check_segment(const Discriminant& disc, cplx alpha, cplx beta, double tol) {
  if (alpha == beta) return false;
  if (disc.curve.kind != CurveKind::Segment) return false;
  const int n = disc.degree();
  const cplx q = (beta - alpha) / 4.0;
  const double r_expected = std::pow(std::abs(q), n);
  const double r = disc.curve.half_radius();
  if (std::abs(r - r_expected) > tol * std::max(1.0, r_expected)) return false;
  if (!near_pi_multiple(n * std::arg(q) - disc.curve.phi, tol)) return false;
  const Polynomial target = scaled_chebyshev(n, q, 0.5 * (alpha + beta));
  return max_deviation(disc.p, target) <= tol;
}

}  // namespace jspec
