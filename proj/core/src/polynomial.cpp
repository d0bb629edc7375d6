#include "jspec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "jspec/errors.hpp"

namespace jspec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool descending(cplx lhs, cplx rhs) {
  if (lhs.real() != rhs.real()) return lhs.real() > rhs.real();
  return lhs.imag() > rhs.imag();
}

}  // namespace

Polynomial::Polynomial(std::vector<cplx> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  trim();
}

Polynomial Polynomial::monomial(int degree) {
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = 1.0;
  return Polynomial(std::move(c));
}

cplx Polynomial::coeff(int k) const noexcept {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

cplx Polynomial::operator()(cplx z) const noexcept { return eval(*this, z); }

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == cplx{0.0}) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<cplx> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

cplx eval(const Polynomial& p, cplx z) noexcept {
  auto c = p.coeffs();
  cplx acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

double eval_bound(const Polynomial& p, double r) noexcept {
  auto c = p.coeffs();
  double acc = std::abs(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * r + std::abs(c[k]);
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() == 0) return Polynomial{};
  std::vector<cplx> out(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) out[static_cast<std::size_t>(k - 1)] = p.coeff(k) * static_cast<double>(k);
  return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p, int order) {
  Polynomial q = p;
  for (int j = 0; j < order; ++j) q = derivative(q);
  return q;
}

double root_scale(const Polynomial& p) noexcept {
  const int n = p.degree();
  if (n == 0) return 1.0;
  const double lead = std::abs(p.leading());
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    const double c = std::abs(p.coeff(k)) / lead;
    if (c > 0.0) s = std::max(s, std::pow(c, 1.0 / (n - k)));
  }
  return s > 0.0 ? s : 1.0;
}

double fujiwara_bound(const Polynomial& p) noexcept {
  const int n = p.degree();
  if (n == 0) return 0.0;
  const double lead = std::abs(p.leading());
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    double c = std::abs(p.coeff(k)) / lead;
    if (k == 0) c *= 0.5;
    if (c > 0.0) s = std::max(s, std::pow(c, 1.0 / (n - k)));
  }
  return 2.0 * s;
}

Polynomial compose_affine(const Polynomial& p, cplx scale, cplx shift) {
  const Polynomial inner({shift, scale});
  Polynomial acc = Polynomial::constant(p.leading());
  for (int k = p.degree() - 1; k >= 0; --k) acc = acc * inner + Polynomial::constant(p.coeff(k));
  return acc;
}

Polynomial chebyshev_like(int n) {
  if (n < 1) throw InputError("InvalidDegree", "chebyshev_like requires N >= 1");
  Polynomial prev = Polynomial::constant(2.0);
  Polynomial cur = Polynomial::monomial(1);
  const Polynomial x = Polynomial::monomial(1);
  for (int k = 1; k < n; ++k) {
    Polynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

int RootSet::total_multiplicity() const noexcept {
  int total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

std::vector<cplx> RootSet::expanded() const {
  std::vector<cplx> out;
  for (const auto& e : entries) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  return out;
}

Polynomial from_roots(std::span<const cplx> roots) {
  std::vector<cplx> c{1.0};
  for (cplx r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

Polynomial from_roots(const RootSet& roots) {
  const auto all = roots.expanded();
  return from_roots(std::span<const cplx>(all));
}

std::vector<cplx> circle_nodes(int count, double radius) {
  std::vector<cplx> nodes(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    nodes[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / count);
  return nodes;
}

Polynomial interpolate_monic(std::span<const cplx> nodes, std::span<const cplx> values, int degree,
                             double tol) {
  if (degree < 0) throw InvalidNodes("negative degree");
  const std::size_t m = static_cast<std::size_t>(degree) + 1;
  if (nodes.size() != m || values.size() != m) {
    std::ostringstream os;
    os << "expected " << m << " nodes and values, got " << nodes.size() << " and " << values.size();
    throw InvalidNodes(os.str());
  }
  double rho = 0.0;
  for (cplx x : nodes) rho = std::max(rho, std::abs(x));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::abs(nodes[i] - nodes[j]) <= 1e-14 * std::max(1.0, rho))
        throw InvalidNodes("duplicate interpolation nodes");

  double vscale = 0.0;
  std::vector<cplx> resid(m);
  for (std::size_t k = 0; k < m; ++k) {
    const cplx lead = std::pow(nodes[k], degree);
    resid[k] = values[k] - lead;
    vscale = std::max(vscale, std::abs(values[k]) + std::abs(lead));
  }
  vscale = std::max(vscale, std::numeric_limits<double>::min());

  // Leja ordering keeps the Newton form well conditioned.
  std::vector<std::size_t> order;
  std::vector<bool> used(m, false);
  std::vector<double> logprod(m, 0.0);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t best = m;
    for (std::size_t k = 0; k < m; ++k) {
      if (used[k]) continue;
      const double score = step == 0 ? std::abs(nodes[k]) : logprod[k];
      if (best == m || score > (step == 0 ? std::abs(nodes[best]) : logprod[best])) best = k;
    }
    used[best] = true;
    order.push_back(best);
    for (std::size_t k = 0; k < m; ++k)
      if (!used[k]) logprod[k] += std::log(std::abs(nodes[k] - nodes[best]));
  }

  std::vector<cplx> x(m), d(m);
  for (std::size_t k = 0; k < m; ++k) {
    x[k] = nodes[order[k]];
    d[k] = resid[order[k]];
  }
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t k = m - 1; k >= level; --k) d[k] = (d[k] - d[k - 1]) / (x[k] - x[k - level]);

  // Newton form -> monomial basis.
  std::vector<cplx> c(m, 0.0);
  c[0] = d[m - 1];
  std::size_t len = 1;
  for (std::size_t k = m - 1; k-- > 0;) {
    // c <- c·(λ − x_k) + d_k
    for (std::size_t j = len; j > 0; --j) c[j] = c[j - 1] - x[k] * c[j];
    c[0] = -x[k] * c[0];
    ++len;
    c[0] += d[k];
  }

  const double lead_scale = std::pow(std::max(rho, 1e-300), degree);
  if (std::abs(c[m - 1]) * lead_scale > tol * vscale) {
    std::ostringstream os;
    os << "samples are not those of a monic degree-" << degree << " polynomial (leading deviation "
       << std::abs(c[m - 1]) * lead_scale / vscale << ")";
    throw InconsistentSamples(os.str());
  }
  c[m - 1] = 1.0;
  Polynomial p(std::move(c));
  for (std::size_t k = 0; k < m; ++k) {
    if (std::abs(p(nodes[k]) - values[k]) > tol * vscale)
      throw InconsistentSamples("interpolant residual exceeds tolerance at a node");
  }
  return p;
}

namespace {

bool aberth(const Polynomial& p, const Polynomial& dp, std::vector<cplx>& z, int max_iterations) {
  const std::size_t n = z.size();
  const double tiny = std::numeric_limits<double>::min();
  std::vector<bool> done(n, false);
  for (int it = 0; it < max_iterations; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const cplx pv = p(z[i]);
      const double bound = eval_bound(p, std::abs(z[i]));
      if (std::abs(pv) <= 4.0 * static_cast<double>(n) * kEps * bound) {
        done[i] = true;
        continue;
      }
      all = false;
      cplx dv = dp(z[i]);
      if (std::abs(dv) < tiny) dv = tiny;
      const cplx ratio = pv / dv;
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const cplx diff = z[i] - z[j];
        if (diff != cplx{0.0}) sum += 1.0 / diff;
      }
      const cplx w = ratio / (1.0 - ratio * sum);
      z[i] -= w;
      if (!finite(z[i])) return false;
      if (std::abs(w) <= 2.0 * kEps * std::abs(z[i])) done[i] = true;
    }
    if (all) return true;
  }
  return false;
}

bool durand_kerner(const Polynomial& p, std::vector<cplx>& z, int max_iterations) {
  const std::size_t n = z.size();
  const cplx lead = p.leading();
  std::vector<bool> done(n, false);
  for (int it = 0; it < max_iterations; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const cplx pv = p(z[i]);
      if (std::abs(pv) <= 4.0 * static_cast<double>(n) * kEps * eval_bound(p, std::abs(z[i]))) {
        done[i] = true;
        continue;
      }
      all = false;
      cplx denom = lead;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (denom == cplx{0.0}) denom = std::numeric_limits<double>::min();
      const cplx w = pv / denom;
      z[i] -= w;
      if (!finite(z[i])) return false;
      if (std::abs(w) <= 2.0 * kEps * std::abs(z[i])) done[i] = true;
    }
    if (all) return true;
  }
  return false;
}

std::vector<cplx> circle_start(const Polynomial& p, double angle_offset, double stretch) {
  const int n = p.degree();
  double r = fujiwara_bound(p);
  if (!(r > 0.0)) r = 1.0;
  r *= stretch;
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(r, angle_offset + 2.0 * std::numbers::pi * k / n);
  return z;
}

}  // namespace

std::vector<cplx> simultaneous_roots(const Polynomial& p, std::span<const cplx> initial,
                                     int max_iterations) {
  const int n = p.degree();
  if (n < 1) throw InputError("InvalidDegree", "root finding requires degree >= 1");
  for (cplx c : p.coeffs())
    if (!finite(c)) throw RootFindingFailed("non-finite polynomial coefficient");
  if (n == 1) return {-p.coeff(0) / p.coeff(1)};

  const Polynomial dp = derivative(p);
  if (initial.size() == static_cast<std::size_t>(n)) {
    std::vector<cplx> z(initial.begin(), initial.end());
    if (aberth(p, dp, z, max_iterations)) return z;
  }
  std::vector<cplx> z = circle_start(p, 0.4, 1.0);
  if (aberth(p, dp, z, max_iterations)) return z;
  z = circle_start(p, 1.1, 1.3);
  if (durand_kerner(p, z, 4 * max_iterations)) return z;
  std::ostringstream os;
  os << "simultaneous iteration did not converge for degree " << n;
  throw RootFindingFailed(os.str());
}

RootSet cluster_multiplicities(std::span<const cplx> raw, double radius) {
  if (!(radius > 0.0)) throw InputError("InvalidRadius", "clustering radius must be positive");
  std::vector<cplx> centers(raw.begin(), raw.end());
  std::vector<int> mult(centers.size(), 1);
  bool merged = true;
  while (merged) {
    merged = false;
    const std::size_t n = centers.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(centers[i] - centers[j]) <= radius) {
          const auto a = find(i), b = find(j);
          if (a != b) {
            parent[b] = a;
            merged = true;
          }
        }
    if (!merged) break;
    std::vector<cplx> sum(n, 0.0);
    std::vector<int> count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = find(i);
      sum[r] += centers[i] * static_cast<double>(mult[i]);
      count[r] += mult[i];
    }
    std::vector<cplx> next;
    std::vector<int> next_mult;
    for (std::size_t i = 0; i < n; ++i)
      if (count[i] > 0) {
        next.push_back(sum[i] / static_cast<double>(count[i]));
        next_mult.push_back(count[i]);
      }
    centers = std::move(next);
    mult = std::move(next_mult);
  }
  RootSet out;
  out.radius = radius;
  for (std::size_t i = 0; i < centers.size(); ++i) out.entries.push_back({centers[i], mult[i]});
  std::sort(out.entries.begin(), out.entries.end(),
            [](const Root& a, const Root& b) { return descending(a.value, b.value); });
  return out;
}

int vanishing_order(const Polynomial& p, cplx z, double rel_tol) {
  const double r = std::max(std::abs(z), root_scale(p));
  Polynomial d = derivative(p);
  int order = 0;
  while (d.degree() > 0 || !d.is_zero()) {
    if (std::abs(d(z)) > rel_tol * eval_bound(d, r)) break;
    ++order;
    if (d.degree() == 0) break;
    d = derivative(d);
  }
  return order;
}

namespace {

// Newton polish of a multiplicity-m cluster centre on p^{(m-1)}, then check
// that exactly m-1 derivatives vanish there.
bool confirm_cluster(const Polynomial& p, Root& root, double radius, double order_tol) {
  cplx c = root.value;
  if (root.multiplicity > 1) {
    const Polynomial q = derivative(p, root.multiplicity - 1);
    const Polynomial dq = derivative(q);
    cplx x = c;
    for (int it = 0; it < 8; ++it) {
      const cplx dv = dq(x);
      if (dv == cplx{0.0}) break;
      const cplx step = q(x) / dv;
      x -= step;
      if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(x))) break;
    }
    if (finite(x) && std::abs(x - c) <= radius) c = x;
  }
  if (vanishing_order(p, c, order_tol) != root.multiplicity - 1) return false;
  root.value = c;
  return true;
}

}  // namespace

RootSet roots(const Polynomial& p, const RootOptions& options) {
  if (!(options.tol > 0.0)) throw InputError("InvalidTolerance", "root tolerance must be positive");
  const auto raw = simultaneous_roots(p, {}, options.max_iterations);
  const double scale = root_scale(p);
  for (cplx r : raw) {
    const double ref = eval_bound(p, std::max(std::abs(r), scale));
    if (std::abs(p(r)) > options.tol * ref)
      throw RootFindingFailed("root residual above tolerance after convergence");
  }

  std::optional<RootSet> first;
  for (double grow : {1.0, 10.0, 100.0, 1000.0}) {
    const double radius = options.cluster_radius * scale * grow;
    RootSet set = cluster_multiplicities(raw, radius);
    if (!first) first = set;
    bool ok = true;
    for (auto& e : set.entries)
      if (!confirm_cluster(p, e, radius, options.order_tol)) {
        ok = false;
        break;
      }
    if (ok) {
      std::sort(set.entries.begin(), set.entries.end(),
                [](const Root& a, const Root& b) { return descending(a.value, b.value); });
      return set;
    }
  }
  return *first;
}

}  // namespace jspec
