#include "jspec/periodic_operator.hpp"

#include <algorithm>
#include <cmath>

#include "jspec/errors.hpp"

namespace jspec {

PeriodicOperator::PeriodicOperator(std::vector<cplx> a_, std::vector<cplx> b_, std::vector<cplx> c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (b.empty()) throw InputError("InvalidOperator", "period must be at least 1");
  if (a.size() != b.size() || c.size() != b.size())
    throw InputError("InvalidOperator", "sequences a, b, c must have equal length");
}

DenseMatrix assemble_bloch(const PeriodicOperator& op, double theta) {
  const int n = op.period();
  const cplx up = std::polar(1.0, theta);
  const cplx down = std::polar(1.0, -theta);
  DenseMatrix m(static_cast<std::size_t>(n), std::vector<cplx>(static_cast<std::size_t>(n), 0.0));
  if (n == 1) {
    m[0][0] = op.b[0] + op.c[0] * up + op.a[0] * down;
    return m;
  }
  for (int k = 0; k < n; ++k) m[k][k] = op.b[k];
  for (int k = 0; k + 1 < n; ++k) {
    m[k][k + 1] += op.a[k];
    m[k + 1][k] += op.c[k];
  }
  m[0][n - 1] += op.c[n - 1] * up;
  m[n - 1][0] += op.a[n - 1] * down;
  return m;
}

std::pair<cplx, cplx> products(const PeriodicOperator& op) {
  cplx pa{1.0}, pc{1.0};
  for (int k = 0; k < op.period(); ++k) {
    pa *= op.a[k];
    pc *= op.c[k];
  }
  return {pa, pc};
}

cplx det_shifted(const PeriodicOperator& op, cplx theta, cplx lambda) {
  const int n = op.period();
  const cplx i{0.0, 1.0};
  const cplx up = std::exp(i * theta);
  const cplx down = std::exp(-i * theta);
  if (n == 1) return lambda - op.b[0] - op.c[0] * up - op.a[0] * down;
  if (n == 2) {
    return (lambda - op.b[0]) * (lambda - op.b[1]) - (op.a[0] + op.c[1] * up) * (op.c[0] + op.a[1] * down);
  }
  // D over rows 0..n-1 and over rows 1..n-2.
  auto minor = [&](int first, int last) {
    cplx prev{1.0}, cur = lambda - op.b[first];
    for (int k = first + 1; k <= last; ++k) {
      const cplx next = (lambda - op.b[k]) * cur - op.a[k - 1] * op.c[k - 1] * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  };
  const auto [pa, pc] = products(op);
  return minor(0, n - 1) - op.a[n - 1] * op.c[n - 1] * minor(1, n - 2) - pa * down - pc * up;
}

namespace {

double gershgorin_radius(const PeriodicOperator& op) {
  const auto m = assemble_bloch(op, 0.0);
  double r = 0.0;
  for (const auto& row : m) {
    double s = 0.0;
    for (cplx v : row) s += std::abs(v);
    r = std::max(r, s);
  }
  return r > 0.0 ? r : 1.0;
}

}  // namespace

Polynomial discriminant_at(const PeriodicOperator& op, double theta) {
  const int n = op.period();
  const auto [pa, pc] = products(op);
  const cplx shift = pa * std::polar(1.0, -theta) + pc * std::polar(1.0, theta);
  const auto nodes = circle_nodes(n + 1, gershgorin_radius(op));
  std::vector<cplx> values(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) values[k] = det_shifted(op, theta, nodes[k]) + shift;
  return interpolate_monic(nodes, values, n);
}

Discriminant make_discriminant(Polynomial p, cplx a_prod, cplx c_prod, double classify_tol) {
  Discriminant d;
  d.p = std::move(p);
  d.a_prod = a_prod;
  d.c_prod = c_prod;
  d.curve = classify_curve(a_prod, c_prod, classify_tol);
  return d;
}

Discriminant discriminant(const PeriodicOperator& op, double classify_tol) {
  const auto [pa, pc] = products(op);
  return make_discriminant(discriminant_at(op, 0.0), pa, pc, classify_tol);
}

PeriodicOperator period_multiply(const PeriodicOperator& op, int k) {
  if (k < 1) throw InputError("InvalidArgument", "period multiplier must be positive");
  PeriodicOperator out;
  for (int r = 0; r < k; ++r) {
    out.a.insert(out.a.end(), op.a.begin(), op.a.end());
    out.b.insert(out.b.end(), op.b.begin(), op.b.end());
    out.c.insert(out.c.end(), op.c.begin(), op.c.end());
  }
  return out;
}

}  // namespace jspec
