#include "jspec/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "jspec/errors.hpp"

namespace jspec {

namespace {

bool descending(cplx lhs, cplx rhs) {
  if (lhs.real() != rhs.real()) return lhs.real() > rhs.real();
  return lhs.imag() > rhs.imag();
}

// Solves m x = rhs in place by Gaussian elimination with partial pivoting.
bool solve_linear(std::vector<std::vector<cplx>> m, std::vector<cplx>& rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (m[piv][col] == cplx{0.0}) return false;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const cplx f = m[r][col] / m[col][col];
      if (f == cplx{0.0}) continue;
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    cplx s = rhs[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= m[i][k] * rhs[k];
    rhs[i] = s / m[i][i];
  }
  return std::all_of(rhs.begin(), rhs.end(),
                     [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

std::vector<cplx> residual_vector(const PeriodicOperator& op, const Polynomial& target) {
  const Polynomial p = discriminant_at(op, 0.0);
  std::vector<cplx> f(static_cast<std::size_t>(target.degree()));
  for (int k = 0; k < target.degree(); ++k) f[k] = p.coeff(k) - target.coeff(k);
  return f;
}

double sup_norm(const std::vector<cplx>& v) {
  double m = 0.0;
  for (cplx x : v) m = std::max(m, std::abs(x));
  return m;
}

double target_scale(const Polynomial& target) {
  double s = 1.0;
  for (cplx c : target.coeffs()) s = std::max(s, std::abs(c));
  return s;
}

}  // namespace

double coefficient_residual(const Polynomial& p, const Polynomial& target) {
  double worst = 0.0;
  for (int k = 0; k < target.degree(); ++k) worst = std::max(worst, std::abs(p.coeff(k) - target.coeff(k)));
  return worst / target_scale(target);
}

PeriodicOperator construct_zero_c(const Polynomial& target, std::vector<cplx> a) {
  const int n = target.degree();
  if (n < 1 || !target.is_monic()) throw InputError("InvalidTarget", "target must be monic of degree >= 1");
  if (static_cast<int>(a.size()) != n) throw InputError("InvalidOperator", "a must have N entries");
  auto b = roots(target).expanded();
  std::sort(b.begin(), b.end(), descending);
  PeriodicOperator op(std::move(a), std::move(b), std::vector<cplx>(static_cast<std::size_t>(n), 0.0));
  const double res = coefficient_residual(discriminant(op).p, target);
  if (res > 1e-8) {
    std::ostringstream os;
    os << "zero-c construction reproduces the target only to " << res;
    throw NumericalError("ConstructionFailed", os.str());
  }
  return op;
}

std::optional<SolveResult> solve_b(const Polynomial& target, const std::vector<cplx>& a,
                                   const std::vector<cplx>& c, const SolveOptions& options) {
  const int n = target.degree();
  if (n < 1 || !target.is_monic()) throw InputError("InvalidTarget", "target must be monic of degree >= 1");
  if (static_cast<int>(a.size()) != n || static_cast<int>(c.size()) != n)
    throw InputError("InvalidOperator", "a and c must have N entries");
  if (options.attempts < 1) throw InputError("InvalidArgument", "attempts must be >= 1");

  const double scale = target_scale(target);
  const double radius = std::max(1.0, root_scale(target));
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    std::vector<cplx> b;
    if (attempt == 0) {
      b = roots(target).expanded();
      std::sort(b.begin(), b.end(), descending);
    } else {
      b.resize(static_cast<std::size_t>(n));
      for (auto& v : b) v = radius * cplx{unit(rng), unit(rng)};
    }
    PeriodicOperator op(a, b, c);
    std::vector<cplx> f;
    try {
      f = residual_vector(op, target);
    } catch (const NumericalError&) {
      continue;
    }
    double norm = sup_norm(f);
    for (int it = 0; it < options.max_iterations; ++it) {
      if (norm <= options.tol * scale) {
        SolveResult out{op, norm / scale, attempt, it};
        return out;
      }
      std::vector<std::vector<cplx>> jac(static_cast<std::size_t>(n), std::vector<cplx>(n));
      bool jac_ok = true;
      for (int k = 0; k < n && jac_ok; ++k) {
        const double h = 1e-6 * (1.0 + std::abs(op.b[k]));
        PeriodicOperator shifted = op;
        shifted.b[k] += h;
        try {
          const auto fk = residual_vector(shifted, target);
          for (int r = 0; r < n; ++r) jac[r][k] = (fk[r] - f[r]) / h;
        } catch (const NumericalError&) {
          jac_ok = false;
        }
      }
      std::vector<cplx> step = f;
      if (!jac_ok || !solve_linear(jac, step)) break;

      double t = 1.0;
      bool improved = false;
      for (int ls = 0; ls < 30; ++ls, t *= 0.5) {
        PeriodicOperator trial = op;
        for (int k = 0; k < n; ++k) trial.b[k] -= t * step[k];
        try {
          auto ft = residual_vector(trial, target);
          const double nt = sup_norm(ft);
          if (nt < norm) {
            op = std::move(trial);
            f = std::move(ft);
            norm = nt;
            improved = true;
            break;
          }
        } catch (const NumericalError&) {
        }
      }
      if (!improved) break;
    }
    if (norm <= options.tol * scale) return SolveResult{op, norm / scale, attempt, options.max_iterations};
  }
  return std::nullopt;
}

PeriodicOperator laplacian(int n) {
  if (n < 1) throw InputError("InvalidArgument", "period must be at least 1");
  const auto sz = static_cast<std::size_t>(n);
  return PeriodicOperator(std::vector<cplx>(sz, -1.0), std::vector<cplx>(sz, 0.0),
                          std::vector<cplx>(sz, -1.0));
}

PeriodicOperator example_petals(double a5) {
  const Polynomial target({0.125, 0.0, 0.0, 0.0, -1.25, 1.0});
  return construct_zero_c(target, {1.0, 1.0, 1.0, 1.0, a5});
}

PeriodicOperator example_cross() {
  const cplx i{0.0, 1.0};
  return PeriodicOperator({1.0, 1.0}, {i, -i}, {1.0, 1.0});
}

std::vector<cplx> example_interval3_a() {
  using std::numbers::pi;
  const double r2 = std::numbers::sqrt2;
  return {std::polar(1.0 / (2.0 * r2), pi / 3.0), cplx{0.0, 2.0}, std::polar(r2, pi / 4.0)};
}

std::vector<cplx> example_interval3_c() {
  using std::numbers::pi;
  const double r2 = std::numbers::sqrt2;
  return {cplx{0.0, 1.0 / r2}, std::polar(1.0, pi / 12.0), std::polar(r2, pi / 3.0)};
}

PeriodicOperator example_interval3() {
  const auto a = example_interval3_a();
  const auto c = example_interval3_c();
  cplx sum = 0.0;
  for (int k = 0; k < 3; ++k) sum += a[k] * c[k];
  const cplx beta = std::sqrt(3.0 - sum);
  return PeriodicOperator(a, {beta, -beta, 0.0}, c);
}

}  // namespace jspec
