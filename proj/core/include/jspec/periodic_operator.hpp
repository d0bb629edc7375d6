#pragma once

#include <utility>
#include <vector>

#include "jspec/boundary.hpp"
#include "jspec/polynomial.hpp"

namespace jspec {

/// Period-N Jacobi operator (Ju)_n = a_n u_{n+1} + b_n u_n + c_{n-1} u_{n-1}.
/// Sequences are stored 0-based: a[0] is a_1.
struct PeriodicOperator {
  std::vector<cplx> a;
  std::vector<cplx> b;
  std::vector<cplx> c;

  PeriodicOperator() = default;
  /// Throws InputError unless the three sequences share a nonzero length.
  PeriodicOperator(std::vector<cplx> a_, std::vector<cplx> b_, std::vector<cplx> c_);

  int period() const noexcept { return static_cast<int>(b.size()); }
};

struct Discriminant {
  Polynomial p;
  cplx a_prod{0.0};
  cplx c_prod{0.0};
  BoundaryCurve curve;

  int degree() const noexcept { return p.degree(); }
  bool degenerate() const noexcept { return curve.kind == CurveKind::Point; }
};

using DenseMatrix = std::vector<std::vector<cplx>>;

/// J(θ) as a dense N×N matrix. Corner entries overlap the band for N <= 2.
DenseMatrix assemble_bloch(const PeriodicOperator& op, double theta);

/// det(λ − J(θ)) in O(N). θ may be complex.
cplx det_shifted(const PeriodicOperator& op, cplx theta, cplx lambda);

std::pair<cplx, cplx> products(const PeriodicOperator& op);

/// P from det(λ − J(0)) + a + c sampled on N+1 circle nodes.
Discriminant discriminant(const PeriodicOperator& op, double classify_tol = 1e-9);

/// Same as discriminant() but sampling at an arbitrary θ and correcting the
/// constant term by a e^{-iθ} + c e^{iθ}.
Polynomial discriminant_at(const PeriodicOperator& op, double theta);

Discriminant make_discriminant(Polynomial p, cplx a_prod, cplx c_prod, double classify_tol = 1e-9);

/// The same operator viewed with period kN.
PeriodicOperator period_multiply(const PeriodicOperator& op, int k);

}  // namespace jspec
