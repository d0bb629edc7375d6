#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jspec/periodic_operator.hpp"

namespace jspec {

/// c = 0 and b = the zeros of P (descending real, then imaginary part).
/// Throws NumericalError if the result does not reproduce P to 1e-8.
PeriodicOperator construct_zero_c(const Polynomial& target, std::vector<cplx> a);

struct SolveOptions {
  int attempts = 32;
  /// Coefficient residual, relative to max(1, max |target_k|).
  double tol = 1e-10;
  int max_iterations = 100;
  std::uint64_t seed = 0x6a5eedULL;
};

struct SolveResult {
  PeriodicOperator op;
  double residual = 0.0;
  int attempt = 0;
  int iterations = 0;
};

/// Newton on the coefficients of the discriminant as a function of b with a
/// and c fixed. Attempt 0 starts from the zeros of the target; later attempts
/// from seeded random points. First converged attempt wins.
std::optional<SolveResult> solve_b(const Polynomial& target, const std::vector<cplx>& a,
                                   const std::vector<cplx>& c, const SolveOptions& options = {});

/// Coefficient residual max_k |P_k − target_k| / max(1, max |target_k|) for k < N.
double coefficient_residual(const Polynomial& p, const Polynomial& target);

/// Period-N free Laplacian a = c = −1, b = 0.
PeriodicOperator laplacian(int n);

/// a = (1, 1, 1, 1, a5), c = 0, b = zeros of λ⁵ − (5/4)λ⁴ + 1/8.
PeriodicOperator example_petals(double a5);

/// N = 2, a = c = (1, 1), b = (i, −i); P = λ² − 1.
PeriodicOperator example_cross();

/// The N = 3 operator with P = λ³ − 3λ and a = conj(c), R = 1, using the
/// closed-form diagonal b = (β, −β, 0), β² = 3 − Σ a_n c_n.
PeriodicOperator example_interval3();

/// Its off-diagonal sequences alone.
std::vector<cplx> example_interval3_a();
std::vector<cplx> example_interval3_c();

}  // namespace jspec
