#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jspec/periodic_operator.hpp"

namespace jspec {

/// Sorted real stationary points λ_1 > … > λ_{N−1}, the values (−1)^n P(λ_n)
/// and R = |a|.
struct RealWitness {
  std::vector<double> stationary;
  std::vector<cplx> signed_values;
  double r = 0.0;
};

struct IntervalResult {
  std::optional<std::pair<double, double>> interval;
  /// Largest relative coefficient deviation from the scaled P_N.
  double max_deviation = 0.0;
  std::string reason;
};

struct LineResult {
  cplx c0;
  /// Line direction in [0, π).
  double phi = 0.0;
  /// Further passing directions in [0, π), ascending.
  std::vector<double> alternatives;
};

struct CriteriaReport {
  bool is_real = false;
  RealWitness witness;
  std::optional<std::pair<double, double>> interval;
  std::optional<LineResult> line;
  std::optional<std::pair<cplx, cplx>> segment;
  std::vector<std::string> failures;
};

/// Real-spectrum test: a = conj(c); N−1 simple real stationary points; and
/// (−1)^n P(λ_n) real and at least 2R. For N = 1 the test is b ∈ ℝ.
CriteriaReport check_real(const Discriminant& disc, double tol = 1e-7);

/// Recognise P(λ) = s^N P_N((λ − μ)/s) with R = s^N on a real segment curve;
/// the spectrum is then [μ − 2s, μ + 2s].
IntervalResult check_interval(const Discriminant& disc, double tol = 1e-7);

bool check_interval_conditions(const Discriminant& disc, double alpha, double beta,
                               double tol = 1e-7);

/// Look for a line C0 + e^{iφ}ℝ containing σ(J) among the 2N admissible
/// directions (φ_c + nπ)/N.
std::optional<LineResult> check_line(const Discriminant& disc, double tol = 1e-7);

/// σ(J) equals the segment [α, β].
bool check_segment(const Discriminant& disc, cplx alpha, cplx beta, double tol = 1e-7);

}  // namespace jspec
