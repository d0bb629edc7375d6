#pragma once

#include <complex>
#include <span>
#include <vector>

namespace jspec {

using cplx = std::complex<double>;

/// Complex polynomial stored as ascending coefficients. Trailing exact zeros
/// are trimmed on construction, so the leading coefficient of a polynomial of
/// degree >= 1 is never zero. The zero polynomial has degree 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{cplx{0.0}} {}
  explicit Polynomial(std::vector<cplx> ascending);

  static Polynomial constant(cplx value) { return Polynomial({value}); }
  /// λ^degree
  static Polynomial monomial(int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of λ^k; zero outside [0, degree].
  cplx coeff(int k) const noexcept;
  cplx leading() const noexcept { return coeffs_.back(); }
  bool is_monic() const noexcept { return coeffs_.back() == cplx{1.0}; }
  bool is_zero() const noexcept { return degree() == 0 && coeffs_[0] == cplx{0.0}; }

  cplx operator()(cplx z) const noexcept;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(cplx s);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, cplx s) { return lhs *= s; }
  friend Polynomial operator*(cplx s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

/// Horner evaluation.
cplx eval(const Polynomial& p, cplx z) noexcept;

/// Σ |c_k| r^k, the natural magnitude against which Horner rounding at |z| = r
/// is measured.
double eval_bound(const Polynomial& p, double r) noexcept;

Polynomial derivative(const Polynomial& p);
Polynomial derivative(const Polynomial& p, int order);

/// Root magnitude scale max_k |c_k / c_N|^{1/(N-k)}; 1 for constants and for
/// λ^N.
double root_scale(const Polynomial& p) noexcept;

/// Fujiwara bound on root moduli.
double fujiwara_bound(const Polynomial& p) noexcept;

/// q(x) = p(scale·x + shift).
Polynomial compose_affine(const Polynomial& p, cplx scale, cplx shift);

/// P_N with P_N(z + 1/z) = z^N + z^{-N}, built from P_{k+1} = λ P_k − P_{k−1},
/// P_0 = 2, P_1 = λ.
Polynomial chebyshev_like(int n);

struct Root {
  cplx value;
  int multiplicity = 1;
};

/// Distinct roots with multiplicities, ordered by descending real part then
/// descending imaginary part. `radius` is the clustering radius used to build
/// the set; distinct entries are farther apart than it.
struct RootSet {
  std::vector<Root> entries;
  double radius = 0.0;

  int total_multiplicity() const noexcept;
  /// Roots repeated according to multiplicity, in entry order.
  std::vector<cplx> expanded() const;
};

Polynomial from_roots(std::span<const cplx> roots);
Polynomial from_roots(const RootSet& roots);

/// Unique monic degree-`degree` polynomial through (nodes[k], values[k]).
/// Requires exactly degree+1 distinct nodes. Throws InvalidNodes for
/// duplicate or miscounted nodes and InconsistentSamples when the samples are
/// not those of a monic polynomial within `tol` (relative).
Polynomial interpolate_monic(std::span<const cplx> nodes, std::span<const cplx> values,
                             int degree, double tol = 1e-8);

/// `count` equally spaced nodes on |z| = radius, first node at angle 0.
std::vector<cplx> circle_nodes(int count, double radius);

struct RootOptions {
  /// Residual acceptance |p(r)| <= tol · Σ|c_k| max(|r|, scale)^k.
  double tol = 1e-10;
  /// Base clustering radius, relative to root_scale(p).
  double cluster_radius = 1e-6;
  /// Relative threshold deciding whether a derivative vanishes at a cluster.
  double order_tol = 1e-7;
  int max_iterations = 1000;
};

/// Raw roots (repeated, unordered) by Aberth–Ehrlich iteration from a circle
/// of Fujiwara radius, with a Durand–Kerner restart on stagnation. A non-empty
/// `initial` of size degree is used as the starting guess instead. Throws
/// RootFindingFailed.
std::vector<cplx> simultaneous_roots(const Polynomial& p, std::span<const cplx> initial = {},
                                     int max_iterations = 1000);

/// Merge roots whose mutual distance is <= radius (transitive closure) to
/// their centroid; multiplicity is the cluster size.
RootSet cluster_multiplicities(std::span<const cplx> raw, double radius);

/// All roots with multiplicities. Clusters are grown from the base radius
/// until every cluster's multiplicity is confirmed by derivative tests at its
/// centroid (p^{(j)} vanishes for j < m and not at j = m).
RootSet roots(const Polynomial& p, const RootOptions& options = {});

/// Number of consecutive derivatives p', p'', ... that vanish at z, measured
/// against the Horner bound at max(|z|, root_scale(p)).
int vanishing_order(const Polynomial& p, cplx z, double rel_tol);

}  // namespace jspec
