#pragma once

#include "gvcp/exterior.hpp"

#include <vector>

namespace gvcp {

/// One eigenvalue of A² together with its multiplicity.
struct EigenCluster {
  double value;
  int multiplicity;

  friend bool operator==(const EigenCluster&, const EigenCluster&) = default;
};

/// Spectrum of A² for a skew A: the complete O(n)-conjugacy invariant of A.
///
/// Clusters are sorted by strictly increasing value, all values are <= 0,
/// nonzero values carry even multiplicity and multiplicities sum to n.
struct OrbitSignature {
  std::vector<EigenCluster> clusters;

  int dim() const;
  /// Number of distinct nonzero values.
  int nonzero_count() const;
  /// Multiplicity of the exact-zero cluster (0 when absent).
  int kernel_dim() const;

  friend bool operator==(const OrbitSignature&, const OrbitSignature&) = default;
};

/// Same multiplicities and values agreeing within tol·(1 + |value|).
bool same_signature(const OrbitSignature& a, const OrbitSignature& b, double tol);

inline constexpr double kDefaultClusterTol = 1e-8;

struct SignatureResult {
  OrbitSignature signature;
  /// Two clusters sit closer than 10·tol (but farther than tol), or a nonzero
  /// cluster has odd multiplicity; the caller should widen the tolerance.
  bool ambiguous = false;
};

/// Eigenvalues of the symmetric matrix A², clustered with absolute tolerance
/// `tol` after A has been scaled to unit operator norm.
SignatureResult orbit_signature(const SkewEndo& a, double tol = kDefaultClusterTol);

/// τ_X, defined by ⟨τ_X Y, Z⟩ = τ(X, Y, Z).
SkewEndo contraction_endo(const ExteriorForm& tau, const Vector& x);

/// tr(τ_X^{2k}) for k = 1..kmax.
std::vector<double> newton_traces(const ExteriorForm& tau, const Vector& x, int kmax);

/// tr(A^{2k}) = Σ m·(value)^k reconstructed from a signature, k = 1..kmax.
std::vector<double> traces_from_signature(const OrbitSignature& sig, int kmax);

/// Outcome of the polynomial identity tr(τ_X^{2k}) = a_k·|X|^{2k}.
struct TraceIdentity {
  int k;
  double a_k;
  /// Largest absolute coefficient of tr(τ_X^{2k}) - a_k·|X|^{2k} as a polynomial in X.
  double residual;
};

/// Expands tr(τ_X^{2k}) as a homogeneous polynomial in the coordinates of X
/// (exact coefficients, equivalent to full polarization over basis tuples),
/// with a_k read off at X = e_1.
TraceIdentity trace_identity(const ExteriorForm& tau, int k);

}  // namespace gvcp
