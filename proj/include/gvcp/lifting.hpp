#pragma once

#include "gvcp/exterior.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gvcp {

/// Scale λ of a generalized cross product on R^{4k+2}, read from the blade norm:
/// Σ_i |e_i ⌟ σ|² = 3|σ|² together with tr(σ_X²) = -(n-2)λ² gives
/// λ² = 6|σ|² / (n(n-2)). Exactly 1 for sigma0.
double hermitian_scale(const ExteriorForm& sigma);

/// ψ_X = (X ⌟ σ)^{∧2k} / (2k)! for σ on R^{4k+2} normalized to scale 1.
/// For unit X this is the volume element of the image of σ_X.
ExteriorForm psi(const ExteriorForm& sigma, const Vector& x);

/// F(X) = *(X ∧ ψ_X) / |X|², F(0) = 0. Only R^6 is supported.
Vector f_map(const ExteriorForm& sigma, const Vector& x);

/// Max deviations observed while validating F as a Hermitian structure.
struct HermitianResiduals {
  double linearity = 0.0;        // F(X+Y) - F(X) - F(Y), and F(X) against the assembled matrix
  double orthogonality = 0.0;    // |F(X)| - |X|, ⟨F(X), X⟩, FᵀF - id
  double skewness = 0.0;         // F + Fᵀ
  double complex_structure = 0.0;  // F² + id
  double kernel = 0.0;           // σ_X F(X)
  double square_identity = 0.0;  // σ_X² + |X|² id - X⊗X - F(X)⊗F(X)

  double max() const;
};

inline constexpr const char* kLinearityName = "linearity F(X+Y) = F(X) + F(Y)";
inline constexpr const char* kOrthogonalityName = "orthogonality |F(X)| = |X|, <F(X), X> = 0";
inline constexpr const char* kSkewnessName = "skewness F^T = -F";
inline constexpr const char* kComplexName = "complex structure F^2 = -id";
inline constexpr const char* kKernelName = "kernel sigma_X F(X) = 0";
inline constexpr const char* kSquareIdentityName = "square identity sigma_X^2 = -|X|^2 id + X(x)X + F(X)(x)F(X)";

struct HermitianCandidate {
  SkewEndo endo;
  HermitianResiduals residuals;
};

/// F failed one or more of its defining identities: the input was not a
/// generalized cross product.
class HermitianRejected : public std::runtime_error {
 public:
  HermitianRejected(std::vector<std::string> failed, HermitianResiduals residuals);

  const std::vector<std::string>& failed() const { return failed_; }
  const HermitianResiduals& residuals() const { return residuals_; }

 private:
  std::vector<std::string> failed_;
  HermitianResiduals residuals_;
};

struct HermitianOptions {
  std::uint64_t seed = 0;
  int samples = 50;
  double tol = 1e-8;
};

/// Assembles F from f_map on the basis of R^6 and validates it on seeded
/// random vectors. σ is rescaled to unit scale first.
HermitianCandidate f_two_form(const ExteriorForm& sigma, const HermitianOptions& options = {});

/// e_7 ∧ λF + σ on R^7, where F is the Hermitian structure of σ/λ.
/// Dividing the result by λ yields a vector cross product.
ExteriorForm lift(const ExteriorForm& sigma, const HermitianOptions& options = {});

/// τ restricted to v^⊥, expressed in the orthonormal basis H e_1, ..., H e_{n-1}
/// where H is the Householder reflection exchanging v and e_n (H = id when v = e_n).
ExteriorForm restrict_to_complement(const ExteriorForm& tau, const Vector& v);

}  // namespace gvcp
