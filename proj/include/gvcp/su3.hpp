#pragma once

#include "gvcp/exterior.hpp"

namespace gvcp {

/// Flat SU(3)-structure on R^6: J, its fundamental form ω(X, Y) = ⟨JX, Y⟩,
/// and the real and imaginary parts Ψ± of the complex volume form.
struct Su3Frame {
  ExteriorForm omega;
  ExteriorForm psi_plus;
  ExteriorForm psi_minus;
  SkewEndo j;
};

/// ω = e12 + e34 + e56, Ψ⁺ = sigma0, Ψ⁻ = *sigma0, J e_{2i-1} = e_{2i}.
Su3Frame standard_frame();

/// Frame whose J is the Hermitian structure F built from σ, with Ψ⁺ = σ/λ.
Su3Frame frame_from_form(const ExteriorForm& sigma);

/// Deviations from the frame's defining relations.
struct FrameResiduals {
  double complex_structure;  // J² + id
  double omega;              // ω - endo_to_two_form(J)
  /// ¼Ψ⁺ ∧ *Ψ⁺ - vol. With orthonormal blades |Ψ⁺|² = 4, so no extra factor appears.
  double volume;
  double hodge;  // Ψ⁻ - *Ψ⁺

  double max() const;
};

FrameResiduals check_frame(const Su3Frame& frame);

/// Residuals of the flat SU(3) identities at X, writing Ψ⁻_X = X ⌟ Ψ⁻ and
/// A·η for the derivation action of a skew endomorphism.
struct IdentityResiduals {
  double action_plus;   // Ψ⁻_X · Ψ⁺ + 2 X∧ω
  double action_minus;  // Ψ⁻_X · Ψ⁻ + 2 JX∧ω
  double j_plus;        // J·Ψ⁺ - 3Ψ⁻
  double j_minus;       // J·Ψ⁻ + 3Ψ⁺
  double swap;          // Ψ⁻_X + Ψ⁺_{JX}

  double max() const;
};

IdentityResiduals check_identities(const Su3Frame& frame, const Vector& x);

/// X ⌟ Ψ⁻, a 2-form of type (2,0)+(0,2).
ExteriorForm anti_invariant_embed(const Vector& x, const Su3Frame& frame);

}  // namespace gvcp
