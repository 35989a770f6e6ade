#pragma once

#include "gvcp/exterior.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace gvcp {

/// e127 + e347 + e567 + e135 - e146 - e236 - e245 on R^7 (stabilizer G2).
ExteriorForm tau0();
/// Re((e1 + i e2)∧(e3 + i e4)∧(e5 + i e6)) = e135 - e146 - e236 - e245 on R^6.
ExteriorForm sigma0();
/// e123 on R^3.
ExteriorForm vol3();
/// e12 + e34 + e56 on R^6.
ExteriorForm omega0();
ExteriorForm psi_plus();
/// Hodge dual of psi_plus: e136 + e145 + e235 - e246.
ExteriorForm psi_minus();
/// A0 on R^{2m+1}: e_{2i-1} → e_{2i}, e_{2i} → -e_{2i-1}, e_{2m+1} → 0.
SkewEndo a0(int m = 3);

enum class CanonicalName { Tau0, Sigma0, Vol3, A0, Omega0, PsiPlus, PsiMinus };

/// Accepts TAU0, SIGMA0, VOL3, A0, OMEGA0, PSI_PLUS, PSI_MINUS.
CanonicalName parse_canonical_name(std::string_view name);
std::string to_string(CanonicalName name);

std::variant<ExteriorForm, SkewEndo> canonical(CanonicalName name);

/// Pullback along Q: (conjugate(f, Q))(X1, ..., Xk) = f(QX1, ..., QXk).
/// Q must satisfy max|QᵀQ - I| <= 1e-10.
ExteriorForm conjugate(const ExteriorForm& form, const Matrix& q);

/// Haar-distributed orthogonal matrix from a seeded Gaussian QR factorization.
Matrix random_orthogonal(std::uint64_t seed, int dim);

/// Independent standard normal coefficient on every blade of the given degree.
ExteriorForm random_form(std::uint64_t seed, int dim, int degree);

/// Standard normal entries (not normalized).
Vector random_vector(std::uint64_t seed, int dim);

}  // namespace gvcp
