#include "gvcp/canonical.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace gvcp {

namespace {

// All k-subsets of {1..n} as blades, in lexicographic order.
std::vector<Blade> all_blades(int dim, int degree) {
  std::vector<Blade> out;
  for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
    if (std::popcount(mask) == degree) out.emplace_back(static_cast<std::uint16_t>(mask));
  }
  std::sort(out.begin(), out.end(), BladeLess{});
  return out;
}

}  // namespace

ExteriorForm tau0() {
  return ExteriorForm::from_terms(7, 3,
                                  {{{1, 2, 7}, 1.0},
                                   {{3, 4, 7}, 1.0},
                                   {{5, 6, 7}, 1.0},
                                   {{1, 3, 5}, 1.0},
                                   {{1, 4, 6}, -1.0},
                                   {{2, 3, 6}, -1.0},
                                   {{2, 4, 5}, -1.0}});
}

ExteriorForm sigma0() {
  return ExteriorForm::from_terms(
      6, 3, {{{1, 3, 5}, 1.0}, {{1, 4, 6}, -1.0}, {{2, 3, 6}, -1.0}, {{2, 4, 5}, -1.0}});
}

ExteriorForm vol3() { return ExteriorForm::volume(3); }

ExteriorForm omega0() { return ExteriorForm::from_terms(6, 2, {{{1, 2}, 1.0}, {{3, 4}, 1.0}, {{5, 6}, 1.0}}); }

ExteriorForm psi_plus() { return sigma0(); }

ExteriorForm psi_minus() { return hodge(sigma0()); }

SkewEndo a0(int m) {
  const int n = 2 * m + 1;
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    a(2 * i + 1, 2 * i) = 1.0;
    a(2 * i, 2 * i + 1) = -1.0;
  }
  return SkewEndo::from_matrix(a, 0.0);
}

CanonicalName parse_canonical_name(std::string_view name) {
  if (name == "TAU0") return CanonicalName::Tau0;
  if (name == "SIGMA0") return CanonicalName::Sigma0;
  if (name == "VOL3") return CanonicalName::Vol3;
  if (name == "A0") return CanonicalName::A0;
  if (name == "OMEGA0") return CanonicalName::Omega0;
  if (name == "PSI_PLUS") return CanonicalName::PsiPlus;
  if (name == "PSI_MINUS") return CanonicalName::PsiMinus;
  throw FormError("unknown canonical name '" + std::string(name) + "'");
}

std::string to_string(CanonicalName name) {
  switch (name) {
    case CanonicalName::Tau0: return "TAU0";
    case CanonicalName::Sigma0: return "SIGMA0";
    case CanonicalName::Vol3: return "VOL3";
    case CanonicalName::A0: return "A0";
    case CanonicalName::Omega0: return "OMEGA0";
    case CanonicalName::PsiPlus: return "PSI_PLUS";
    case CanonicalName::PsiMinus: return "PSI_MINUS";
  }
  return "?";
}

std::variant<ExteriorForm, SkewEndo> canonical(CanonicalName name) {
  switch (name) {
    case CanonicalName::Tau0: return tau0();
    case CanonicalName::Sigma0: return sigma0();
    case CanonicalName::Vol3: return vol3();
    case CanonicalName::A0: return a0();
    case CanonicalName::Omega0: return omega0();
    case CanonicalName::PsiPlus: return psi_plus();
    case CanonicalName::PsiMinus: return psi_minus();
  }
  throw FormError("unknown canonical name");
}

ExteriorForm conjugate(const ExteriorForm& form, const Matrix& q) {
  const int n = form.dim();
  if (q.rows() != n || q.cols() != n) throw FormError("conjugate: matrix size does not match form dimension");
  const double defect = (q.transpose() * q - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(defect <= 1e-10)) {
    std::ostringstream msg;
    msg << "conjugate: matrix is not orthogonal (max |QᵀQ - I| = " << defect << ")";
    throw FormError(msg.str());
  }
  const int k = form.degree();
  ExteriorForm out(n, k);
  if (k == 0) return form;
  const auto targets = all_blades(n, k);
  Matrix minor(k, k);
  for (const auto& [source, c] : form.terms()) {
    const auto rows = source.indices();
    for (Blade target : targets) {
      const auto cols = target.indices();
      for (int r = 0; r < k; ++r) {
        for (int s = 0; s < k; ++s) minor(r, s) = q(rows[r] - 1, cols[s] - 1);
      }
      const double det = minor.determinant();
      if (det != 0.0) out.add_term(target, c * det);
    }
  }
  return out;
}

Matrix random_orthogonal(std::uint64_t seed, int dim) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

ExteriorForm random_form(std::uint64_t seed, int dim, int degree) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ExteriorForm out(dim, degree);
  for (Blade b : all_blades(dim, degree)) out.add_term(b, normal(rng));
  return out;
}

Vector random_vector(std::uint64_t seed, int dim) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = normal(rng);
  return v;
}

}  // namespace gvcp
