#include "gvcp/lifting.hpp"

#include "gvcp/canonical.hpp"
#include "gvcp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace gvcp {

namespace {

constexpr double kNormalizationTol = 1e-8;

void require_hermitian_dim(const ExteriorForm& sigma, const char* op) {
  if (sigma.degree() != 3) throw FormError(std::string(op) + ": expected a 3-form");
  if (sigma.dim() % 4 != 2) throw FormError(std::string(op) + ": dimension must be 4k+2");
}

void require_normalized(const ExteriorForm& sigma, const char* op) {
  const double scale = hermitian_scale(sigma);
  if (std::abs(scale - 1.0) > kNormalizationTol) {
    std::ostringstream msg;
    msg << op << ": form must be normalized to scale 1 (got " << scale << ")";
    throw FormError(msg.str());
  }
}

Vector to_vector(const ExteriorForm& one_form) {
  Vector v = Vector::Zero(one_form.dim());
  for (const auto& [b, c] : one_form.terms()) v(b.indices().front() - 1) = c;
  return v;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ExteriorForm normalized(const ExteriorForm& sigma) {
  const double scale = hermitian_scale(sigma);
  if (!(scale > 0.0)) throw FormError("cannot normalize the zero form");
  return scale == 1.0 ? sigma : sigma * (1.0 / scale);
}

}  // namespace

double hermitian_scale(const ExteriorForm& sigma) {
  require_hermitian_dim(sigma, "hermitian_scale");
  const int n = sigma.dim();
  return std::sqrt(6.0 * norm_squared(sigma) / (n * (n - 2)));
}

ExteriorForm psi(const ExteriorForm& sigma, const Vector& x) {
  require_hermitian_dim(sigma, "psi");
  require_normalized(sigma, "psi");
  if (x.size() != sigma.dim()) throw FormError("psi: vector dimension mismatch");
  if (x.squaredNorm() == 0.0) throw FormError("psi: X must be nonzero");
  const int k = (sigma.dim() - 2) / 4;
  return wedge_power(interior(x, sigma), 2 * k) * (1.0 / factorial(2 * k));
}

Vector f_map(const ExteriorForm& sigma, const Vector& x) {
  require_hermitian_dim(sigma, "f_map");
  if (sigma.dim() != 6) throw FormError("f_map: only R^6 is supported");
  require_normalized(sigma, "f_map");
  if (x.size() != 6) throw FormError("f_map: vector dimension mismatch");
  const double r2 = x.squaredNorm();
  if (r2 == 0.0) return Vector::Zero(6);
  return to_vector(hodge(wedge(ExteriorForm::one_form(x), psi(sigma, x)))) / r2;
}

double HermitianResiduals::max() const {
  return std::max({linearity, orthogonality, skewness, complex_structure, kernel, square_identity});
}

HermitianRejected::HermitianRejected(std::vector<std::string> failed, HermitianResiduals residuals)
    : std::runtime_error([&] {
        std::string msg = "not a Hermitian structure; failed:";
        for (const auto& f : failed) msg += " [" + f + "]";
        return msg;
      }()),
      failed_(std::move(failed)),
      residuals_(residuals) {}

HermitianCandidate f_two_form(const ExteriorForm& sigma, const HermitianOptions& options) {
  require_hermitian_dim(sigma, "f_two_form");
  if (sigma.dim() != 6) throw FormError("f_two_form: only R^6 is supported");
  const ExteriorForm unit = normalized(sigma);
  const int n = 6;
  const Matrix id = Matrix::Identity(n, n);

  Matrix f(n, n);
  for (int i = 1; i <= n; ++i) f.col(i - 1) = f_map(unit, basis(n, i));

  HermitianResiduals res;
  res.skewness = (f + f.transpose()).cwiseAbs().maxCoeff();
  res.complex_structure = (f * f + id).cwiseAbs().maxCoeff();
  res.orthogonality = (f.transpose() * f - id).cwiseAbs().maxCoeff();

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  auto draw = [&] {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = normal(rng);
    return v;
  };

  for (int s = 0; s < options.samples; ++s) {
    const Vector x = draw();
    const Vector y = draw();
    const Vector fx = f_map(unit, x);
    const Vector fy = f_map(unit, y);
    res.linearity = std::max(res.linearity, (f_map(unit, x + y) - fx - fy).cwiseAbs().maxCoeff());
    res.linearity = std::max(res.linearity, (fx - f * x).cwiseAbs().maxCoeff());

    res.orthogonality = std::max(res.orthogonality, std::abs(fx.norm() - x.norm()));
    res.orthogonality = std::max(res.orthogonality, std::abs(fx.dot(x)));

    const Matrix sx = contraction_endo(unit, x).matrix();
    res.kernel = std::max(res.kernel, (sx * fx).cwiseAbs().maxCoeff());
    const Matrix t21 = sx * sx + x.squaredNorm() * id - x * x.transpose() - fx * fx.transpose();
    res.square_identity = std::max(res.square_identity, t21.cwiseAbs().maxCoeff());
  }

  std::vector<std::string> failed;
  auto check = [&](double value, const char* name) {
    if (!(value <= options.tol)) failed.emplace_back(name);
  };
  check(res.linearity, kLinearityName);
  check(res.orthogonality, kOrthogonalityName);
  check(res.skewness, kSkewnessName);
  check(res.complex_structure, kComplexName);
  check(res.kernel, kKernelName);
  check(res.square_identity, kSquareIdentityName);
  if (!failed.empty()) throw HermitianRejected(std::move(failed), res);

  return {SkewEndo::from_matrix(f, options.tol), res};
}

ExteriorForm lift(const ExteriorForm& sigma, const HermitianOptions& options) {
  if (sigma.degree() != 3 || sigma.dim() != 6) throw FormError("lift: expected a 3-form on R^6");
  const double scale = hermitian_scale(sigma);
  const HermitianCandidate f = f_two_form(sigma, options);
  const ExteriorForm e7 = ExteriorForm::one_form(basis(7, 7));
  ExteriorForm hermitian = endo_to_two_form(f.endo).extended(7);
  if (scale != 1.0) hermitian *= scale;
  return wedge(e7, hermitian) + sigma.extended(7);
}

ExteriorForm restrict_to_complement(const ExteriorForm& tau, const Vector& v) {
  const int n = tau.dim();
  if (v.size() != n) throw FormError("restrict: vector dimension mismatch");
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > 1e-10) throw FormError("restrict: vector must be a unit vector");
  if (tau.degree() > n - 1) throw FormError("restrict: degree exceeds dimension of the complement");

  ExteriorForm pulled = tau;
  const Vector unit = v / v.norm();
  Vector u = unit - basis(n, n);
  if (u.squaredNorm() != 0.0) {
    const Matrix h = Matrix::Identity(n, n) - 2.0 * u * u.transpose() / u.squaredNorm();
    pulled = conjugate(tau, h);
  }

  ExteriorForm out(n - 1, tau.degree());
  for (const auto& [b, c] : pulled.terms()) {
    if (!b.contains(n)) out.add_term(b, c);
  }
  return out;
}

}  // namespace gvcp
