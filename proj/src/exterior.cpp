#include "gvcp/exterior.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace gvcp {

namespace {

std::uint16_t full_mask(int dim) { return static_cast<std::uint16_t>((1u << dim) - 1u); }

// Bits strictly above position `bit`.
std::uint16_t above(int bit) { return static_cast<std::uint16_t>(~((2u << bit) - 1u)); }

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw FormError("dimension " + std::to_string(dim) + " outside [1, " + std::to_string(kMaxDim) + "]");
  }
}

void check_vector(const Vector& v, int dim, const char* op) {
  if (v.size() != dim) {
    std::ostringstream msg;
    msg << op << ": vector of size " << v.size() << " does not match dimension " << dim;
    throw FormError(msg.str());
  }
}

}  // namespace

Vector basis(int dim, int i) {
  if (i < 1 || i > dim) throw FormError("basis index out of range");
  Vector e = Vector::Zero(dim);
  e(i - 1) = 1.0;
  return e;
}

Blade Blade::of(std::initializer_list<int> indices) { return of(std::vector<int>(indices)); }

Blade Blade::of(const std::vector<int>& indices) {
  std::uint16_t mask = 0;
  int prev = 0;
  for (int i : indices) {
    if (i <= prev) throw FormError("blade indices must be strictly increasing");
    if (i > kMaxDim) throw FormError("blade index exceeds maximum dimension");
    mask |= static_cast<std::uint16_t>(1u << (i - 1));
    prev = i;
  }
  return Blade(mask);
}

int Blade::degree() const { return std::popcount(mask_); }

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (int b = 0; b < kMaxDim; ++b) {
    if ((mask_ >> b) & 1u) out.push_back(b + 1);
  }
  return out;
}

bool BladeLess::operator()(Blade a, Blade b) const {
  const std::uint16_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const int bit = std::countr_zero(diff);
  if ((a.mask() >> bit) & 1u) return (b.mask() & above(bit)) != 0;
  return (a.mask() & above(bit)) == 0;
}

int wedge_sign(Blade a, Blade b) {
  if (a.mask() & b.mask()) return 0;
  int inversions = 0;
  for (std::uint16_t rest = b.mask(); rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    inversions += std::popcount(static_cast<std::uint16_t>(a.mask() & above(bit)));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// ExteriorForm ---------------------------------------------------------------

ExteriorForm::ExteriorForm(int dim, int degree) : dim_(dim), degree_(degree) {
  check_dim(dim);
  if (degree < 0 || degree > dim) {
    throw FormError("degree " + std::to_string(degree) + " invalid for dimension " + std::to_string(dim));
  }
}

ExteriorForm ExteriorForm::scalar(int dim, double value) {
  ExteriorForm f(dim, 0);
  f.add_term(Blade(), value);
  return f;
}

ExteriorForm ExteriorForm::volume(int dim) {
  ExteriorForm f(dim, dim);
  f.add_term(Blade(full_mask(dim)), 1.0);
  return f;
}

ExteriorForm ExteriorForm::one_form(const Vector& v) {
  ExteriorForm f(static_cast<int>(v.size()), 1);
  for (int i = 0; i < v.size(); ++i) f.add_term(Blade(static_cast<std::uint16_t>(1u << i)), v(i));
  return f;
}

ExteriorForm ExteriorForm::from_terms(int dim, int degree,
                                      const std::vector<std::pair<std::vector<int>, double>>& terms) {
  ExteriorForm f(dim, degree);
  std::map<Blade, bool, BladeLess> seen;
  for (const auto& [indices, coeff] : terms) {
    const Blade b = Blade::of(indices);
    if (static_cast<int>(indices.size()) != degree) throw FormError("blade degree does not match form degree");
    if (!indices.empty() && indices.back() > dim) throw FormError("blade index exceeds form dimension");
    if (!seen.emplace(b, true).second) throw FormError("duplicate blade in term list");
    if (!std::isfinite(coeff)) throw FormError("non-finite coefficient");
    f.add_term(b, coeff);
  }
  return f;
}

double ExteriorForm::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? 0.0 : it->second;
}

void ExteriorForm::add_term(Blade b, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kZeroThreshold) terms_.erase(it);
}

void ExteriorForm::check_compatible(const ExteriorForm& other, const char* op) const {
  if (dim_ != other.dim_ || degree_ != other.degree_) {
    std::ostringstream msg;
    msg << op << ": shape mismatch (dim " << dim_ << ", degree " << degree_ << ") vs (dim " << other.dim_
        << ", degree " << other.degree_ << ")";
    throw FormError(msg.str());
  }
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& other) {
  check_compatible(other, "add");
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& other) {
  check_compatible(other, "subtract");
  for (const auto& [b, c] : other.terms_) add_term(b, -c);
  return *this;
}

ExteriorForm& ExteriorForm::operator*=(double s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (std::abs(it->second) < kZeroThreshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
  return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

ExteriorForm ExteriorForm::extended(int new_dim) const {
  if (new_dim < dim_) throw FormError("cannot extend to a smaller dimension");
  ExteriorForm out(new_dim, degree_);
  out.terms_ = terms_;
  return out;
}

double ExteriorForm::evaluate(const std::vector<Vector>& vectors) const {
  if (static_cast<int>(vectors.size()) != degree_) throw FormError("evaluate: wrong number of arguments");
  for (const auto& v : vectors) check_vector(v, dim_, "evaluate");
  if (degree_ == 0) return coefficient(Blade());
  double total = 0.0;
  Matrix minor(degree_, degree_);
  for (const auto& [b, c] : terms_) {
    const auto rows = b.indices();
    for (int r = 0; r < degree_; ++r) {
      for (int col = 0; col < degree_; ++col) minor(r, col) = vectors[col](rows[r] - 1);
    }
    total += c * minor.determinant();
  }
  return total;
}

double max_abs_diff(const ExteriorForm& a, const ExteriorForm& b) {
  const ExteriorForm d = a - b;
  double m = 0.0;
  for (const auto& [blade, c] : d.terms()) m = std::max(m, std::abs(c));
  return m;
}

// Operations -----------------------------------------------------------------

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.dim() != b.dim()) throw FormError("wedge: dimension mismatch");
  if (a.degree() + b.degree() > a.dim()) throw FormError("wedge: degree overflow");
  ExteriorForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const int s = wedge_sign(ba, bb);
      if (s != 0) out.add_term(Blade(ba.mask() | bb.mask()), s * ca * cb);
    }
  }
  return out;
}

ExteriorForm wedge_power(const ExteriorForm& beta, int p) {
  if (p < 0) throw FormError("wedge_power: negative exponent");
  ExteriorForm out = ExteriorForm::scalar(beta.dim(), 1.0);
  for (int i = 0; i < p; ++i) out = wedge(out, beta);
  return out;
}

ExteriorForm interior(const Vector& v, const ExteriorForm& a) {
  check_vector(v, a.dim(), "interior");
  if (a.degree() < 1) throw FormError("interior: degree must be at least 1");
  ExteriorForm out(a.dim(), a.degree() - 1);
  for (const auto& [b, c] : a.terms()) {
    int position = 0;
    for (int i : b.indices()) {
      const double vi = v(i - 1);
      if (vi != 0.0) {
        const double sign = (position % 2 == 0) ? 1.0 : -1.0;
        out.add_term(Blade(static_cast<std::uint16_t>(b.mask() & ~(1u << (i - 1)))), sign * vi * c);
      }
      ++position;
    }
  }
  return out;
}

ExteriorForm hodge(const ExteriorForm& a) {
  const std::uint16_t all = full_mask(a.dim());
  ExteriorForm out(a.dim(), a.dim() - a.degree());
  for (const auto& [b, c] : a.terms()) {
    const Blade complement(static_cast<std::uint16_t>(all & ~b.mask()));
    out.add_term(complement, wedge_sign(b, complement) * c);
  }
  return out;
}

double inner(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) throw FormError("inner: shape mismatch");
  double total = 0.0;
  for (const auto& [blade, c] : a.terms()) total += c * b.coefficient(blade);
  return total;
}

double norm_squared(const ExteriorForm& a) { return inner(a, a); }

double norm(const ExteriorForm& a) { return std::sqrt(norm_squared(a)); }

// SkewEndo -------------------------------------------------------------------

SkewEndo::SkewEndo(int dim) : matrix_(Matrix::Zero(dim, dim)) { check_dim(dim); }

SkewEndo SkewEndo::from_matrix(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw FormError("skew endomorphism must be square");
  if (!m.allFinite()) throw FormError("skew endomorphism has non-finite entries");
  const double defect = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (defect > tol) {
    std::ostringstream msg;
    msg << "matrix is not skew-symmetric (max |M + M^T| = " << defect << ")";
    throw FormError(msg.str());
  }
  SkewEndo out(static_cast<int>(m.rows()));
  out.matrix_ = 0.5 * (m - m.transpose());
  return out;
}

Vector SkewEndo::apply(const Vector& v) const {
  check_vector(v, dim(), "apply");
  return matrix_ * v;
}

SkewEndo operator*(double s, const SkewEndo& a) {
  SkewEndo out(a.dim());
  out.matrix_ = s * a.matrix_;
  return out;
}

SkewEndo two_form_to_endo(const ExteriorForm& beta) {
  if (beta.degree() != 2) throw FormError("two_form_to_endo: expected a 2-form");
  Matrix m = Matrix::Zero(beta.dim(), beta.dim());
  for (const auto& [b, c] : beta.terms()) {
    const auto idx = b.indices();
    const int i = idx[0] - 1;
    const int j = idx[1] - 1;
    // Column i holds A(e_i); its j-th entry is β(e_i, e_j).
    m(j, i) = c;
    m(i, j) = -c;
  }
  return SkewEndo::from_matrix(m, 0.0);
}

ExteriorForm endo_to_two_form(const SkewEndo& a) {
  ExteriorForm out(a.dim(), 2);
  const Matrix& m = a.matrix();
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = i + 1; j < a.dim(); ++j) {
      out.add_term(Blade(static_cast<std::uint16_t>((1u << i) | (1u << j))), m(j, i));
    }
  }
  return out;
}

ExteriorForm endo_action(const SkewEndo& a, const ExteriorForm& eta) {
  if (a.dim() != eta.dim()) throw FormError("endo_action: dimension mismatch");
  ExteriorForm out(eta.dim(), eta.degree());
  if (eta.degree() == 0) return out;
  for (int i = 1; i <= eta.dim(); ++i) {
    const Vector ei = basis(eta.dim(), i);
    const ExteriorForm contracted = interior(ei, eta);
    if (contracted.is_zero()) continue;
    out += wedge(ExteriorForm::one_form(a.apply(ei)), contracted);
  }
  return out;
}

}  // namespace gvcp
