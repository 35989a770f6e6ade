#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gvcp {

/// Largest ambient dimension supported by the sparse representation.
inline constexpr int kMaxDim = 10;

/// Coefficients with smaller magnitude are dropped after arithmetic.
inline constexpr double kZeroThreshold = 1e-13;

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Thrown for dimension/degree mismatches and malformed inputs.
class FormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// e_i in R^n, with i counted from 1.
Vector basis(int dim, int i);

/// A set of basis indices {i1 < ... < ik}, stored as a bitmask (bit i-1 for e_i).
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint16_t mask) : mask_(mask) {}

  /// Builds from 1-based indices; they must be strictly increasing.
  static Blade of(std::initializer_list<int> indices);
  static Blade of(const std::vector<int>& indices);

  constexpr std::uint16_t mask() const { return mask_; }
  int degree() const;
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  /// 1-based indices in increasing order.
  std::vector<int> indices() const;

  friend constexpr bool operator==(Blade, Blade) = default;

 private:
  std::uint16_t mask_ = 0;
};

/// Strict weak order on blades: lexicographic on the increasing index lists.
struct BladeLess {
  bool operator()(Blade a, Blade b) const;
};

/// Sign s with e_a ∧ e_b = s·e_{a∪b}; zero when a and b share an index.
int wedge_sign(Blade a, Blade b);

/// Homogeneous k-form on R^n in canonical sparse form.
///
/// Terms are keyed by blades; stored coefficients are never (near) zero.
/// Values are immutable in practice: every operation returns a new form.
class ExteriorForm {
 public:
  using Terms = std::map<Blade, double, BladeLess>;

  ExteriorForm(int dim, int degree);

  static ExteriorForm zero(int dim, int degree) { return {dim, degree}; }
  static ExteriorForm scalar(int dim, double value);
  static ExteriorForm volume(int dim);
  /// The 1-form metric-dual to v.
  static ExteriorForm one_form(const Vector& v);
  /// Builds from (1-based index list, coefficient) pairs. Repeated blades are rejected.
  static ExteriorForm from_terms(
      int dim, int degree,
      const std::vector<std::pair<std::vector<int>, double>>& terms);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double coefficient(Blade b) const;

  /// Adds c·e_b, dropping the entry if the result falls under the zero threshold.
  void add_term(Blade b, double c);

  ExteriorForm& operator+=(const ExteriorForm& other);
  ExteriorForm& operator-=(const ExteriorForm& other);
  ExteriorForm& operator*=(double s);

  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator-(ExteriorForm a) { return a *= -1.0; }
  friend ExteriorForm operator*(double s, ExteriorForm a) { return a *= s; }
  friend ExteriorForm operator*(ExteriorForm a, double s) { return a *= s; }

  /// Exact comparison of dim, degree and stored coefficients.
  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b);

  /// Same form regarded on R^new_dim (new_dim >= dim), indices unchanged.
  ExteriorForm extended(int new_dim) const;

  /// Evaluates the form on k vectors: sum over terms of c_I·det(V[I, :]).
  double evaluate(const std::vector<Vector>& vectors) const;

 private:
  void check_compatible(const ExteriorForm& other, const char* op) const;

  int dim_;
  int degree_;
  Terms terms_;
};

/// Largest absolute coefficient difference between two forms of equal shape.
double max_abs_diff(const ExteriorForm& a, const ExteriorForm& b);

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
/// β^{∧p}, with β^{∧0} the scalar 1.
ExteriorForm wedge_power(const ExteriorForm& beta, int p);
/// v ⌟ a.
ExteriorForm interior(const Vector& v, const ExteriorForm& a);
/// Hodge star for the standard metric and orientation e_1∧…∧e_n.
ExteriorForm hodge(const ExteriorForm& a);
/// Inner product in which the blades e_I are orthonormal.
double inner(const ExteriorForm& a, const ExteriorForm& b);
double norm_squared(const ExteriorForm& a);
double norm(const ExteriorForm& a);

/// Skew-symmetric endomorphism of R^n.
class SkewEndo {
 public:
  explicit SkewEndo(int dim);

  /// Validates max|M + Mᵀ| <= tol, then stores the exact skew part (M - Mᵀ)/2.
  static SkewEndo from_matrix(const Matrix& m, double tol = 1e-12);
  static SkewEndo zero(int dim) { return SkewEndo(dim); }

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  Vector apply(const Vector& v) const;

  friend SkewEndo operator*(double s, const SkewEndo& a);

 private:
  Matrix matrix_;
};

/// Convention ⟨A e_i, e_j⟩ = β(e_i, e_j); e12 maps e1 → e2 and e2 → -e1.
SkewEndo two_form_to_endo(const ExteriorForm& beta);
ExteriorForm endo_to_two_form(const SkewEndo& a);

/// Derivation action A·η = Σ_i A(e_i) ∧ (e_i ⌟ η).
ExteriorForm endo_action(const SkewEndo& a, const ExteriorForm& eta);

}  // namespace gvcp
