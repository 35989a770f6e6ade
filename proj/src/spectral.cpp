#include "gvcp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace gvcp {

int OrbitSignature::dim() const {
  int n = 0;
  for (const auto& c : clusters) n += c.multiplicity;
  return n;
}

int OrbitSignature::nonzero_count() const {
  return static_cast<int>(std::count_if(clusters.begin(), clusters.end(),
                                        [](const EigenCluster& c) { return c.value != 0.0; }));
}

int OrbitSignature::kernel_dim() const {
  for (const auto& c : clusters) {
    if (c.value == 0.0) return c.multiplicity;
  }
  return 0;
}

bool same_signature(const OrbitSignature& a, const OrbitSignature& b, double tol) {
  if (a.clusters.size() != b.clusters.size()) return false;
  double magnitude = 0.0;
  for (const auto& c : a.clusters) magnitude = std::max(magnitude, std::abs(c.value));
  for (const auto& c : b.clusters) magnitude = std::max(magnitude, std::abs(c.value));
  const double slack = tol * std::max(1.0, magnitude);
  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    if (a.clusters[i].multiplicity != b.clusters[i].multiplicity) return false;
    if (std::abs(a.clusters[i].value - b.clusters[i].value) > slack) return false;
  }
  return true;
}

SignatureResult orbit_signature(const SkewEndo& a, double tol) {
  const int n = a.dim();
  SignatureResult result;
  Matrix square = a.matrix() * a.matrix();
  square = 0.5 * (square + square.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(square, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd values = solver.eigenvalues();  // ascending

  const double scale = values.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) {
    result.signature.clusters.push_back({0.0, n});
    return result;
  }

  struct Run {
    double first, last, sum;
    int count;
  };
  std::vector<Run> runs;
  for (int i = 0; i < n; ++i) {
    const double v = values(i) / scale;
    if (!runs.empty() && v - runs.back().first <= tol) {
      auto& r = runs.back();
      r.last = v;
      r.sum += v;
      ++r.count;
    } else {
      if (!runs.empty() && v - runs.back().last <= 10.0 * tol) result.ambiguous = true;
      runs.push_back({v, v, v, 1});
    }
  }

  for (const auto& r : runs) {
    double mean = r.sum / r.count;
    if (std::abs(mean) <= tol || mean > 0.0) mean = 0.0;
    if (mean != 0.0 && r.count % 2 != 0) result.ambiguous = true;
    auto& clusters = result.signature.clusters;
    if (!clusters.empty() && clusters.back().value == 0.0 && mean == 0.0) {
      clusters.back().multiplicity += r.count;
      result.ambiguous = true;
    } else {
      clusters.push_back({mean * scale, r.count});
    }
  }
  return result;
}

SkewEndo contraction_endo(const ExteriorForm& tau, const Vector& x) {
  if (tau.degree() != 3) throw FormError("contraction_endo: expected a 3-form");
  return two_form_to_endo(interior(x, tau));
}

std::vector<double> newton_traces(const ExteriorForm& tau, const Vector& x, int kmax) {
  if (kmax < 1) throw FormError("newton_traces: kmax must be at least 1");
  const Matrix a = contraction_endo(tau, x).matrix();
  const Matrix a2 = a * a;
  std::vector<double> out;
  Matrix power = Matrix::Identity(a.rows(), a.cols());
  for (int k = 1; k <= kmax; ++k) {
    power = power * a2;
    out.push_back(power.trace());
  }
  return out;
}

std::vector<double> traces_from_signature(const OrbitSignature& sig, int kmax) {
  std::vector<double> out;
  for (int k = 1; k <= kmax; ++k) {
    double t = 0.0;
    for (const auto& c : sig.clusters) t += c.multiplicity * std::pow(c.value, k);
    out.push_back(t);
  }
  return out;
}

namespace {

// Dense homogeneous polynomials in n variables. Monomials of each degree are
// enumerated once; exponents are packed 4 bits per variable.
class MonomialTables {
 public:
  MonomialTables(int nvars, int max_degree) : nvars_(nvars) {
    codes_.push_back({0});
    index_.push_back({{0, 0}});
    for (int d = 1; d <= max_degree; ++d) {
      std::vector<std::uint64_t> next;
      std::unordered_map<std::uint64_t, int> next_index;
      for (std::uint64_t code : codes_.back()) {
        for (int i = 0; i < nvars; ++i) {
          const std::uint64_t c = code + (std::uint64_t{1} << (4 * i));
          if (next_index.emplace(c, static_cast<int>(next.size())).second) next.push_back(c);
        }
      }
      codes_.push_back(std::move(next));
      index_.push_back(std::move(next_index));
    }
    for (int d = 0; d < max_degree; ++d) {
      std::vector<int> table(codes_[d].size() * nvars);
      for (std::size_t m = 0; m < codes_[d].size(); ++m) {
        for (int i = 0; i < nvars; ++i) {
          table[m * nvars + i] = index_[d + 1].at(codes_[d][m] + (std::uint64_t{1} << (4 * i)));
        }
      }
      shift_.push_back(std::move(table));
    }
  }

  std::size_t count(int degree) const { return codes_[degree].size(); }
  // Index of (monomial m of degree d)·x_i among degree d+1 monomials.
  int times(int degree, std::size_t m, int i) const { return shift_[degree][m * nvars_ + i]; }

 private:
  int nvars_;
  std::vector<std::vector<std::uint64_t>> codes_;
  std::vector<std::unordered_map<std::uint64_t, int>> index_;
  std::vector<std::vector<int>> shift_;
};

using Poly = std::vector<double>;

}  // namespace

TraceIdentity trace_identity(const ExteriorForm& tau, int k) {
  if (tau.degree() != 3) throw FormError("trace_identity: expected a 3-form");
  if (k < 1) throw FormError("trace_identity: k must be at least 1");
  const int n = tau.dim();
  const int degree = 2 * k;
  const MonomialTables tables(n, degree);

  std::vector<Matrix> slices;
  for (int i = 1; i <= n; ++i) slices.push_back(contraction_endo(tau, basis(n, i)).matrix());

  // entries[a*n + b] holds the polynomial (τ_X^d)_{ab}; start from d = 1.
  std::vector<Poly> entries(static_cast<std::size_t>(n) * n, Poly(tables.count(1), 0.0));
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) entries[a * n + b][tables.times(0, 0, i)] = slices[i](a, b);
    }
  }

  for (int d = 1; d < degree; ++d) {
    const bool last = (d + 1 == degree);
    std::vector<Poly> next(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (last && a != b) continue;
        Poly out(tables.count(d + 1), 0.0);
        for (int m = 0; m < n; ++m) {
          const Poly& left = entries[a * n + m];
          for (int i = 0; i < n; ++i) {
            const double t = slices[i](m, b);
            if (t == 0.0) continue;
            for (std::size_t mono = 0; mono < left.size(); ++mono) {
              if (left[mono] != 0.0) out[tables.times(d, mono, i)] += left[mono] * t;
            }
          }
        }
        next[a * n + b] = std::move(out);
      }
    }
    entries = std::move(next);
  }

  Poly trace(tables.count(degree), 0.0);
  for (int a = 0; a < n; ++a) {
    const Poly& diag = entries[a * n + a];
    for (std::size_t mono = 0; mono < diag.size(); ++mono) trace[mono] += diag[mono];
  }

  // |X|^{2k} = (Σ x_i²)^k.
  Poly radial{1.0};
  for (int j = 0; j < k; ++j) {
    const int d = 2 * j;
    Poly out(tables.count(d + 2), 0.0);
    for (std::size_t mono = 0; mono < radial.size(); ++mono) {
      if (radial[mono] == 0.0) continue;
      for (int i = 0; i < n; ++i) {
        out[tables.times(d + 1, tables.times(d, mono, i), i)] += radial[mono];
      }
    }
    radial = std::move(out);
  }

  const Matrix first = slices[0] * slices[0];
  Matrix power = Matrix::Identity(n, n);
  for (int j = 0; j < k; ++j) power = power * first;
  const double a_k = power.trace();

  double residual = 0.0;
  for (std::size_t mono = 0; mono < trace.size(); ++mono) {
    residual = std::max(residual, std::abs(trace[mono] - a_k * radial[mono]));
  }
  return {k, a_k, residual};
}

}  // namespace gvcp
