#include "gvcp/classifier.hpp"

#include "gvcp/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace gvcp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "ZERO";
    case Verdict::Vol3: return "VOL3";
    case Verdict::G2: return "G2";
    case Verdict::Su3: return "SU3";
    case Verdict::NotGvcp: return "NOT_GVCP";
    case Verdict::Anomaly: return "ANOMALY";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Zero, Verdict::Vol3, Verdict::G2, Verdict::Su3, Verdict::NotGvcp, Verdict::Anomaly}) {
    if (to_string(v) == s) return v;
  }
  throw FormError("unknown verdict '" + s + "'");
}

std::string to_string(GvcpMode m) { return m == GvcpMode::Deterministic ? "deterministic" : "sampled"; }

GvcpMode parse_mode(const std::string& s) {
  if (s == "deterministic" || s == "DETERMINISTIC") return GvcpMode::Deterministic;
  if (s == "sampled" || s == "SAMPLED") return GvcpMode::Sampled;
  throw FormError("unknown mode '" + s + "' (expected deterministic or sampled)");
}

namespace {

// t[a][b][c] = τ(e_a, e_b, e_c), fully antisymmetric.
std::vector<double> dense_three_tensor(const ExteriorForm& tau) {
  const int n = tau.dim();
  std::vector<double> t(static_cast<std::size_t>(n) * n * n, 0.0);
  auto at = [&](int a, int b, int c) -> double& { return t[(a * n + b) * n + c]; };
  for (const auto& [blade, coeff] : tau.terms()) {
    const auto idx = blade.indices();
    const int i = idx[0] - 1, j = idx[1] - 1, k = idx[2] - 1;
    at(i, j, k) = coeff;
    at(j, k, i) = coeff;
    at(k, i, j) = coeff;
    at(j, i, k) = -coeff;
    at(i, k, j) = -coeff;
    at(k, j, i) = -coeff;
  }
  return t;
}

OrbitSignature signature_with_retry(const SkewEndo& a, double tol, std::vector<std::string>& diagnostics) {
  SignatureResult r = orbit_signature(a, tol);
  if (!r.ambiguous) return r.signature;
  const double wider = tol * 100.0;
  std::ostringstream msg;
  msg << "eigenvalue clustering ambiguous at tol " << tol << "; retried with tol " << wider;
  diagnostics.push_back(msg.str());
  r = orbit_signature(a, wider);
  if (r.ambiguous) diagnostics.push_back("clustering still ambiguous after widening the tolerance");
  return r.signature;
}

constexpr double kWitnessTol = 1e-6;

std::optional<Witness> search_witness(const ExteriorForm& tau, const GvcpOptions& options) {
  const int n = tau.dim();
  std::vector<std::string> ignored;
  const Vector ref = basis(n, 1);
  const OrbitSignature ref_sig = signature_with_retry(contraction_endo(tau, ref), options.cluster_tol, ignored);

  auto probe = [&](const Vector& x) -> std::optional<Witness> {
    const OrbitSignature sig = signature_with_retry(contraction_endo(tau, x), options.cluster_tol, ignored);
    if (same_signature(ref_sig, sig, kWitnessTol)) return std::nullopt;
    return Witness{ref, x, ref_sig, sig};
  };

  for (int j = 2; j <= n; ++j) {
    if (auto w = probe(basis(n, j))) return w;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (auto w = probe((basis(n, i) + basis(n, j)) / std::sqrt(2.0))) return w;
    }
  }
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  for (int s = 0; s < std::max(64, options.samples); ++s) {
    Vector x(n);
    for (int i = 0; i < n; ++i) x(i) = normal(rng);
    if (auto w = probe(x / x.norm())) return w;
  }
  return std::nullopt;
}

GvcpResult deterministic_gvcp(const ExteriorForm& tau, const GvcpOptions& options) {
  GvcpResult result{std::nullopt, std::nullopt, GvcpMode::Deterministic, 0.0, {}};
  const ExteriorForm unit = tau * (1.0 / norm(tau));
  for (int k = 1; k <= tau.dim() / 2; ++k) {
    const TraceIdentity id = trace_identity(unit, k);
    result.residual = std::max(result.residual, id.residual);
  }
  if (result.residual <= options.identity_tol) {
    result.signature =
        signature_with_retry(contraction_endo(tau, basis(tau.dim(), 1)), options.cluster_tol, result.diagnostics);
    return result;
  }
  result.witness = search_witness(tau, options);
  if (!result.witness) {
    std::ostringstream msg;
    msg << "trace identity fails (residual " << result.residual
        << ") but no pair of unit vectors with distinct signatures was found";
    result.diagnostics.push_back(msg.str());
  }
  return result;
}

GvcpResult sampled_gvcp(const ExteriorForm& tau, const GvcpOptions& options) {
  GvcpResult result{std::nullopt, std::nullopt, GvcpMode::Sampled, 0.0, {}};
  const int n = tau.dim();
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  auto draw = [&] {
    Vector x(n);
    for (int i = 0; i < n; ++i) x(i) = normal(rng);
    return Vector(x / x.norm());
  };

  const Vector ref = draw();
  const OrbitSignature ref_sig = signature_with_retry(contraction_endo(tau, ref), options.cluster_tol, result.diagnostics);
  double magnitude = 0.0;
  for (const auto& c : ref_sig.clusters) magnitude = std::max(magnitude, std::abs(c.value));

  for (int s = 1; s < options.samples; ++s) {
    const Vector x = draw();
    const OrbitSignature sig = signature_with_retry(contraction_endo(tau, x), options.cluster_tol, result.diagnostics);
    if (!same_signature(ref_sig, sig, options.cluster_tol)) {
      result.witness = Witness{ref, x, ref_sig, sig};
      return result;
    }
    for (std::size_t i = 0; i < sig.clusters.size(); ++i) {
      result.residual = std::max(result.residual,
                                 std::abs(sig.clusters[i].value - ref_sig.clusters[i].value) / std::max(1.0, magnitude));
    }
  }
  result.signature = ref_sig;
  std::ostringstream msg;
  msg << "signature constant on " << options.samples << " sampled unit vectors (Monte Carlo check)";
  result.diagnostics.push_back(msg.str());
  return result;
}

std::string describe(const OrbitSignature& sig) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < sig.clusters.size(); ++i) {
    if (i) out << ", ";
    out << "(" << sig.clusters[i].value << ", " << sig.clusters[i].multiplicity << ")";
  }
  out << "}";
  return out.str();
}

}  // namespace

VcpCertificate is_vcp(const ExteriorForm& tau, double tol) {
  if (tau.degree() != 3) throw FormError("is_vcp: expected a 3-form");
  const int n = tau.dim();
  const auto t = dense_three_tensor(tau);
  auto at = [&](int a, int b, int c) { return t[(a * n + b) * n + c]; };
  // p(i, j, k, l) = ⟨τ_{e_i} e_k, τ_{e_j} e_l⟩
  auto p = [&](int i, int j, int k, int l) {
    double s = 0.0;
    for (int m = 0; m < n; ++m) s += at(i, k, m) * at(j, l, m);
    return s;
  };
  auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };

  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = k; l < n; ++l) {
          const double defect = 0.5 * (p(i, j, k, l) + p(i, j, l, k)) - delta(i, j) * delta(k, l) +
                                0.5 * (delta(i, k) * delta(j, l) + delta(i, l) * delta(j, k));
          worst = std::max(worst, std::abs(defect));
        }
      }
    }
  }
  return {worst <= tol, worst};
}

GvcpResult is_gvcp(const ExteriorForm& tau, const GvcpOptions& options) {
  if (tau.degree() != 3) throw FormError("is_gvcp: expected a 3-form");
  if (tau.is_zero()) throw FormError("is_gvcp: a generalized cross product must be nonzero");
  const GvcpMode mode = options.mode.value_or(tau.dim() <= 8 ? GvcpMode::Deterministic : GvcpMode::Sampled);
  return mode == GvcpMode::Deterministic ? deterministic_gvcp(tau, options) : sampled_gvcp(tau, options);
}

ClassificationReport classify(const ExteriorForm& tau, const ClassifyOptions& options) {
  if (tau.degree() != 3) throw FormError("classify: expected a 3-form");
  ClassificationReport report;
  if (tau.is_zero()) {
    report.verdict = Verdict::Zero;
    return report;
  }

  GvcpResult gvcp = is_gvcp(tau, options.gvcp);
  report.diagnostics = std::move(gvcp.diagnostics);
  {
    std::ostringstream msg;
    msg << to_string(gvcp.mode) << " orbit check residual " << gvcp.residual;
    report.diagnostics.push_back(msg.str());
  }
  if (!gvcp.signature) {
    report.verdict = Verdict::NotGvcp;
    report.witness = std::move(gvcp.witness);
    return report;
  }

  const OrbitSignature& sig = *gvcp.signature;
  report.signature = sig;
  const int n = tau.dim();
  auto anomaly = [&](const std::string& why) {
    report.verdict = Verdict::Anomaly;
    report.diagnostics.push_back(why + "; contradicts the classification of generalized cross products");
    return report;
  };

  if (sig.nonzero_count() != 1) return anomaly("constant signature " + describe(sig) + " has several nonzero values");
  const double value = sig.clusters.front().value;
  const int multiplicity = sig.clusters.front().multiplicity;
  const double lambda = std::sqrt(-value);
  report.scale = lambda;

  if (n == 3) {
    report.verdict = Verdict::Vol3;
    report.scale = std::abs(tau.coefficient(Blade::of({1, 2, 3})));
    return report;
  }
  if (n == 7) {
    if (multiplicity != 6) return anomaly("signature " + describe(sig) + " on R^7 is not of cross-product type");
    const VcpCertificate cert = is_vcp(tau * (1.0 / lambda), options.vcp_tol);
    if (!cert.holds) {
      std::ostringstream msg;
      msg << "rescaled form fails the cross-product identity (residual " << cert.max_residual << ")";
      return anomaly(msg.str());
    }
    report.verdict = Verdict::G2;
    return report;
  }
  if (n == 6) {
    if (multiplicity != 4) return anomaly("signature " + describe(sig) + " on R^6 has a kernel of the wrong size");
    const ExteriorForm unit = tau * (1.0 / lambda);
    try {
      const ExteriorForm lifted = lift(unit);
      const VcpCertificate cert = is_vcp(lifted * (1.0 / hermitian_scale(unit)), options.vcp_tol);
      if (!cert.holds) {
        std::ostringstream msg;
        msg << "lift to R^7 fails the cross-product identity (residual " << cert.max_residual << ")";
        return anomaly(msg.str());
      }
    } catch (const HermitianRejected& e) {
      return anomaly(e.what());
    }
    report.verdict = Verdict::Su3;
    return report;
  }
  return anomaly("constant signature " + describe(sig) + " in dimension " + std::to_string(n));
}

}  // namespace gvcp
