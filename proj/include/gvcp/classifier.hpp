#pragma once

#include "gvcp/exterior.hpp"
#include "gvcp/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gvcp {

enum class Verdict { Zero, Vol3, G2, Su3, NotGvcp, Anomaly };

/// ZERO, VOL3, G2, SU3, NOT_GVCP, ANOMALY.
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct VcpCertificate {
  bool holds;
  /// Max |T(e_i, e_j; e_k, e_l)| over the polarized defect of |τ_X Y|² - |X∧Y|².
  double max_residual;
};

/// Decides |τ_X Y|² = |X∧Y|² for all X, Y by checking every coefficient of the
/// biquadratic defect polynomial on basis quadruples.
VcpCertificate is_vcp(const ExteriorForm& tau, double tol = 1e-9);

/// Two unit vectors whose contraction endomorphisms have different orbit signatures.
struct Witness {
  Vector first;
  Vector second;
  OrbitSignature first_signature;
  OrbitSignature second_signature;
};

enum class GvcpMode { Deterministic, Sampled };

std::string to_string(GvcpMode m);
GvcpMode parse_mode(const std::string& s);

struct GvcpOptions {
  /// Unset: deterministic for n <= 8, sampled above.
  std::optional<GvcpMode> mode;
  int samples = 256;
  std::uint64_t seed = 0;
  double cluster_tol = kDefaultClusterTol;
  /// Absolute bound on trace-identity coefficients after scaling τ to unit blade norm.
  double identity_tol = 1e-9;
};

struct GvcpResult {
  /// The common signature of τ_X over unit X, when it exists.
  std::optional<OrbitSignature> signature;
  std::optional<Witness> witness;
  GvcpMode mode;
  /// Deterministic: max trace-identity residual; sampled: max signature deviation.
  double residual = 0.0;
  std::vector<std::string> diagnostics;
};

/// Throws FormError for the zero form or a degree other than 3.
GvcpResult is_gvcp(const ExteriorForm& tau, const GvcpOptions& options = {});

struct ClassificationReport {
  Verdict verdict = Verdict::Zero;
  /// |λ|; meaningful for VOL3, G2 and SU3.
  double scale = 0.0;
  std::optional<OrbitSignature> signature;
  std::optional<Witness> witness;
  std::vector<std::string> diagnostics;
};

struct ClassifyOptions {
  GvcpOptions gvcp;
  /// Tolerance for is_vcp on the rescaled (or lifted) form.
  double vcp_tol = 1e-8;
};

ClassificationReport classify(const ExteriorForm& tau, const ClassifyOptions& options = {});

}  // namespace gvcp
