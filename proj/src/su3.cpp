#include "gvcp/su3.hpp"

#include "gvcp/canonical.hpp"
#include "gvcp/lifting.hpp"

#include <algorithm>
#include <cmath>

namespace gvcp {

namespace {

double sup(const ExteriorForm& f) {
  double m = 0.0;
  for (const auto& [b, c] : f.terms()) m = std::max(m, std::abs(c));
  return m;
}

void require_frame_dim(const Su3Frame& frame, const Vector& x, const char* op) {
  if (frame.j.dim() != 6 || x.size() != 6) throw FormError(std::string(op) + ": expected R^6");
}

}  // namespace

Su3Frame standard_frame() {
  return {omega0(), psi_plus(), psi_minus(), two_form_to_endo(omega0())};
}

Su3Frame frame_from_form(const ExteriorForm& sigma) {
  const HermitianCandidate f = f_two_form(sigma);
  const double scale = hermitian_scale(sigma);
  const ExteriorForm unit = scale == 1.0 ? sigma : sigma * (1.0 / scale);
  return {endo_to_two_form(f.endo), unit, hodge(unit), f.endo};
}

double FrameResiduals::max() const { return std::max({complex_structure, omega, volume, hodge}); }

FrameResiduals check_frame(const Su3Frame& frame) {
  const int n = frame.j.dim();
  FrameResiduals r{};
  r.complex_structure = (frame.j.matrix() * frame.j.matrix() + Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  r.omega = max_abs_diff(frame.omega, endo_to_two_form(frame.j));
  r.volume = max_abs_diff(0.25 * wedge(frame.psi_plus, gvcp::hodge(frame.psi_plus)), ExteriorForm::volume(n));
  r.hodge = max_abs_diff(frame.psi_minus, gvcp::hodge(frame.psi_plus));
  return r;
}

double IdentityResiduals::max() const { return std::max({action_plus, action_minus, j_plus, j_minus, swap}); }

IdentityResiduals check_identities(const Su3Frame& frame, const Vector& x) {
  require_frame_dim(frame, x, "check_identities");
  const ExteriorForm xf = ExteriorForm::one_form(x);
  const ExteriorForm jxf = ExteriorForm::one_form(frame.j.apply(x));
  const SkewEndo minus_x = two_form_to_endo(interior(x, frame.psi_minus));

  IdentityResiduals r{};
  r.action_plus = sup(endo_action(minus_x, frame.psi_plus) + 2.0 * wedge(xf, frame.omega));
  r.action_minus = sup(endo_action(minus_x, frame.psi_minus) + 2.0 * wedge(jxf, frame.omega));
  r.j_plus = sup(endo_action(frame.j, frame.psi_plus) - 3.0 * frame.psi_minus);
  r.j_minus = sup(endo_action(frame.j, frame.psi_minus) + 3.0 * frame.psi_plus);
  r.swap = sup(interior(x, frame.psi_minus) + interior(frame.j.apply(x), frame.psi_plus));
  return r;
}

ExteriorForm anti_invariant_embed(const Vector& x, const Su3Frame& frame) {
  if (x.size() != frame.psi_minus.dim()) throw FormError("anti_invariant_embed: dimension mismatch");
  return interior(x, frame.psi_minus);
}

}  // namespace gvcp
