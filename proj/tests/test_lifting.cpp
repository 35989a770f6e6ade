#include "gvcp/canonical.hpp"
#include "gvcp/classifier.hpp"
#include "gvcp/lifting.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace gvcp;
using testing::blade;
using testing::form;

TEST_SUITE("lifting") {
  TEST_CASE("hermitian scale") {
    CHECK(hermitian_scale(sigma0()) == 1.0);
    CHECK(hermitian_scale(-3.0 * sigma0()) == doctest::Approx(3.0));
    CHECK_THROWS_AS(hermitian_scale(tau0()), FormError);
  }

  TEST_CASE("kernel volume") {
    // (e35 - e46)∧(e35 - e46)/2 through the alternation oracle.
    const auto beta = oracle::from_library(form(6, 2, {{{3, 5}, 1.0}, {{4, 6}, -1.0}}));
    const auto square = oracle::wedge(beta, 2, beta, 2, 6);
    CHECK(oracle::to_library(square, 6, 4) * 0.5 == blade(6, {3, 4, 5, 6}));
    CHECK(psi(sigma0(), basis(6, 1)) == blade(6, {3, 4, 5, 6}));

    const auto beta3 = oracle::from_library(form(6, 2, {{{1, 5}, -1.0}, {{2, 6}, 1.0}}));
    CHECK(oracle::to_library(oracle::wedge(beta3, 2, beta3, 2, 6), 6, 4) * 0.5 == blade(6, {1, 2, 5, 6}));
    CHECK(psi(sigma0(), basis(6, 3)) == blade(6, {1, 2, 5, 6}));
  }

  TEST_CASE("kernel volume is quadratic in X and has norm |X|^2") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Vector x = random_vector(seed, 6);
      const double t = 0.5 + static_cast<double>(seed);
      CHECK(max_abs_diff(psi(sigma0(), t * x), t * t * psi(sigma0(), x)) < 1e-10);
      CHECK(norm(psi(sigma0(), x)) == doctest::Approx(x.squaredNorm()).epsilon(1e-12));
    }
  }

  TEST_CASE("psi preconditions") {
    CHECK_THROWS_AS(psi(sigma0(), Vector::Zero(6)), FormError);
    CHECK_THROWS_AS(psi(2.0 * sigma0(), basis(6, 1)), FormError);
    CHECK_THROWS_AS(psi(sigma0(), basis(7, 1)), FormError);
  }

  TEST_CASE("F on basis vectors") {
    // *(e1 ∧ e3456) and *(e3 ∧ e1256) through the Levi-Civita oracle.
    const auto h1 = oracle::hodge(oracle::from_library(blade(6, {1, 3, 4, 5, 6})), 5, 6);
    CHECK(oracle::to_library(h1, 6, 1) == blade(6, {2}));
    const auto h3 = oracle::hodge(oracle::from_library(blade(6, {1, 2, 3, 5, 6})), 5, 6);
    CHECK(oracle::to_library(h3, 6, 1) == blade(6, {4}));

    CHECK(f_map(sigma0(), basis(6, 1)) == basis(6, 2));
    CHECK(f_map(sigma0(), basis(6, 3)) == basis(6, 4));
    CHECK(f_map(sigma0(), Vector::Zero(6)) == Vector::Zero(6));
    CHECK_THROWS_AS(f_map(sigma0(), basis(5, 1)), FormError);
  }

  TEST_CASE("F assembles to the standard complex structure") {
    const HermitianCandidate f = f_two_form(sigma0());
    CHECK(endo_to_two_form(f.endo) == omega0());
    CHECK(f.residuals.max() < 1e-12);
  }

  TEST_CASE("F is equivariant under conjugation") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Matrix q = random_orthogonal(seed, 6);
      const HermitianCandidate f = f_two_form(conjugate(sigma0(), q));
      CHECK(f.residuals.max() <= 1e-8);
      // The Hodge star picks up det(Q) under orientation-reversing Q.
      const Matrix expected = q.determinant() * q.transpose() * two_form_to_endo(omega0()).matrix() * q;
      CHECK((f.endo.matrix() - expected).cwiseAbs().maxCoeff() < 1e-10);
    }
  }

  TEST_CASE("F rejects forms that are not generalized cross products") {
    const ExteriorForm split = form(6, 3, {{{1, 2, 3}, 1.0}, {{4, 5, 6}, 1.0}});
    try {
      f_two_form(split);
      FAIL("expected rejection");
    } catch (const HermitianRejected& e) {
      const auto& failed = e.failed();
      CHECK(std::find(failed.begin(), failed.end(), std::string(kSquareIdentityName)) != failed.end());
      CHECK(std::string(e.what()).find("square identity") != std::string::npos);
    }
    CHECK_THROWS_AS(f_two_form(random_form(3, 6, 3)), HermitianRejected);
  }

  TEST_CASE("lift of sigma0 is tau0") {
    const ExteriorForm lifted = lift(sigma0());
    CHECK(lifted == tau0());
    CHECK(max_abs_diff(lifted, tau0()) == 0.0);
    const auto cert = is_vcp(lifted);
    CHECK(cert.holds);
    CHECK(cert.max_residual <= 1e-12);
  }

  TEST_CASE("lift of conjugates and rescalings yields cross products") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const double lambda = 0.5 + 0.25 * static_cast<double>(seed % 5);
      const ExteriorForm sigma = lambda * conjugate(sigma0(), random_orthogonal(seed, 6));
      const ExteriorForm lifted = lift(sigma);
      CHECK(is_vcp(lifted * (1.0 / hermitian_scale(sigma))).holds);
      CHECK(max_abs_diff(restrict_to_complement(lifted, basis(7, 7)), sigma) == 0.0);
    }
  }

  TEST_CASE("lift rejects wrong shapes") {
    CHECK_THROWS_AS(lift(tau0()), FormError);
    CHECK_THROWS_AS(lift(form(6, 3, {{{1, 2, 3}, 1.0}, {{4, 5, 6}, 1.0}})), HermitianRejected);
  }

  TEST_CASE("restriction") {
    CHECK(restrict_to_complement(tau0(), basis(7, 7)) == sigma0());
    CHECK(restrict_to_complement(lift(sigma0()), basis(7, 7)) == sigma0());
    const auto r = classify(restrict_to_complement(tau0(), basis(7, 1)));
    CHECK(r.verdict == Verdict::Su3);
    CHECK(r.scale == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(restrict_to_complement(tau0(), 2.0 * basis(7, 1)), FormError);
    CHECK_THROWS_AS(restrict_to_complement(tau0(), basis(6, 1)), FormError);
  }

  TEST_CASE("restriction drops every component along v") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Vector v = random_vector(seed, 7).normalized();
      const ExteriorForm tau = 1.5 * conjugate(tau0(), random_orthogonal(seed + 40, 7));
      const ExteriorForm sigma = restrict_to_complement(tau, v);
      CHECK(sigma.dim() == 6);
      const auto r = classify(sigma);
      CHECK(r.verdict == Verdict::Su3);
      CHECK(r.scale == doctest::Approx(1.5).epsilon(1e-9));
    }
  }
}

TEST_SUITE("lifting properties") {
  TEST_CASE("F contract on sigma0 and its conjugates") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const ExteriorForm sigma = seed == 0 ? sigma0() : conjugate(sigma0(), random_orthogonal(seed, 6));
      const Matrix f = f_two_form(sigma).endo.matrix();
      for (std::uint64_t s = 0; s < 20; ++s) {
        const Vector x = random_vector(100 * seed + s, 6);
        const double t = -1.5 + 0.3 * static_cast<double>(s);
        const Vector fx = f_map(sigma, x);
        CHECK((f_map(sigma, t * x) - t * fx).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((contraction_endo(sigma, x).apply(fx)).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((f_map(sigma, fx) + x).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((f * x - fx).cwiseAbs().maxCoeff() < 1e-8);
      }
    }
  }

  TEST_CASE("lifted conjugates share the G2 orbit") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const ExteriorForm lifted = lift(conjugate(sigma0(), random_orthogonal(seed, 6)));
      CHECK(is_vcp(lifted).holds);
      const auto r = classify(lifted);
      CHECK(r.verdict == Verdict::G2);
      CHECK(r.scale == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}
