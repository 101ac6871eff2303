#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include <unsupported/Eigen/MatrixFunctions>

#include "test_helpers.hpp"
#include "todaslice/errors.hpp"
#include "todaslice/sampling.hpp"
#include "todaslice/slodowy.hpp"

using namespace todaslice;
using testing_helpers::sl;

namespace {

const Slice& slice(int r) {
  static std::map<int, Slice> cache;
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, Slice(InvariantFamily(sl(r)))).first;
  return it->second;
}

AlgVec random_xi_plus_b(const Slice& S, Rng& rng) {
  const LieAlgebra& L = S.algebra();
  return S.triple().xi + L.project_b(random_algvec(L, rng));
}

}  // namespace

TEST(Slodowy, PrincipalTripleRelations) {
  for (int r = 1; r <= 5; ++r) {
    const LieAlgebra L = sl(r);
    const PrincipalTriple T = principal_triple(L);
    EXPECT_LT(L.norm(L.bracket(T.h, T.xi) - 2.0 * T.xi), 1e-12);
    EXPECT_LT(L.norm(L.bracket(T.h, T.eta) + 2.0 * T.eta), 1e-12);
    EXPECT_LT(L.norm(L.bracket(T.xi, T.eta) - T.h), 1e-12);
    // xi is principal nilpotent: xi^{n-1} != 0 and xi^n = 0.
    const Eigen::MatrixXcd X = L.to_matrix(T.xi);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(L.n(), L.n());
    for (int k = 0; k < r; ++k) p = p * X;
    EXPECT_GT(p.norm(), 1e-12);
    EXPECT_LT((p * X).norm(), 1e-15);
  }
  const LieAlgebra L1 = sl(1);
  const PrincipalTriple T1 = principal_triple(L1);
  EXPECT_LT(std::abs(T1.c(0) + 4.0), 1e-14);
  EXPECT_LT(L1.norm(T1.eta - 4.0 * L1.e(0)), 1e-14);
}

TEST(Slodowy, SliceBasisSpansCentralizerOfEta) {
  for (int r = 1; r <= 4; ++r) {
    const Slice& S = slice(r);
    const LieAlgebra& L = S.algebra();
    ASSERT_EQ(static_cast<int>(S.basis().size()), r);
    Eigen::MatrixXcd B(L.dim(), r);
    for (int k = 0; k < r; ++k) {
      B.col(k) = S.basis()[k].coeffs;
      EXPECT_LT(L.norm(L.bracket(S.triple().eta, S.basis()[k])), 1e-12);
      // Heights are the exponents 1..r.
      EXPECT_EQ(S.basis_heights()[k], k + 1);
    }
    EXPECT_TRUE((B.adjoint() * B).isIdentity(1e-12));
    EXPECT_EQ(static_cast<int>(L.centralizer_basis(S.triple().eta).size()), r);
  }
}

TEST(Slodowy, MembershipAndRegularity) {
  for (int r = 1; r <= 3; ++r) {
    const Slice& S = slice(r);
    const LieAlgebra& L = S.algebra();
    Rng rng(r);
    for (int s = 0; s < 5; ++s) {
      const SregPoint p = random_sreg(S, rng);
      const AlgVec x = S.embed(p);
      EXPECT_LT(S.membership_residual(x), 1e-14);
      EXPECT_LT((S.coords(x).m - p.m).norm(), 1e-13);
      EXPECT_TRUE(L.is_regular(x));
    }
    EXPECT_THROW(S.coords(random_algvec(L, rng)), DomainError);
  }
}

TEST(Slodowy, A1KostantClosedForm) {
  // Ad_{exp(k e)}(xi + m e) = xi + k h + (m - k^2 / 4) e.
  const Slice& S = slice(1);
  const LieAlgebra& L = S.algebra();
  Rng rng(5);
  for (int s = 0; s < 5; ++s) {
    const cplx z = rng.complex_gaussian(), u = rng.complex_gaussian();
    const AlgVec w = S.triple().xi + z * L.h(0) + u * L.e(0);
    const KostantSplit k = S.graded_kostant_inverse(w);
    EXPECT_LT(L.norm(k.y - z * L.e(0)), 1e-13 * (1 + std::abs(z)));
    EXPECT_LT(std::abs(k.s.m(0) - (u + z * z / 4.0)), 1e-13 * (1 + std::abs(u + z * z)));
    EXPECT_LT(L.norm(S.gamma(z * L.h(0)) + z * L.e(0)), 1e-9 * (1 + std::abs(z)));
  }
}

TEST(Slodowy, KostantForwardMatchesMatrixExponential) {
  const Slice& S = slice(3);
  const LieAlgebra& L = S.algebra();
  Rng rng(6);
  for (int s = 0; s < 5; ++s) {
    const AlgVec y = random_u(L, rng);
    const SregPoint p = random_sreg(S, rng);
    const Eigen::MatrixXcd E = L.to_matrix(y).exp();
    const Eigen::MatrixXcd want = E * L.to_matrix(S.embed(p)) * E.inverse();
    EXPECT_LT((L.to_matrix(S.kostant_forward(y, p)) - want).norm(), 1e-11 * (1 + want.norm()));
  }
}

TEST(Slodowy, KostantRoundTrips) {
  for (int r = 1; r <= 3; ++r) {
    const Slice& S = slice(r);
    const LieAlgebra& L = S.algebra();
    const InvariantFamily& fam = S.invariants();
    Rng rng(70 + r);
    for (int s = 0; s < 10; ++s) {
      const AlgVec w = random_xi_plus_b(S, rng);
      const KostantSplit k = S.graded_kostant_inverse(w);
      EXPECT_LT(L.norm(S.kostant_forward(k.y, k.s) - w), 1e-10 * (1 + L.norm(w)));
      EXPECT_LT(L.norm(k.y - L.project_u(k.y)), 1e-14);
      // Invariants are constant along U-orbits.
      const Eigen::VectorXcd a = fam.values(w), b = fam.values(S.embed(k.s));
      EXPECT_LT((a - b).norm(), 1e-9 * (1 + a.norm()));

      const AlgVec y = random_u(L, rng);
      const SregPoint p = random_sreg(S, rng);
      const KostantSplit back = S.graded_kostant_inverse(S.kostant_forward(y, p));
      EXPECT_LT(L.norm(back.y - y), 1e-9 * (1 + L.norm(y)));
      EXPECT_LT((back.s.m - p.m).norm(), 1e-9 * (1 + p.m.norm()));
    }
    EXPECT_THROW(S.graded_kostant_inverse(random_algvec(L, rng)), DomainError);
  }
}

TEST(Slodowy, GammaAgreesWithGradedSolver) {
  for (int r = 1; r <= 3; ++r) {
    const Slice& S = slice(r);
    const LieAlgebra& L = S.algebra();
    Rng rng(r);
    const AlgVec z = random_cartan(L, rng);
    const AlgVec g = S.gamma(z);
    const KostantSplit k = S.graded_kostant_inverse(S.triple().xi + z);
    EXPECT_LT(L.norm(g + k.y), 1e-8 * (1 + L.norm(g)));
    // Ad_{exp(gamma)}(xi + z) lies on the slice.
    const AlgVec moved = adjoint(L, exp_nilpotent(L, g), S.triple().xi + z);
    EXPECT_LT(S.membership_residual(moved), 1e-9);
    EXPECT_THROW(S.gamma(L.e(0)), DomainError);
  }
}

TEST(Slodowy, KappaEmbedding) {
  for (int r = 1; r <= 2; ++r) {
    const Slice& S = slice(r);
    const LieAlgebra& L = S.algebra();
    Rng rng(11 * r);
    for (int s = 0; s < 5; ++s) {
      const TodaPoint v = random_toda_point(L, rng);
      const KappaImage k = S.kappa(v);
      EXPECT_TRUE(is_in_borel(k.g));
      EXPECT_LT(L.norm(S.kappa_inverse(k) - S.toda().embed(v)), 1e-9 * (1 + L.norm(S.toda().embed(v))));
      EXPECT_LT((char_of(L, split_borel(L, k.g).t).values.cwiseProduct(v.c) -
                 Eigen::VectorXcd::Ones(r)).norm(), 1e-9);
      EXPECT_TRUE(S.embedding_check(v, 1e-8));
    }
    const TodaPoint v = random_toda_point(L, rng);
    TodaPoint off = v;
    off.c(0) = 0.0;
    EXPECT_THROW(S.kappa(off), DomainError);
  }
}

TEST(Slodowy, KappaPullsBackOmega) {
  for (int r = 1; r <= 2; ++r) {
    const Slice& S = slice(r);
    Rng rng(3 + r);
    const TodaPoint v = random_toda_point(S.algebra(), rng);
    const PullbackReport fine = S.kappa_pullback(v, 1e-5);
    EXPECT_LT(fine.relative(), 1e-4);
    // Second-order convergence in the finite-difference step.
    const double e1 = S.kappa_pullback(v, 2e-2).relative();
    const double e2 = S.kappa_pullback(v, 1e-2).relative();
    const double order = std::log2(e1 / e2);
    EXPECT_GT(order, 1.7);
    EXPECT_LT(order, 2.3);
  }
}

TEST(Slodowy, BStabilizerIsTrivial) {
  for (int r = 1; r <= 3; ++r) {
    const Slice& S = slice(r);
    Rng rng(r);
    for (int s = 0; s < 5; ++s) EXPECT_TRUE(S.b_stabilizer_check(random_sreg(S, rng)));
    EXPECT_TRUE(S.b_stabilizer_check(SregPoint{Eigen::VectorXcd::Zero(r)}));
  }
}
