#include <gtest/gtest.h>

#include "test_helpers.hpp"
#include "todaslice/errors.hpp"
#include "todaslice/sampling.hpp"
#include "todaslice/toda.hpp"

using namespace todaslice;
using testing_helpers::sl;

namespace {

TodaPoint point(cplx a, cplx c) {
  TodaPoint p{Eigen::VectorXcd(1), Eigen::VectorXcd(1)};
  p.a(0) = a;
  p.c(0) = c;
  return p;
}

OrbitIndex index_of(std::vector<bool> S, std::vector<cplx> z) {
  OrbitIndex idx{std::move(S), Eigen::VectorXcd(static_cast<int>(z.size()))};
  for (std::size_t k = 0; k < z.size(); ++k) idx.z(static_cast<int>(k)) = z[k];
  return idx;
}

}  // namespace

TEST(Toda, A1HamiltonianClosedForm) {
  const LieAlgebra L = sl(1);
  const TodaSystem toda{InvariantFamily(L)};
  Rng rng(1);
  for (int s = 0; s < 5; ++s) {
    const cplx a = rng.complex_gaussian(), c = rng.complex_gaussian();
    const cplx want = -a * a / 16.0 + c / 4.0;
    EXPECT_LT(std::abs(toda.sigma(0, point(a, c)) - want), 1e-13 * (1 + std::abs(want)));
  }
}

TEST(Toda, A1BorelActionClosedForm) {
  // b = t exp(y e_alpha): (a, c) -> (a + c y, c / alpha(t)).
  const LieAlgebra L = sl(1);
  Rng rng(2);
  for (int s = 0; s < 5; ++s) {
    const cplx a = rng.complex_gaussian(), c = rng.complex_gaussian(),
               y = rng.complex_gaussian(), q = rng.complex_annulus(0.5, 2.0);
    BorelElt b{TorusChar{Eigen::VectorXcd::Constant(1, q)}, L.e(0) * y};
    const TodaPoint out = toda_coords(L, b_act(L, b, embed(L, point(a, c))));
    EXPECT_LT(std::abs(out.a(0) - (a + c * y)), 1e-12 * (1 + std::abs(a + c * y)));
    EXPECT_LT(std::abs(out.c(0) - c / q), 1e-12 * (1 + std::abs(c / q)));
  }
}

TEST(Toda, BorelActionIsAnAction) {
  for (int r = 1; r <= 4; ++r) {
    const LieAlgebra L = sl(r);
    Rng rng(10 + r);
    const AlgVec v = embed(L, random_toda_point(L, rng));
    const GrpElt b1 = to_group(L, random_borel(L, rng));
    const GrpElt b2 = to_group(L, random_borel(L, rng));
    const AlgVec lhs = b_act(L, b1, b_act(L, b2, v));
    const AlgVec rhs = b_act(L, b1 * b2, v);
    EXPECT_LT(L.norm(lhs - rhs), 1e-10 * (1 + L.norm(lhs)));
    EXPECT_TRUE(in_vtoda(L, lhs));
    EXPECT_THROW(b_act(L, b1, random_algvec(L, rng)), DomainError);
  }
}

TEST(Toda, OrbitIndexIsInvariantAndLabelsCanonicalPoints) {
  for (int r = 1; r <= 4; ++r) {
    const LieAlgebra L = sl(r);
    Rng rng(20 + r);
    for (int s = 0; s < 20; ++s) {
      OrbitIndex idx{std::vector<bool>(r), Eigen::VectorXcd::Zero(r)};
      for (int k = 0; k < r; ++k) {
        idx.S[k] = rng.coin();
        if (!idx.S[k]) idx.z(k) = rng.complex_gaussian();
      }
      const AlgVec p = canonical_point(L, idx);
      EXPECT_TRUE(same_index(orbit_index(L, p), idx));
      const AlgVec q = b_act(L, random_borel(L, rng), p);
      EXPECT_TRUE(same_index(orbit_index(L, q), idx)) << idx.to_string();
      // Orbit dimension is twice the support size.
      EXPECT_EQ(action_rank(L, q), 2 * idx.support_size());
      // The witness maps the canonical point onto q.
      const BorelElt w = surjectivity_witness(L, q);
      EXPECT_LT(L.norm(b_act(L, w, p) - q), 1e-10 * (1 + L.norm(q)));
    }
  }
}

TEST(Toda, ClosureOrderExamples) {
  const auto full = index_of({true, true}, {0.0, 0.0});
  const auto left = index_of({true, false}, {0.0, 2.0});
  const auto none_a = index_of({false, false}, {1.0, 2.0});
  const auto none_b = index_of({false, false}, {1.0, 3.0});
  EXPECT_TRUE(closure_leq(left, full));
  EXPECT_TRUE(closure_leq(none_a, full));
  EXPECT_TRUE(closure_leq(none_a, left));
  EXPECT_FALSE(closure_leq(none_b, left));  // z differs off the support
  EXPECT_FALSE(closure_leq(full, left));
  EXPECT_FALSE(closure_leq(none_a, none_b));
  EXPECT_TRUE(closure_leq(none_b, none_b));
  EXPECT_TRUE(full.full());
  EXPECT_EQ(left.support_size(), 1);
}

TEST(Toda, DegenerationCurvesRealizeTheOrder) {
  for (int r = 1; r <= 3; ++r) {
    const LieAlgebra L = sl(r);
    Rng rng(r);
    const std::vector<OrbitIndex> idx = sample_index_set(L, rng);
    const Eigen::VectorXcd drift = Eigen::VectorXcd::Constant(r, cplx(0.3, 0.1));
    for (const OrbitIndex& src : idx)
      for (const OrbitIndex& tgt : idx) {
        if (!closure_leq(tgt, src)) continue;
        const AlgVec on = degeneration_curve(L, src, tgt, 0.1, drift);
        const AlgVec limit = degeneration_curve(L, src, tgt, 0.0, drift);
        EXPECT_TRUE(same_index(orbit_index(L, on), src));
        EXPECT_TRUE(same_index(orbit_index(L, limit), tgt));
      }
    const PosetReport rep = closure_poset_suite(L, 5);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.axiom_failures, 0);
    EXPECT_EQ(rep.degeneration_failures, 0);
  }
}

TEST(Toda, BijectivitySuite) {
  for (int r = 1; r <= 3; ++r) {
    const BijectivityReport rep = orbit_action_bijectivity_suite(sl(r), 9, 30);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.trials, 30);
  }
}

TEST(Toda, SymplecticFormAndHamiltonianFields) {
  for (int r = 1; r <= 3; ++r) {
    const LieAlgebra L = sl(r);
    const TodaSystem toda{InvariantFamily(L)};
    Rng rng(40 + r);
    const TodaPoint v = random_toda_point(L, rng);
    const Eigen::MatrixXcd w = toda.omega_matrix(v);
    EXPECT_LT((w + w.transpose()).norm(), 1e-10 * (1 + w.norm()));
    EXPECT_EQ(numerical_rank(w, 1e-10), 2 * r);
    // The sigma_j are in involution: d sigma_j (X_i) = 0.
    for (int i = 0; i < r; ++i) {
      const Eigen::VectorXcd X = toda.hamiltonian_vf(i, v);
      for (int j = 0; j < r; ++j) {
        const Eigen::VectorXcd ds = toda.dsigma(j, v);
        EXPECT_LT(std::abs(ds.cwiseProduct(X).sum()), 1e-6 * (1 + ds.norm() * X.norm()));
      }
      EXPECT_GT(X.norm(), 1e-8);
    }
    // Tangent lifts reproduce the direction under the action.
    const Eigen::MatrixXcd K = toda.lift_kernel(v);
    EXPECT_EQ(K.rows(), static_cast<Eigen::Index>(L.b_indices().size()));
    EXPECT_EQ(K.cols(), static_cast<Eigen::Index>(L.b_indices().size()) - 2 * r);
    for (int k = 0; k < 2 * r; ++k) {
      const Eigen::VectorXcd x = toda.lift_tangent(v, toda.direction(k));
      const AlgVec xb = toda.from_b_coords(x);
      const AlgVec moved = L.project_bminus(L.bracket(toda.embed(v), xb));
      EXPECT_LT(L.norm(moved - toda.direction(k)), 1e-9);
    }
  }
}

TEST(Toda, FlowConservesAndStaysInOrbit) {
  const LieAlgebra L = sl(2);
  const TodaSystem toda{InvariantFamily(L)};
  Rng rng(3);
  const TodaPoint v0 = random_real_toda_point(L, rng);
  for (int i = 0; i < 2; ++i) {
    const Trajectory tr = toda.flow(i, v0, 1.0, 400);
    ASSERT_FALSE(tr.aborted);
    EXPECT_EQ(tr.t.size(), 401u);
    EXPECT_LT(tr.max_relative_drift, 1e-6);
    for (const TodaPoint& p : tr.points) EXPECT_TRUE(toda.in_orbit(p));
  }
  EXPECT_THROW(toda.flow(0, v0, 1.0, 0), ConfigurationError);
  TodaPoint bad = v0;
  bad.c(0) = 0.0;
  EXPECT_THROW(toda.flow(0, bad, 1.0, 10), DomainError);
}

TEST(Toda, PointVectorRoundTrip) {
  const LieAlgebra L = sl(3);
  Rng rng(4);
  const TodaPoint p = random_toda_point(L, rng);
  const TodaPoint q = TodaPoint::from_vector(p.to_vector());
  EXPECT_EQ(p.a, q.a);
  EXPECT_EQ(p.c, q.c);
  const TodaPoint back = toda_coords(L, embed(L, p));
  EXPECT_EQ(back.a, p.a);
  EXPECT_EQ(back.c, p.c);
}
