#include <gtest/gtest.h>

#include <map>

#include "test_helpers.hpp"
#include "todaslice/errors.hpp"
#include "todaslice/hessenberg.hpp"
#include "todaslice/sampling.hpp"

using namespace todaslice;
using testing_helpers::sl;

namespace {

const Hessenberg& hess(int r) {
  static std::map<int, Hessenberg> cache;
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, Hessenberg(InvariantFamily(sl(r)))).first;
  return it->second;
}

}  // namespace

TEST(Hessenberg, SubspaceMembership) {
  for (int r = 1; r <= 3; ++r) {
    const Hessenberg& H = hess(r);
    const LieAlgebra& L = H.algebra();
    Rng rng(r);
    const AlgVec x = random_h0x(L, rng);
    EXPECT_TRUE(H.h0_contains(x));
    EXPECT_TRUE(H.h0x_contains(x));
    // Matrix oracle: H_0 is the set of matrices vanishing below the subdiagonal.
    const AlgVec y = random_algvec(L, rng);
    const Eigen::MatrixXcd m = L.to_matrix(y);
    bool below = false;
    for (int i = 0; i < L.n(); ++i)
      for (int j = 0; j + 1 < i; ++j) below = below || std::abs(m(i, j)) > 0;
    EXPECT_EQ(H.h0_contains(y), !below);
    const AlgVec p = H.project_h0(y);
    EXPECT_TRUE(H.h0_contains(p));
    EXPECT_LT(L.norm(H.project_h0(p) - p), 1e-15);
    // Dropping a subdiagonal entry leaves H_0^x.
    AlgVec z = x;
    z[L.root_index(L.roots().negative(0))] = 0.0;
    EXPECT_FALSE(H.h0x_contains(z));
    // Every element of H_0^x is regular.
    for (int s = 0; s < 10; ++s) EXPECT_TRUE(L.is_regular(random_h0x(L, rng)));
  }
}

TEST(Hessenberg, GaugeAndTranslation) {
  for (int r = 1; r <= 3; ++r) {
    const Hessenberg& H = hess(r);
    const LieAlgebra& L = H.algebra();
    Rng rng(10 + r);
    for (int s = 0; s < 5; ++s) {
      OrbitIndex idx{std::vector<bool>(r), Eigen::VectorXcd::Zero(r)};
      for (int k = 0; k < r; ++k) {
        idx.S[k] = rng.coin();
        if (!idx.S[k]) idx.z(k) = rng.complex_gaussian();
      }
      // A point of the stratum: x in b plus minus the canonical point.
      const AlgVec x = random_u(L, rng) - canonical_point(L, idx);
      const HessPoint p{random_group(L, rng), x};
      EXPECT_TRUE(same_index(H.stratum(p), idx));
      const GrpElt b = to_group(L, random_borel(L, rng));
      const HessPoint q = H.gauge(p, b);
      EXPECT_TRUE(H.points_equal(p, q));
      EXPECT_TRUE(same_index(H.stratum(q), idx));
      EXPECT_LT(L.norm(H.mu0(q) - H.mu0(p)), 1e-9 * (1 + L.norm(H.mu0(p))));
      const GrpElt h = random_group(L, rng);
      const HessPoint t = H.translate(h, p);
      EXPECT_TRUE(same_index(H.stratum(t), idx));
      EXPECT_LT(L.norm(H.mu0(t) - adjoint(L, h, H.mu0(p))), 1e-9 * (1 + L.norm(H.mu0(t))));
      EXPECT_EQ(H.stratum_dim(idx), L.dim() - r + 2 * idx.support_size());
      EXPECT_EQ(H.stratum_dim_numeric(p), H.stratum_dim(idx));
    }
    EXPECT_THROW(H.gauge(HessPoint{GrpElt::identity(L.n()), L.zero()},
                         random_group(L, rng)),
                 DomainError);
  }
}

TEST(Hessenberg, OpenLeafParametrization) {
  for (int r = 1; r <= 2; ++r) {
    const Hessenberg& H = hess(r);
    const Slice& S = H.slice();
    const LieAlgebra& L = H.algebra();
    Rng rng(20 + r);
    for (int s = 0; s < 5; ++s) {
      const GrpElt g = random_group(L, rng);
      const SregPoint sp = random_sreg(S, rng);
      const HessPoint p = H.varphi(g, sp);
      EXPECT_TRUE(H.stratum(p).full());
      EXPECT_EQ(H.stratum_dim(H.stratum(p)), L.dim() + r);
      EXPECT_LT(L.norm(H.mu0(p) - adjoint(L, g, S.embed(sp))), 1e-12 * (1 + L.norm(H.mu0(p))));
      const HessPoint q{random_group(L, rng), random_h0x(L, rng)};
      const KappaImage w = H.leaf_surjectivity_witness(q);
      EXPECT_TRUE(H.points_equal(H.varphi(w.g, w.s), q));
      for (int k = 0; k < S.shift_family().size(); ++k) {
        const cplx a = H.tilde_tau(k, p), b = S.tau(k, g, sp);
        EXPECT_LT(std::abs(a - b), 1e-10 * (1 + std::abs(b)));
      }
    }
    const HessPoint small{GrpElt::identity(L.n()), L.cartan(Eigen::VectorXcd::Ones(r))};
    EXPECT_THROW(H.leaf_surjectivity_witness(small), DomainError);
  }
}

TEST(Hessenberg, FibersOverRegularElements) {
  for (int r = 1; r <= 2; ++r) {
    const Hessenberg& H = hess(r);
    const LieAlgebra& L = H.algebra();
    Rng rng(30 + r);
    const HessPoint base = H.varphi(random_group(L, rng), random_sreg(H.slice(), rng));
    const AlgVec x = H.mu0(base);
    EXPECT_TRUE(H.in_fiber(base, x));
    EXPECT_TRUE(H.flag_membership(base.g, x));
    const HessPoint cand = H.fiber_candidate(base.g, x);
    EXPECT_TRUE(H.in_fiber(cand, x));
    const RegularFiberReport rep = H.regular_fiber_suite(x, base, 7, 20);
    EXPECT_TRUE(rep.pass);
    EXPECT_TRUE(rep.regular_input);
    EXPECT_EQ(rep.fiber_rank, r);
    EXPECT_EQ(rep.scan_regular, rep.scan_samples);
    EXPECT_LT(rep.max_isotropy, 1e-9);
  }
}

TEST(Hessenberg, StrataSuite) {
  for (int r = 1; r <= 2; ++r) {
    const StrataReport rep = hess(r).strata_closure_suite(3, 20);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.samples, 20);
  }
}
