#include "todaslice/sampling.hpp"

namespace todaslice {

AlgVec random_algvec(const LieAlgebra& L, Rng& rng, double scale) {
  return AlgVec(scale * rng.complex_gaussian_vector(L.dim()));
}

AlgVec random_u(const LieAlgebra& L, Rng& rng, double scale) {
  AlgVec y = L.zero();
  for (int i : L.u_indices()) y[i] = scale * rng.complex_gaussian();
  return y;
}

AlgVec random_cartan(const LieAlgebra& L, Rng& rng, double scale) {
  return L.cartan(scale * rng.complex_gaussian_vector(L.rank()));
}

GrpElt random_group(const LieAlgebra& L, Rng& rng, double spread) {
  const int n = L.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) += spread * rng.complex_gaussian();
  return GrpElt::normalized(m);
}

BorelElt random_borel(const LieAlgebra& L, Rng& rng, double spread) {
  BorelElt b{TorusChar::trivial(L.rank()), L.zero()};
  for (int k = 0; k < L.rank(); ++k)
    b.torus.values(k) = rng.complex_annulus(0.5, 2.0);
  b.y = random_u(L, rng, spread);
  return b;
}

TodaPoint random_toda_point(const LieAlgebra& L, Rng& rng) {
  TodaPoint p{rng.complex_gaussian_vector(L.rank()),
              Eigen::VectorXcd(L.rank())};
  for (int k = 0; k < L.rank(); ++k) p.c(k) = rng.complex_annulus(0.5, 2.0);
  return p;
}

TodaPoint random_real_toda_point(const LieAlgebra& L, Rng& rng) {
  // h_alpha and e_{-alpha} carry a factor 1/2n as matrices; scale so that
  // matrix entries are of order one.
  const double s = 2.0 * L.n();
  TodaPoint p{Eigen::VectorXcd(L.rank()), Eigen::VectorXcd(L.rank())};
  for (int k = 0; k < L.rank(); ++k) {
    p.a(k) = s * rng.uniform(-1.0, 1.0);
    p.c(k) = s * rng.uniform(0.5, 2.0);
  }
  return p;
}

SregPoint random_sreg(const Slice& S, Rng& rng, double scale) {
  return {scale * rng.complex_gaussian_vector(S.rank())};
}

AlgVec random_h0x(const LieAlgebra& L, Rng& rng) {
  AlgVec x = random_u(L, rng) + random_cartan(L, rng);
  Eigen::VectorXcd c(L.rank());
  for (int k = 0; k < L.rank(); ++k) c(k) = rng.complex_annulus(0.5, 2.0);
  return x + L.simple_negative(c);
}

}  // namespace todaslice
