#pragma once

#include <vector>

#include "todaslice/group.hpp"
#include "todaslice/mfshift.hpp"
#include "todaslice/toda.hpp"

namespace todaslice {

// xi = sum e_{-alpha}, h = sum c_alpha h_alpha with alpha(h) = -2 for all
// simple alpha, eta = -sum c_alpha e_alpha.
struct PrincipalTriple {
  AlgVec xi;
  AlgVec h;
  AlgVec eta;
  Eigen::VectorXcd c;
};

PrincipalTriple principal_triple(const LieAlgebra& L);

// Orthonormal basis of ker(ad_eta), one height space at a time, ordered by
// height.  Each vector has its largest coefficient real and positive.
std::vector<AlgVec> sreg_basis(const LieAlgebra& L, const PrincipalTriple& T);

// Point xi + sum m_k basis_k of the slice.
struct SregPoint {
  Eigen::VectorXcd m;
};

struct KostantSplit {
  AlgVec y;  // in u
  SregPoint s;
};

struct KappaImage {
  GrpElt g;
  SregPoint s;
};

// <y1, z2> - <y2, z1> + <x, [y1, y2]> on left-trivialized T(G x g).
cplx omega_big(const LieAlgebra& L, const AlgVec& x, const AlgVec& y1,
               const AlgVec& z1, const AlgVec& y2, const AlgVec& z2);

struct PullbackReport {
  Eigen::MatrixXcd pulled;  // Omega(d kappa u_k, d kappa u_l)
  Eigen::MatrixXcd toda;    // omega_Toda(u_k, u_l)
  double max_diff = 0.0;
  double scale = 0.0;       // 1 + max |omega_Toda|
  double relative() const { return max_diff / scale; }
};

struct EmbeddingReport {
  double sigma_residual = 0.0;      // max_i |sigma_i - sum_j c_ij tau_j|
  double inclusion_residual = 0.0;  // |Ad_nu(s) - v| / (1 + |v|)
};

class Slice {
 public:
  explicit Slice(InvariantFamily fam);

  const LieAlgebra& algebra() const { return fam_.algebra(); }
  const InvariantFamily& invariants() const { return fam_; }
  const ShiftFamily& shift_family() const { return shift_; }
  const TodaSystem& toda() const { return toda_; }
  const PrincipalTriple& triple() const { return triple_; }
  const std::vector<AlgVec>& basis() const { return basis_; }
  const std::vector<int>& basis_heights() const { return heights_; }
  int rank() const { return algebra().rank(); }

  AlgVec embed(const SregPoint& s) const;
  // Throws DomainError when x is not in S_reg.
  SregPoint coords(const AlgVec& x, double tol = 1e-9) const;
  // |[eta, x - xi]| and the distance of x - xi from ker(ad_eta), relative.
  double membership_residual(const AlgVec& x) const;

  // (y, s) with exp(ad_y)(s) = w, for w in xi + b.
  KostantSplit graded_kostant_inverse(const AlgVec& w) const;
  // Same equation solved by Newton iteration on (y, m) from a seed.
  KostantSplit kostant_inverse_newton(const AlgVec& w, const AlgVec& y0,
                                      const SregPoint& s0) const;
  AlgVec kostant_forward(const AlgVec& y, const SregPoint& s) const;

  // y in u with exp(ad_y)(xi + z) in S_reg, for z in t.
  AlgVec gamma(const AlgVec& z) const;
  TorusChar theta(const TodaPoint& v) const;
  GrpElt nu(const TodaPoint& v) const;
  KappaImage kappa(const TodaPoint& v) const;
  // Ad_g(s).
  AlgVec kappa_inverse(const KappaImage& k) const;

  PullbackReport kappa_pullback(const TodaPoint& v, double fd_step) const;
  bool kappa_pullback_check(const TodaPoint& v, double fd_step,
                            double tol) const;

  // f^zeta_k(Ad_g(xi + m)); k is 0-based in the shift-family order.
  cplx tau(int k, const GrpElt& g, const SregPoint& s) const;
  Eigen::VectorXcd taus(const GrpElt& g, const SregPoint& s) const;
  EmbeddingReport embedding_residuals(const TodaPoint& v) const;
  bool embedding_check(const TodaPoint& v, double tol = 1e-8) const;

  // sigma_min(ad_{xi+m} restricted to b) / sigma_max(ad_{xi+m}).
  double b_stabilizer_margin(const SregPoint& s) const;
  bool b_stabilizer_check(const SregPoint& s, double tol = 1e-8) const;

 private:
  InvariantFamily fam_;
  ShiftFamily shift_;
  TodaSystem toda_;
  PrincipalTriple triple_;
  std::vector<AlgVec> basis_;
  std::vector<int> heights_;
  Eigen::MatrixXcd basis_matrix_;  // columns are basis_
};

}  // namespace todaslice
