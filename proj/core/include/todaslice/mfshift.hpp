#pragma once

#include <cstdint>
#include <vector>

#include "todaslice/invariants.hpp"

namespace todaslice {

// Coefficients (f^a_{i0}(x), ..., f^a_{i,d-1}(x), f_i(a)) of
// lambda -> f_i(x + lambda a), by sampling on scaled roots of unity.
Eigen::VectorXcd mf_expand(const InvariantFamily& fam, const AlgVec& a, int i,
                           const AlgVec& x);

struct MemberInfo {
  int i = 0;       // invariant index (0-based)
  int j = 0;       // power of lambda
  int degree = 0;  // d_i - j
};

// The l = dim b polynomials f^a_{ij}, j < d_i, in a fixed order: the r base
// invariants (i, 0) for i ascending, then for each i ascending the members
// (i, 1), ..., (i, d_i - 1).
class ShiftFamily {
 public:
  ShiftFamily(InvariantFamily fam, AlgVec a);

  const InvariantFamily& invariants() const { return fam_; }
  const LieAlgebra& algebra() const { return fam_.algebra(); }
  const AlgVec& shift() const { return a_; }
  int size() const { return static_cast<int>(members_.size()); }
  const MemberInfo& member(int k) const { return members_.at(k); }
  const std::vector<MemberInfo>& members() const { return members_; }
  // Position of (i, j) in the family.
  int index_of(int i, int j) const;
  // f_i(a) for each i.
  const Eigen::VectorXcd& leading() const { return leading_; }

  cplx value(int k, const AlgVec& x) const;
  Eigen::VectorXcd values(const AlgVec& x) const;
  Evaluator evaluator(int k) const;
  VectorEvaluator vector_evaluator() const;
  std::vector<AlgVec> gradients(const AlgVec& x, double step = 1e-5) const;

  // r x l matrix with entry 1 when member j comes from invariant i.
  Eigen::MatrixXi coefficient_matrix() const;

 private:
  InvariantFamily fam_;
  AlgVec a_;
  std::vector<MemberInfo> members_;
  Eigen::VectorXcd leading_;
};

ShiftFamily mf_family(const InvariantFamily& fam, const AlgVec& a);

// zeta = -sum_{alpha simple} e_alpha.
AlgVec zeta(const LieAlgebra& L);

// {F, G}(x) = <x, [grad F(x), grad G(x)]>.
cplx lie_poisson_bracket(const LieAlgebra& L, const Evaluator& F,
                         const Evaluator& G, const AlgVec& x,
                         double step = 1e-5);
cplx lie_poisson_bracket(const LieAlgebra& L, const AlgVec& grad_f,
                         const AlgVec& grad_g, const AlgVec& x);
// |{F,G}(x)| / (|grad F| |grad G| |x| + eps).
double normalized_bracket(const LieAlgebra& L, const AlgVec& grad_f,
                          const AlgVec& grad_g, const AlgVec& x);

struct CommutationReport {
  double max_normalized = 0.0;
  int samples = 0;
  int pairs = 0;
  bool pass = false;
};

CommutationReport check_commutation(const InvariantFamily& fam,
                                    const AlgVec& a, int n_samples,
                                    double tol, std::uint64_t seed);

// Numerical rank of the gradient matrix {grad f^a_k(x)}.  Nonzero rows are
// scaled to unit length first; tol is the relative singular-value cutoff.
int independence_rank(const InvariantFamily& fam, const AlgVec& a,
                      const AlgVec& x, double tol = 1e-8);

// max_i |f_i(x + zeta) - sum_j f^zeta_{ij}(x)| / (1 + |f_i(x + zeta)|).
double decomposition_residual(const InvariantFamily& fam, const AlgVec& x);
bool decomposition_identity_check(const InvariantFamily& fam, const AlgVec& x,
                                  double tol = 1e-9);

}  // namespace todaslice
