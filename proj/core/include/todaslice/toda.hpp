#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "todaslice/group.hpp"
#include "todaslice/invariants.hpp"
#include "todaslice/random.hpp"

namespace todaslice {

// B-orbit label in V_Toda = t + sum_{alpha simple} g_{-alpha}: the support S of
// the simple-negative part and the Cartan coefficients z off S (zero on S).
struct OrbitIndex {
  std::vector<bool> S;
  Eigen::VectorXcd z;

  int support_size() const;
  bool full() const;
  std::string to_string() const;
};

bool same_index(const OrbitIndex& p, const OrbitIndex& q, double tol = 1e-9);

// Coordinates (a, c): v = sum a_k h_k + sum c_k e_{-alpha_k}.
struct TodaPoint {
  Eigen::VectorXcd a;
  Eigen::VectorXcd c;

  Eigen::VectorXcd to_vector() const;
  static TodaPoint from_vector(const Eigen::VectorXcd& v);
};

AlgVec embed(const LieAlgebra& L, const TodaPoint& v);
bool in_vtoda(const LieAlgebra& L, const AlgVec& x, double tol = 1e-10);
// Throws DomainError when x is not in V_Toda.
TodaPoint toda_coords(const LieAlgebra& L, const AlgVec& x,
                      double tol = 1e-10);

// b * v = pi_{b_-}(Ad_b v).
AlgVec b_act(const LieAlgebra& L, const BorelElt& b, const AlgVec& v);
AlgVec b_act(const LieAlgebra& L, const GrpElt& b, const AlgVec& v);

OrbitIndex orbit_index(const LieAlgebra& L, const AlgVec& v,
                       double tol = 1e-9);
bool closure_leq(const OrbitIndex& p, const OrbitIndex& q, double tol = 1e-9);
// z + sum_{alpha in S} e_{-alpha}.
AlgVec canonical_point(const LieAlgebra& L, const OrbitIndex& idx);
// b with b * canonical_point(orbit_index(v)) = v.
BorelElt surjectivity_witness(const LieAlgebra& L, const AlgVec& v,
                              double tol = 1e-9);
// Rank of eps -> pi_{b_-}([eps, v]) on b, i.e. the orbit dimension.
int action_rank(const LieAlgebra& L, const AlgVec& v, double tol = 1e-8);

// Curve through O_source whose value at eps = 0 is classified as target
// exactly when closure_leq(target, source): Cartan part z_source off S_source
// and target.z + eps * drift on S_source; e_{-alpha} coefficients 1 on
// S_source and S_target, eps on S_source \ S_target, 0 elsewhere.
AlgVec degeneration_curve(const LieAlgebra& L, const OrbitIndex& source,
                          const OrbitIndex& target, cplx eps,
                          const Eigen::VectorXcd& drift);

// Indices (S, z) for every subset S, with z drawn from a small pool so that
// coincidences (and hence nontrivial order relations) occur.
std::vector<OrbitIndex> sample_index_set(const LieAlgebra& L, Rng& rng,
                                         int per_subset = 2);

struct PosetReport {
  int indices = 0;
  int comparable_pairs = 0;
  int axiom_failures = 0;
  int degeneration_failures = 0;
  bool pass = false;
};
// Reflexivity, antisymmetry, transitivity of closure_leq, and degeneration
// curve classification in V_Toda, over a sampled index set.
PosetReport closure_poset_suite(const LieAlgebra& L, std::uint64_t seed);

struct BijectivityReport {
  int trials = 0;
  int roundtrip_failures = 0;
  int witness_failures = 0;
  int dimension_failures = 0;
  double max_witness_residual = 0.0;
  bool pass = false;
};
BijectivityReport orbit_action_bijectivity_suite(const LieAlgebra& L,
                                                 std::uint64_t seed, int n);

struct Trajectory {
  std::vector<double> t;
  std::vector<TodaPoint> points;
  std::vector<Eigen::VectorXcd> sigmas;
  bool aborted = false;
  // max_j |sigma_j(v(t)) - sigma_j(v0)|, absolute and relative to |sigma_j(v0)|.
  double max_drift = 0.0;
  double max_relative_drift = 0.0;
};

// The Toda lattice on O_Toda with Hamiltonians sigma_i(v) = f_i(v + zeta).
class TodaSystem {
 public:
  explicit TodaSystem(InvariantFamily fam);

  const LieAlgebra& algebra() const { return fam_.algebra(); }
  const InvariantFamily& invariants() const { return fam_; }
  int rank() const { return fam_.size(); }
  const AlgVec& zeta() const { return zeta_; }

  AlgVec embed(const TodaPoint& v) const;
  bool in_orbit(const TodaPoint& v, double tol = 1e-12) const;

  // Tangent vector for coordinate direction k of the (a, c) frame.
  AlgVec direction(int k) const;
  // b-coordinates of the minimum-norm x in b with pi_{b_-}([v, x]) = u.
  Eigen::VectorXcd lift_tangent(const TodaPoint& v, const AlgVec& u) const;
  // Basis (columns, b-coordinates) of the solutions of pi_{b_-}([v, x]) = 0.
  Eigen::MatrixXcd lift_kernel(const TodaPoint& v) const;
  AlgVec from_b_coords(const Eigen::VectorXcd& xb) const;

  cplx omega(const TodaPoint& v, const AlgVec& u1, const AlgVec& u2) const;
  // W(k, l) = omega(direction(k), direction(l)).
  Eigen::MatrixXcd omega_matrix(const TodaPoint& v) const;

  cplx sigma(int i, const TodaPoint& v) const;
  Eigen::VectorXcd sigmas(const TodaPoint& v) const;
  // Differential of sigma_i in the (a, c) coordinates.
  Eigen::VectorXcd dsigma(int i, const TodaPoint& v, double step = 1e-5) const;
  // X with omega(X, u) = d sigma_i(u), as an (a, c) coordinate vector.
  Eigen::VectorXcd hamiltonian_vf(int i, const TodaPoint& v) const;

  Trajectory flow(int i, const TodaPoint& v0, double t_end, int steps) const;

 private:
  Eigen::MatrixXcd lift_matrix(const TodaPoint& v) const;

  InvariantFamily fam_;
  AlgVec zeta_;
};

}  // namespace todaslice
