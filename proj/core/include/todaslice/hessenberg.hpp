#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "todaslice/slodowy.hpp"

namespace todaslice {

// Representative (g, x), x in H_0 = b + sum_{alpha simple} g_{-alpha}, of a
// point of G x_B H_0.  (g, x) ~ (g b^{-1}, Ad_b x).
struct HessPoint {
  GrpElt g;
  AlgVec x;
};

struct RegularFiberReport {
  bool regular_input = false;
  int scan_samples = 0;
  int scan_regular = 0;
  double max_fiber_stay = 0.0;
  int distinct_failures = 0;
  int fiber_rank = 0;
  double max_isotropy = 0.0;
  bool pass = false;
};

struct StrataReport {
  int samples = 0;
  int gauge_failures = 0;
  int translation_failures = 0;
  int leaf_failures = 0;        // open leaf <=> full support
  int dim_failures = 0;         // stratum_dim vs numerical rank
  int maximality_failures = 0;  // max dim only at (Pi, 0), value dim + r
  int monotonicity_failures = 0;
  int closure_failures = 0;     // degeneration curves in X(H_0)
  int pairs = 0;
  bool pass = false;
};

class Hessenberg {
 public:
  explicit Hessenberg(InvariantFamily fam);

  const Slice& slice() const { return slice_; }
  const LieAlgebra& algebra() const { return slice_.algebra(); }

  bool h0_contains(const AlgVec& x, double tol = 1e-10) const;
  bool h0x_contains(const AlgVec& x, double tol = 1e-9) const;
  // Orthogonal projection onto H_0 in basis coordinates.
  AlgVec project_h0(const AlgVec& x) const;

  bool points_equal(const HessPoint& p, const HessPoint& q,
                    double tol = 1e-9) const;
  // (g b^{-1}, Ad_b x).
  HessPoint gauge(const HessPoint& p, const GrpElt& b) const;
  // (h g, x).
  HessPoint translate(const GrpElt& h, const HessPoint& p) const;
  AlgVec mu0(const HessPoint& p) const;

  bool in_fiber(const HessPoint& p, const AlgVec& x0, double tol = 1e-9) const;
  bool flag_membership(const GrpElt& g, const AlgVec& x0,
                       double tol = 1e-9) const;
  // (g, projection of Ad_{g^{-1}} x0 onto H_0).
  HessPoint fiber_candidate(const GrpElt& g, const AlgVec& x0) const;

  OrbitIndex stratum(const HessPoint& p, double tol = 1e-9) const;
  // dim G - r + 2|S|.
  int stratum_dim(const OrbitIndex& idx) const;
  // Rank of the differential of (g, x) -> [(g, x)] along the stratum through
  // p, modulo the gauge directions.
  int stratum_dim_numeric(const HessPoint& p, double tol = 1e-8) const;

  HessPoint varphi(const GrpElt& g, const SregPoint& s) const;
  KappaImage leaf_surjectivity_witness(const HessPoint& p) const;
  cplx tilde_tau(int k, const HessPoint& p) const;

  // witness, when given, is a point (g, xi + m) of the fiber over x.
  RegularFiberReport regular_fiber_suite(
      const AlgVec& x, const std::optional<HessPoint>& witness,
      std::uint64_t seed, int n) const;
  StrataReport strata_closure_suite(std::uint64_t seed, int n) const;

 private:
  Eigen::MatrixXcd gauge_directions(const AlgVec& x) const;

  Slice slice_;
};

}  // namespace todaslice
