#pragma once

#include <vector>

#include <Eigen/Dense>

#include "todaslice/liealg.hpp"

namespace todaslice {

// Element of SL_n.  Elements of T/Z, B/Z, G/Z are represented by lifts.
class GrpElt {
 public:
  GrpElt() = default;
  // Throws DomainError unless |det(m) - 1| <= tol.
  static GrpElt from_matrix(Eigen::MatrixXcd m, double tol = 1e-10);
  // Rescales m by a root of det(m) so that det = 1.
  static GrpElt normalized(const Eigen::MatrixXcd& m);
  static GrpElt identity(int n);

  const Eigen::MatrixXcd& mat() const { return m_; }
  int n() const { return static_cast<int>(m_.rows()); }
  GrpElt inverse() const;

  friend GrpElt operator*(const GrpElt& a, const GrpElt& b) {
    GrpElt g;
    g.m_ = a.m_ * b.m_;
    return g;
  }

 private:
  Eigen::MatrixXcd m_;
};

// Values (alpha(t))_{alpha simple} of a torus element.
struct TorusChar {
  Eigen::VectorXcd values;

  static TorusChar trivial(int r) {
    return {Eigen::VectorXcd::Ones(r)};
  }
  TorusChar inverse() const { return {values.cwiseInverse()}; }
  friend TorusChar operator*(const TorusChar& a, const TorusChar& b) {
    return {a.values.cwiseProduct(b.values)};
  }
};

// b = t exp(y) with t in T given by its character and y in u.
struct BorelElt {
  TorusChar torus;
  AlgVec y;
};

GrpElt exp_nilpotent(const LieAlgebra& L, const AlgVec& y);
GrpElt torus_lift(const LieAlgebra& L, const TorusChar& ch);
TorusChar char_of(const LieAlgebra& L, const GrpElt& t);
GrpElt to_group(const LieAlgebra& L, const BorelElt& b);

AlgVec adjoint(const LieAlgebra& L, const GrpElt& g, const AlgVec& x);

// Series logarithm for ||g - I|| < 0.5 (operator 2-norm), traceless part.
AlgVec log_near_identity(const LieAlgebra& L, const GrpElt& g);

bool is_in_borel(const GrpElt& g, double tol = 1e-10);

struct BorelSplit {
  GrpElt t;        // diagonal part
  TorusChar torus;
  AlgVec y;        // g = t exp(y)
};
BorelSplit split_borel(const LieAlgebra& L, const GrpElt& g,
                       double tol = 1e-10);

// The centre: omega^k I for k = 0..n-1.
std::vector<GrpElt> center(int n);
// z g with z central chosen to make the result closest to the identity.
GrpElt nearest_to_identity(const GrpElt& g);

}  // namespace todaslice
