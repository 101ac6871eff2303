#pragma once

#include <functional>
#include <vector>

#include "todaslice/liealg.hpp"

namespace todaslice {

using Evaluator = std::function<cplx(const AlgVec&)>;
using VectorEvaluator = std::function<Eigen::VectorXcd(const AlgVec&)>;

// Coefficients c_0 = 1, c_1..c_n of det(lambda I - m) = sum c_k lambda^{n-k}.
Eigen::VectorXcd char_poly(const Eigen::MatrixXcd& m);

// Generators f_1..f_r of the invariant polynomials: for sl_n, f_i is the
// coefficient c_{i+1} of the characteristic polynomial, of degree i + 1.
// Indices are 0-based in this API.
class InvariantFamily {
 public:
  explicit InvariantFamily(LieAlgebra L);

  const LieAlgebra& algebra() const { return L_; }
  int size() const { return L_.rank(); }
  int degree(int i) const { return degrees_.at(i); }
  const std::vector<int>& degrees() const { return degrees_; }

  cplx value(int i, const AlgVec& x) const;
  Eigen::VectorXcd values(const AlgVec& x) const;
  AlgVec gradient(int i, const AlgVec& x, double step = 1e-5) const;
  Evaluator evaluator(int i) const;

 private:
  LieAlgebra L_;
  std::vector<int> degrees_;
};

InvariantFamily invariant_generators(const LieAlgebra& L);

// Central-difference step used for the basis direction at x.
double fd_step(const AlgVec& x, double step);

// dF_x in basis directions, by central differences.
Eigen::VectorXcd differential(const Evaluator& F, const AlgVec& x,
                              double step = 1e-5);
// Rows are the differentials of the components of F.
Eigen::MatrixXcd jacobian(const VectorEvaluator& F, const AlgVec& x,
                          double step = 1e-5);

// Killing-dual gradient: dF_x(y) = <grad, y>.
AlgVec gradient_killing(const LieAlgebra& L, const Evaluator& F,
                        const AlgVec& x, double step = 1e-5);
std::vector<AlgVec> gradients_killing(const LieAlgebra& L,
                                      const VectorEvaluator& F,
                                      const AlgVec& x, double step = 1e-5);

}  // namespace todaslice
