#include "todaslice/invariants.hpp"

#include "todaslice/errors.hpp"

namespace todaslice {

Eigen::VectorXcd char_poly(const Eigen::MatrixXcd& m) {
  // Faddeev-LeVerrier.
  const int n = static_cast<int>(m.rows());
  Eigen::VectorXcd c(n + 1);
  c(0) = 1.0;
  Eigen::MatrixXcd mk = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    mk.diagonal().array() += c(k - 1);
    c(k) = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

InvariantFamily::InvariantFamily(LieAlgebra L) : L_(std::move(L)) {
  if (L_.roots().type() != CartanType::A)
    throw ConfigurationError("invariant generators implemented for type A");
  for (int i = 0; i < L_.rank(); ++i) degrees_.push_back(i + 2);
}

cplx InvariantFamily::value(int i, const AlgVec& x) const {
  if (i < 0 || i >= size()) throw DomainError("invariant index out of range");
  return char_poly(L_.to_matrix(x))(i + 2);
}

Eigen::VectorXcd InvariantFamily::values(const AlgVec& x) const {
  return char_poly(L_.to_matrix(x)).tail(size());
}

AlgVec InvariantFamily::gradient(int i, const AlgVec& x, double step) const {
  return gradient_killing(L_, evaluator(i), x, step);
}

Evaluator InvariantFamily::evaluator(int i) const {
  if (i < 0 || i >= size()) throw DomainError("invariant index out of range");
  return [fam = *this, i](const AlgVec& x) { return fam.value(i, x); };
}

InvariantFamily invariant_generators(const LieAlgebra& L) {
  return InvariantFamily(L);
}

double fd_step(const AlgVec& x, double step) {
  return step * (1.0 + x.coeffs.cwiseAbs().maxCoeff());
}

Eigen::VectorXcd differential(const Evaluator& F, const AlgVec& x,
                              double step) {
  const double h = fd_step(x, step);
  Eigen::VectorXcd out(x.dim());
  AlgVec p = x;
  for (int i = 0; i < x.dim(); ++i) {
    const cplx orig = p[i];
    p[i] = orig + h;
    const cplx fp = F(p);
    p[i] = orig - h;
    const cplx fm = F(p);
    p[i] = orig;
    out(i) = (fp - fm) / (2.0 * h);
  }
  return out;
}

Eigen::MatrixXcd jacobian(const VectorEvaluator& F, const AlgVec& x,
                          double step) {
  const double h = fd_step(x, step);
  AlgVec p = x;
  Eigen::MatrixXcd out;
  for (int i = 0; i < x.dim(); ++i) {
    const cplx orig = p[i];
    p[i] = orig + h;
    const Eigen::VectorXcd fp = F(p);
    p[i] = orig - h;
    const Eigen::VectorXcd fm = F(p);
    p[i] = orig;
    if (i == 0) out.resize(fp.size(), x.dim());
    out.col(i) = (fp - fm) / (2.0 * h);
  }
  return out;
}

AlgVec gradient_killing(const LieAlgebra& L, const Evaluator& F,
                        const AlgVec& x, double step) {
  return L.killing_dual(differential(F, x, step));
}

std::vector<AlgVec> gradients_killing(const LieAlgebra& L,
                                      const VectorEvaluator& F,
                                      const AlgVec& x, double step) {
  const Eigen::MatrixXcd jac = jacobian(F, x, step);
  std::vector<AlgVec> out;
  for (int k = 0; k < jac.rows(); ++k)
    out.push_back(L.killing_dual(jac.row(k).transpose()));
  return out;
}

}  // namespace todaslice
