#include "todaslice/mfshift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "todaslice/errors.hpp"
#include "todaslice/random.hpp"

namespace todaslice {

Eigen::VectorXcd mf_expand(const InvariantFamily& fam, const AlgVec& a, int i,
                           const AlgVec& x) {
  if (i < 0 || i >= fam.size()) throw DomainError("mf_expand: bad index");
  const LieAlgebra& L = fam.algebra();
  const int d = fam.degree(i);
  const int m = d + 1;
  const double s = (1.0 + L.norm(x)) / (1.0 + L.norm(a));
  const Eigen::MatrixXcd xm = L.to_matrix(x);
  const Eigen::MatrixXcd am = L.to_matrix(a);
  // p(lambda) = sum_j p_j lambda^j; p_j = s^-j / m sum_k p(s w^k) w^{-jk}.
  Eigen::VectorXcd samples(m);
  for (int k = 0; k < m; ++k) {
    const cplx lambda = s * std::polar(1.0, 2.0 * std::numbers::pi * k / m);
    samples(k) = char_poly(xm + lambda * am)(i + 2);
  }
  Eigen::VectorXcd out(m);
  for (int j = 0; j < d; ++j) {
    cplx acc = 0.0;
    for (int k = 0; k < m; ++k)
      acc += samples(k) * std::polar(1.0, -2.0 * std::numbers::pi * j * k / m);
    out(j) = acc / static_cast<double>(m) / std::pow(s, j);
  }
  out(d) = fam.value(i, a);
  return out;
}

ShiftFamily::ShiftFamily(InvariantFamily fam, AlgVec a)
    : fam_(std::move(fam)), a_(std::move(a)) {
  const int r = fam_.size();
  for (int i = 0; i < r; ++i) members_.push_back({i, 0, fam_.degree(i)});
  for (int i = 0; i < r; ++i)
    for (int j = 1; j < fam_.degree(i); ++j)
      members_.push_back({i, j, fam_.degree(i) - j});
  leading_ = fam_.values(a_);
}

int ShiftFamily::index_of(int i, int j) const {
  for (int k = 0; k < size(); ++k)
    if (members_[k].i == i && members_[k].j == j) return k;
  throw DomainError("ShiftFamily: no member with that (i, j)");
}

Eigen::VectorXcd ShiftFamily::values(const AlgVec& x) const {
  std::vector<Eigen::VectorXcd> coeffs;
  for (int i = 0; i < fam_.size(); ++i)
    coeffs.push_back(mf_expand(fam_, a_, i, x));
  Eigen::VectorXcd out(size());
  for (int k = 0; k < size(); ++k)
    out(k) = coeffs[members_[k].i](members_[k].j);
  return out;
}

cplx ShiftFamily::value(int k, const AlgVec& x) const {
  const MemberInfo& m = member(k);
  return mf_expand(fam_, a_, m.i, x)(m.j);
}

Evaluator ShiftFamily::evaluator(int k) const {
  return [self = *this, k](const AlgVec& x) { return self.value(k, x); };
}

VectorEvaluator ShiftFamily::vector_evaluator() const {
  return [self = *this](const AlgVec& x) { return self.values(x); };
}

std::vector<AlgVec> ShiftFamily::gradients(const AlgVec& x,
                                           double step) const {
  return gradients_killing(algebra(), vector_evaluator(), x, step);
}

Eigen::MatrixXi ShiftFamily::coefficient_matrix() const {
  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(fam_.size(), size());
  for (int k = 0; k < size(); ++k) c(members_[k].i, k) = 1;
  return c;
}

ShiftFamily mf_family(const InvariantFamily& fam, const AlgVec& a) {
  return ShiftFamily(fam, a);
}

AlgVec zeta(const LieAlgebra& L) {
  return L.simple_positive(-Eigen::VectorXcd::Ones(L.rank()));
}

cplx lie_poisson_bracket(const LieAlgebra& L, const AlgVec& grad_f,
                         const AlgVec& grad_g, const AlgVec& x) {
  return L.killing(x, L.bracket(grad_f, grad_g));
}

cplx lie_poisson_bracket(const LieAlgebra& L, const Evaluator& F,
                         const Evaluator& G, const AlgVec& x, double step) {
  return lie_poisson_bracket(L, gradient_killing(L, F, x, step),
                             gradient_killing(L, G, x, step), x);
}

double normalized_bracket(const LieAlgebra& L, const AlgVec& grad_f,
                          const AlgVec& grad_g, const AlgVec& x) {
  constexpr double kEps = 1e-300;
  const double denom = L.norm(grad_f) * L.norm(grad_g) * L.norm(x) + kEps;
  return std::abs(lie_poisson_bracket(L, grad_f, grad_g, x)) / denom;
}

CommutationReport check_commutation(const InvariantFamily& fam,
                                    const AlgVec& a, int n_samples,
                                    double tol, std::uint64_t seed) {
  const LieAlgebra& L = fam.algebra();
  const ShiftFamily sf(fam, a);
  CommutationReport rep;
  const Rng root(seed);
  for (int s = 0; s < n_samples; ++s) {
    Rng rng = root.split(static_cast<std::uint64_t>(s));
    const AlgVec x(rng.complex_gaussian_vector(L.dim()));
    const std::vector<AlgVec> grads = sf.gradients(x);
    for (int k = 0; k < sf.size(); ++k)
      for (int m = k + 1; m < sf.size(); ++m) {
        const double v = normalized_bracket(L, grads[k], grads[m], x);
        rep.max_normalized = std::max(rep.max_normalized, v);
        ++rep.pairs;
      }
    ++rep.samples;
  }
  rep.pass = rep.max_normalized <= tol;
  return rep;
}

int independence_rank(const InvariantFamily& fam, const AlgVec& a,
                      const AlgVec& x, double tol) {
  const LieAlgebra& L = fam.algebra();
  const ShiftFamily sf(fam, a);
  const std::vector<AlgVec> grads = sf.gradients(x);
  std::vector<Eigen::VectorXcd> rows;
  for (const AlgVec& g : grads) {
    const double nrm = g.coeffs.norm();
    if (nrm > 1e-12 * (1.0 + L.norm(x))) rows.push_back(g.coeffs / nrm);
  }
  if (rows.empty()) return 0;
  Eigen::MatrixXcd m(static_cast<int>(rows.size()), L.dim());
  for (int k = 0; k < static_cast<int>(rows.size()); ++k)
    m.row(k) = rows[k].transpose();
  return numerical_rank(m, tol);
}

double decomposition_residual(const InvariantFamily& fam, const AlgVec& x) {
  const LieAlgebra& L = fam.algebra();
  const AlgVec z = zeta(L);
  double worst = 0.0;
  for (int i = 0; i < fam.size(); ++i) {
    const Eigen::VectorXcd c = mf_expand(fam, z, i, x);
    const cplx lhs = fam.value(i, x + z);
    const cplx rhs = c.sum();  // includes f_i(zeta) = 0
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
  }
  return worst;
}

bool decomposition_identity_check(const InvariantFamily& fam, const AlgVec& x,
                                  double tol) {
  return decomposition_residual(fam, x) <= tol;
}

}  // namespace todaslice
