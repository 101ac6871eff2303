#include "todaslice/group.hpp"

#include <cmath>
#include <numbers>

#include "todaslice/errors.hpp"

namespace todaslice {

namespace {

bool strictly_upper(const Eigen::MatrixXcd& m, double tol) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j <= i; ++j)
      if (std::abs(m(i, j)) > tol) return false;
  return true;
}

bool strictly_lower(const Eigen::MatrixXcd& m, double tol) {
  return strictly_upper(m.transpose(), tol);
}

}  // namespace

GrpElt GrpElt::from_matrix(Eigen::MatrixXcd m, double tol) {
  if (m.rows() != m.cols()) throw DomainError("group element must be square");
  if (std::abs(m.determinant() - 1.0) > tol)
    throw DomainError("group element must have determinant 1");
  GrpElt g;
  g.m_ = std::move(m);
  return g;
}

GrpElt GrpElt::normalized(const Eigen::MatrixXcd& m) {
  const cplx det = m.determinant();
  if (std::abs(det) == 0.0) throw DomainError("singular matrix");
  GrpElt g;
  g.m_ = m / std::pow(det, 1.0 / static_cast<double>(m.rows()));
  return g;
}

GrpElt GrpElt::identity(int n) {
  GrpElt g;
  g.m_ = Eigen::MatrixXcd::Identity(n, n);
  return g;
}

GrpElt GrpElt::inverse() const {
  GrpElt g;
  g.m_ = m_.inverse();
  return g;
}

GrpElt exp_nilpotent(const LieAlgebra& L, const AlgVec& y) {
  const Eigen::MatrixXcd m = L.to_matrix(y);
  const double tol = 1e-12 * (1.0 + m.norm());
  if (!strictly_upper(m, tol) && !strictly_lower(m, tol))
    throw DomainError("exp_nilpotent: argument is not strictly triangular");
  const int n = L.n();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k < n; ++k) {
    term = term * m / static_cast<double>(k);
    out += term;
  }
  return GrpElt::from_matrix(out, 1e-8 * (1.0 + out.norm()));
}

GrpElt torus_lift(const LieAlgebra& L, const TorusChar& ch) {
  const int n = L.n();
  if (ch.values.size() != L.rank())
    throw DomainError("torus_lift: character has wrong length");
  // alpha_k(t) = u_k / u_{k+1}.
  Eigen::VectorXcd u(n);
  u(0) = 1.0;
  for (int k = 0; k + 1 < n; ++k) {
    if (ch.values(k) == 0.0)
      throw DomainError("torus_lift: character value is zero");
    u(k + 1) = u(k) / ch.values(k);
  }
  const cplx prod = u.prod();
  const cplx root = std::pow(prod, 1.0 / static_cast<double>(n));
  u /= root;
  return GrpElt::from_matrix(u.asDiagonal().toDenseMatrix(), 1e-8);
}

TorusChar char_of(const LieAlgebra& L, const GrpElt& t) {
  TorusChar ch{Eigen::VectorXcd(L.rank())};
  for (int k = 0; k < L.rank(); ++k)
    ch.values(k) = t.mat()(k, k) / t.mat()(k + 1, k + 1);
  return ch;
}

GrpElt to_group(const LieAlgebra& L, const BorelElt& b) {
  return torus_lift(L, b.torus) * exp_nilpotent(L, b.y);
}

AlgVec adjoint(const LieAlgebra& L, const GrpElt& g, const AlgVec& x) {
  const Eigen::MatrixXcd& m = g.mat();
  return L.from_matrix(m * L.to_matrix(x) * m.inverse());
}

AlgVec log_near_identity(const LieAlgebra& L, const GrpElt& g) {
  const int n = L.n();
  const Eigen::MatrixXcd a = g.mat() - Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const double rho = svd.singularValues().size() ? svd.singularValues()(0) : 0;
  if (rho >= 0.5)
    throw DomainError("log_near_identity: argument too far from identity");
  // log(I + A) = sum (-1)^{k+1} A^k / k; error <= rho^K / (K (1 - rho)).
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
  double bound = 1.0;
  for (int k = 1; k < 200; ++k) {
    power = power * a;
    bound *= rho;
    out += ((k % 2 == 1) ? 1.0 : -1.0) / k * power;
    if (bound < 1e-17) break;
  }
  return L.from_matrix(out);
}

bool is_in_borel(const GrpElt& g, double tol) {
  const Eigen::MatrixXcd& m = g.mat();
  const double scale = tol * (1.0 + m.norm());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(m(i, j)) > scale) return false;
  return true;
}

BorelSplit split_borel(const LieAlgebra& L, const GrpElt& g, double tol) {
  if (!is_in_borel(g, tol))
    throw DomainError("split_borel: element is not upper triangular");
  const int n = L.n();
  // det(diag) = det(g) = 1 for triangular g.
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) diag(i, i) = g.mat()(i, i);
  const GrpElt t = GrpElt::from_matrix(diag, 1e-8);
  Eigen::MatrixXcd unip = t.inverse().mat() * g.mat();
  unip = unip.triangularView<Eigen::Upper>();
  const Eigen::MatrixXcd nil = unip - Eigen::MatrixXcd::Identity(n, n);
  // log of a unipotent matrix is a finite series.
  Eigen::MatrixXcd log = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k < n; ++k) {
    power = power * nil;
    log += ((k % 2 == 1) ? 1.0 : -1.0) / k * power;
  }
  return {t, char_of(L, t), L.from_matrix(log)};
}

std::vector<GrpElt> center(int n) {
  std::vector<GrpElt> out;
  for (int k = 0; k < n; ++k) {
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    out.push_back(GrpElt::from_matrix(
        w * Eigen::MatrixXcd::Identity(n, n), 1e-9));
  }
  return out;
}

GrpElt nearest_to_identity(const GrpElt& g) {
  const int n = g.n();
  GrpElt best = g;
  double best_dist = (g.mat() - Eigen::MatrixXcd::Identity(n, n)).norm();
  for (const GrpElt& z : center(n)) {
    const GrpElt cand = z * g;
    const double dist =
        (cand.mat() - Eigen::MatrixXcd::Identity(n, n)).norm();
    if (dist < best_dist) {
      best = cand;
      best_dist = dist;
    }
  }
  return best;
}

}  // namespace todaslice
