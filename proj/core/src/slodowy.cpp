#include "todaslice/slodowy.hpp"

#include <algorithm>
#include <cmath>

#include "todaslice/errors.hpp"

namespace todaslice {

PrincipalTriple principal_triple(const LieAlgebra& L) {
  const int r = L.rank();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(L.cartan_pairing());
  if (!lu.isInvertible()) throw InternalError("singular Cartan pairing");
  PrincipalTriple T;
  T.c = lu.solve(Eigen::VectorXcd::Constant(r, -2.0));
  T.h = L.cartan(T.c);
  T.xi = L.simple_negative(Eigen::VectorXcd::Ones(r));
  T.eta = L.simple_positive(-T.c);
  return T;
}

std::vector<AlgVec> sreg_basis(const LieAlgebra& L, const PrincipalTriple& T) {
  const Eigen::MatrixXcd ad = L.ad_matrix(T.eta);
  std::vector<AlgVec> out;
  for (int level = 1; level <= L.roots().max_height(); ++level) {
    const std::vector<int>& idx = L.level_indices(level);
    const int k = static_cast<int>(idx.size());
    Eigen::MatrixXcd block(L.dim(), k);
    for (int j = 0; j < k; ++j) block.col(j) = ad.col(idx[j]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(block, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double top = std::max(1.0, sv.size() ? sv(0) : 0.0);
    for (int c = 0; c < k; ++c) {
      if (sv(c) > 1e-10 * top) continue;
      Eigen::VectorXcd v = svd.matrixV().col(c);
      int arg = 0;
      v.cwiseAbs().maxCoeff(&arg);
      v *= std::abs(v(arg)) / v(arg);
      AlgVec x = L.zero();
      for (int j = 0; j < k; ++j) x[idx[j]] = v(j);
      out.push_back(x);
    }
  }
  if (static_cast<int>(out.size()) != L.rank())
    throw InternalError("ker(ad_eta) does not have dimension r");
  return out;
}

cplx omega_big(const LieAlgebra& L, const AlgVec& x, const AlgVec& y1,
               const AlgVec& z1, const AlgVec& y2, const AlgVec& z2) {
  return L.killing(y1, z2) - L.killing(y2, z1) +
         L.killing(x, L.bracket(y1, y2));
}

Slice::Slice(InvariantFamily fam)
    : fam_(fam),
      shift_(fam, zeta(fam.algebra())),
      toda_(fam),
      triple_(principal_triple(fam.algebra())) {
  const LieAlgebra& L = algebra();
  basis_ = sreg_basis(L, triple_);
  basis_matrix_.resize(L.dim(), rank());
  for (int k = 0; k < rank(); ++k) {
    basis_matrix_.col(k) = basis_[k].coeffs;
    int h = 0;
    for (int i = 0; i < L.dim(); ++i)
      if (std::abs(basis_[k][i]) > 0.0) h = L.grade(i);
    heights_.push_back(h);
  }
}

AlgVec Slice::embed(const SregPoint& s) const {
  return triple_.xi + AlgVec(basis_matrix_ * s.m);
}

double Slice::membership_residual(const AlgVec& x) const {
  const Eigen::VectorXcd d = (x - triple_.xi).coeffs;
  // Basis is orthonormal in coefficient space.
  const Eigen::VectorXcd m = basis_matrix_.adjoint() * d;
  return (d - basis_matrix_ * m).norm() / (1.0 + x.coeffs.norm());
}

SregPoint Slice::coords(const AlgVec& x, double tol) const {
  if (membership_residual(x) > tol) throw DomainError("element is not in S_reg");
  return {basis_matrix_.adjoint() * (x - triple_.xi).coeffs};
}

AlgVec Slice::kostant_forward(const AlgVec& y, const SregPoint& s) const {
  return adjoint(algebra(), exp_nilpotent(algebra(), y), embed(s));
}

namespace {

void check_in_xi_plus_b(const LieAlgebra& L, const AlgVec& w,
                        const AlgVec& xi) {
  const AlgVec d = w - xi;
  const double tol = 1e-10 * (1.0 + w.coeffs.cwiseAbs().maxCoeff());
  for (int i = 0; i < L.dim(); ++i)
    if (L.grade(i) < 0 && std::abs(d[i]) > tol)
      throw DomainError("argument is not in xi + b");
}

}  // namespace

KostantSplit Slice::graded_kostant_inverse(const AlgVec& w) const {
  const LieAlgebra& L = algebra();
  check_in_xi_plus_b(L, w, triple_.xi);
  AlgVec y = L.zero();
  SregPoint s{Eigen::VectorXcd::Zero(rank())};
  const int hmax = L.roots().max_height();
  for (int level = 0; level <= hmax; ++level) {
    const AlgVec res = w - kostant_forward(y, s);
    const std::vector<int>& rows = L.level_indices(level);
    const std::vector<int>& ycols = L.level_indices(level + 1);
    std::vector<int> mcols;
    for (int k = 0; k < rank(); ++k)
      if (heights_[k] == level) mcols.push_back(k);
    const int nr = static_cast<int>(rows.size());
    const int ny = static_cast<int>(ycols.size());
    const int nc = ny + static_cast<int>(mcols.size());
    if (nr != nc) throw InternalError("graded splitting is not square");
    Eigen::MatrixXcd a(nr, nc);
    for (int j = 0; j < ny; ++j) {
      const AlgVec col = L.bracket(L.basis(ycols[j]), triple_.xi);
      for (int i = 0; i < nr; ++i) a(i, j) = col[rows[i]];
    }
    for (int j = 0; j < static_cast<int>(mcols.size()); ++j)
      for (int i = 0; i < nr; ++i) a(i, ny + j) = basis_[mcols[j]][rows[i]];
    Eigen::VectorXcd rhs(nr);
    for (int i = 0; i < nr; ++i) rhs(i) = res[rows[i]];
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
    if (!lu.isInvertible()) throw InternalError("graded splitting is singular");
    const Eigen::VectorXcd sol = lu.solve(rhs);
    for (int j = 0; j < ny; ++j) y[ycols[j]] += sol(j);
    for (int j = 0; j < static_cast<int>(mcols.size()); ++j)
      s.m(mcols[j]) += sol(ny + j);
  }
  const double resid =
      L.norm(w - kostant_forward(y, s)) / (1.0 + L.norm(w));
  if (!(resid <= 1e-9))
    throw InternalError("graded Kostant inverse did not converge");
  return {y, s};
}

KostantSplit Slice::kostant_inverse_newton(const AlgVec& w, const AlgVec& y0,
                                           const SregPoint& s0) const {
  const LieAlgebra& L = algebra();
  check_in_xi_plus_b(L, w, triple_.xi);
  const std::vector<int>& uidx = L.u_indices();
  const std::vector<int>& bidx = L.b_indices();
  const int nu = static_cast<int>(uidx.size());
  const int n = nu + rank();

  auto unpack = [&](const Eigen::VectorXcd& p) {
    AlgVec y = L.zero();
    for (int j = 0; j < nu; ++j) y[uidx[j]] = p(j);
    return KostantSplit{y, SregPoint{p.tail(rank())}};
  };
  auto residual = [&](const Eigen::VectorXcd& p) {
    const KostantSplit k = unpack(p);
    const AlgVec d = kostant_forward(k.y, k.s) - w;
    Eigen::VectorXcd out(static_cast<int>(bidx.size()));
    for (int i = 0; i < out.size(); ++i) out(i) = d[bidx[i]];
    return out;
  };

  Eigen::VectorXcd p(n);
  for (int j = 0; j < nu; ++j) p(j) = y0[uidx[j]];
  p.tail(rank()) = s0.m;
  const double target = 1e-13 * (1.0 + w.coeffs.norm());
  Eigen::VectorXcd f = residual(p);
  for (int iter = 0; iter < 60 && f.norm() > target; ++iter) {
    const double hstep = 1e-7 * (1.0 + p.cwiseAbs().maxCoeff());
    Eigen::MatrixXcd jac(n, n);
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXcd q = p;
      q(j) += hstep;
      const Eigen::VectorXcd fp = residual(q);
      q(j) = p(j) - hstep;
      jac.col(j) = (fp - residual(q)) / (2.0 * hstep);
    }
    const Eigen::VectorXcd step = jac.fullPivLu().solve(-f);
    p += step;
    const Eigen::VectorXcd fn = residual(p);
    if (fn.norm() >= f.norm() && step.norm() <= 1e-15 * (1.0 + p.norm())) {
      f = fn;
      break;
    }
    f = fn;
  }
  const KostantSplit out = unpack(p);
  if (!(L.norm(w - kostant_forward(out.y, out.s)) <= 1e-9 * (1.0 + L.norm(w))))
    throw InternalError("Newton Kostant inverse did not converge");
  return out;
}

AlgVec Slice::gamma(const AlgVec& z) const {
  const LieAlgebra& L = algebra();
  for (int i = 0; i < L.dim(); ++i)
    if (L.grade(i) != 0 && z[i] != 0.0)
      throw DomainError("gamma: argument is not in t");
  // Solve exp(ad_k)(s) = xi + z for k in u; then gamma = -k.  Seed k with
  // its known height-one part sum z_alpha e_alpha.
  const AlgVec k0 = L.simple_positive(L.cartan_coords(z));
  return -kostant_inverse_newton(triple_.xi + z, k0,
                                 SregPoint{Eigen::VectorXcd::Zero(rank())})
              .y;
}

TorusChar Slice::theta(const TodaPoint& v) const {
  for (int k = 0; k < v.c.size(); ++k)
    if (v.c(k) == 0.0) throw DomainError("theta: point is not in O_Toda");
  return {v.c};
}

GrpElt Slice::nu(const TodaPoint& v) const {
  const LieAlgebra& L = algebra();
  const GrpElt t = torus_lift(L, theta(v));
  const AlgVec y = gamma(L.cartan(v.a));
  return t.inverse() * exp_nilpotent(L, -y);
}

KappaImage Slice::kappa(const TodaPoint& v) const {
  const GrpElt g = nu(v);
  const AlgVec s = adjoint(algebra(), g.inverse(), toda_.embed(v));
  return {g, coords(s, 1e-8)};
}

AlgVec Slice::kappa_inverse(const KappaImage& k) const {
  return adjoint(algebra(), k.g, embed(k.s));
}

PullbackReport Slice::kappa_pullback(const TodaPoint& v,
                                     double fd_step) const {
  const LieAlgebra& L = algebra();
  const int m = 2 * rank();
  const KappaImage k0 = kappa(v);
  const GrpElt g0inv = k0.g.inverse();
  const Eigen::VectorXcd p = v.to_vector();
  const double eps = fd_step * (1.0 + p.cwiseAbs().maxCoeff());
  std::vector<AlgVec> ys, zs;
  for (int k = 0; k < m; ++k) {
    Eigen::VectorXcd pp = p, pm = p;
    pp(k) += eps;
    pm(k) -= eps;
    const KappaImage kp = kappa(TodaPoint::from_vector(pp));
    const KappaImage km = kappa(TodaPoint::from_vector(pm));
    const AlgVec lp = log_near_identity(L, nearest_to_identity(g0inv * kp.g));
    const AlgVec lm = log_near_identity(L, nearest_to_identity(g0inv * km.g));
    ys.push_back((lp - lm) * (1.0 / (2.0 * eps)));
    zs.push_back((embed(kp.s) - embed(km.s)) * (1.0 / (2.0 * eps)));
  }
  PullbackReport rep;
  const AlgVec x = embed(k0.s);
  rep.pulled.resize(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      rep.pulled(k, l) = omega_big(L, x, ys[k], zs[k], ys[l], zs[l]);
  rep.toda = toda_.omega_matrix(v);
  rep.max_diff = (rep.pulled - rep.toda).cwiseAbs().maxCoeff();
  rep.scale = 1.0 + rep.toda.cwiseAbs().maxCoeff();
  return rep;
}

bool Slice::kappa_pullback_check(const TodaPoint& v, double fd_step,
                                 double tol) const {
  return kappa_pullback(v, fd_step).relative() <= tol;
}

cplx Slice::tau(int k, const GrpElt& g, const SregPoint& s) const {
  return shift_.value(k, adjoint(algebra(), g, embed(s)));
}

Eigen::VectorXcd Slice::taus(const GrpElt& g, const SregPoint& s) const {
  return shift_.values(adjoint(algebra(), g, embed(s)));
}

EmbeddingReport Slice::embedding_residuals(const TodaPoint& v) const {
  const LieAlgebra& L = algebra();
  const KappaImage k = kappa(v);
  const Eigen::VectorXcd t = taus(k.g, k.s);
  const Eigen::VectorXcd sig = toda_.sigmas(v);
  const Eigen::MatrixXi c = shift_.coefficient_matrix();
  EmbeddingReport rep;
  for (int i = 0; i < rank(); ++i) {
    cplx acc = 0.0;
    for (int j = 0; j < shift_.size(); ++j)
      if (c(i, j) != 0) acc += static_cast<double>(c(i, j)) * t(j);
    rep.sigma_residual = std::max(rep.sigma_residual, std::abs(sig(i) - acc));
  }
  const AlgVec x = toda_.embed(v);
  rep.inclusion_residual = L.norm(kappa_inverse(k) - x) / (1.0 + L.norm(x));
  return rep;
}

bool Slice::embedding_check(const TodaPoint& v, double tol) const {
  const EmbeddingReport rep = embedding_residuals(v);
  return rep.sigma_residual <= tol && rep.inclusion_residual <= tol;
}

double Slice::b_stabilizer_margin(const SregPoint& s) const {
  const LieAlgebra& L = algebra();
  const Eigen::MatrixXcd ad = L.ad_matrix(embed(s));
  const std::vector<int>& bidx = L.b_indices();
  Eigen::MatrixXcd restricted(L.dim(), static_cast<int>(bidx.size()));
  for (int j = 0; j < static_cast<int>(bidx.size()); ++j)
    restricted.col(j) = ad.col(bidx[j]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> full(ad);
  Eigen::JacobiSVD<Eigen::MatrixXcd> part(restricted);
  const double top = full.singularValues()(0);
  const auto& sv = part.singularValues();
  return top > 0.0 ? sv(sv.size() - 1) / top : 0.0;
}

bool Slice::b_stabilizer_check(const SregPoint& s, double tol) const {
  return b_stabilizer_margin(s) > tol;
}

}  // namespace todaslice
