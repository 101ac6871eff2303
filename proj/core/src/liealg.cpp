#include "todaslice/liealg.hpp"

#include <cmath>

#include "todaslice/errors.hpp"

namespace todaslice {

LieAlgebra LieAlgebra::build(const RootSystem& rs) {
  if (rs.type() != CartanType::A)
    throw ConfigurationError("matrix realization implemented for type A only");
  auto d = std::make_shared<Data>();
  d->rs = rs;
  const int r = rs.rank();
  const int n = r + 1;
  const int nroots = rs.num_roots();
  d->n = n;
  d->dim = nroots + r;

  for (int id = 0; id < nroots; ++id) {
    const std::vector<int>& c = rs.coords(id);
    int first = -1, last = -1;
    for (int k = 0; k < r; ++k) {
      if (c[k] != 0) {
        if (first < 0) first = k;
        last = k;
      }
    }
    const int i = first, j = last + 1;  // root e_i - e_j
    const bool positive = rs.is_positive(id);
    const std::pair<int, int> p = positive ? std::pair{i, j} : std::pair{j, i};
    double s = 1.0;
    if (!positive && rs.height(id) == -1) s = 1.0 / (2.0 * n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    m(p.first, p.second) = s;
    d->basis.push_back(m);
    d->pos.push_back(p);
    d->scale.push_back(s);
    d->grades.push_back(rs.height(id));
  }
  for (int k = 0; k < r; ++k) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    m(k, k) = 1.0 / (2.0 * n);
    m(k + 1, k + 1) = -1.0 / (2.0 * n);
    d->basis.push_back(m);
    d->grades.push_back(0);
  }
  for (int i = 0; i < d->dim; ++i) {
    d->levels[d->grades[i]].push_back(i);
    if (d->grades[i] >= 0) d->b_idx.push_back(i);
    if (d->grades[i] > 0) d->u_idx.push_back(i);
    if (d->grades[i] <= 0) d->bminus_idx.push_back(i);
  }

  LieAlgebra L;
  L.d_ = d;

  // Killing form as the trace form of the adjoint representation.
  std::vector<Eigen::MatrixXcd> ads;
  ads.reserve(d->dim);
  for (int i = 0; i < d->dim; ++i) ads.push_back(L.ad_matrix(L.basis(i)));
  d->killing.resize(d->dim, d->dim);
  for (int i = 0; i < d->dim; ++i)
    for (int j = i; j < d->dim; ++j) {
      const cplx v = (ads[i] * ads[j]).trace();
      d->killing(i, j) = v;
      d->killing(j, i) = v;
    }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(d->killing);
  if (!lu.isInvertible()) throw InternalError("Killing form is degenerate");
  d->killing_inv = lu.inverse();

  d->pairing.resize(r, r);
  for (int j = 0; j < r; ++j) {
    const Eigen::MatrixXcd& hm = d->basis[L.cartan_index(j)];
    for (int k = 0; k < r; ++k) d->pairing(k, j) = hm(k, k) - hm(k + 1, k + 1);
  }
  return L;
}

std::string LieAlgebra::basis_label(int index) const {
  if (index >= num_roots())
    return "h" + std::to_string(index - num_roots() + 1);
  const auto& c = roots().coords(index);
  std::string s = roots().is_positive(index) ? "e+" : "e-";
  for (int v : c) s += std::to_string(std::abs(v));
  return s;
}

AlgVec LieAlgebra::basis(int index) const {
  AlgVec x = zero();
  x[index] = 1.0;
  return x;
}

AlgVec LieAlgebra::cartan(const Eigen::VectorXcd& a) const {
  AlgVec x = zero();
  for (int k = 0; k < rank(); ++k) x[cartan_index(k)] = a(k);
  return x;
}

AlgVec LieAlgebra::simple_negative(const Eigen::VectorXcd& c) const {
  AlgVec x = zero();
  for (int k = 0; k < rank(); ++k)
    x[root_index(roots().negative(roots().simple(k)))] = c(k);
  return x;
}

AlgVec LieAlgebra::simple_positive(const Eigen::VectorXcd& c) const {
  AlgVec x = zero();
  for (int k = 0; k < rank(); ++k) x[root_index(roots().simple(k))] = c(k);
  return x;
}

Eigen::VectorXcd LieAlgebra::cartan_coords(const AlgVec& x) const {
  return x.coeffs.tail(rank());
}

Eigen::MatrixXcd LieAlgebra::to_matrix(const AlgVec& x) const {
  const int nn = n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(nn, nn);
  for (int id = 0; id < num_roots(); ++id) {
    const auto [i, j] = d_->pos[id];
    m(i, j) += x[id] * d_->scale[id];
  }
  const double s = 1.0 / (2.0 * nn);
  for (int k = 0; k < rank(); ++k) {
    const cplx c = x[cartan_index(k)] * s;
    m(k, k) += c;
    m(k + 1, k + 1) -= c;
  }
  return m;
}

AlgVec LieAlgebra::from_matrix(const Eigen::MatrixXcd& m) const {
  const int nn = n();
  AlgVec x = zero();
  for (int id = 0; id < num_roots(); ++id) {
    const auto [i, j] = d_->pos[id];
    x[id] = m(i, j) / d_->scale[id];
  }
  const cplx shift = m.trace() / static_cast<double>(nn);
  cplx acc = 0.0;
  for (int k = 0; k < rank(); ++k) {
    acc += m(k, k) - shift;
    x[cartan_index(k)] = 2.0 * nn * acc;
  }
  return x;
}

cplx LieAlgebra::killing(const AlgVec& x, const AlgVec& y) const {
  return x.coeffs.transpose() * d_->killing * y.coeffs;
}

AlgVec LieAlgebra::killing_dual(const Eigen::VectorXcd& covector) const {
  return AlgVec(d_->killing_inv * covector);
}

AlgVec LieAlgebra::bracket(const AlgVec& x, const AlgVec& y) const {
  const Eigen::MatrixXcd a = to_matrix(x);
  const Eigen::MatrixXcd b = to_matrix(y);
  return from_matrix(a * b - b * a);
}

Eigen::MatrixXcd LieAlgebra::ad_matrix(const AlgVec& x) const {
  const Eigen::MatrixXcd a = to_matrix(x);
  Eigen::MatrixXcd out(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    const Eigen::MatrixXcd& b = d_->basis[j];
    out.col(j) = from_matrix(a * b - b * a).coeffs;
  }
  return out;
}

const std::vector<int>& LieAlgebra::level_indices(int level) const {
  static const std::vector<int> kEmpty;
  const auto it = d_->levels.find(level);
  return it == d_->levels.end() ? kEmpty : it->second;
}

AlgVec LieAlgebra::graded_component(const AlgVec& x, int level) const {
  AlgVec out = zero();
  for (int i : level_indices(level)) out[i] = x[i];
  return out;
}

AlgVec LieAlgebra::project_bminus(const AlgVec& x) const {
  AlgVec out = zero();
  for (int i : d_->bminus_idx) out[i] = x[i];
  return out;
}

AlgVec LieAlgebra::project_u(const AlgVec& x) const {
  AlgVec out = zero();
  for (int i : d_->u_idx) out[i] = x[i];
  return out;
}

AlgVec LieAlgebra::project_b(const AlgVec& x) const {
  AlgVec out = zero();
  for (int i : d_->b_idx) out[i] = x[i];
  return out;
}

Eigen::VectorXcd LieAlgebra::simple_root_values(const AlgVec& x) const {
  return d_->pairing * cartan_coords(x);
}

double LieAlgebra::norm(const AlgVec& x) const {
  return std::sqrt(2.0 * n()) * to_matrix(x).norm();
}

int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++rank;
  return rank;
}

bool LieAlgebra::is_regular(const AlgVec& x, double tol) const {
  return dim() - numerical_rank(ad_matrix(x), tol) == rank();
}

std::vector<AlgVec> LieAlgebra::centralizer_basis(const AlgVec& x,
                                                  double tol) const {
  const Eigen::MatrixXcd ad = ad_matrix(x);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ad, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<AlgVec> out;
  for (int i = 0; i < dim(); ++i) {
    if (sv(0) == 0.0 || sv(i) <= tol * sv(0))
      out.emplace_back(svd.matrixV().col(i));
  }
  return out;
}

}  // namespace todaslice
