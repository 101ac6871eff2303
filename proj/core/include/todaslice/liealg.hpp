#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "todaslice/rootsys.hpp"

namespace todaslice {

using cplx = std::complex<double>;

// Coefficients of a Lie algebra element in the basis of a LieAlgebra.
struct AlgVec {
  Eigen::VectorXcd coeffs;

  AlgVec() = default;
  explicit AlgVec(Eigen::VectorXcd c) : coeffs(std::move(c)) {}
  static AlgVec zero(int dim) { return AlgVec(Eigen::VectorXcd::Zero(dim)); }

  int dim() const { return static_cast<int>(coeffs.size()); }
  cplx operator[](int i) const { return coeffs(i); }
  cplx& operator[](int i) { return coeffs(i); }

  AlgVec& operator+=(const AlgVec& o) { coeffs += o.coeffs; return *this; }
  AlgVec& operator-=(const AlgVec& o) { coeffs -= o.coeffs; return *this; }
  AlgVec& operator*=(cplx s) { coeffs *= s; return *this; }

  friend AlgVec operator+(AlgVec a, const AlgVec& b) { return a += b; }
  friend AlgVec operator-(AlgVec a, const AlgVec& b) { return a -= b; }
  friend AlgVec operator-(AlgVec a) { a.coeffs = -a.coeffs; return a; }
  friend AlgVec operator*(cplx s, AlgVec a) { return a *= s; }
  friend AlgVec operator*(AlgVec a, cplx s) { return a *= s; }
};

// sl_n with basis {e_beta : beta a root} followed by {h_alpha : alpha simple}.
//
// Matrix realization: for a positive root e_i - e_j (i < j) the root vector is
// the elementary matrix E_ij, for a negative non-simple root E_ji.  For a
// simple root alpha_k, e_{-alpha_k} is scaled so that <e_alpha, e_-alpha> = 1
// under the Killing form, and h_alpha_k = [e_alpha_k, e_-alpha_k].  With the
// Killing form <x, y> = 2n tr(xy) this gives e_{-alpha_k} = E_{k+1,k} / 2n.
//
// Copies share immutable state.
class LieAlgebra {
 public:
  static LieAlgebra build(const RootSystem& rs);

  const RootSystem& roots() const { return d_->rs; }
  int dim() const { return d_->dim; }
  int rank() const { return d_->rs.rank(); }
  int n() const { return d_->n; }
  int num_roots() const { return d_->rs.num_roots(); }
  // (dim + rank) / 2, the dimension of the Borel.
  int ell() const { return (dim() + rank()) / 2; }

  int root_index(int root) const { return root; }
  int cartan_index(int k) const { return num_roots() + k; }
  // Height of a basis vector; Cartan vectors have height 0.
  int grade(int index) const { return d_->grades[index]; }
  std::string basis_label(int index) const;

  const Eigen::MatrixXcd& basis_matrix(int index) const {
    return d_->basis[index];
  }
  AlgVec zero() const { return AlgVec::zero(dim()); }
  AlgVec basis(int index) const;
  AlgVec e(int root) const { return basis(root_index(root)); }
  AlgVec h(int k) const { return basis(cartan_index(k)); }
  // Sum of coefficient vectors over simple roots / Cartan.
  AlgVec cartan(const Eigen::VectorXcd& a) const;
  AlgVec simple_negative(const Eigen::VectorXcd& c) const;
  AlgVec simple_positive(const Eigen::VectorXcd& c) const;
  Eigen::VectorXcd cartan_coords(const AlgVec& x) const;

  Eigen::MatrixXcd to_matrix(const AlgVec& x) const;
  // Traceless part of m in basis coordinates.
  AlgVec from_matrix(const Eigen::MatrixXcd& m) const;

  const Eigen::MatrixXcd& killing_matrix() const { return d_->killing; }
  cplx killing(const AlgVec& x, const AlgVec& y) const;
  // The element g with <g, y> = sum_i w_i y_i for all y.
  AlgVec killing_dual(const Eigen::VectorXcd& covector) const;

  AlgVec bracket(const AlgVec& x, const AlgVec& y) const;
  Eigen::MatrixXcd ad_matrix(const AlgVec& x) const;

  AlgVec graded_component(const AlgVec& x, int level) const;
  AlgVec project_bminus(const AlgVec& x) const;
  AlgVec project_u(const AlgVec& x) const;
  AlgVec project_b(const AlgVec& x) const;
  // Basis indices of g_(level), b, u, b_-.
  const std::vector<int>& level_indices(int level) const;
  const std::vector<int>& b_indices() const { return d_->b_idx; }
  const std::vector<int>& u_indices() const { return d_->u_idx; }
  const std::vector<int>& bminus_indices() const { return d_->bminus_idx; }

  // pairing(k, j) = alpha_k(h_j).
  const Eigen::MatrixXcd& cartan_pairing() const { return d_->pairing; }
  // (alpha_k(x))_k for x in t.
  Eigen::VectorXcd simple_root_values(const AlgVec& x) const;

  // sqrt(2n) times the Frobenius norm of the matrix.
  double norm(const AlgVec& x) const;

  bool is_regular(const AlgVec& x, double tol = 1e-8) const;
  std::vector<AlgVec> centralizer_basis(const AlgVec& x,
                                        double tol = 1e-8) const;

 private:
  struct Data {
    RootSystem rs;
    int n = 0;
    int dim = 0;
    std::vector<Eigen::MatrixXcd> basis;
    std::vector<int> grades;
    // Matrix position and entry scale of each root vector.
    std::vector<std::pair<int, int>> pos;
    std::vector<double> scale;
    Eigen::MatrixXcd killing;
    Eigen::MatrixXcd killing_inv;
    Eigen::MatrixXcd pairing;
    std::map<int, std::vector<int>> levels;
    std::vector<int> b_idx, u_idx, bminus_idx;
  };
  std::shared_ptr<const Data> d_;
};

// Numerical nullity with a relative singular-value cutoff.
int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol);

}  // namespace todaslice
