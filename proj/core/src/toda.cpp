#include "todaslice/toda.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "todaslice/errors.hpp"
#include "todaslice/mfshift.hpp"
#include "todaslice/random.hpp"

namespace todaslice {

int OrbitIndex::support_size() const {
  return static_cast<int>(std::count(S.begin(), S.end(), true));
}

bool OrbitIndex::full() const {
  return support_size() == static_cast<int>(S.size());
}

std::string OrbitIndex::to_string() const {
  std::ostringstream os;
  os << "S={";
  bool first = true;
  for (std::size_t k = 0; k < S.size(); ++k)
    if (S[k]) {
      os << (first ? "" : ",") << k + 1;
      first = false;
    }
  os << "} z=(";
  for (int k = 0; k < z.size(); ++k)
    os << (k ? "," : "") << z(k).real() << (z(k).imag() < 0 ? "" : "+")
       << z(k).imag() << "i";
  os << ")";
  return os.str();
}

bool same_index(const OrbitIndex& p, const OrbitIndex& q, double tol) {
  if (p.S != q.S) return false;
  const double scale = 1.0 + std::max(p.z.cwiseAbs().maxCoeff(),
                                      q.z.cwiseAbs().maxCoeff());
  return (p.z - q.z).cwiseAbs().maxCoeff() <= tol * scale;
}

Eigen::VectorXcd TodaPoint::to_vector() const {
  Eigen::VectorXcd v(a.size() + c.size());
  v << a, c;
  return v;
}

TodaPoint TodaPoint::from_vector(const Eigen::VectorXcd& v) {
  const int r = static_cast<int>(v.size() / 2);
  return {v.head(r), v.tail(r)};
}

AlgVec embed(const LieAlgebra& L, const TodaPoint& v) {
  return L.cartan(v.a) + L.simple_negative(v.c);
}

bool in_vtoda(const LieAlgebra& L, const AlgVec& x, double tol) {
  const RootSystem& rs = L.roots();
  const double scale = tol * (1.0 + x.coeffs.cwiseAbs().maxCoeff());
  for (int id = 0; id < rs.num_roots(); ++id) {
    if (rs.height(id) == -1) continue;
    if (std::abs(x[L.root_index(id)]) > scale) return false;
  }
  return true;
}

TodaPoint toda_coords(const LieAlgebra& L, const AlgVec& x, double tol) {
  if (!in_vtoda(L, x, tol)) throw DomainError("element is not in V_Toda");
  const RootSystem& rs = L.roots();
  TodaPoint p{L.cartan_coords(x), Eigen::VectorXcd(L.rank())};
  for (int k = 0; k < L.rank(); ++k)
    p.c(k) = x[L.root_index(rs.negative(rs.simple(k)))];
  return p;
}

AlgVec b_act(const LieAlgebra& L, const GrpElt& b, const AlgVec& v) {
  if (!in_vtoda(L, v)) throw DomainError("b_act: argument is not in V_Toda");
  if (!is_in_borel(b, 1e-10)) throw DomainError("b_act: not a Borel element");
  return L.project_bminus(adjoint(L, b, v));
}

AlgVec b_act(const LieAlgebra& L, const BorelElt& b, const AlgVec& v) {
  return b_act(L, to_group(L, b), v);
}

OrbitIndex orbit_index(const LieAlgebra& L, const AlgVec& v, double tol) {
  const TodaPoint p = toda_coords(L, v);
  const double cut = tol * L.norm(v);
  OrbitIndex idx{std::vector<bool>(L.rank()), Eigen::VectorXcd::Zero(L.rank())};
  for (int k = 0; k < L.rank(); ++k) {
    idx.S[k] = std::abs(p.c(k)) > cut && p.c(k) != 0.0;
    if (!idx.S[k]) idx.z(k) = p.a(k);
  }
  return idx;
}

bool closure_leq(const OrbitIndex& p, const OrbitIndex& q, double tol) {
  const int r = static_cast<int>(p.S.size());
  for (int k = 0; k < r; ++k)
    if (p.S[k] && !q.S[k]) return false;
  const double scale = 1.0 + std::max(p.z.cwiseAbs().maxCoeff(),
                                      q.z.cwiseAbs().maxCoeff());
  // z_p - z_q must vanish off S_q \ S_p; both vanish on S_p already.
  for (int k = 0; k < r; ++k) {
    if (q.S[k] && !p.S[k]) continue;
    if (std::abs(p.z(k) - q.z(k)) > tol * scale) return false;
  }
  return true;
}

AlgVec canonical_point(const LieAlgebra& L, const OrbitIndex& idx) {
  Eigen::VectorXcd c(L.rank());
  for (int k = 0; k < L.rank(); ++k) c(k) = idx.S[k] ? 1.0 : 0.0;
  return L.cartan(idx.z) + L.simple_negative(c);
}

BorelElt surjectivity_witness(const LieAlgebra& L, const AlgVec& v,
                              double tol) {
  const OrbitIndex idx = orbit_index(L, v, tol);
  const TodaPoint p = toda_coords(L, v);
  // b = t exp(y): alpha(t)^{-1} = c_alpha and y_alpha = a_alpha on S.
  BorelElt b{TorusChar::trivial(L.rank()), L.zero()};
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(L.rank());
  for (int k = 0; k < L.rank(); ++k) {
    if (!idx.S[k]) continue;
    b.torus.values(k) = 1.0 / p.c(k);
    y(k) = p.a(k);
  }
  b.y = L.simple_positive(y);
  return b;
}

namespace {

// V_Toda coordinates (a, c) of an element of V_Toda, without checks.
Eigen::VectorXcd vt_coords(const LieAlgebra& L, const AlgVec& x) {
  const RootSystem& rs = L.roots();
  Eigen::VectorXcd out(2 * L.rank());
  for (int k = 0; k < L.rank(); ++k) {
    out(k) = x[L.cartan_index(k)];
    out(L.rank() + k) = x[L.root_index(rs.negative(rs.simple(k)))];
  }
  return out;
}

Eigen::MatrixXcd action_matrix(const LieAlgebra& L, const AlgVec& v) {
  const std::vector<int>& bidx = L.b_indices();
  Eigen::MatrixXcd m(2 * L.rank(), static_cast<int>(bidx.size()));
  for (int j = 0; j < static_cast<int>(bidx.size()); ++j)
    m.col(j) = vt_coords(L, L.project_bminus(L.bracket(v, L.basis(bidx[j]))));
  return m;
}

}  // namespace

int action_rank(const LieAlgebra& L, const AlgVec& v, double tol) {
  const Eigen::MatrixXcd m = action_matrix(L, v);
  // Absolute scale: the orbit at 0 is a point.
  if (m.norm() <= 1e-14) return 0;
  return numerical_rank(m, tol);
}

BijectivityReport orbit_action_bijectivity_suite(const LieAlgebra& L,
                                                 std::uint64_t seed, int n) {
  BijectivityReport rep;
  const Rng root(seed);
  const int r = L.rank();
  for (int trial = 0; trial < n; ++trial) {
    Rng rng = root.split(static_cast<std::uint64_t>(trial));
    OrbitIndex idx{std::vector<bool>(r), Eigen::VectorXcd::Zero(r)};
    for (int k = 0; k < r; ++k) {
      idx.S[k] = rng.coin();
      if (!idx.S[k]) idx.z(k) = rng.complex_gaussian();
    }
    BorelElt b{TorusChar::trivial(r), L.zero()};
    for (int k = 0; k < r; ++k) b.torus.values(k) = rng.complex_annulus(0.5, 2);
    for (int i : L.u_indices()) b.y[i] = rng.complex_gaussian();
    const AlgVec canon = canonical_point(L, idx);
    const AlgVec v = b_act(L, b, canon);
    if (!same_index(orbit_index(L, v), idx)) ++rep.roundtrip_failures;

    // Random v reaches its canonical point through the explicit witness.
    TodaPoint p{rng.complex_gaussian_vector(r), Eigen::VectorXcd::Zero(r)};
    for (int k = 0; k < r; ++k)
      if (rng.coin()) p.c(k) = rng.complex_annulus(0.3, 3);
    const AlgVec w = embed(L, p);
    const OrbitIndex widx = orbit_index(L, w);
    const BorelElt wb = surjectivity_witness(L, w);
    const AlgVec back = b_act(L, wb, canonical_point(L, widx));
    const double res = L.norm(back - w) / (1.0 + L.norm(w));
    rep.max_witness_residual = std::max(rep.max_witness_residual, res);
    if (res > 1e-9) ++rep.witness_failures;

    if (action_rank(L, canon) != 2 * idx.support_size())
      ++rep.dimension_failures;
    ++rep.trials;
  }
  rep.pass = rep.roundtrip_failures == 0 && rep.witness_failures == 0 &&
             rep.dimension_failures == 0;
  return rep;
}

AlgVec degeneration_curve(const LieAlgebra& L, const OrbitIndex& source,
                          const OrbitIndex& target, cplx eps,
                          const Eigen::VectorXcd& drift) {
  const int r = L.rank();
  Eigen::VectorXcd a(r), c(r);
  for (int k = 0; k < r; ++k) {
    if (source.S[k]) {
      a(k) = target.z(k) + eps * drift(k);
      c(k) = target.S[k] ? cplx(1.0) : eps;
    } else {
      a(k) = source.z(k);
      c(k) = 0.0;
    }
  }
  return L.cartan(a) + L.simple_negative(c);
}

std::vector<OrbitIndex> sample_index_set(const LieAlgebra& L, Rng& rng,
                                         int per_subset) {
  const int r = L.rank();
  const cplx pool[] = {0.0, 1.0, cplx(-0.5, 2.0)};
  std::vector<OrbitIndex> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    for (int rep = 0; rep < per_subset; ++rep) {
      OrbitIndex idx{std::vector<bool>(r), Eigen::VectorXcd::Zero(r)};
      for (int k = 0; k < r; ++k) {
        idx.S[k] = ((mask >> k) & 1) != 0;
        if (!idx.S[k]) idx.z(k) = pool[rng.uniform_int(0, 2)];
      }
      bool dup = false;
      for (const OrbitIndex& o : out) dup = dup || same_index(o, idx);
      if (!dup) out.push_back(idx);
    }
  }
  return out;
}

PosetReport closure_poset_suite(const LieAlgebra& L, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<OrbitIndex> idx = sample_index_set(L, rng);
  const int n = static_cast<int>(idx.size());
  PosetReport rep;
  rep.indices = n;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      leq[p][q] = closure_leq(idx[p], idx[q]);
      if (leq[p][q] && p != q) ++rep.comparable_pairs;
    }
  for (int p = 0; p < n; ++p) {
    if (!leq[p][p]) ++rep.axiom_failures;
    for (int q = 0; q < n; ++q) {
      if (p != q && leq[p][q] && leq[q][p]) ++rep.axiom_failures;
      for (int s = 0; s < n; ++s)
        if (leq[p][q] && leq[q][s] && !leq[p][s]) ++rep.axiom_failures;
    }
  }
  const Eigen::VectorXcd drift = rng.complex_gaussian_vector(L.rank());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      // Curve leaves O_q only at eps = 0.
      const AlgVec mid = degeneration_curve(L, idx[q], idx[p], 0.37, drift);
      if (!same_index(orbit_index(L, mid), idx[q])) ++rep.degeneration_failures;
      const AlgVec lim = degeneration_curve(L, idx[q], idx[p], 0.0, drift);
      const bool lands = same_index(orbit_index(L, lim), idx[p]);
      if (lands != leq[p][q]) ++rep.degeneration_failures;
    }
  rep.pass = rep.axiom_failures == 0 && rep.degeneration_failures == 0;
  return rep;
}

TodaSystem::TodaSystem(InvariantFamily fam)
    : fam_(std::move(fam)), zeta_(todaslice::zeta(fam_.algebra())) {}

AlgVec TodaSystem::embed(const TodaPoint& v) const {
  return todaslice::embed(algebra(), v);
}

bool TodaSystem::in_orbit(const TodaPoint& v, double tol) const {
  return v.c.cwiseAbs().minCoeff() > tol;
}

AlgVec TodaSystem::direction(int k) const {
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(2 * rank());
  e(k) = 1.0;
  return embed(TodaPoint::from_vector(e));
}

Eigen::MatrixXcd TodaSystem::lift_matrix(const TodaPoint& v) const {
  return action_matrix(algebra(), embed(v));
}

AlgVec TodaSystem::from_b_coords(const Eigen::VectorXcd& xb) const {
  const std::vector<int>& bidx = algebra().b_indices();
  AlgVec x = algebra().zero();
  for (int j = 0; j < static_cast<int>(bidx.size()); ++j) x[bidx[j]] = xb(j);
  return x;
}

Eigen::VectorXcd TodaSystem::lift_tangent(const TodaPoint& v,
                                          const AlgVec& u) const {
  const LieAlgebra& L = algebra();
  if (!in_vtoda(L, u)) throw DomainError("tangent vector is not in V_Toda");
  const Eigen::MatrixXcd m = lift_matrix(v);
  const Eigen::VectorXcd rhs = vt_coords(L, u);
  const Eigen::VectorXcd x = m.completeOrthogonalDecomposition().solve(rhs);
  if ((m * x - rhs).norm() > 1e-8 * (1.0 + rhs.norm()) * (1.0 + m.norm()))
    throw DomainError("tangent vector is not in the image of the action");
  return x;
}

Eigen::MatrixXcd TodaSystem::lift_kernel(const TodaPoint& v) const {
  const Eigen::MatrixXcd m = lift_matrix(v);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10 * sv(0)) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

cplx TodaSystem::omega(const TodaPoint& v, const AlgVec& u1,
                       const AlgVec& u2) const {
  const LieAlgebra& L = algebra();
  const AlgVec x1 = from_b_coords(lift_tangent(v, u1));
  const AlgVec x2 = from_b_coords(lift_tangent(v, u2));
  return L.killing(embed(v), L.bracket(x1, x2));
}

Eigen::MatrixXcd TodaSystem::omega_matrix(const TodaPoint& v) const {
  const LieAlgebra& L = algebra();
  const int m = 2 * rank();
  std::vector<AlgVec> lifts;
  for (int k = 0; k < m; ++k)
    lifts.push_back(from_b_coords(lift_tangent(v, direction(k))));
  const AlgVec x = embed(v);
  Eigen::MatrixXcd w(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      w(k, l) = L.killing(x, L.bracket(lifts[k], lifts[l]));
  return w;
}

cplx TodaSystem::sigma(int i, const TodaPoint& v) const {
  return fam_.value(i, embed(v) + zeta_);
}

Eigen::VectorXcd TodaSystem::sigmas(const TodaPoint& v) const {
  return fam_.values(embed(v) + zeta_);
}

Eigen::VectorXcd TodaSystem::dsigma(int i, const TodaPoint& v,
                                    double step) const {
  const Eigen::VectorXcd p = v.to_vector();
  const double h = step * (1.0 + p.cwiseAbs().maxCoeff());
  Eigen::VectorXcd out(p.size());
  Eigen::VectorXcd q = p;
  for (int k = 0; k < p.size(); ++k) {
    q(k) = p(k) + h;
    const cplx fp = sigma(i, TodaPoint::from_vector(q));
    q(k) = p(k) - h;
    const cplx fm = sigma(i, TodaPoint::from_vector(q));
    q(k) = p(k);
    out(k) = (fp - fm) / (2.0 * h);
  }
  return out;
}

Eigen::VectorXcd TodaSystem::hamiltonian_vf(int i, const TodaPoint& v) const {
  if (!in_orbit(v)) throw DomainError("hamiltonian_vf: point is not in O_Toda");
  const Eigen::MatrixXcd w = omega_matrix(v);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(w);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) == 0.0 || sv(0) / sv(sv.size() - 1) >= 1e12)
    throw InternalError("omega_Toda is numerically singular");
  // sum_k X_k W(k, l) = d sigma(l).
  return w.transpose().fullPivLu().solve(dsigma(i, v));
}

Trajectory TodaSystem::flow(int i, const TodaPoint& v0, double t_end,
                            int steps) const {
  if (steps < 1) throw ConfigurationError("flow: steps must be >= 1");
  if (!in_orbit(v0)) throw DomainError("flow: start point is not in O_Toda");
  Trajectory tr;
  const Eigen::VectorXcd s0 = sigmas(v0);
  auto record = [&](double t, const TodaPoint& p) {
    tr.t.push_back(t);
    tr.points.push_back(p);
    tr.sigmas.push_back(sigmas(p));
    for (int j = 0; j < s0.size(); ++j) {
      const double d = std::abs(tr.sigmas.back()(j) - s0(j));
      tr.max_drift = std::max(tr.max_drift, d);
      if (std::abs(s0(j)) > 0.0)
        tr.max_relative_drift =
            std::max(tr.max_relative_drift, d / std::abs(s0(j)));
    }
  };
  record(0.0, v0);
  if (t_end == 0.0) return tr;
  const double dt = t_end / steps;
  auto f = [&](const Eigen::VectorXcd& p) {
    return hamiltonian_vf(i, TodaPoint::from_vector(p));
  };
  Eigen::VectorXcd p = v0.to_vector();
  for (int s = 1; s <= steps; ++s) {
    try {
      const Eigen::VectorXcd k1 = f(p);
      const Eigen::VectorXcd k2 = f(p + 0.5 * dt * k1);
      const Eigen::VectorXcd k3 = f(p + 0.5 * dt * k2);
      const Eigen::VectorXcd k4 = f(p + dt * k3);
      p += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } catch (const DomainError&) {
      tr.aborted = true;
      return tr;
    } catch (const InternalError&) {
      tr.aborted = true;
      return tr;
    }
    const TodaPoint q = TodaPoint::from_vector(p);
    if (!in_orbit(q) || !p.allFinite()) {
      tr.aborted = true;
      return tr;
    }
    record(s * dt, q);
  }
  return tr;
}

}  // namespace todaslice
