#include "todaslice/hessenberg.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "todaslice/errors.hpp"
#include "todaslice/sampling.hpp"

namespace todaslice {

Hessenberg::Hessenberg(InvariantFamily fam) : slice_(std::move(fam)) {}

bool Hessenberg::h0_contains(const AlgVec& x, double tol) const {
  const LieAlgebra& L = algebra();
  const double scale = tol * (1.0 + x.coeffs.cwiseAbs().maxCoeff());
  for (int i = 0; i < L.dim(); ++i)
    if (L.grade(i) < -1 && std::abs(x[i]) > scale) return false;
  return true;
}

bool Hessenberg::h0x_contains(const AlgVec& x, double tol) const {
  if (!h0_contains(x, tol)) return false;
  const LieAlgebra& L = algebra();
  const double cut = tol * L.norm(x);
  for (int i : L.level_indices(-1))
    if (!(std::abs(x[i]) > cut)) return false;
  return true;
}

AlgVec Hessenberg::project_h0(const AlgVec& x) const {
  const LieAlgebra& L = algebra();
  AlgVec out = x;
  for (int i = 0; i < L.dim(); ++i)
    if (L.grade(i) < -1) out[i] = 0.0;
  return out;
}

bool Hessenberg::points_equal(const HessPoint& p, const HessPoint& q,
                              double tol) const {
  const GrpElt c = p.g.inverse() * q.g;
  if (!is_in_borel(c, tol)) return false;
  const LieAlgebra& L = algebra();
  const AlgVec moved = adjoint(L, c.inverse(), p.x);
  return L.norm(moved - q.x) <= tol * (1.0 + L.norm(q.x));
}

HessPoint Hessenberg::gauge(const HessPoint& p, const GrpElt& b) const {
  if (!is_in_borel(b)) throw DomainError("gauge: not a Borel element");
  return {p.g * b.inverse(), adjoint(algebra(), b, p.x)};
}

HessPoint Hessenberg::translate(const GrpElt& h, const HessPoint& p) const {
  return {h * p.g, p.x};
}

AlgVec Hessenberg::mu0(const HessPoint& p) const {
  return adjoint(algebra(), p.g, p.x);
}

bool Hessenberg::in_fiber(const HessPoint& p, const AlgVec& x0,
                          double tol) const {
  const LieAlgebra& L = algebra();
  return L.norm(mu0(p) - x0) <= tol * (1.0 + L.norm(x0));
}

bool Hessenberg::flag_membership(const GrpElt& g, const AlgVec& x0,
                                 double tol) const {
  return h0_contains(adjoint(algebra(), g.inverse(), x0), tol);
}

HessPoint Hessenberg::fiber_candidate(const GrpElt& g, const AlgVec& x0) const {
  return {g, project_h0(adjoint(algebra(), g.inverse(), x0))};
}

OrbitIndex Hessenberg::stratum(const HessPoint& p, double tol) const {
  const LieAlgebra& L = algebra();
  if (!h0_contains(p.x)) throw DomainError("stratum: fiber part not in H_0");
  return orbit_index(L, -L.project_bminus(p.x), tol);
}

int Hessenberg::stratum_dim(const OrbitIndex& idx) const {
  const LieAlgebra& L = algebra();
  return L.dim() - L.rank() + 2 * idx.support_size();
}

Eigen::MatrixXcd Hessenberg::gauge_directions(const AlgVec& x) const {
  const LieAlgebra& L = algebra();
  const std::vector<int>& bidx = L.b_indices();
  const int d = L.dim();
  Eigen::MatrixXcd m(2 * d, static_cast<int>(bidx.size()));
  for (int j = 0; j < static_cast<int>(bidx.size()); ++j) {
    const AlgVec e = L.basis(bidx[j]);
    m.col(j) << -e.coeffs, L.bracket(e, x).coeffs;
  }
  return m;
}

int Hessenberg::stratum_dim_numeric(const HessPoint& p, double tol) const {
  const LieAlgebra& L = algebra();
  const int d = L.dim();
  const AlgVec v = -L.project_bminus(p.x);
  std::vector<Eigen::VectorXcd> cols;
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * d);
    c(i) = 1.0;
    cols.push_back(c);
  }
  for (int i : L.u_indices()) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * d);
    c(d + i) = 1.0;
    cols.push_back(c);
  }
  // Tangent to -O at the b_- part of x.
  for (int i : L.b_indices()) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * d);
    c.tail(d) = -L.project_bminus(L.bracket(L.basis(i), v)).coeffs;
    cols.push_back(c);
  }
  Eigen::MatrixXcd t(2 * d, static_cast<int>(cols.size()));
  for (int j = 0; j < t.cols(); ++j) t.col(j) = cols[j];
  return numerical_rank(t, tol) - numerical_rank(gauge_directions(p.x), tol);
}

HessPoint Hessenberg::varphi(const GrpElt& g, const SregPoint& s) const {
  return {g, slice_.embed(s)};
}

KappaImage Hessenberg::leaf_surjectivity_witness(const HessPoint& p) const {
  const LieAlgebra& L = algebra();
  if (!stratum(p).full())
    throw DomainError("leaf_surjectivity_witness: point not in the open leaf");
  const TodaPoint tp = toda_coords(L, L.project_bminus(p.x));
  // alpha(t) = 1 / x_{-alpha} makes Ad_{t^{-1}} x lie in xi + b.
  const GrpElt t = torus_lift(L, TorusChar{tp.c.cwiseInverse()});
  const AlgVec w = adjoint(L, t.inverse(), p.x);
  const KostantSplit k = slice_.graded_kostant_inverse(w);
  const GrpElt b = t * exp_nilpotent(L, k.y);
  return {p.g * b, k.s};
}

cplx Hessenberg::tilde_tau(int k, const HessPoint& p) const {
  return slice_.shift_family().value(k, mu0(p));
}

RegularFiberReport Hessenberg::regular_fiber_suite(
    const AlgVec& x, const std::optional<HessPoint>& witness,
    std::uint64_t seed, int n) const {
  const LieAlgebra& L = algebra();
  const Rng root(seed);
  RegularFiberReport rep;
  rep.regular_input = L.is_regular(x);

  // Every element of H_0^x is regular, so a non-regular x has no fiber point
  // in the open leaf.
  for (int s = 0; s < n; ++s) {
    Rng rng = root.split(static_cast<std::uint64_t>(s));
    const AlgVec h = random_h0x(L, rng);
    ++rep.scan_samples;
    if (L.is_regular(h)) ++rep.scan_regular;
  }
  const bool scan_ok = rep.scan_regular == rep.scan_samples;
  if (!rep.regular_input || !witness) {
    rep.pass = scan_ok && !rep.regular_input;
    return rep;
  }

  const HessPoint& base = *witness;
  if (!in_fiber(base, x) || !stratum(base).full())
    throw DomainError("regular_fiber_suite: witness is not in the open leaf");
  const std::vector<AlgVec> ks = L.centralizer_basis(x);
  Rng rng = root.split("centralizer");
  const int nn = L.n();
  const GrpElt ginv = base.g.inverse();
  for (int dir = 0; dir < 10; ++dir) {
    AlgVec k = L.zero();
    for (const AlgVec& kv : ks) k += rng.complex_gaussian() * kv;
    const double t = rng.uniform(0.2, 0.8);
    const Eigen::MatrixXcd m = (t * L.to_matrix(k)).exp();
    const GrpElt c = GrpElt::normalized(m);
    const HessPoint moved = translate(c, base);
    rep.max_fiber_stay = std::max(
        rep.max_fiber_stay, L.norm(mu0(moved) - x) / (1.0 + L.norm(x)));
    if (!stratum(moved).full()) ++rep.distinct_failures;
    // Distinct parameters give distinct points unless c is central.
    const bool central =
        (c.mat() - c.mat()(0, 0) * Eigen::MatrixXcd::Identity(nn, nn)).norm() <
        1e-9;
    if (points_equal(moved, base) != central) ++rep.distinct_failures;
  }

  // Fiber tangent rank modulo gauge directions, and Omega-isotropy.
  const Eigen::MatrixXcd gd = gauge_directions(base.x);
  std::vector<AlgVec> ys;
  Eigen::MatrixXcd fiber(2 * L.dim(), static_cast<int>(ks.size()));
  for (int j = 0; j < static_cast<int>(ks.size()); ++j) {
    ys.push_back(adjoint(L, ginv, ks[j]));
    fiber.col(j) << ys.back().coeffs, Eigen::VectorXcd::Zero(L.dim());
  }
  Eigen::MatrixXcd both(gd.rows(), gd.cols() + fiber.cols());
  both << gd, fiber;
  rep.fiber_rank = numerical_rank(both, 1e-8) - numerical_rank(gd, 1e-8);
  const AlgVec zero = L.zero();
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double scale = (1.0 + L.norm(base.x)) * L.norm(ys[i]) *
                           L.norm(ys[j]);
      rep.max_isotropy = std::max(
          rep.max_isotropy,
          std::abs(omega_big(L, base.x, ys[i], zero, ys[j], zero)) /
              std::max(scale, 1e-300));
    }
  rep.pass = scan_ok && rep.max_fiber_stay <= 1e-9 &&
             rep.distinct_failures == 0 && rep.fiber_rank == L.rank() &&
             rep.max_isotropy <= 1e-9;
  return rep;
}

StrataReport Hessenberg::strata_closure_suite(std::uint64_t seed,
                                              int n) const {
  const LieAlgebra& L = algebra();
  const int r = L.rank();
  if (r > 3) throw ConfigurationError("strata suite supports rank <= 3");
  const Rng root(seed);
  StrataReport rep;
  std::vector<std::pair<OrbitIndex, int>> seen;
  bool saw_full = false;
  for (int s = 0; s < n; ++s) {
    Rng rng = root.split(static_cast<std::uint64_t>(s));
    TodaPoint tp{rng.complex_gaussian_vector(r), Eigen::VectorXcd::Zero(r)};
    // Ensure every support pattern, including the full one, shows up.
    const int mask = s % (1 << r);
    for (int k = 0; k < r; ++k)
      if ((mask >> k) & 1) tp.c(k) = rng.complex_annulus(0.5, 2.0);
    const AlgVec x = -embed(L, tp) + random_u(L, rng);
    const HessPoint p{random_group(L, rng), x};
    const OrbitIndex idx = stratum(p);
    ++rep.samples;

    const GrpElt b = to_group(L, random_borel(L, rng));
    if (!same_index(stratum(gauge(p, b)), idx)) ++rep.gauge_failures;
    const GrpElt h = random_group(L, rng);
    if (!same_index(stratum(translate(h, p)), idx)) ++rep.translation_failures;
    if (h0x_contains(p.x) != idx.full()) ++rep.leaf_failures;

    if (s < 16) {
      const int dn = stratum_dim_numeric(p);
      if (dn != stratum_dim(idx)) ++rep.dim_failures;
      seen.emplace_back(idx, dn);
    }
    const int dim = stratum_dim(idx);
    if (idx.full()) saw_full = true;
    if ((dim == L.dim() + r) != idx.full()) ++rep.maximality_failures;
  }
  if (!saw_full) ++rep.maximality_failures;
  for (const auto& [p, dp] : seen)
    for (const auto& [q, dq] : seen)
      if (closure_leq(p, q) && dp > dq) ++rep.monotonicity_failures;

  // Degeneration curves lifted to X(H_0): fiber part -v(eps) + u-noise.
  Rng rng = root.split("closure");
  const std::vector<OrbitIndex> idx = sample_index_set(L, rng);
  const Eigen::VectorXcd drift = rng.complex_gaussian_vector(r);
  for (const OrbitIndex& target : idx)
    for (const OrbitIndex& source : idx) {
      const GrpElt g = random_group(L, rng);
      const AlgVec noise = random_u(L, rng);
      const HessPoint mid{
          g, noise - degeneration_curve(L, source, target, 0.37, drift)};
      const HessPoint lim{
          g, noise - degeneration_curve(L, source, target, 0.0, drift)};
      if (!same_index(stratum(mid), source)) ++rep.closure_failures;
      const bool lands = same_index(stratum(lim), target);
      if (lands != closure_leq(target, source)) ++rep.closure_failures;
      ++rep.pairs;
    }
  rep.pass = rep.gauge_failures == 0 && rep.translation_failures == 0 &&
             rep.leaf_failures == 0 && rep.dim_failures == 0 &&
             rep.maximality_failures == 0 && rep.monotonicity_failures == 0 &&
             rep.closure_failures == 0;
  return rep;
}

}  // namespace todaslice
