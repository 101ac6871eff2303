#include "todaslice/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "todaslice/errors.hpp"
#include "todaslice/hessenberg.hpp"
#include "todaslice/mfshift.hpp"
#include "todaslice/sampling.hpp"
#include "todaslice/slodowy.hpp"
#include "todaslice/toda.hpp"

namespace todaslice {

namespace {

// Secondary thresholds; each suite's primary threshold is its --tol.
constexpr double kDecompositionTol = 1e-9;
constexpr double kIdentityTol = 1e-9;
constexpr double kSigmaTol = 1e-8;
constexpr double kThetaTol = 1e-10;
constexpr double kRoundtripTol = 1e-9;
constexpr double kFlowOrderMin = 3.5;
constexpr double kFdOrderLo = 1.7;
constexpr double kFdOrderHi = 2.3;
constexpr double kPullbackStep = 1e-5;
constexpr double kCommuteTol = 1e-6;

struct Context {
  const SuiteParams& params;
  LieAlgebra L;
  InvariantFamily fam;
  int samples;
  double tol;
  Rng rng;
  SuiteReport& report;

  void metric(const std::string& name, double v) { report.metrics[name] = v; }
};

double rel(double num, double den) { return num / (1.0 + den); }

GrpElt center_free_ratio(const GrpElt& a, const GrpElt& b) {
  return a.inverse() * b;
}

bool is_central(const GrpElt& g, double tol) {
  const int n = g.n();
  const Eigen::MatrixXcd d =
      g.mat() - g.mat()(0, 0) * Eigen::MatrixXcd::Identity(n, n);
  return d.norm() <= tol * g.mat().norm();
}

bool mf_commute(Context& c) {
  std::vector<AlgVec> shifts{zeta(c.L)};
  for (int k = 0; k < 5; ++k) shifts.push_back(random_algvec(c.L, c.rng));
  double worst = 0.0;
  int pairs = 0;
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    const CommutationReport rep = check_commutation(
        c.fam, shifts[k], c.samples, c.tol,
        Rng::derive(c.rng.seed(), "shift" + std::to_string(k)));
    worst = std::max(worst, rep.max_normalized);
    pairs += rep.pairs;
  }
  c.metric("max_normalized_bracket", worst);
  c.metric("shifts", static_cast<double>(shifts.size()));
  c.metric("pairs_checked", pairs);
  return worst <= c.tol;
}

bool mf_independence(Context& c) {
  const LieAlgebra& L = c.L;
  int degree_sum = 0;
  for (int d : c.fam.degrees()) degree_sum += d;
  const AlgVec z = zeta(L);
  int min_rank = std::numeric_limits<int>::max();
  double decomposition = 0.0;
  for (int s = 0; s < c.samples; ++s) {
    const AlgVec x = random_algvec(L, c.rng);
    min_rank = std::min(min_rank, independence_rank(c.fam, z, x, c.tol));
    decomposition = std::max(decomposition, decomposition_residual(c.fam, x));
  }
  c.metric("ell", L.ell());
  c.metric("degree_sum", degree_sum);
  c.metric("min_gradient_rank", min_rank);
  c.metric("points", c.samples);
  c.metric("max_decomposition_residual", decomposition);
  return degree_sum == L.ell() && min_rank == L.ell() &&
         decomposition <= kDecompositionTol;
}

bool toda_orbits(Context& c) {
  const BijectivityReport b =
      orbit_action_bijectivity_suite(c.L, c.rng.seed(), c.samples);
  const PosetReport p =
      closure_poset_suite(c.L, Rng::derive(c.rng.seed(), "poset"));
  c.metric("trials", b.trials);
  c.metric("roundtrip_failures", b.roundtrip_failures);
  c.metric("witness_failures", b.witness_failures);
  c.metric("dimension_failures", b.dimension_failures);
  c.metric("max_witness_residual", b.max_witness_residual);
  c.metric("indices", p.indices);
  c.metric("comparable_pairs", p.comparable_pairs);
  c.metric("poset_axiom_failures", p.axiom_failures);
  c.metric("degeneration_failures", p.degeneration_failures);
  return b.pass && p.pass;
}

bool toda_flow(Context& c) {
  const TodaSystem toda(c.fam);
  const int r = toda.rank();
  double drift = 0.0, min_c = std::numeric_limits<double>::infinity();
  double min_order = std::numeric_limits<double>::infinity();
  bool aborted = false;
  for (int s = 0; s < c.samples; ++s) {
    const TodaPoint v0 = random_real_toda_point(c.L, c.rng);
    for (int i = 0; i < r; ++i) {
      const Trajectory tr = toda.flow(i, v0, 1.0, 1000);
      aborted = aborted || tr.aborted;
      drift = std::max(drift, tr.max_relative_drift);
      for (const TodaPoint& p : tr.points)
        min_c = std::min(min_c, p.c.cwiseAbs().minCoeff());
      // Self-convergence of the end point under step halving, at step
      // counts where the differences are still far above roundoff.
      const Trajectory a = toda.flow(i, v0, 1.0, 10);
      const Trajectory b = toda.flow(i, v0, 1.0, 20);
      const Trajectory d = toda.flow(i, v0, 1.0, 40);
      aborted = aborted || a.aborted || b.aborted || d.aborted;
      if (a.aborted || b.aborted || d.aborted) continue;
      const double e1 = (a.points.back().to_vector() -
                         b.points.back().to_vector()).norm();
      const double e2 = (b.points.back().to_vector() -
                         d.points.back().to_vector()).norm();
      min_order = std::min(min_order, std::log2(e1 / e2));
    }
  }
  c.metric("max_relative_drift", drift);
  c.metric("min_abs_c", min_c);
  c.metric("min_observed_order", min_order);
  c.metric("aborted", aborted ? 1 : 0);
  return !aborted && drift <= c.tol && min_order >= kFlowOrderMin &&
         min_c > 1e-12;
}

bool kostant_roundtrip(Context& c) {
  const Slice S(c.fam);
  const LieAlgebra& L = c.L;
  double inverse_err = 0.0, forward_err = 0.0, gamma_err = 0.0,
         height_one = 0.0;
  for (int s = 0; s < c.samples; ++s) {
    const AlgVec y0 = random_u(L, c.rng, 0.5);
    const SregPoint s0 = random_sreg(S, c.rng);
    const KostantSplit k = S.graded_kostant_inverse(S.kostant_forward(y0, s0));
    inverse_err = std::max(
        inverse_err, std::max(rel(L.norm(k.y - y0), L.norm(y0)),
                              rel((k.s.m - s0.m).norm(), s0.m.norm())));

    AlgVec w = S.triple().xi + random_u(L, c.rng) + random_cartan(L, c.rng);
    const KostantSplit kw = S.graded_kostant_inverse(w);
    forward_err = std::max(
        forward_err, rel(L.norm(S.kostant_forward(kw.y, kw.s) - w), L.norm(w)));

    const AlgVec z = random_cartan(L, c.rng);
    const AlgVec g = S.gamma(z);
    const AlgVec gy = S.graded_kostant_inverse(S.triple().xi + z).y;
    gamma_err = std::max(gamma_err, rel(L.norm(g + gy), L.norm(gy)));
    const AlgVec tail = g + L.simple_positive(L.cartan_coords(z));
    height_one = std::max(
        height_one, rel(L.norm(L.graded_component(tail, 1)), L.norm(z)));
  }
  c.metric("max_inverse_error", inverse_err);
  c.metric("max_forward_residual", forward_err);
  c.metric("max_gamma_vs_graded", gamma_err);
  c.metric("max_gamma_height_one", height_one);
  return inverse_err <= c.tol && forward_err <= kRoundtripTol &&
         gamma_err <= c.tol && height_one <= c.tol;
}

bool kappa_embed(Context& c) {
  const Slice S(c.fam);
  const LieAlgebra& L = c.L;
  double sreg = 0.0, inclusion = 0.0, sigma = 0.0, theta = 0.0;
  int upper_failures = 0, regular_failures = 0, injectivity_failures = 0;
  std::vector<std::pair<TodaPoint, KappaImage>> seen;
  for (int s = 0; s < c.samples; ++s) {
    const TodaPoint v = random_toda_point(L, c.rng);
    const AlgVec x = embed(L, v);
    const GrpElt t = torus_lift(L, S.theta(v));
    theta = std::max(theta, rel(L.norm(adjoint(L, t, x) - S.triple().xi -
                                       L.cartan(v.a)),
                                L.norm(x)));
    const GrpElt g = S.nu(v);
    if (!is_in_borel(g, 1e-10)) ++upper_failures;
    sreg = std::max(sreg,
                    S.membership_residual(adjoint(L, g.inverse(), x)));
    const KappaImage k = S.kappa(v);
    if (!L.is_regular(S.embed(k.s))) ++regular_failures;
    const EmbeddingReport e = S.embedding_residuals(v);
    sigma = std::max(sigma, e.sigma_residual);
    inclusion = std::max(inclusion, e.inclusion_residual);
    for (const auto& [v2, k2] : seen) {
      const bool same_s = (k.s.m - k2.s.m).norm() <= 1e-6;
      const bool same_g = is_central(center_free_ratio(k.g, k2.g), 1e-6);
      if (same_s && same_g) ++injectivity_failures;
    }
    if (seen.size() < 10) seen.emplace_back(v, k);
  }
  c.metric("max_sreg_residual", sreg);
  c.metric("max_inclusion_residual", inclusion);
  c.metric("max_sigma_residual", sigma);
  c.metric("max_theta_residual", theta);
  c.metric("nu_not_upper_triangular", upper_failures);
  c.metric("slice_not_regular", regular_failures);
  c.metric("injectivity_failures", injectivity_failures);
  return sreg <= c.tol && inclusion <= c.tol && sigma <= kSigmaTol &&
         theta <= kThetaTol && upper_failures == 0 && regular_failures == 0 &&
         injectivity_failures == 0;
}

bool kappa_symplectic(Context& c) {
  const Slice S(c.fam);
  double worst = 0.0;
  TodaPoint first;
  for (int s = 0; s < c.samples; ++s) {
    const TodaPoint v = random_toda_point(c.L, c.rng);
    if (s == 0) first = v;
    worst = std::max(worst, S.kappa_pullback(v, kPullbackStep).relative());
  }
  // Truncation error of the central differences at coarse steps.
  const double e1 = S.kappa_pullback(first, 2e-2).relative();
  const double e2 = S.kappa_pullback(first, 1e-2).relative();
  const double order = std::log2(e1 / e2);
  c.metric("max_relative_gram_difference", worst);
  c.metric("fd_step", kPullbackStep);
  c.metric("coarse_error_2e-2", e1);
  c.metric("coarse_error_1e-2", e2);
  c.metric("observed_fd_order", order);
  return worst <= c.tol && order >= kFdOrderLo && order <= kFdOrderHi;
}

bool b_stabilizer(Context& c) {
  const Slice S(c.fam);
  const LieAlgebra& L = c.L;
  double min_margin = S.b_stabilizer_margin({Eigen::VectorXcd::Zero(L.rank())});
  const double xi_margin = min_margin;
  int nullity_failures = 0;
  for (int s = 0; s < c.samples; ++s) {
    const SregPoint p = random_sreg(S, c.rng);
    min_margin = std::min(min_margin, S.b_stabilizer_margin(p));
    const int nullity = L.dim() - numerical_rank(L.ad_matrix(S.embed(p)), 1e-8);
    if (nullity != L.rank()) ++nullity_failures;
  }
  c.metric("min_normalized_margin", min_margin);
  c.metric("xi_margin", xi_margin);
  c.metric("full_nullity_failures", nullity_failures);
  return min_margin > c.tol && nullity_failures == 0;
}

bool strata(Context& c) {
  const Hessenberg H(c.fam);
  const StrataReport r = H.strata_closure_suite(c.rng.seed(), c.samples);
  c.metric("samples", r.samples);
  c.metric("gauge_failures", r.gauge_failures);
  c.metric("translation_failures", r.translation_failures);
  c.metric("leaf_failures", r.leaf_failures);
  c.metric("dim_failures", r.dim_failures);
  c.metric("maximality_failures", r.maximality_failures);
  c.metric("monotonicity_failures", r.monotonicity_failures);
  c.metric("closure_pairs", r.pairs);
  c.metric("closure_failures", r.closure_failures);
  c.metric("open_leaf_dim", c.L.dim() + c.L.rank());
  return r.pass;
}

bool open_leaf(Context& c) {
  const Hessenberg H(c.fam);
  const Slice& S = H.slice();
  const LieAlgebra& L = c.L;
  int image_failures = 0, injectivity_failures = 0, witness_failures = 0;
  double triangle = 0.0, witness = 0.0, tau_ext = 0.0;
  for (int s = 0; s < c.samples; ++s) {
    const GrpElt g = random_group(L, c.rng);
    const SregPoint sp = random_sreg(S, c.rng);
    const HessPoint p = H.varphi(g, sp);
    if (!H.stratum(p).full()) ++image_failures;
    const AlgVec mu = adjoint(L, g, S.embed(sp));
    triangle = std::max(triangle, rel(L.norm(H.mu0(p) - mu), L.norm(mu)));

    // Injectivity mod Z: a gauge-equivalent representative leads back to
    // the same slice point and a central discrepancy.
    const HessPoint q = H.gauge(p, to_group(L, random_borel(L, c.rng)));
    const KappaImage back = H.leaf_surjectivity_witness(q);
    if ((back.s.m - sp.m).norm() > c.tol * (1.0 + sp.m.norm()) ||
        !is_central(center_free_ratio(back.g, g), c.tol))
      ++injectivity_failures;
    const HessPoint other = H.varphi(g, random_sreg(S, c.rng));
    if (H.points_equal(p, other)) ++injectivity_failures;

    // Surjectivity onto the open leaf.
    const HessPoint r{random_group(L, c.rng), random_h0x(L, c.rng)};
    const KappaImage w = H.leaf_surjectivity_witness(r);
    const HessPoint rp = H.varphi(w.g, w.s);
    if (!H.points_equal(rp, r, c.tol)) ++witness_failures;
    witness = std::max(witness, rel(L.norm(H.mu0(rp) - H.mu0(r)),
                                    L.norm(H.mu0(r))));

    for (int k = 0; k < S.shift_family().size(); ++k) {
      const cplx a = H.tilde_tau(k, p);
      const cplx b = S.tau(k, g, sp);
      tau_ext = std::max(tau_ext, std::abs(a - b) / (1.0 + std::abs(b)));
    }
  }
  c.metric("image_failures", image_failures);
  c.metric("injectivity_failures", injectivity_failures);
  c.metric("witness_failures", witness_failures);
  c.metric("max_mu_triangle", triangle);
  c.metric("max_witness_residual", witness);
  c.metric("max_tau_extension", tau_ext);
  return image_failures == 0 && injectivity_failures == 0 &&
         witness_failures == 0 && triangle <= c.tol && witness <= c.tol &&
         tau_ext <= c.tol;
}

bool regular_fibers(Context& c) {
  const Hessenberg H(c.fam);
  const LieAlgebra& L = c.L;
  const GrpElt g = random_group(L, c.rng);
  const SregPoint sp = random_sreg(H.slice(), c.rng);
  const HessPoint base = H.varphi(g, sp);
  const AlgVec x = H.mu0(base);
  const RegularFiberReport r =
      H.regular_fiber_suite(x, base, c.rng.seed(), c.samples);
  const RegularFiberReport z = H.regular_fiber_suite(
      L.zero(), std::nullopt, Rng::derive(c.rng.seed(), "zero"), 20);
  c.metric("scan_samples", r.scan_samples);
  c.metric("scan_regular", r.scan_regular);
  c.metric("max_fiber_stay", r.max_fiber_stay);
  c.metric("distinct_failures", r.distinct_failures);
  c.metric("fiber_rank", r.fiber_rank);
  c.metric("max_isotropy", r.max_isotropy);
  c.metric("zero_input_reported_empty", z.pass && !z.regular_input ? 1 : 0);
  return r.pass && z.pass && r.max_fiber_stay <= c.tol &&
         r.max_isotropy <= c.tol;
}

bool tau_extension(Context& c) {
  const Hessenberg H(c.fam);
  const Slice& S = H.slice();
  const ShiftFamily& sf = S.shift_family();
  const LieAlgebra& L = c.L;
  double ext = 0.0, gauge = 0.0, base = 0.0, bracket = 0.0;
  for (int s = 0; s < c.samples; ++s) {
    const GrpElt g = random_group(L, c.rng);
    const SregPoint sp = random_sreg(S, c.rng);
    const HessPoint p = H.varphi(g, sp);
    const HessPoint q = H.gauge(p, to_group(L, random_borel(L, c.rng)));
    const AlgVec mu = H.mu0(p);
    const Eigen::VectorXcd tau = S.taus(g, sp);
    for (int k = 0; k < sf.size(); ++k) {
      const cplx tp = H.tilde_tau(k, p);
      ext = std::max(ext, std::abs(tp - tau(k)) / (1.0 + std::abs(tau(k))));
      gauge = std::max(gauge, std::abs(H.tilde_tau(k, q) - tp) /
                                  (1.0 + std::abs(tp)));
      if (k < L.rank()) {
        const cplx f = c.fam.value(k, mu);
        base = std::max(base, std::abs(tp - f) / (1.0 + std::abs(f)));
      }
    }
    if (s < 10) {
      const std::vector<AlgVec> grads = sf.gradients(mu);
      for (int k = 0; k < sf.size(); ++k)
        for (int m = k + 1; m < sf.size(); ++m)
          bracket = std::max(bracket,
                             normalized_bracket(L, grads[k], grads[m], mu));
    }
  }
  c.metric("max_extension_residual", ext);
  c.metric("max_gauge_residual", gauge);
  c.metric("max_base_member_residual", base);
  c.metric("max_normalized_bracket", bracket);
  return ext <= c.tol && gauge <= kIdentityTol && base <= c.tol &&
         bracket <= kCommuteTol;
}

struct Entry {
  SuiteInfo info;
  std::function<bool(Context&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> kEntries = {
      {{"mf-commute",
        "shifted invariants f^a_k pairwise Poisson-commute (a = zeta and 5 "
        "random a)",
        100, 1e-6},
       mf_commute},
      {{"mf-independence",
        "gradients of the l shifted invariants have full rank at generic x; "
        "sum of degrees equals l",
        20, 1e-8},
       mf_independence},
      {{"toda-orbits",
        "B-orbits in V_Toda are labelled bijectively by (S, z); closure order "
        "matches degeneration curves",
        200, 1e-9},
       toda_orbits},
      {{"toda-flow",
        "Toda Hamiltonian flows conserve all sigma_j and stay in O_Toda (RK4)",
        1, 1e-6},
       toda_flow},
      {{"kostant-roundtrip",
        "U x S_reg -> xi + b is inverted by the graded solver; gamma agrees",
        100, 1e-8},
       kostant_roundtrip},
      {{"kappa-embed",
        "kappa lands in G/Z x S_reg, inverts under Ad, and carries sigma_i to "
        "sums of tau_j",
        50, 1e-9},
       kappa_embed},
      {{"kappa-symplectic",
        "pullback of Omega along kappa equals omega_Toda (finite differences)",
        50, 1e-4},
       kappa_symplectic},
      {{"b-stabilizer",
        "ad_{xi+m} is injective on b at slice points", 20, 1e-8},
       b_stabilizer},
      {{"strata",
        "strata of X(H_0) are gauge and G invariant, dimensions match, open "
        "leaf is the full-support stratum, closures follow the order",
        100, 1e-9},
       strata},
      {{"open-leaf",
        "phi: G/Z x S_reg -> X(H_0) is injective onto the open leaf and "
        "compatible with the moment maps",
        50, 1e-8},
       open_leaf},
      {{"regular-fibers",
        "H_0^x lies in g_reg; fibers over regular x are centralizer orbits, "
        "of dimension r and isotropic",
        200, 1e-9},
       regular_fibers},
      {{"tau-extension",
        "tilde tau restricts to tau along phi and is gauge invariant", 50,
        1e-10},
       tau_extension},
  };
  return kEntries;
}

const Entry& entry(std::string_view id) {
  for (const Entry& e : entries())
    if (e.info.id == id) return e;
  throw UsageError("unknown suite '" + std::string(id) + "'");
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> kInfo = [] {
    std::vector<SuiteInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return kInfo;
}

const SuiteInfo& suite_info(std::string_view id) { return entry(id).info; }

SuiteReport run_suite(std::string_view id, const SuiteParams& params) {
  const Entry& e = entry(id);
  if (params.samples < 0) throw ConfigurationError("samples must be >= 0");
  if (params.tol < 0 || !std::isfinite(params.tol))
    throw ConfigurationError("tol must be a finite nonnegative number");
  const RootSystem rs = RootSystem::build(params.type, params.rank);
  const LieAlgebra L = LieAlgebra::build(rs);

  SuiteReport report;
  report.suite_id = e.info.id;
  report.anchor = e.info.anchor;
  report.type = to_string(params.type);
  report.rank = params.rank;
  report.seed = params.seed;
  report.samples = params.samples > 0 ? params.samples : e.info.default_samples;
  report.tol = params.tol > 0 ? params.tol : e.info.default_tol;

  const auto start = std::chrono::steady_clock::now();
  Context ctx{params,         L,
              InvariantFamily(L), report.samples,
              report.tol,     Rng(Rng::derive(params.seed, e.info.id)),
              report};
  report.pass = e.run(ctx);
  if (params.timing) {
    const std::chrono::duration<double> dt =
        std::chrono::steady_clock::now() - start;
    report.duration = dt.count();
  }
  return report;
}

RunAllResult run_all(const SuiteParams& params) {
  RunAllResult out;
  for (const Entry& e : entries()) {
    out.reports.push_back(run_suite(e.info.id, params));
    if (!out.reports.back().pass) out.exit_code = 1;
  }
  return out;
}

std::string format_complex(std::complex<double> z) {
  char buf[96];
  if (std::abs(z.imag()) <= 1e-14 * (1.0 + std::abs(z.real()))) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
  }
  return buf;
}

bool emit_trajectory(const TrajectoryParams& params, std::ostream& out) {
  if (params.steps < 0) throw ConfigurationError("steps must be >= 0");
  if (!(params.t_end >= 0.0) || !std::isfinite(params.t_end))
    throw ConfigurationError("t_end must be a finite nonnegative number");
  const RootSystem rs = RootSystem::build(params.type, params.rank);
  const LieAlgebra L = LieAlgebra::build(rs);
  const TodaSystem toda{InvariantFamily(L)};
  const int r = L.rank();
  if (params.hamiltonian < 0 || params.hamiltonian >= r)
    throw ConfigurationError("hamiltonian index out of range");
  Rng rng(Rng::derive(params.seed, "trajectory"));
  const TodaPoint v0 = random_real_toda_point(L, rng);

  out << "t";
  for (const char* p : {"a", "c", "sigma"})
    for (int k = 1; k <= r; ++k) out << ',' << p << '_' << k;
  out << '\n';

  const bool single = params.steps == 0 || params.t_end == 0.0;
  const Trajectory tr =
      toda.flow(params.hamiltonian, v0, single ? 0.0 : params.t_end,
                single ? 1 : params.steps);
  char buf[64];
  for (std::size_t s = 0; s < tr.t.size(); ++s) {
    std::snprintf(buf, sizeof buf, "%.17g", tr.t[s]);
    out << buf;
    const TodaPoint& p = tr.points[s];
    for (int k = 0; k < r; ++k) out << ',' << format_complex(p.a(k));
    for (int k = 0; k < r; ++k) out << ',' << format_complex(p.c(k));
    for (int k = 0; k < r; ++k) out << ',' << format_complex(tr.sigmas[s](k));
    out << '\n';
  }
  if (tr.aborted) {
    const double dt = params.t_end / params.steps;
    std::snprintf(buf, sizeof buf, "%.17g", tr.t.back() + dt);
    out << "ABORT," << buf << '\n';
    return false;
  }
  return true;
}

}  // namespace todaslice
