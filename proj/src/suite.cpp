#include "lw/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "lw/carl.hpp"
#include "lw/entropy.hpp"
#include "lw/errors.hpp"
#include "lw/lipbounds.hpp"
#include "lw/network.hpp"
#include "lw/norms.hpp"
#include "lw/rng.hpp"
#include "lw/takagi.hpp"
#include "lw/widths.hpp"

namespace lw {

namespace {

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool close12(double x, double y) { return std::fabs(x - y) <= 1e-12; }

bool same_rate(const RateFunction& a, const RateFunction& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RateFunction::Kind::polylog:
      return close12(a.alpha, b.alpha) && close12(a.beta, b.beta);
    case RateFunction::Kind::loginv:
      return close12(a.alpha, b.alpha);
    case RateFunction::Kind::expo:
      return close12(a.c, b.c) && close12(a.a, b.a) && close12(a.b, b.b);
  }
  return false;
}

// ---- 1: the weighted hat sum with lambda = 4 reproduces t(1-t) ----

std::pair<bool, std::string> check_takagi_identity(const SuiteOptions& opts) {
  const int n_max = opts.quick ? 12 : 25;
  const int grid = 4097;
  double worst_ratio = 0.0;
  int worst_n = 0;
  for (int n = 1; n <= n_max; ++n) {
    TakagiSpec spec = TakagiSpec::from_lambda(4.0, n);
    if (opts.inject_takagi_fault) spec.coefficients[0] += 1e-3;
    const double tol = std::exp2(-2.0 * n) / 3.0;
    double err = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double t = static_cast<double>(i) / (grid - 1);
      err = std::max(err, std::fabs(psi(spec, t) - t * (1.0 - t)));
    }
    if (err / tol > worst_ratio) {
      worst_ratio = err / tol;
      worst_n = n;
    }
  }
  return {worst_ratio <= 1.0,
          fmt("max err/tol %.3g at n=%d over n in [1,%d], 4097-point grid",
              worst_ratio, worst_n, n_max)};
}

// ---- 2: the width-4 network computes the hat sum, bound constant in depth ----

std::pair<bool, std::string> check_network_matches_sum(const SuiteOptions& opts) {
  const int n_max = opts.quick ? 8 : 20;
  const int grid = 4097;
  double worst = 0.0;
  bool bound_constant = true;
  for (double lambda : {2.0, 4.0}) {
    double first_bound = 0.0;
    for (int n = 1; n <= n_max; ++n) {
      TakagiSpec spec = TakagiSpec::from_lambda(lambda, n);
      TakagiSpec net_spec = spec;
      if (opts.inject_takagi_fault) net_spec.coefficients.back() *= -1.0;
      TakagiNetwork tn = build_takagi_network(net_spec);
      std::vector<double> out = evaluate_unit_grid(tn.net, grid);
      for (int i = 0; i < grid; ++i) {
        const double t = static_cast<double>(i) / (grid - 1);
        worst = std::max(worst, std::fabs(out[static_cast<std::size_t>(i)] - psi(spec, t)));
      }
      if (n == 1) {
        first_bound = tn.param_bound;
      } else if (tn.param_bound != first_bound) {
        bound_constant = false;
      }
    }
  }
  return {worst <= 1e-10 && bound_constant,
          fmt("max |net - sum| %.3g (need <= 1e-10), param bound constant: %s",
              worst, bound_constant ? "yes" : "no")};
}

// ---- 3: sampled slope <= layer recursion <= closed form on random configs ----

std::pair<bool, std::string> check_lipschitz_sandwich(const SuiteOptions& opts) {
  const int configs = opts.quick ? 12 : 50;
  int violations = 0;
  double tightest = std::numeric_limits<double>::infinity();
  for (int t = 0; t < configs; ++t) {
    Rng rng = stream_rng(opts.seed, 300 + static_cast<std::uint64_t>(t));
    NetLayout layout;
    layout.W = 2 + static_cast<int>(rng.next_below(3));
    layout.depth = 1 + static_cast<int>(rng.next_below(5));
    layout.d = 1 + static_cast<int>(rng.next_below(2));
    const double w = rng.next_below(2) ? 2.0 : 1.0;
    const bool use_relu = t % 2 == 0;
    LipschitzCertificate cert =
        use_relu ? deep_bound_relu(layout.d, layout.W, w, layout.depth)
                 : deep_bound_sigmoidal(layout.d, layout.W, 1.0, w, layout.depth);
    EmpiricalOptions eo;
    eo.trials = opts.quick ? 40 : 120;
    eo.grid_points = 65;
    eo.seed = opts.seed + 17 * static_cast<std::uint64_t>(t);
    const Activation act = use_relu ? Activation::relu() : Activation::sigmoidal();
    const double emp = empirical_lipschitz(layout, act, w, eo);
    const bool ok = emp <= cert.value * (1.0 + 1e-9) &&
                    cert.value <= cert.closed_form * (1.0 + 1e-9);
    if (!ok) ++violations;
    if (emp > 0.0) tightest = std::min(tightest, cert.value / emp);
  }
  return {violations == 0,
          fmt("%d/%d configs ordered (sampled <= recursion <= closed form), "
              "min certificate/sampled %.3g",
              configs - violations, configs, tightest)};
}

// ---- 4: entropy brackets of the dyadic grid pin 2^-(n+1) ----

std::pair<bool, std::string> check_dyadic_entropy(const SuiteOptions& opts) {
  PointCloudSet K = uniform_grid_cloud(4097);
  const int n_max = opts.quick ? 4 : 6;
  bool ok = true;
  double worst_width = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    EntropyBracket b = entropy_number(K, n, 1e-4);
    const double target = std::exp2(-(n + 1.0));
    if (!(b.lower <= target + 1e-12 && target <= b.upper + 1e-12)) ok = false;
    worst_width = std::max(worst_width, b.upper - b.lower);
  }
  return {ok && worst_width <= 1e-4,
          fmt("brackets hold 2^-(n+1) for n in [0,%d], max width %.3g", n_max,
              worst_width)};
}

// ---- 5: sigma-set entropy decays like 1/n with a single constant pair ----

std::pair<bool, std::string> check_sigma_rate(const SuiteOptions& opts) {
  const int n_max = opts.quick ? 3 : 5;
  double c1 = std::numeric_limits<double>::infinity();
  double c2 = 0.0;
  double degenerate_upper = 0.0;
  for (int J : {20, 40}) {
    PointCloudSet K = sigma_set(J);
    for (int n = 1; n <= n_max; ++n) {
      EntropyBracket b = entropy_number(K, n, 1e-6);
      const bool informative = (std::uint64_t{1} << n) <= static_cast<std::uint64_t>(J);
      if (!informative) {
        // 2^n balls already cover every point; the bracket must collapse.
        degenerate_upper = std::max(degenerate_upper, b.upper);
        continue;
      }
      double lower = b.method == "exact"
                         ? b.lower
                         : std::min(packing_lower_bound(K, n), b.upper);
      c1 = std::min(c1, n * lower);
      c2 = std::max(c2, n * b.upper);
    }
  }
  const bool ok = c1 > 0.0 && c2 / c1 <= 8.0 && degenerate_upper <= 1e-9;
  return {ok, fmt("n*eps_n in [%.5f, %.5f], ratio %.3f (need <= 8), "
                  "degenerate upper %.3g",
                  c1, c2, c2 / c1, degenerate_upper)};
}

// ---- 6: lattice cover of the 3-coefficient hat family, verified ----

std::pair<bool, std::string> check_constructive_cover(const SuiteOptions& opts) {
  const int grid = 129;
  std::vector<double> nodes(grid);
  for (int i = 0; i < grid; ++i) nodes[i] = static_cast<double>(i) / (grid - 1);
  Norm ambient = Norm::sup_grid(nodes);
  const double gamma = 3.0;  // sum of three unit-height pieces
  ParamMap map = [nodes](std::span<const double> y) {
    std::vector<double> f(nodes.size(), 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (int k = 0; k < 3; ++k) f[i] += y[k] * hat_iterate(k + 1, nodes[i]);
    }
    return f;
  };
  const int samples = opts.quick ? 300 : 1000;
  Rng rng = stream_rng(opts.seed, 41);
  std::vector<std::vector<double>> verify(static_cast<std::size_t>(samples));
  for (auto& p : verify) {
    p = {rng.next_symmetric(1.0), rng.next_symmetric(1.0), rng.next_symmetric(1.0)};
  }
  std::vector<double> eps_list = opts.quick ? std::vector<double>{0.5}
                                            : std::vector<double>{0.5, 0.25};
  bool ok = true;
  std::string sizes;
  for (double eps : eps_list) {
    Cover cover = cover_from_lipschitz(map, gamma, 3, eps, ambient, verify);
    const double budget = std::pow(2.0 * std::ceil(gamma / eps) + 1.0, 3.0);
    if (!cover.verified || static_cast<double>(cover.centers.size()) > budget) ok = false;
    sizes += fmt("%s%zu<=%.0f @eps=%.2f", sizes.empty() ? "" : ", ",
                 cover.centers.size(), budget, eps);
  }
  return {ok, "verified covers with sizes " + sizes};
}

// ---- 7: width uppers and entropy lowers never contradict the transfer ----

struct CorpusPiece {
  EntropyProfile profile;
  std::vector<WidthDatum> widths;
};

WidthDatum width_datum(const PointCloudSet& K, const LipschitzParametrization& par,
                       double delta) {
  WidthEstimate est = width_upper(K, par, linf_lattice(par.param_dim, delta), delta);
  return {static_cast<double>(est.n), est.gamma, est.upper};
}

std::pair<bool, std::string> check_consistency(const SuiteOptions& opts) {
  std::vector<CorpusPiece> corpus;

  {  // dyadic interval grid with a one-parameter linear family
    PointCloudSet K = uniform_grid_cloud(opts.quick ? 257 : 1025);
    CorpusPiece piece;
    piece.profile = entropy_profile(K, opts.quick ? 6 : 8, 1e-5);
    LipschitzParametrization par;
    par.param_dim = 1;
    par.radius = 1.0;
    par.constant = 0.5;
    par.description = "interval(y) = (y+1)/2";
    par.map = [](std::span<const double> y) {
      return std::vector<double>{(y[0] + 1.0) / 2.0};
    };
    piece.widths.push_back(width_datum(K, par, 1.0 / 64.0));
    piece.widths.push_back(width_datum(K, par, 1.0 / 16.0));
    corpus.push_back(std::move(piece));
  }

  for (int J : opts.quick ? std::vector<int>{20} : std::vector<int>{20, 40}) {
    PointCloudSet K = sigma_set(J);
    CorpusPiece piece;
    piece.profile = entropy_profile(K, opts.quick ? 4 : 5, 1e-5);
    LipschitzParametrization par;
    par.param_dim = 2;
    par.radius = 1.0;
    par.constant = 0.5;
    par.description = "first two spike heights";
    par.map = [J](std::span<const double> y) {
      std::vector<double> p(static_cast<std::size_t>(J), 0.0);
      p[0] = sigma_value(1) * (y[0] + 1.0) / 2.0;
      p[1] = sigma_value(2) * (y[1] + 1.0) / 2.0;
      return p;
    };
    piece.widths.push_back(width_datum(K, par, 1.0 / 8.0));
    corpus.push_back(std::move(piece));
  }

  {  // sampled three-coefficient hat sums against their own family
    const int grid = 65;
    std::vector<double> nodes(grid);
    for (int i = 0; i < grid; ++i) nodes[i] = static_cast<double>(i) / (grid - 1);
    auto sample = [&nodes](std::span<const double> y) {
      std::vector<double> f(nodes.size(), 0.0);
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (int k = 0; k < 3; ++k) f[i] += y[k] * hat_iterate(k + 1, nodes[i]);
      }
      return f;
    };
    const int count = opts.quick ? 16 : 40;
    Rng rng = stream_rng(opts.seed, 55);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < count; ++i) {
      std::vector<double> y = {rng.next_symmetric(1.0), rng.next_symmetric(1.0),
                               rng.next_symmetric(1.0)};
      pts.push_back(sample(y));
    }
    PointCloudSet K(std::move(pts), Norm::sup_grid(nodes), "hat-family samples");
    CorpusPiece piece;
    piece.profile = entropy_profile(K, 6, 1e-5);
    LipschitzParametrization par;
    par.param_dim = 3;
    par.radius = 1.0;
    par.constant = 3.0;
    par.description = "three-coefficient hat sums";
    par.map = sample;
    piece.widths.push_back(width_datum(K, par, 0.25));
    corpus.push_back(std::move(piece));
  }

  int checked = 0, skipped = 0, violations = 0;
  for (const auto& piece : corpus) {
    ConsistencyReport report = check_carl_consistency(piece.profile, piece.widths);
    checked += report.checked;
    skipped += report.skipped;
    violations += static_cast<int>(report.violations.size());
  }
  return {violations == 0 && checked > 0,
          fmt("%d assertions checked, %d outside tabulated range, %d violations",
              checked, skipped, violations)};
}

// ---- 8: budget table rows and their induced lower-bound exponents ----

struct TableRow {
  BoundFamily family;
  bool deep;
  GrowthFunction::Kind phi_kind;
  double phi_p, phi_q;          // for the power kind
  RateFunction expect_polylog;  // induced bound for polylog(alpha0, beta0)
};

std::pair<bool, std::string> check_table_reproduction(const SuiteOptions&) {
  const double a0 = 1.5, b0 = 0.5;  // sample entropy exponents
  const RateFunction in = RateFunction::polylog(a0, b0);
  std::vector<TableRow> rows = {
      {BoundFamily::constant(2.0), true, GrowthFunction::Kind::linear, 1.0, 0.0,
       RateFunction::polylog(2 * a0, b0)},
      {BoundFamily::polynomial(1.0, 2.0), true, GrowthFunction::Kind::nlogn, 1.0, 1.0,
       RateFunction::polylog(2 * a0, b0 - a0)},
      {BoundFamily::exponential(1.0, 1.0, 0.5), true, GrowthFunction::Kind::power, 1.5,
       0.0, RateFunction::polylog(2.5 * a0, b0)},
      {BoundFamily::polynomial(2.0, 1.0), false, GrowthFunction::Kind::power, 0.0, 1.0,
       RateFunction::polylog(a0, b0 - a0)},
      {BoundFamily::exponential(1.0, 1.0, 0.75), false, GrowthFunction::Kind::power,
       0.75, 0.0, RateFunction::polylog(1.75 * a0, b0)},
  };
  int bad = 0;
  for (const auto& row : rows) {
    PhiGamma pg = phi_gamma_of(row.family, 64.0, row.deep);
    bool ok = pg.phi.kind == row.phi_kind && pg.phi.c > 0.0 &&
              pg.log2_gamma == pg.phi_value;
    if (pg.phi.kind == GrowthFunction::Kind::power) {
      ok = ok && close12(pg.phi.p, row.phi_p) && close12(pg.phi.q, row.phi_q);
    }
    // The same row must come out of the generic transfer and the direct
    // architecture bound, for both rate kinds.
    RateFunction via_phi = width_lower_rate(in, pg.phi);
    NNLowerBound direct = row.deep ? nn_lower_bound_deep(in, row.family, 64.0)
                                   : nn_lower_bound_shallow(in, row.family, 64.0);
    ok = ok && same_rate(via_phi, row.expect_polylog) &&
         same_rate(direct.rate, row.expect_polylog);
    const RateFunction log_in = RateFunction::loginv(2.0);
    NNLowerBound log_out = row.deep ? nn_lower_bound_deep(log_in, row.family, 64.0)
                                    : nn_lower_bound_shallow(log_in, row.family, 64.0);
    ok = ok && same_rate(log_out.rate, log_in) &&
         same_rate(width_lower_rate(log_in, pg.phi), log_in);
    if (!ok) ++bad;
  }
  return {bad == 0, fmt("%zu/%zu budget rows reproduced symbolically",
                        rows.size() - static_cast<std::size_t>(bad), rows.size())};
}

// ---- 9: golden exponent table for the error -> entropy transfer ----

std::pair<bool, std::string> check_rate_transfer(const SuiteOptions&) {
  const RateFunction pl = RateFunction::polylog(3.0, 1.0);
  const RateFunction ex = RateFunction::expo(2.0, 1.0);
  const BoundFamily poly = BoundFamily::polynomial(1.0, 2.0);
  const BoundFamily expo2 = BoundFamily::exponential(1.0, 1.0, 2.0);
  struct Golden {
    RateFunction err;
    BoundFamily wfam;
    bool deep;
    RateFunction expect;
  };
  std::vector<Golden> table = {
      {pl, poly, true, RateFunction::polylog(1.5, 2.5)},
      {pl, expo2, true, RateFunction::polylog(0.75, 1.0)},
      {ex, poly, true, RateFunction::expo(2.0, 0.5, -0.5)},
      {ex, expo2, true, RateFunction::expo(2.0, 0.25)},
      {pl, poly, false, RateFunction::polylog(3.0, 4.0)},
      {pl, expo2, false, RateFunction::polylog(1.0, 1.0)},
      {ex, poly, false, RateFunction::expo(2.0, 0.5)},
      {ex, expo2, false, RateFunction::expo(2.0, 1.0 / 3.0)},
  };
  int bad = 0;
  for (const auto& g : table) {
    RateFunction out = entropy_upper_from_nn_error(g.err, g.wfam, g.deep);
    if (!same_rate(out, g.expect)) ++bad;
  }
  return {bad == 0, fmt("%zu/%zu exponent combinations match",
                        table.size() - static_cast<std::size_t>(bad), table.size())};
}

// ---- 10: branch-and-bound covering equals the exhaustive reference ----

std::pair<bool, std::string> check_setcover_oracle(const SuiteOptions& opts) {
  const int clouds = opts.quick ? 60 : 200;
  int mismatches = 0, comparisons = 0;
  for (int t = 0; t < clouds; ++t) {
    Rng rng = stream_rng(opts.seed, 7000 + static_cast<std::uint64_t>(t));
    const int dim = 1 + t % 3;
    const int count = 4 + static_cast<int>(rng.next_below(7));
    Norm norm = Norm::linf(dim);
    switch (t % 4) {
      case 1:
        norm = Norm::lp(2.0, dim);
        break;
      case 2:
        norm = Norm::lp(1.0, dim);
        break;
      case 3: {
        std::vector<double> g = {0.0, 0.5, 1.0};
        g.resize(static_cast<std::size_t>(dim));
        norm = Norm::sup_grid(g);
        break;
      }
      default:
        break;
    }
    std::vector<std::vector<double>> pts(static_cast<std::size_t>(count));
    for (auto& p : pts) {
      p.resize(static_cast<std::size_t>(dim));
      for (auto& x : p) x = rng.next_symmetric(1.0);
    }
    PointCloudSet K(std::move(pts), norm);
    const double diam = K.diameter();
    std::vector<double> eps_list = {0.15 * diam, 0.3 * diam, 0.55 * diam};
    if (t % 5 == 0) eps_list.push_back(0.0);
    for (double eps : eps_list) {
      ++comparisons;
      if (covering_number(K, eps, CoverMode::exact) != covering_number_oracle(K, eps)) {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0, fmt("%d covering comparisons on %d clouds, %d mismatches",
                               comparisons, clouds, mismatches)};
}

template <class F>
CriterionResult timed(int id, const char* name, F&& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [passed, detail] = body();
    r.passed = passed;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

bool SuiteReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

SuiteReport run_acceptance_suite(const SuiteOptions& opts) {
  SuiteReport report;
  report.results.push_back(timed(1, "takagi-identity",
                                 [&] { return check_takagi_identity(opts); }));
  report.results.push_back(timed(2, "network-matches-sum",
                                 [&] { return check_network_matches_sum(opts); }));
  report.results.push_back(timed(3, "lipschitz-sandwich",
                                 [&] { return check_lipschitz_sandwich(opts); }));
  report.results.push_back(timed(4, "dyadic-entropy",
                                 [&] { return check_dyadic_entropy(opts); }));
  report.results.push_back(timed(5, "sigma-set-rate",
                                 [&] { return check_sigma_rate(opts); }));
  report.results.push_back(timed(6, "constructive-cover",
                                 [&] { return check_constructive_cover(opts); }));
  report.results.push_back(timed(7, "width-entropy-consistency",
                                 [&] { return check_consistency(opts); }));
  report.results.push_back(timed(8, "budget-table-reproduction",
                                 [&] { return check_table_reproduction(opts); }));
  report.results.push_back(timed(9, "rate-transfer-exponents",
                                 [&] { return check_rate_transfer(opts); }));
  report.results.push_back(timed(10, "setcover-oracle-equivalence",
                                 [&] { return check_setcover_oracle(opts); }));
  return report;
}

}  // namespace lw
