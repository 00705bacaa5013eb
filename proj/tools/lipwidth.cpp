// lipwidth: one binary exposing the library's solvers.
//   lipbound  certified + sampled Lipschitz constants of feed-forward nets
//   entropy   entropy-number brackets of a point cloud (CSV)
//   width     approximation-width upper bounds from a Lipschitz family (CSV)
//   takagi    weighted hat sums: values, exact network, error curve
//   carl      rate arithmetic and the width/entropy consistency check
//   suite     the built-in verification suite (JSON report)
// Exit codes: 0 ok, 1 input/domain error, 2 capacity limit, 3 consistency
// violation.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lw/carl.hpp"
#include "lw/entropy.hpp"
#include "lw/errors.hpp"
#include "lw/io.hpp"
#include "lw/lipbounds.hpp"
#include "lw/network.hpp"
#include "lw/norms.hpp"
#include "lw/rates.hpp"
#include "lw/suite.hpp"
#include "lw/takagi.hpp"
#include "lw/widths.hpp"

namespace {

using lw::io::json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    lw::io::write_text_file(out_path, text);
  }
}

lw::RateFunction rate_from_flags(const std::string& kind, double alpha, double beta,
                                 double c) {
  if (kind == "polylog") return lw::RateFunction::polylog(alpha, beta);
  if (kind == "loginv") return lw::RateFunction::loginv(alpha);
  if (kind == "expo") return lw::RateFunction::expo(c, 1.0);
  throw lw::InputError("unknown rate kind: " + kind);
}

lw::BoundFamily wfam_from_flags(const std::string& kind, double C, double delta,
                                double c, double nu) {
  if (kind == "const") return lw::BoundFamily::constant(C);
  if (kind == "poly") return lw::BoundFamily::polynomial(C, delta);
  if (kind == "expo") return lw::BoundFamily::exponential(C, c, nu);
  throw lw::InputError("unknown parameter-bound kind: " + kind);
}

json rate_to_json(const lw::RateFunction& r) {
  json j;
  switch (r.kind) {
    case lw::RateFunction::Kind::polylog:
      j["kind"] = "polylog";
      j["alpha"] = r.alpha;
      j["beta"] = r.beta;
      break;
    case lw::RateFunction::Kind::loginv:
      j["kind"] = "loginv";
      j["alpha"] = r.alpha;
      break;
    case lw::RateFunction::Kind::expo:
      j["kind"] = "expo";
      j["c"] = r.c;
      j["a"] = r.a;
      j["b"] = r.b;
      break;
  }
  j["scale"] = "undetermined constant";
  j["describe"] = r.describe();
  return j;
}

// ---------------- lipbound ----------------

struct LipboundArgs {
  std::string regime = "deep-relu";
  int d = 1, W = 2, n = 1;
  double w = 1.0, L = 1.0, c0 = 1.0;
  int trials = 200, grid_points = 65;
  std::string out;
};

int run_lipbound(const LipboundArgs& a, std::uint64_t seed) {
  const bool deep = a.regime == "deep-relu" || a.regime == "deep-sigmoidal";
  const bool relu = a.regime == "deep-relu" || a.regime == "shallow-relu";
  if (!deep && a.regime != "shallow-relu" && a.regime != "shallow-sigmoidal")
    throw lw::InputError("unknown regime: " + a.regime);
  lw::LipschitzCertificate cert;
  if (a.regime == "deep-sigmoidal") {
    cert = lw::deep_bound_sigmoidal(a.d, a.W, a.L, a.w, a.n, a.c0);
  } else if (a.regime == "deep-relu") {
    cert = lw::deep_bound_relu(a.d, a.W, a.w, a.n, a.c0);
  } else {
    cert = lw::shallow_bound(a.d, a.W, a.L, a.w,
                             relu ? lw::ActKind::relu : lw::ActKind::sigmoidal, a.c0);
  }
  lw::NetLayout layout{a.d, a.W, deep ? a.n : 1};
  lw::EmpiricalOptions eo;
  eo.trials = a.trials;
  eo.grid_points = a.grid_points;
  eo.seed = seed;
  const lw::Activation act =
      relu ? lw::Activation::relu() : lw::Activation::sigmoidal(a.L);
  const double emp = lw::empirical_lipschitz(layout, act, a.w, eo);

  json j;
  j["regime"] = a.regime;
  j["params"] = {{"d", a.d}, {"W", a.W}, {"n", deep ? a.n : 1},
                 {"w", a.w}, {"L", a.L}, {"c0", a.c0}};
  j["L_recursion"] = cert.value;
  j["L_closed_form"] = cert.closed_form;
  j["L_empirical"] = emp;
  emit(lw::io::dump_json(j), a.out);
  return 0;
}

// ---------------- entropy ----------------

struct EntropyArgs {
  std::string set_path;
  int n_max = 6;
  double tol = 1e-6;
  std::string out;
};

int run_entropy(const EntropyArgs& a) {
  lw::PointCloudSet K = lw::io::cloud_from_json(lw::io::load_json_file(a.set_path));
  lw::EntropyProfile profile = lw::entropy_profile(K, a.n_max, a.tol);
  emit(lw::io::entropy_profile_csv(profile).to_string(), a.out);
  return 0;
}

// ---------------- width ----------------

struct WidthArgs {
  std::string set_path;
  std::string family = "takagi";
  std::string family_json;
  int terms = 3;
  double gamma = 0.0;  // 0: use the family's own constant
  std::vector<double> grid_deltas = {0.25};
  std::string out;
};

lw::LipschitzParametrization takagi_family(const lw::PointCloudSet& K, int terms,
                                           double gamma) {
  if (K.norm().kind() != lw::Norm::Kind::sup_grid)
    throw lw::InputError("the takagi family needs a sup_grid cloud (sampled functions)");
  if (terms < 1) throw lw::InputError("the takagi family needs at least one term");
  std::vector<double> nodes = K.norm().grid();
  lw::LipschitzParametrization par;
  par.param_dim = terms;
  par.radius = 1.0;
  par.constant = gamma > 0.0 ? gamma : static_cast<double>(terms);
  par.description = "coefficient hat-sum family";
  par.map = [nodes, terms](std::span<const double> y) {
    std::vector<double> f(nodes.size(), 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (int k = 0; k < terms; ++k) f[i] += y[k] * lw::hat_iterate(k + 1, nodes[i]);
    }
    return f;
  };
  return par;
}

lw::LipschitzParametrization affine_family(const json& spec, int ambient_dim) {
  auto matrix = spec.at("matrix").get<std::vector<std::vector<double>>>();
  auto offset = spec.value("offset", std::vector<double>(matrix.size(), 0.0));
  if (static_cast<int>(matrix.size()) != ambient_dim)
    throw lw::InputError("family matrix rows must match the cloud dimension");
  if (offset.size() != matrix.size())
    throw lw::InputError("family offset length must match the matrix rows");
  const std::size_t m = matrix[0].size();
  double constant = 0.0;
  for (const auto& row : matrix) {
    if (row.size() != m) throw lw::InputError("family matrix rows must have equal length");
    double s = 0.0;
    for (double v : row) s += std::fabs(v);
    constant = std::max(constant, s);
  }
  lw::LipschitzParametrization par;
  par.param_dim = static_cast<int>(m);
  par.radius = spec.value("radius", 1.0);
  par.constant = spec.value("constant", constant);
  par.description = spec.value("description", std::string("affine family"));
  par.map = [matrix, offset](std::span<const double> y) {
    std::vector<double> out(offset);
    for (std::size_t r = 0; r < matrix.size(); ++r)
      for (std::size_t c = 0; c < matrix[r].size(); ++c) out[r] += matrix[r][c] * y[c];
    return out;
  };
  return par;
}

int run_width(const WidthArgs& a) {
  lw::PointCloudSet K = lw::io::cloud_from_json(lw::io::load_json_file(a.set_path));
  lw::LipschitzParametrization par;
  if (a.family == "takagi") {
    par = takagi_family(K, a.terms, a.gamma);
  } else if (a.family == "custom-json") {
    if (a.family_json.empty())
      throw lw::InputError("--family custom-json needs --family-json FILE");
    par = affine_family(lw::io::load_json_file(a.family_json), K.dimension());
    if (a.gamma > 0.0) par.constant = a.gamma / par.radius;
  } else {
    throw lw::InputError("unknown family: " + a.family);
  }
  par = lw::rescale(par);
  std::vector<lw::WidthEstimate> rows;
  for (double delta : a.grid_deltas) {
    rows.push_back(
        lw::width_upper(K, par, lw::linf_lattice(par.param_dim, delta), delta));
  }
  emit(lw::io::width_table_csv(rows).to_string(), a.out);
  return 0;
}

// ---------------- takagi ----------------

struct TakagiArgs {
  double lambda = 4.0;
  int n = 10;
  int grid = 1025;
  std::vector<double> coeffs;
  std::string mode = "values.csv";
  std::string out;
};

int run_takagi(const TakagiArgs& a) {
  if (a.grid < 2) throw lw::InputError("--grid needs at least 2 points");
  lw::TakagiSpec spec = a.coeffs.empty()
                            ? lw::TakagiSpec::from_lambda(a.lambda, a.n)
                            : lw::TakagiSpec::from_coefficients(a.coeffs);
  if (a.mode == "values.csv") {
    lw::io::Csv csv;
    csv.comment = "weighted hat sum sampled on [0,1]; t dimensionless";
    csv.header = {"t", "psi"};
    for (int i = 0; i < a.grid; ++i) {
      const double t = static_cast<double>(i) / (a.grid - 1);
      csv.add_row({lw::io::format_number(t), lw::io::format_number(lw::psi(spec, t))});
    }
    emit(csv.to_string(), a.out);
    return 0;
  }
  if (a.mode == "net.json") {
    lw::TakagiNetwork tn = lw::build_takagi_network(spec);
    emit(lw::io::dump_json(lw::io::net_to_json(tn.net)), a.out);
    return 0;
  }
  if (a.mode == "error-curve.csv") {
    if (!a.coeffs.empty())
      throw lw::InputError("error-curve.csv needs the lambda form of the sum");
    // Reference: enough extra terms that their own tail is negligible.
    lw::TakagiSpec ref = lw::TakagiSpec::from_lambda(a.lambda, a.n + 40);
    lw::io::Csv csv;
    csv.comment = "sup-grid distance between the n-term sum and the full sum, "
                  "with the geometric tail bound";
    csv.header = {"n", "sup_error", "tail_bound"};
    for (int k = 1; k <= a.n; ++k) {
      lw::TakagiSpec partial = lw::TakagiSpec::from_lambda(a.lambda, k);
      double err = 0.0;
      for (int i = 0; i < a.grid; ++i) {
        const double t = static_cast<double>(i) / (a.grid - 1);
        err = std::max(err, std::fabs(lw::psi(partial, t) - lw::psi(ref, t)));
      }
      csv.add_row({std::to_string(k), lw::io::format_number(err),
                   lw::io::format_number(lw::tail_bound(a.lambda, k))});
    }
    emit(csv.to_string(), a.out);
    return 0;
  }
  throw lw::InputError("unknown --emit mode: " + a.mode);
}

// ---------------- carl ----------------

struct CarlRateFlags {
  std::string kind = "polylog";
  double alpha = 1.0, beta = 0.0, c = 1.0;
};

struct CarlWfamFlags {
  std::string kind = "poly";
  double C = 1.0, delta = 1.0, c = 1.0, nu = 1.0;
};

void add_rate_flags(CLI::App* cmd, CarlRateFlags& f) {
  cmd->add_option("--rate", f.kind, "rate kind: polylog|loginv|expo");
  cmd->add_option("--alpha", f.alpha, "polylog/loginv decay exponent");
  cmd->add_option("--beta", f.beta, "polylog log power");
  cmd->add_option("--rate-c", f.c, "expo rate constant");
}

void add_wfam_flags(CLI::App* cmd, CarlWfamFlags& f) {
  cmd->add_option("--wkind", f.kind, "parameter bound kind: const|poly|expo");
  cmd->add_option("--wC", f.C, "parameter bound constant C");
  cmd->add_option("--wdelta", f.delta, "polynomial bound exponent");
  cmd->add_option("--wc", f.c, "exponential bound constant c");
  cmd->add_option("--wnu", f.nu, "exponential bound exponent nu");
}

int run_carl_consistency(const std::string& entropy_path, const std::string& widths_path,
                         const std::vector<double>& factors, const std::string& out) {
  lw::EntropyProfile profile = lw::io::entropy_profile_from_csv(
      lw::io::Csv::parse(lw::io::read_text_file(entropy_path)));
  std::vector<lw::WidthDatum> widths = lw::io::width_data_from_csv(
      lw::io::Csv::parse(lw::io::read_text_file(widths_path)));
  lw::ConsistencyReport report = lw::check_carl_consistency(
      profile, widths, std::span<const double>(factors));
  json j;
  j["checked"] = report.checked;
  j["skipped"] = report.skipped;
  j["partial"] = report.partial;
  json viol = json::array();
  for (const auto& v : report.violations) {
    viol.push_back({{"m", v.m}, {"gamma", v.gamma}, {"delta", v.delta},
                    {"index", v.index}, {"entropy_lower", v.entropy_lower},
                    {"limit", v.limit}});
  }
  j["violations"] = viol;
  emit(lw::io::dump_json(j), out);
  return report.ok() ? 0 : 3;
}

// ---------------- suite ----------------

int run_suite(const lw::SuiteOptions& opts, const std::string& out) {
  lw::SuiteReport report = lw::run_acceptance_suite(opts);
  json j;
  j["all_passed"] = report.all_passed();
  json arr = json::array();
  for (const auto& r : report.results) {
    arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                   {"detail", r.detail}, {"seconds", r.seconds}});
    std::fprintf(stderr, "%s %2d %-28s %s\n", r.passed ? "PASS" : "FAIL", r.id,
                 r.name.c_str(), r.detail.c_str());
  }
  j["criteria"] = arr;
  emit(lw::io::dump_json(j), out);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lipschitz widths, entropy numbers, and rate arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();  // allow the global --seed after a subcommand name
  std::uint64_t seed = 20240801;
  app.add_option("--seed", seed, "seed for all sampled computations");

  LipboundArgs lb;
  CLI::App* lipbound = app.add_subcommand("lipbound", "Lipschitz constant bounds");
  lipbound->add_option("--regime", lb.regime,
                       "deep-relu|deep-sigmoidal|shallow-relu|shallow-sigmoidal");
  lipbound->add_option("-d,--din", lb.d, "input dimension");
  lipbound->add_option("-W,--width", lb.W, "hidden width");
  lipbound->add_option("-n,--depth", lb.n, "depth (hidden layers)");
  lipbound->add_option("-w,--bound", lb.w, "parameter magnitude bound");
  lipbound->add_option("-L,--lip", lb.L, "sigmoidal Lipschitz constant");
  lipbound->add_option("--c0", lb.c0, "norm embedding constant");
  lipbound->add_option("--trials", lb.trials, "sampled pairs");
  lipbound->add_option("--grid-points", lb.grid_points, "sup-norm grid per axis");
  lipbound->add_option("-o,--out", lb.out, "output path (default stdout)");

  EntropyArgs en;
  CLI::App* entropy = app.add_subcommand("entropy", "entropy-number brackets");
  entropy->add_option("--set", en.set_path, "point cloud JSON")->required();
  entropy->add_option("--n-max", en.n_max, "largest index");
  entropy->add_option("--tol", en.tol, "bisection tolerance (relative)");
  entropy->add_option("-o,--out", en.out, "output path (default stdout)");

  WidthArgs wi;
  CLI::App* width = app.add_subcommand("width", "width upper bounds from a family");
  width->add_option("--set", wi.set_path, "point cloud JSON")->required();
  width->add_option("--family", wi.family, "takagi|custom-json");
  width->add_option("--family-json", wi.family_json, "affine family JSON");
  width->add_option("--terms", wi.terms, "takagi family coefficients");
  width->add_option("--gamma", wi.gamma, "override the family's Lipschitz budget");
  width->add_option("--grid-delta", wi.grid_deltas, "parameter net fineness (repeatable)");
  width->add_option("-o,--out", wi.out, "output path (default stdout)");

  TakagiArgs tk;
  CLI::App* takagi = app.add_subcommand("takagi", "weighted hat sums");
  takagi->add_option("--lambda", tk.lambda, "weight base (|lambda| > 1)");
  takagi->add_option("--n", tk.n, "number of terms");
  takagi->add_option("--grid", tk.grid, "sample points on [0,1]");
  takagi->add_option("--coeffs", tk.coeffs, "explicit coefficients (overrides lambda)");
  takagi->add_option("--emit", tk.mode, "values.csv|net.json|error-curve.csv");
  takagi->add_option("-o,--out", tk.out, "output path (default stdout)");

  CLI::App* carl = app.add_subcommand("carl", "rate arithmetic");
  carl->require_subcommand(1);

  double ci_m = 1.0, ci_gamma = 1.0, ci_delta = 1.0;
  std::string ci_out;
  CLI::App* carl_index_cmd = carl->add_subcommand("index", "transfer index");
  carl_index_cmd->add_option("--m", ci_m, "width index m")->required();
  carl_index_cmd->add_option("--gamma", ci_gamma, "Lipschitz budget")->required();
  carl_index_cmd->add_option("--delta", ci_delta, "width level")->required();
  carl_index_cmd->add_option("-o,--out", ci_out, "output path");

  CarlRateFlags ld_rate;
  CarlWfamFlags ld_wfam;
  double ld_n = 16.0;
  std::string ld_out;
  CLI::App* lower_deep = carl->add_subcommand("lower-deep", "depth-indexed lower bound");
  add_rate_flags(lower_deep, ld_rate);
  add_wfam_flags(lower_deep, ld_wfam);
  lower_deep->add_option("--n", ld_n, "depth");
  lower_deep->add_option("-o,--out", ld_out, "output path");

  CarlRateFlags ls_rate;
  CarlWfamFlags ls_wfam;
  double ls_n = 16.0;
  std::string ls_out;
  CLI::App* lower_shallow =
      carl->add_subcommand("lower-shallow", "width-indexed lower bound");
  add_rate_flags(lower_shallow, ls_rate);
  add_wfam_flags(lower_shallow, ls_wfam);
  lower_shallow->add_option("--W", ls_n, "width");
  lower_shallow->add_option("-o,--out", ls_out, "output path");

  CarlRateFlags ew_rate;
  double ew_p = 0.0, ew_q = 0.0;
  std::string ew_out;
  CLI::App* efw = carl->add_subcommand("entropy-from-width", "width -> entropy rate");
  add_rate_flags(efw, ew_rate);
  efw->add_option("--p", ew_p, "budget exponent p");
  efw->add_option("--q", ew_q, "budget log power q");
  efw->add_option("-o,--out", ew_out, "output path");

  CarlRateFlags enr_rate;
  CarlWfamFlags enr_wfam;
  std::string enr_regime = "deep", enr_out;
  CLI::App* efn = carl->add_subcommand("entropy-from-nn", "error -> entropy rate");
  add_rate_flags(efn, enr_rate);
  add_wfam_flags(efn, enr_wfam);
  efn->add_option("--regime", enr_regime, "deep|shallow");
  efn->add_option("-o,--out", enr_out, "output path");

  std::string cc_entropy, cc_widths, cc_out;
  std::vector<double> cc_factors;
  CLI::App* ccons = carl->add_subcommand("consistency", "width/entropy cross-check");
  ccons->add_option("--entropy", cc_entropy, "entropy CSV")->required();
  ccons->add_option("--widths", cc_widths, "width CSV")->required();
  ccons->add_option("--factors", cc_factors, "delta ladder multipliers (> 1)");
  ccons->add_option("-o,--out", cc_out, "output path");

  lw::SuiteOptions so;
  std::string suite_out;
  CLI::App* suite = app.add_subcommand("suite", "built-in verification suite");
  suite->add_flag("--quick", so.quick, "trimmed index ranges");
  suite->add_flag("--inject-takagi-fault", so.inject_takagi_fault,
                  "corrupt coefficients; the hat-sum checks must fail");
  suite->add_option("-o,--out", suite_out, "report path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*lipbound) return run_lipbound(lb, seed);
    if (*entropy) return run_entropy(en);
    if (*width) return run_width(wi);
    if (*takagi) return run_takagi(tk);
    if (*carl_index_cmd) {
      lw::CarlIndex idx = lw::carl_index(ci_m, ci_gamma, ci_delta);
      json j;
      j["value"] = idx.value;
      j["index"] = idx.index;
      j["degenerate"] = idx.degenerate;
      emit(lw::io::dump_json(j), ci_out);
      return 0;
    }
    if (*lower_deep || *lower_shallow) {
      const bool deep = static_cast<bool>(*lower_deep);
      const CarlRateFlags& rf = deep ? ld_rate : ls_rate;
      const CarlWfamFlags& wf = deep ? ld_wfam : ls_wfam;
      const double at = deep ? ld_n : ls_n;
      lw::RateFunction rate = rate_from_flags(rf.kind, rf.alpha, rf.beta, rf.c);
      lw::BoundFamily fam = wfam_from_flags(wf.kind, wf.C, wf.delta, wf.c, wf.nu);
      lw::NNLowerBound low = deep ? lw::nn_lower_bound_deep(rate, fam, at)
                                  : lw::nn_lower_bound_shallow(rate, fam, at);
      json j;
      j["rate"] = rate_to_json(low.rate);
      j["value"] = low.value;
      j["at"] = at;
      emit(lw::io::dump_json(j), deep ? ld_out : ls_out);
      return 0;
    }
    if (*efw) {
      lw::RateFunction rate = rate_from_flags(ew_rate.kind, ew_rate.alpha,
                                              ew_rate.beta, ew_rate.c);
      json j;
      j["rate"] = rate_to_json(lw::entropy_upper_from_width(rate, ew_p, ew_q));
      emit(lw::io::dump_json(j), ew_out);
      return 0;
    }
    if (*efn) {
      if (enr_regime != "deep" && enr_regime != "shallow")
        throw lw::InputError("--regime must be deep or shallow");
      lw::RateFunction rate = rate_from_flags(enr_rate.kind, enr_rate.alpha,
                                              enr_rate.beta, enr_rate.c);
      lw::BoundFamily fam = wfam_from_flags(enr_wfam.kind, enr_wfam.C, enr_wfam.delta,
                                            enr_wfam.c, enr_wfam.nu);
      json j;
      j["rate"] = rate_to_json(
          lw::entropy_upper_from_nn_error(rate, fam, enr_regime == "deep"));
      emit(lw::io::dump_json(j), enr_out);
      return 0;
    }
    if (*ccons) return run_carl_consistency(cc_entropy, cc_widths, cc_factors, cc_out);
    if (*suite) {
      so.seed = seed;
      return run_suite(so, suite_out);
    }
  } catch (const lw::CapacityError& e) {
    std::fprintf(stderr, "capacity error: %s\n", e.what());
    return 2;
  } catch (const lw::CertificateError& e) {
    std::fprintf(stderr, "consistency violation: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
