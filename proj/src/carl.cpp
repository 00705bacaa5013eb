#include "lw/carl.hpp"

#include <algorithm>
#include <cmath>

#include "lw/errors.hpp"

namespace lw {

namespace {

// phi evaluated with the n = 1 corner handled (log2 1 = 0).
double phi_at(const GrowthFunction& phi, double n) {
  if (n >= 2.0) return phi.eval(n);
  if (!(n >= 1.0)) throw InputError("growth evaluation requires n >= 1");
  switch (phi.kind) {
    case GrowthFunction::Kind::constant:
      return phi.c;
    case GrowthFunction::Kind::linear:
      return phi.c * n;
    case GrowthFunction::Kind::nlogn:
      return phi.c * n * std::log2(n);
    case GrowthFunction::Kind::power: {
      double lg = std::log2(n);
      if (lg == 0.0 && phi.q < 0.0)
        throw DomainError("growth with negative log power undefined at n = 1");
      return phi.c * std::pow(n, phi.p) * std::pow(lg, phi.q);
    }
  }
  return 0.0;  // unreachable
}

bool effectively_polynomial(const BoundFamily& w) {
  // exponential with nu = 0 (or c = 0) is a constant budget.
  return w.kind != BoundFamily::Kind::exponential || w.c == 0.0 || w.nu == 0.0;
}

}  // namespace

CarlIndex carl_index(double m, double gamma, double delta) {
  if (!(m >= 1.0)) throw InputError("carl index requires m >= 1");
  if (!(gamma > 0.0) || !(delta > 0.0))
    throw InputError("carl index requires positive gamma and delta");
  CarlIndex out;
  out.value = m * std::log2(3.0 * gamma / delta);
  out.index = static_cast<long long>(std::ceil(out.value));
  out.degenerate = !(out.value > 0.0);
  return out;
}

double width_lower_from_entropy(const RateFunction& rate, const GrowthFunction& phi,
                                double n) {
  if (rate.kind == RateFunction::Kind::expo)
    throw DomainError("width lower bound transfer needs a polylog or loginv rate");
  if (!phi.dominates_log())
    throw DomainError("width lower bound transfer needs phi to dominate log2 n");
  if (!(n >= 2.0)) throw InputError("width lower bound requires n >= 2");
  double composite = n * phi.eval(n);
  if (!(composite >= 2.0))
    throw DomainError("composite index n*phi(n) below asymptotic range");
  double lg = std::log2(composite);
  if (rate.kind == RateFunction::Kind::loginv) return std::pow(lg, -rate.alpha);
  return std::pow(lg, rate.beta) * std::pow(composite, -rate.alpha);
}

RateFunction width_lower_rate(const RateFunction& rate, const GrowthFunction& phi) {
  if (rate.kind == RateFunction::Kind::expo)
    throw DomainError("width lower bound transfer needs a polylog or loginv rate");
  if (!phi.dominates_log())
    throw DomainError("width lower bound transfer needs phi to dominate log2 n");
  if (rate.kind == RateFunction::Kind::loginv) return RateFunction::loginv(rate.alpha);
  double p = phi.power_p();
  double q = phi.power_q();
  return RateFunction::polylog(rate.alpha * (1.0 + p), rate.beta - rate.alpha * q);
}

NNLowerBound nn_lower_bound_deep(const RateFunction& rate, const BoundFamily& wfam,
                                 double n) {
  if (rate.kind == RateFunction::Kind::expo)
    throw DomainError("approximation lower bound needs a polylog or loginv rate");
  NNLowerBound out;
  if (rate.kind == RateFunction::Kind::loginv) {
    out.rate = RateFunction::loginv(rate.alpha);
  } else if (effectively_polynomial(wfam)) {
    // budget C n^delta gives phi ~ n log2 n for delta > 0, phi ~ n otherwise
    double drop = wfam.kind == BoundFamily::Kind::polynomial && wfam.delta > 0.0
                      ? rate.alpha
                      : 0.0;
    out.rate = RateFunction::polylog(2.0 * rate.alpha, rate.beta - drop);
  } else {
    out.rate = RateFunction::polylog((2.0 + wfam.nu) * rate.alpha, rate.beta);
  }
  out.value = out.rate.eval(n);
  return out;
}

NNLowerBound nn_lower_bound_shallow(const RateFunction& rate, const BoundFamily& wfam,
                                    double W) {
  if (rate.kind == RateFunction::Kind::expo)
    throw DomainError("approximation lower bound needs a polylog or loginv rate");
  NNLowerBound out;
  if (rate.kind == RateFunction::Kind::loginv) {
    out.rate = RateFunction::loginv(rate.alpha);
  } else if (effectively_polynomial(wfam)) {
    out.rate = RateFunction::polylog(rate.alpha, rate.beta - rate.alpha);
  } else {
    out.rate = RateFunction::polylog((1.0 + wfam.nu) * rate.alpha, rate.beta);
  }
  out.value = out.rate.eval(W);
  return out;
}

RateFunction entropy_upper_from_width(const RateFunction& width_rate, double p,
                                      double q) {
  if (!(p >= 0.0)) throw DomainError("budget exponent requires p >= 0");
  if (width_rate.kind == RateFunction::Kind::polylog) {
    if (p > 0.0 || q >= 1.0) {
      return RateFunction::polylog(width_rate.alpha / (1.0 + p),
                                   width_rate.beta + width_rate.alpha * q / (1.0 + p));
    }
    return RateFunction::polylog(width_rate.alpha, width_rate.alpha + width_rate.beta);
  }
  if (width_rate.kind == RateFunction::Kind::expo) {
    if (width_rate.a != 1.0 || width_rate.b != 0.0)
      throw DomainError("exponential width transfer needs a plain 2^(-cn) rate");
    if (p < 1.0 || (p == 1.0 && q <= 0.0)) {
      return RateFunction::expo(width_rate.c, 0.5);
    }
    return RateFunction::expo(width_rate.c, 1.0 / (p + 1.0), -q / (p + 1.0));
  }
  throw DomainError("entropy transfer supports polylog and expo width rates only");
}

RateFunction entropy_upper_from_nn_error(const RateFunction& err_rate,
                                         const BoundFamily& wfam, bool deep) {
  bool poly_budget = effectively_polynomial(wfam);
  double nu = poly_budget ? 0.0 : wfam.nu;
  if (err_rate.kind == RateFunction::Kind::polylog) {
    if (deep) {
      if (poly_budget)
        return RateFunction::polylog(err_rate.alpha / 2.0,
                                     err_rate.beta + err_rate.alpha / 2.0);
      return RateFunction::polylog(err_rate.alpha / (nu + 2.0), err_rate.beta);
    }
    if (poly_budget)
      return RateFunction::polylog(err_rate.alpha, err_rate.beta + err_rate.alpha);
    return RateFunction::polylog(err_rate.alpha / (nu + 1.0), err_rate.beta);
  }
  if (err_rate.kind == RateFunction::Kind::expo) {
    if (err_rate.a != 1.0 || err_rate.b != 0.0)
      throw DomainError("exponential error transfer needs a plain 2^(-cn) rate");
    if (deep) {
      if (poly_budget) return RateFunction::expo(err_rate.c, 0.5, -0.5);
      return RateFunction::expo(err_rate.c, 1.0 / (nu + 2.0));
    }
    if (poly_budget) return RateFunction::expo(err_rate.c, 0.5);
    return RateFunction::expo(err_rate.c, 1.0 / (nu + 1.0));
  }
  throw DomainError("entropy transfer supports polylog and expo error rates only");
}

long long width_upper_from_entropy_index(int n, const GrowthFunction& phi) {
  if (n < 1) throw InputError("entropy index requires n >= 1");
  double half = phi_at(phi, static_cast<double>(n)) / 2.0;
  long long k = static_cast<long long>(std::ceil(half));
  return static_cast<long long>(n) * std::max<long long>(k, 0);
}

ZeroWidthDecay zero_width_entropy_decay(int n, const GrowthFunction& phi, int k) {
  if (n < 1) throw InputError("zero width decay requires n >= 1");
  double phival = phi_at(phi, static_cast<double>(n));
  if (!(static_cast<double>(k) > phival))
    throw DomainError("zero width decay requires k > phi(n)");
  ZeroWidthDecay out;
  out.bound = 6.0 * std::exp2(phival - static_cast<double>(k));
  out.index = static_cast<long long>(n) * static_cast<long long>(k);
  return out;
}

ConsistencyReport check_carl_consistency(const EntropyProfile& entropy,
                                         const std::vector<WidthDatum>& widths,
                                         std::span<const double> delta_factors) {
  entropy.validate();
  static const double kDefaultFactors[] = {1.0 + 1.0 / 1024.0, 1.25, 1.5, 2.0,
                                           4.0,                8.0,  16.0};
  std::span<const double> factors =
      delta_factors.empty() ? std::span<const double>(kDefaultFactors) : delta_factors;
  for (double f : factors)
    if (!(f > 1.0)) throw InputError("delta factors must exceed 1");

  ConsistencyReport report;
  for (const auto& datum : widths) {
    if (!(datum.m >= 1.0) || !(datum.gamma > 0.0) || !std::isfinite(datum.upper))
      throw InputError("width datum requires m >= 1, gamma > 0, finite upper");
    double base = datum.upper > 0.0 ? datum.upper : datum.gamma * 1e-9;
    for (double f : factors) {
      double delta = base * f;
      CarlIndex ci = carl_index(datum.m, datum.gamma, delta);
      if (ci.degenerate) continue;  // transfer says nothing past delta >= 3 gamma
      const EntropyProfile::Row* row = nullptr;
      for (const auto& r : entropy.rows) {
        if (static_cast<long long>(r.n) == ci.index) {
          row = &r;
          break;
        }
      }
      if (row == nullptr) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      if (!(row->lower < 2.0 * delta)) {
        report.violations.push_back(
            {datum.m, datum.gamma, delta, ci.index, row->lower, 2.0 * delta});
      }
    }
  }
  report.partial = report.skipped > 0 || report.checked == 0;
  return report;
}

DoublingReport doubling_sup(const GrowthFunction& phi, double c, int N) {
  if (!(c > 1.0)) throw InputError("doubling factor must exceed 1");
  if (N < 2) throw InputError("doubling scan requires N >= 2");
  DoublingReport out;
  for (int n = 2; n <= N; ++n) {
    double ratio = phi.eval(c * n) / phi.eval(static_cast<double>(n));
    out.sup = std::max(out.sup, ratio);
  }
  out.finite = true;  // every built-in kind is doubling
  return out;
}

RatioBound ratio_divergence_bound(double alpha, double beta, const GrowthFunction& phi,
                                  double n, double c) {
  if (!(alpha > 0.0)) throw InputError("ratio bound requires alpha > 0");
  if (!(n >= 2.0)) throw InputError("ratio bound requires n >= 2");
  if (!(c > 1.0)) throw InputError("ratio bound requires c > 1");
  RatioBound out;
  out.ratio = phi.eval(c * n) / phi.eval(n);
  if (!(out.ratio > 1.0)) {
    out.degenerate = true;
    return out;
  }
  out.value = std::pow(out.ratio, alpha);
  if (beta > 0.0) out.value *= std::pow(std::log2(out.ratio), -beta);
  return out;
}

ChainBound const_gamma_chain(XiKind kind, double alpha, double n, double c) {
  if (!(n >= 2.0)) throw InputError("chain bound requires n >= 2");
  if (!(c > 0.0)) throw InputError("chain bound requires c > 0");
  ChainBound out;
  if (kind == XiKind::expo2) {
    // xi_n = 2^(-n): log2(1/xi_n) = n
    out.entropy_index = static_cast<long long>(std::llround(std::ceil(c * std::ceil(n * n))));
    out.log2_gamma = c * n;
    out.gamma_expr = "c1*2^(" + std::to_string(c) + "*n)";
    return out;
  }
  if (!(alpha > 0.0)) {
    out.degenerate = true;  // constant xi carries no decay
    return out;
  }
  double lg = std::log2(n);
  out.entropy_index =
      static_cast<long long>(std::llround(std::ceil(c * std::ceil(n * alpha * lg))));
  out.log2_gamma = c * alpha * lg;
  out.gamma_expr = "c1*n^(" + std::to_string(c * alpha) + ")";
  return out;
}

}  // namespace lw
