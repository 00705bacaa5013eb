#include "lw/lipbounds.hpp"

#include <algorithm>
#include <cmath>

#include "lw/errors.hpp"
#include "lw/parallel.hpp"
#include "lw/rng.hpp"

namespace lw {

BoundFamily BoundFamily::constant(double C) {
  if (!(C >= 1.0)) throw DomainError("bound family requires C >= 1");
  BoundFamily f;
  f.kind = Kind::constant;
  f.C = C;
  return f;
}

BoundFamily BoundFamily::polynomial(double C, double delta) {
  if (!(C >= 1.0)) throw DomainError("bound family requires C >= 1");
  if (delta < 0.0) throw DomainError("polynomial bound family requires delta >= 0");
  BoundFamily f;
  f.kind = Kind::polynomial;
  f.C = C;
  f.delta = delta;
  return f;
}

BoundFamily BoundFamily::exponential(double C, double c, double nu) {
  if (!(C >= 1.0)) throw DomainError("bound family requires C >= 1");
  if (c < 0.0 || nu < 0.0) throw DomainError("exponential bound family requires c, nu >= 0");
  BoundFamily f;
  f.kind = Kind::exponential;
  f.C = C;
  f.c = c;
  f.nu = nu;
  return f;
}

double BoundFamily::eval(double n) const {
  if (!(n >= 1.0)) throw InputError("bound family evaluation requires n >= 1");
  switch (kind) {
    case Kind::constant:
      return C;
    case Kind::polynomial:
      return C * std::pow(n, delta);
    case Kind::exponential:
      return C * std::exp2(c * std::pow(n, nu));
  }
  return C;  // unreachable
}

LipschitzCertificate deep_bound_sigmoidal(int d, int W, double L, double w, int n,
                                          double c0) {
  if (d < 1 || W < 1 || n < 1) throw InputError("architecture entries must be >= 1");
  if (!(L >= 1.0)) throw DomainError("sigmoidal bound requires L >= 1");
  if (!(w > 0.0)) throw DomainError("parameter bound must be positive");
  if (!(c0 > 0.0)) throw DomainError("embedding constant must be positive");
  LipschitzCertificate cert;
  cert.regime = Regime::deep_sigmoidal;
  const double A = L * W * w;
  const double B = L * (W + 1.0);
  double T = L * (d + 1.0);
  cert.trace.push_back(T);
  for (int j = 1; j <= n; ++j) {
    T = A * T + B;
    cert.trace.push_back(T);
  }
  cert.value = c0 * T;
  cert.closed_form = c0 * 2.0 * L * (std::max(W, d) + 1.0) * std::pow(A, n);
  return cert;
}

LipschitzCertificate deep_bound_relu(int d, int W, double w, int n, double c0) {
  if (d < 1 || W < 1 || n < 1) throw InputError("architecture entries must be >= 1");
  if (!(w > 0.0)) throw DomainError("parameter bound must be positive");
  if (!(c0 > 0.0)) throw DomainError("embedding constant must be positive");
  const double A = W * w;
  if (!(A >= 2.0)) throw DomainError("relu bound requires W*w >= 2");
  LipschitzCertificate cert;
  cert.regime = Regime::deep_relu;
  double T = d + 1.0;
  cert.trace.push_back(T);
  double Apow = 1.0;
  for (int j = 1; j <= n; ++j) {
    Apow *= A;
    T = A * T + (d + 2.0) * w * Apow + 1.0;
    cert.trace.push_back(T);
  }
  cert.value = c0 * T;
  cert.closed_form = c0 * (d + 2.0) * n * Apow * A;  // (d+2) n (Ww)^(n+1)
  return cert;
}

LipschitzCertificate shallow_bound(int d, int W, double L, double w, ActKind act,
                                   double c0) {
  if (d < 1 || W < 1) throw InputError("architecture entries must be >= 1");
  if (!(w >= 1.0)) throw DomainError("shallow bound requires w >= 1");
  if (!(c0 > 0.0)) throw DomainError("embedding constant must be positive");
  LipschitzCertificate cert;
  if (act == ActKind::sigmoidal) {
    if (!(L >= 1.0)) throw DomainError("sigmoidal bound requires L >= 1");
    cert.regime = Regime::shallow_sigmoidal;
    cert.value = c0 * (L * (d + 1.0) + 2.0 * L) * W * w;
  } else if (act == ActKind::relu) {
    cert.regime = Regime::shallow_relu;
    cert.value = c0 * 3.0 * (d + 2.0) * W * w * w;
  } else {
    throw InputError("shallow bound expects relu or sigmoidal activation");
  }
  cert.closed_form = cert.value;
  cert.trace = {cert.value};
  return cert;
}

namespace {

std::vector<std::vector<double>> sample_domain_grid(const NetLayout& layout,
                                                    int grid_points,
                                                    std::uint64_t seed) {
  std::vector<std::vector<double>> grid;
  grid.reserve(grid_points);
  if (layout.d == 1) {
    for (int i = 0; i < grid_points; ++i) {
      grid.push_back({static_cast<double>(i) / (grid_points - 1)});
    }
  } else {
    Rng rng = stream_rng(seed, 0);
    for (int i = 0; i < grid_points; ++i) {
      std::vector<double> x(layout.d);
      for (double& v : x) v = rng.next_unit();
      grid.push_back(std::move(x));
    }
  }
  return grid;
}

double lipschitz_trial(const NetLayout& layout, const Activation& act, double w,
                       const std::vector<std::vector<double>>& grid,
                       std::uint64_t seed, int trial) {
  Rng rng = stream_rng(seed, static_cast<std::uint64_t>(trial) + 1);
  const std::size_t count = layout.param_count();
  ParamVector a, b;
  a.layout = b.layout = layout;
  a.bound = b.bound = w;
  a.values.resize(count);
  b.values.resize(count);
  double dist = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    a.values[i] = rng.next_symmetric(w);
    b.values[i] = rng.next_symmetric(w);
    dist = std::max(dist, std::fabs(a.values[i] - b.values[i]));
  }
  if (dist == 0.0) return 0.0;  // degenerate pair, skipped
  FeedForwardNet na = unflatten(a, act);
  FeedForwardNet nb = unflatten(b, act);
  double sup = 0.0;
  for (const auto& x : grid) {
    sup = std::max(sup, std::fabs(na.evaluate(x) - nb.evaluate(x)));
  }
  return sup / dist;
}

}  // namespace

double empirical_lipschitz(const NetLayout& layout, const Activation& act, double w,
                           const EmpiricalOptions& opts) {
  if (opts.trials < 1) throw InputError("empirical estimate requires trials >= 1");
  if (opts.grid_points < 2) throw InputError("empirical estimate requires grid_points >= 2");
  if (!(w > 0.0)) throw DomainError("parameter bound must be positive");
  auto grid = sample_domain_grid(layout, opts.grid_points, opts.seed);
  return parallel_max(static_cast<std::size_t>(opts.trials), [&](std::size_t t) {
    return lipschitz_trial(layout, act, w, grid, opts.seed, static_cast<int>(t));
  });
}

double empirical_lipschitz_serial(const NetLayout& layout, const Activation& act,
                                  double w, const EmpiricalOptions& opts) {
  if (opts.trials < 1) throw InputError("empirical estimate requires trials >= 1");
  if (opts.grid_points < 2) throw InputError("empirical estimate requires grid_points >= 2");
  if (!(w > 0.0)) throw DomainError("parameter bound must be positive");
  auto grid = sample_domain_grid(layout, opts.grid_points, opts.seed);
  double best = 0.0;
  for (int t = 0; t < opts.trials; ++t) {
    best = std::max(best, lipschitz_trial(layout, act, w, grid, opts.seed, t));
  }
  return best;
}

PhiGamma phi_gamma_of(const BoundFamily& family, double n, bool deep, double c) {
  if (!(c > 0.0)) throw DomainError("budget constant must be positive");
  if (!(n >= 2.0)) throw InputError("budget evaluation requires n >= 2");
  PhiGamma out;
  const double wn = family.eval(n);
  if (deep) {
    out.phi_value = c * n * (1.0 + std::log2(wn));
    switch (family.kind) {
      case BoundFamily::Kind::constant:
        out.phi = GrowthFunction::linear(c * (1.0 + std::log2(family.C)));
        break;
      case BoundFamily::Kind::polynomial:
        if (family.delta == 0.0) {
          out.phi = GrowthFunction::linear(c * (1.0 + std::log2(family.C)));
        } else {
          out.phi = GrowthFunction::nlogn(c * family.delta);
        }
        break;
      case BoundFamily::Kind::exponential:
        if (family.c == 0.0) {
          out.phi = GrowthFunction::linear(c * (1.0 + std::log2(family.C)));
        } else if (family.nu == 0.0) {
          out.phi = GrowthFunction::linear(c * (1.0 + std::log2(family.C) + family.c));
        } else {
          out.phi = GrowthFunction::power(c * family.c, family.nu + 1.0, 0.0);
        }
        break;
    }
  } else {
    out.phi_value = c * (std::log2(n) + std::log2(wn));
    switch (family.kind) {
      case BoundFamily::Kind::constant:
        out.phi = GrowthFunction::power(c, 0.0, 1.0);
        break;
      case BoundFamily::Kind::polynomial:
        out.phi = GrowthFunction::power(c * (1.0 + family.delta), 0.0, 1.0);
        break;
      case BoundFamily::Kind::exponential:
        if (family.c == 0.0 || family.nu == 0.0) {
          out.phi = GrowthFunction::power(c, 0.0, 1.0);
        } else {
          out.phi = GrowthFunction::power(c * family.c, family.nu, 0.0);
        }
        break;
    }
  }
  out.log2_gamma = out.phi_value;
  return out;
}

}  // namespace lw
