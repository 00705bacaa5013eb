#include "lw/widths.hpp"

#include <algorithm>
#include <cmath>

#include "lw/errors.hpp"
#include "lw/parallel.hpp"
#include "lw/rng.hpp"

namespace lw {

void spot_check(const LipschitzParametrization& par, const Norm& ambient,
                int samples, std::uint64_t seed) {
  if (samples < 2) throw InputError("spot check needs at least 2 samples");
  Rng rng(seed);
  std::vector<double> prev(par.param_dim), cur(par.param_dim);
  std::vector<double> prev_img, cur_img;
  for (int s = 0; s < samples; ++s) {
    for (int c = 0; c < par.param_dim; ++c) cur[c] = rng.next_symmetric(par.radius);
    cur_img = par.map(cur);
    if (static_cast<int>(cur_img.size()) != ambient.dimension()) {
      throw InputError("map output dimension does not match the ambient norm");
    }
    if (s > 0) {
      double pd = 0.0;
      for (int c = 0; c < par.param_dim; ++c) {
        pd = std::max(pd, std::fabs(cur[c] - prev[c]));
      }
      if (pd > 0.0) {
        double id = ambient.distance(cur_img, prev_img);
        if (id > par.constant * pd * (1.0 + 1e-9)) {
          throw CertificateError("claimed Lipschitz constant fails on sampled pair");
        }
      }
    }
    prev = cur;
    prev_img = cur_img;
  }
}

LipschitzParametrization rescale(const LipschitzParametrization& par) {
  if (!(par.radius > 0.0)) throw InputError("parametrization radius must be positive");
  if (par.radius == 1.0) return par;
  LipschitzParametrization unit = par;
  unit.radius = 1.0;
  unit.constant = par.constant * par.radius;  // keeps constant * radius fixed
  double r = par.radius;
  ParamMap inner = par.map;
  unit.map = [inner, r](std::span<const double> y) {
    std::vector<double> scaled(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) scaled[i] = r * y[i];
    return inner(scaled);
  };
  return unit;
}

namespace {

WidthEstimate width_upper_impl(const PointCloudSet& K,
                               const LipschitzParametrization& par,
                               const std::vector<std::vector<double>>& grid,
                               double delta, bool parallel) {
  if (grid.empty()) throw InputError("width estimate needs a nonempty parameter grid");
  if (!(delta > 0.0)) throw InputError("net fineness must be positive");
  if (par.radius != 1.0) {
    throw InputError("width estimate expects a unit-ball parametrization; rescale first");
  }
  // Evaluate the family once per grid node.  The first node is evaluated
  // serially so a dimension mismatch surfaces as an exception rather than
  // escaping a parallel region.
  std::vector<std::vector<double>> images(grid.size());
  images[0] = par.map(grid[0]);
  if (static_cast<int>(images[0].size()) != K.dimension()) {
    throw InputError("map output dimension does not match the cloud");
  }
  auto eval = [&](std::size_t i) {
    if (i == 0) return;
    images[i] = par.map(grid[i]);
  };
  if (parallel) {
    parallel_for(grid.size(), eval);
  } else {
    for (std::size_t i = 1; i < grid.size(); ++i) eval(i);
  }
  auto nearest = [&](std::size_t k) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& img : images) {
      best = std::min(best, K.norm().distance(K.point(k), img));
    }
    return best;
  };
  double sup_inf;
  if (parallel) {
    sup_inf = parallel_max(K.size(), nearest);
  } else {
    sup_inf = 0.0;
    for (std::size_t k = 0; k < K.size(); ++k) sup_inf = std::max(sup_inf, nearest(k));
  }
  WidthEstimate est;
  est.n = par.param_dim;
  est.gamma = par.gamma();
  est.delta = delta;
  est.upper = sup_inf + par.gamma() * delta;
  est.witness = par.description;
  return est;
}

}  // namespace

WidthEstimate width_upper(const PointCloudSet& K, const LipschitzParametrization& par,
                          const std::vector<std::vector<double>>& grid, double delta) {
  return width_upper_impl(K, par, grid, delta, true);
}

WidthEstimate width_upper_serial(const PointCloudSet& K,
                                 const LipschitzParametrization& par,
                                 const std::vector<std::vector<double>>& grid,
                                 double delta) {
  return width_upper_impl(K, par, grid, delta, false);
}

NormChangePenalty norm_change_penalty(int n) {
  if (n < 1) throw InputError("dimension must be >= 1");
  NormChangePenalty p;
  p.linear = 2.0 * n + 1.0;
  p.sqrt = 2.0 * std::sqrt(static_cast<double>(n)) + 1.0;
  return p;
}

}  // namespace lw
