// Timing comparison of the parallel kernels against their serial references.
// Honors LIPWIDTH_THREADS.  Each kernel pair is checked for agreement before
// timing, so a scheduling bug shows up here as well as in the tests.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "lw/entropy.hpp"
#include "lw/lipbounds.hpp"
#include "lw/network.hpp"
#include "lw/norms.hpp"
#include "lw/parallel.hpp"
#include "lw/rng.hpp"
#include "lw/widths.hpp"

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return seconds(t0, t1);
}

void report(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-24s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              agree ? "agree" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("worker threads: %d\n", lw::worker_threads());
  bool all_agree = true;

  {
    // batch evaluation of a mid-sized net on many points
    lw::NetLayout layout{4, 32, 6};
    lw::Rng rng(1);
    lw::ParamVector pv;
    pv.layout = layout;
    pv.bound = 1.0;
    pv.values.resize(layout.param_count());
    for (double& v : pv.values) v = rng.next_symmetric(1.0);
    lw::FeedForwardNet net = lw::unflatten(pv, lw::Activation::sigmoidal(1.0));
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 20000; ++i) {
      std::vector<double> x(4);
      for (double& v : x) v = rng.next_unit();
      pts.push_back(std::move(x));
    }
    std::vector<double> a, b;
    double ts = timed([&] { a = lw::evaluate_batch_serial(net, pts); });
    double tp = timed([&] { b = lw::evaluate_batch(net, pts); });
    bool agree = a == b;
    all_agree = all_agree && agree;
    report("evaluate_batch", ts, tp, agree);
  }

  {
    lw::NetLayout layout{2, 16, 4};
    lw::EmpiricalOptions eo;
    eo.trials = 400;
    eo.grid_points = 129;
    eo.seed = 7;
    double ra = 0.0, rb = 0.0;
    double ts = timed([&] {
      ra = lw::empirical_lipschitz_serial(layout, lw::Activation::relu(), 1.0, eo);
    });
    double tp = timed(
        [&] { rb = lw::empirical_lipschitz(layout, lw::Activation::relu(), 1.0, eo); });
    bool agree = ra == rb;
    all_agree = all_agree && agree;
    report("empirical_lipschitz", ts, tp, agree);
  }

  {
    // width of a sampled hat-sum family over a sup-norm grid cloud
    std::vector<double> nodes;
    for (int i = 0; i < 257; ++i) nodes.push_back(i / 256.0);
    lw::Rng rng(3);
    std::vector<std::vector<double>> pts;
    for (int s = 0; s < 24; ++s) {
      double c1 = rng.next_symmetric(1.0);
      double c2 = rng.next_symmetric(1.0);
      std::vector<double> f(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        double t = nodes[i];
        double h1 = t < 0.5 ? 2 * t : 2 - 2 * t;
        double h2 = h1 < 0.5 ? 2 * h1 : 2 - 2 * h1;
        f[i] = c1 * h1 + c2 * h2;
      }
      pts.push_back(std::move(f));
    }
    lw::PointCloudSet K(std::move(pts), lw::Norm::sup_grid(nodes));
    lw::LipschitzParametrization par;
    par.param_dim = 2;
    par.radius = 1.0;
    par.constant = 2.0;
    par.map = [&nodes](std::span<const double> y) {
      std::vector<double> f(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        double t = nodes[i];
        double h1 = t < 0.5 ? 2 * t : 2 - 2 * t;
        double h2 = h1 < 0.5 ? 2 * h1 : 2 - 2 * h1;
        f[i] = y[0] * h1 + y[1] * h2;
      }
      return f;
    };
    const double delta = 1.0 / 64.0;
    auto grid = lw::linf_lattice(2, delta);
    lw::WidthEstimate wa, wb;
    double ts = timed([&] { wa = lw::width_upper_serial(K, par, grid, delta); });
    double tp = timed([&] { wb = lw::width_upper(K, par, grid, delta); });
    bool agree = wa.upper == wb.upper;
    all_agree = all_agree && agree;
    report("width_upper", ts, tp, agree);
  }

  {
    // packing separation search on a large cloud
    std::vector<std::vector<double>> pts;
    lw::Rng rng(11);
    for (int i = 0; i < 4000; ++i) {
      pts.push_back({rng.next_unit(), rng.next_unit(), rng.next_unit()});
    }
    lw::PointCloudSet K(std::move(pts), lw::Norm::linf(3));
    double pa = 0.0, pb = 0.0;
    double ts = timed([&] { pa = lw::packing_lower_bound_serial(K, 6); });
    double tp = timed([&] { pb = lw::packing_lower_bound(K, 6); });
    bool agree = pa == pb;
    all_agree = all_agree && agree;
    report("packing_lower_bound", ts, tp, agree);
  }

  if (!all_agree) {
    std::printf("kernel disagreement detected\n");
    return 1;
  }
  return 0;
}
