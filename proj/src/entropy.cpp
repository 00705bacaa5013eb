#include "lw/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <unordered_set>

#include "lw/errors.hpp"
#include "lw/parallel.hpp"
#include "lw/setcover.hpp"

namespace lw {

namespace {

// Relative slack on closed-ball membership; guards float rounding without
// moving any decision by more than a hair relative to the bisection tol.
constexpr double kFeasTol = 1e-12;

inline double slack(double eps) { return eps + kFeasTol * (1.0 + eps); }

// ----- dimension 1: optimal interval covering by a left-to-right sweep -----

int sweep_cover_1d(const std::vector<double>& sorted_vals, double eps) {
  const double reach = slack(2.0 * eps);
  int count = 0;
  std::size_t i = 0;
  while (i < sorted_vals.size()) {
    ++count;
    const double end = sorted_vals[i] + reach;
    while (i < sorted_vals.size() && sorted_vals[i] <= end) ++i;
  }
  return count;
}

// ----- exact candidates under sup norms: maximal subsets fitting a box -----

struct BoxEnumerator {
  const std::vector<std::vector<double>>& pts;
  int dim;
  double side;  // box side = 2 eps (with slack)
  std::size_t cap;
  std::unordered_set<std::uint32_t> found;

  bool fits(const std::vector<double>& mins, const std::vector<double>& maxs,
            std::size_t q) const {
    for (int c = 0; c < dim; ++c) {
      double lo = std::min(mins[c], pts[q][c]);
      double hi = std::max(maxs[c], pts[q][c]);
      if (hi - lo > side) return false;
    }
    return true;
  }

  void extend(std::uint32_t S, std::uint32_t cand, std::uint32_t excl,
              const std::vector<double>& mins, const std::vector<double>& maxs) {
    if (found.size() > cap) {
      throw CapacityError("maximal-subset enumeration exceeded its cap");
    }
    if (cand == 0) {
      std::uint32_t rest = excl;
      while (rest) {
        int q = std::countr_zero(rest);
        if (fits(mins, maxs, static_cast<std::size_t>(q))) return;  // not maximal
        rest &= rest - 1;
      }
      if (S) found.insert(S);
      return;
    }
    int q = std::countr_zero(cand);
    std::uint32_t qbit = std::uint32_t{1} << q;
    // Include q, then refilter both candidate and excluded points.
    std::vector<double> nmins = mins, nmaxs = maxs;
    for (int c = 0; c < dim; ++c) {
      nmins[c] = std::min(nmins[c], pts[q][c]);
      nmaxs[c] = std::max(nmaxs[c], pts[q][c]);
    }
    std::uint32_t ncand = 0, nexcl = 0;
    std::uint32_t rest = cand & ~qbit;
    while (rest) {
      int r = std::countr_zero(rest);
      if (fits(nmins, nmaxs, static_cast<std::size_t>(r))) ncand |= std::uint32_t{1} << r;
      rest &= rest - 1;
    }
    rest = excl;
    while (rest) {
      int r = std::countr_zero(rest);
      if (fits(nmins, nmaxs, static_cast<std::size_t>(r))) nexcl |= std::uint32_t{1} << r;
      rest &= rest - 1;
    }
    extend(S | qbit, ncand, nexcl, nmins, nmaxs);
    // Exclude q.
    extend(S, cand & ~qbit, excl | qbit, mins, maxs);
  }
};

std::vector<setcover::Mask> exact_masks_sup(const PointCloudSet& K, double eps,
                                            const CoveringOptions& opts) {
  const auto& pts = K.points();
  const std::size_t n = pts.size();
  BoxEnumerator en{pts, K.dimension(), slack(2.0 * eps), opts.enumeration_cap, {}};
  std::vector<double> mins(K.dimension(), std::numeric_limits<double>::infinity());
  std::vector<double> maxs(K.dimension(), -std::numeric_limits<double>::infinity());
  std::uint32_t all = n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  en.extend(0, all, 0, mins, maxs);
  return {en.found.begin(), en.found.end()};
}

// ----- exact candidates under other norms: balls at points and midpoints -----

std::vector<setcover::Mask> exact_masks_candidates(const PointCloudSet& K, double eps) {
  const auto& pts = K.points();
  const std::size_t n = pts.size();
  const int dim = K.dimension();
  std::vector<std::vector<double>> centers = pts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<double> mid(dim);
      for (int c = 0; c < dim; ++c) mid[c] = 0.5 * (pts[i][c] + pts[j][c]);
      centers.push_back(std::move(mid));
    }
  }
  const double reach = slack(eps);
  std::vector<setcover::Mask> masks;
  masks.reserve(centers.size());
  for (const auto& c : centers) {
    setcover::Mask m = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (K.norm().distance(c, pts[q]) <= reach) m |= setcover::Mask{1} << q;
    }
    if (m) masks.push_back(m);
  }
  return setcover::keep_maximal(masks);
}

// ----- greedy mode for dimension >= 2: dynamic bitset set cover -----

using Bits = std::vector<std::uint64_t>;

int popcount_and(const Bits& a, const Bits& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

int greedy_cover_dynamic(std::size_t n_elems, const std::vector<Bits>& sets) {
  const std::size_t words = (n_elems + 63) / 64;
  Bits uncovered(words, ~std::uint64_t{0});
  if (n_elems % 64) uncovered[words - 1] = (std::uint64_t{1} << (n_elems % 64)) - 1;
  auto empty = [&] {
    for (auto w : uncovered)
      if (w) return false;
    return true;
  };
  int used = 0;
  while (!empty()) {
    int best_gain = 0;
    std::size_t best = sets.size();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      int gain = popcount_and(sets[i], uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == sets.size()) {
      throw InputError("greedy cover: family does not cover every point");
    }
    for (std::size_t w = 0; w < words; ++w) uncovered[w] &= ~sets[best][w];
    ++used;
  }
  return used;
}

// Shared per-cloud state so bisection can query many radii cheaply.
struct CoverContext {
  const PointCloudSet& K;
  CoveringOptions opts;
  std::vector<double> sorted_vals;         // d == 1
  std::vector<std::vector<int>> order;     // per seed: indices by distance
  std::vector<std::vector<double>> dist;   // cached distance matrix
  std::vector<double> cheb_center;

  explicit CoverContext(const PointCloudSet& cloud, const CoveringOptions& o)
      : K(cloud), opts(o) {
    const std::size_t n = K.size();
    if (K.dimension() == 1) {
      sorted_vals.reserve(n);
      for (std::size_t i = 0; i < n; ++i) sorted_vals.push_back(K.point(i)[0]);
      std::sort(sorted_vals.begin(), sorted_vals.end());
      return;
    }
    dist.assign(n, std::vector<double>(n, 0.0));
    parallel_for(n, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j) {
        dist[i][j] = K.norm().distance(K.point(i), K.point(j));
      }
    });
    order.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
      order[s].resize(n);
      for (std::size_t j = 0; j < n; ++j) order[s][j] = static_cast<int>(j);
      std::sort(order[s].begin(), order[s].end(), [&](int a, int b) {
        return dist[s][a] < dist[s][b] || (dist[s][a] == dist[s][b] && a < b);
      });
    }
    cheb_center = K.chebyshev_radius().center;
  }

  int exact(double eps) const {
    const std::size_t n = K.size();
    if (static_cast<int>(n) > opts.exact_cap) {
      throw CapacityError("exact covering limited to " + std::to_string(opts.exact_cap) +
                          " points; use greedy mode");
    }
    std::vector<setcover::Mask> masks = K.norm().is_sup()
                                            ? exact_masks_sup(K, eps, opts)
                                            : exact_masks_candidates(K, eps);
    return setcover::exact_min_cover(static_cast<int>(n), masks);
  }

  int greedy(double eps) const {
    const std::size_t n = K.size();
    if (K.dimension() == 1) return sweep_cover_1d(sorted_vals, eps);
    const double reach = slack(eps);
    const std::size_t words = (n + 63) / 64;
    std::vector<Bits> sets;
    auto ball_mask = [&](const std::vector<double>& center) {
      Bits m(words, 0);
      bool any = false;
      for (std::size_t q = 0; q < n; ++q) {
        if (K.norm().distance(center, K.point(q)) <= reach) {
          m[q / 64] |= std::uint64_t{1} << (q % 64);
          any = true;
        }
      }
      if (any) sets.push_back(std::move(m));
    };
    // Balls centered at the points themselves.
    for (std::size_t i = 0; i < n; ++i) {
      Bits m(words, 0);
      for (std::size_t q = 0; q < n; ++q) {
        if (dist[i][q] <= reach) m[q / 64] |= std::uint64_t{1} << (q % 64);
      }
      sets.push_back(std::move(m));
    }
    // Ball at the Chebyshev center (covers everything once eps >= radius).
    ball_mask(cheb_center);
    // Pairwise midpoints for small clouds.
    if (static_cast<int>(n) <= opts.midpoint_cap) {
      const int dim = K.dimension();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (dist[i][j] > 2.0 * reach) continue;  // ball could only hold one
          std::vector<double> mid(dim);
          for (int c = 0; c < dim; ++c) mid[c] = 0.5 * (K.point(i)[c] + K.point(j)[c]);
          ball_mask(mid);
        }
      }
    }
    // Grown clusters under sup norms: walk outward from each seed keeping the
    // bounding box within side 2 eps; the box midpoint covers the cluster.
    if (K.norm().is_sup()) {
      const int dim = K.dimension();
      const double side = slack(2.0 * eps);
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<double> mins(K.point(s).begin(), K.point(s).end());
        std::vector<double> maxs(mins);
        Bits m(words, 0);
        int taken = 0;
        for (int idx : order[s]) {
          const auto p = K.point(static_cast<std::size_t>(idx));
          bool ok = true;
          for (int c = 0; c < dim; ++c) {
            if (std::max(maxs[c], p[c]) - std::min(mins[c], p[c]) > side) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          for (int c = 0; c < dim; ++c) {
            mins[c] = std::min(mins[c], p[c]);
            maxs[c] = std::max(maxs[c], p[c]);
          }
          m[static_cast<std::size_t>(idx) / 64] |= std::uint64_t{1} << (idx % 64);
          ++taken;
        }
        if (taken > 1) sets.push_back(std::move(m));
      }
    }
    return greedy_cover_dynamic(n, sets);
  }

  int covering(double eps, CoverMode mode) const {
    return mode == CoverMode::exact ? exact(eps) : greedy(eps);
  }
};

}  // namespace

int covering_number(const PointCloudSet& K, double eps, CoverMode mode,
                    const CoveringOptions& opts) {
  if (!(eps >= 0.0)) throw InputError("covering radius must be nonnegative");
  CoverContext ctx(K, opts);
  return ctx.covering(eps, mode);
}

int covering_number_oracle(const PointCloudSet& K, double eps,
                           const CoveringOptions& opts) {
  if (!(eps >= 0.0)) throw InputError("covering radius must be nonnegative");
  if (static_cast<int>(K.size()) > opts.exact_cap) {
    throw CapacityError("oracle covering limited to " + std::to_string(opts.exact_cap) +
                        " points");
  }
  std::vector<setcover::Mask> masks = K.norm().is_sup()
                                          ? exact_masks_sup(K, eps, opts)
                                          : exact_masks_candidates(K, eps);
  return setcover::exhaustive_min_cover(static_cast<int>(K.size()), masks);
}

EntropyBracket entropy_number(const PointCloudSet& K, int n, double tol,
                              const CoveringOptions& opts) {
  if (n < 0 || n > 62) throw InputError("entropy index must lie in [0, 62]");
  if (!(tol > 0.0)) throw InputError("bisection tolerance must be positive");
  const std::uint64_t budget = std::uint64_t{1} << n;
  EntropyBracket out;
  const bool small_exact = static_cast<int>(K.size()) <= opts.exact_cap;
  out.method = (small_exact || K.dimension() == 1) ? "exact" : "greedy-upper";
  if (K.size() <= budget) {
    // One center per point covers at radius 0.
    return out;
  }
  const CoverMode mode = small_exact ? CoverMode::exact : CoverMode::greedy;
  CoverContext ctx(K, opts);
  double hi = K.chebyshev_radius().radius;
  double lo = 0.0;  // covering with |K| > 2^n distinct points fails at 0
  const double abs_tol = tol * std::max(hi, 1e-300);
  while (hi - lo > abs_tol) {
    double mid = 0.5 * (lo + hi);
    if (static_cast<std::uint64_t>(ctx.covering(mid, mode)) <= budget) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.lower = lo;
  out.upper = hi;
  return out;
}

namespace {

double packing_impl(const PointCloudSet& K, int n, bool parallel) {
  if (n < 0 || n > 62) throw InputError("entropy index must lie in [0, 62]");
  const std::uint64_t needed = (std::uint64_t{1} << n) + 1;
  const std::size_t count = K.size();
  if (count < needed) return 0.0;
  // Farthest-point traversal from point 0; after selecting M points the
  // pairwise separation is at least the smallest insertion distance.
  std::vector<double> mindist(count);
  if (parallel) {
    parallel_for(count, [&](std::size_t i) { mindist[i] = K.distance(0, i); });
  } else {
    for (std::size_t i = 0; i < count; ++i) mindist[i] = K.distance(0, i);
  }
  double min_sep = std::numeric_limits<double>::infinity();
  for (std::uint64_t step = 1; step < needed; ++step) {
    std::size_t next = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < count; ++i) {
      if (mindist[i] > best) {
        best = mindist[i];
        next = i;
      }
    }
    min_sep = std::min(min_sep, best);
    if (parallel) {
      parallel_for(count, [&](std::size_t i) {
        mindist[i] = std::min(mindist[i], K.distance(next, i));
      });
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        mindist[i] = std::min(mindist[i], K.distance(next, i));
      }
    }
  }
  return 0.5 * min_sep;
}

}  // namespace

double packing_lower_bound(const PointCloudSet& K, int n) {
  return packing_impl(K, n, true);
}

double packing_lower_bound_serial(const PointCloudSet& K, int n) {
  return packing_impl(K, n, false);
}

Cover cover_from_lipschitz(const ParamMap& map, double gamma, int param_dim,
                           double eps, const Norm& ambient,
                           const std::vector<std::vector<double>>& verify_params) {
  if (!(gamma > 0.0)) throw InputError("Lipschitz constant must be positive");
  if (!(eps > 0.0)) throw InputError("cover radius must be positive");
  if (param_dim < 1) throw InputError("parameter dimension must be >= 1");
  const double delta = eps / gamma;
  auto lattice = linf_lattice(param_dim, delta);
  Cover cover;
  cover.radius = eps;
  cover.centers.resize(lattice.size());
  parallel_for(lattice.size(), [&](std::size_t i) { cover.centers[i] = map(lattice[i]); });
  for (const auto& c : cover.centers) {
    if (static_cast<int>(c.size()) != ambient.dimension()) {
      throw InputError("map output dimension does not match the ambient norm");
    }
  }
  // Spot-check the claimed constant on consecutive sample pairs.
  const double claim_tol = 1.0 + 1e-9;
  for (std::size_t i = 0; i + 1 < verify_params.size(); ++i) {
    std::vector<double> diff(param_dim);
    double param_dist = 0.0;
    for (int c = 0; c < param_dim; ++c) {
      param_dist = std::max(param_dist,
                            std::fabs(verify_params[i][c] - verify_params[i + 1][c]));
    }
    if (param_dist == 0.0) continue;
    double image_dist = ambient.distance(map(verify_params[i]), map(verify_params[i + 1]));
    if (image_dist > gamma * param_dist * claim_tol) {
      throw CertificateError("claimed Lipschitz constant fails on sampled pair");
    }
  }
  // Verify the cover on the sampled images.
  std::vector<char> ok(verify_params.size() ? verify_params.size() : 1, 1);
  parallel_for(verify_params.size(), [&](std::size_t i) {
    std::vector<double> image = map(verify_params[i]);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : cover.centers) {
      best = std::min(best, ambient.distance(image, c));
      if (best <= eps * claim_tol) break;
    }
    ok[i] = best <= eps * claim_tol ? 1 : 0;
  });
  for (std::size_t i = 0; i < verify_params.size(); ++i) {
    if (!ok[i]) throw CertificateError("cover misses a sampled image point");
  }
  cover.verified = true;
  return cover;
}

void EntropyProfile::validate() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].lower > rows[i].upper + 1e-12) {
      throw CertificateError("entropy bracket has lower > upper");
    }
    if (i > 0 && rows[i].upper > rows[i - 1].upper + 1e-9) {
      throw CertificateError("entropy uppers must be nonincreasing");
    }
  }
}

EntropyProfile entropy_profile(const PointCloudSet& K, int n_max, double tol,
                               const CoveringOptions& opts) {
  if (n_max < 0) throw InputError("profile needs n_max >= 0");
  EntropyProfile profile;
  for (int n = 0; n <= n_max; ++n) {
    EntropyBracket b = entropy_number(K, n, tol, opts);
    EntropyProfile::Row row;
    row.n = n;
    row.upper = b.upper;
    // A certified upper bound for n-1 is valid for n; clamping keeps the
    // tabulated uppers nonincreasing when greedy covers jitter.
    if (!profile.rows.empty()) row.upper = std::min(row.upper, profile.rows.back().upper);
    if (b.method == "exact") {
      row.lower = std::min(b.lower, row.upper);
      row.method = b.method;
    } else {
      row.lower = std::min(packing_lower_bound(K, n), row.upper);
      row.method = "greedy-upper/packing-lower";
    }
    profile.rows.push_back(std::move(row));
  }
  profile.validate();
  return profile;
}

std::vector<std::vector<double>> linf_lattice(int dim, double delta) {
  if (dim < 1) throw InputError("lattice dimension must be >= 1");
  if (!(delta > 0.0)) throw InputError("lattice fineness must be positive");
  const int intervals = static_cast<int>(std::ceil(1.0 / delta));
  const int per_axis = intervals + 1;
  double total = std::pow(static_cast<double>(per_axis), dim);
  if (total > 5e6) throw CapacityError("lattice would exceed 5e6 nodes");
  std::vector<double> axis(per_axis);
  for (int k = 0; k < per_axis; ++k) axis[k] = std::min(-1.0 + 2.0 * delta * k, 1.0);
  std::vector<std::vector<double>> nodes;
  nodes.reserve(static_cast<std::size_t>(total));
  std::vector<int> idx(dim, 0);
  for (;;) {
    std::vector<double> p(dim);
    for (int c = 0; c < dim; ++c) p[c] = axis[idx[c]];
    nodes.push_back(std::move(p));
    int c = dim - 1;
    while (c >= 0 && ++idx[c] == per_axis) idx[c--] = 0;
    if (c < 0) break;
  }
  return nodes;
}

}  // namespace lw
