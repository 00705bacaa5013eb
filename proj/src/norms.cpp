#include "lw/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <unordered_set>

#include "lw/errors.hpp"

namespace lw {

Norm Norm::lp(double p, int dim) {
  if (dim <= 0) throw InputError("norm dimension must be positive");
  if (!(p >= 1.0)) throw InputError("lp norm requires p >= 1");
  Norm n;
  n.kind_ = Kind::lp;
  n.p_ = p;
  n.dim_ = dim;
  return n;
}

Norm Norm::sup_grid(std::vector<double> grid) {
  if (grid.empty()) throw InputError("sup_grid norm requires a nonempty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw InputError("sup_grid nodes must be strictly increasing");
    }
  }
  Norm n;
  n.kind_ = Kind::sup_grid;
  n.p_ = std::numeric_limits<double>::infinity();
  n.dim_ = static_cast<int>(grid.size());
  n.grid_ = std::move(grid);
  return n;
}

bool Norm::is_sup() const {
  return kind_ == Kind::sup_grid || std::isinf(p_);
}

double Norm::value(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw InputError("vector dimension does not match norm dimension");
  }
  if (is_sup()) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
  }
  if (p_ == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::fabs(v);
    return s;
  }
  if (p_ == 2.0) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v), p_);
  return std::pow(s, 1.0 / p_);
}

double Norm::distance(std::span<const double> x, std::span<const double> y) const {
  if (x.size() != y.size()) throw InputError("distance between vectors of different dimension");
  if (static_cast<int>(x.size()) != dim_) {
    throw InputError("vector dimension does not match norm dimension");
  }
  // Avoid a temporary for the two hot cases.
  if (is_sup()) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::fabs(x[i] - y[i]));
    return m;
  }
  if (p_ == 2.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double d = x[i] - y[i];
      s += d * d;
    }
    return std::sqrt(s);
  }
  std::vector<double> diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return value(diff);
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<double>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (double d : v) {
      std::uint64_t bits;
      std::memcpy(&bits, &d, sizeof bits);
      h ^= bits;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

struct VecEq {
  bool operator()(const std::vector<double>& a, const std::vector<double>& b) const {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
  }
};

}  // namespace

PointCloudSet::PointCloudSet(std::vector<std::vector<double>> points, Norm norm,
                             std::string label)
    : norm_(std::move(norm)), label_(std::move(label)) {
  if (points.empty()) throw InputError("point cloud must be nonempty");
  std::unordered_set<std::vector<double>, VecHash, VecEq> seen;
  points_.reserve(points.size());
  for (auto& p : points) {
    if (static_cast<int>(p.size()) != norm_.dimension()) {
      throw InputError("point dimension does not match norm dimension");
    }
    for (double v : p) {
      if (!std::isfinite(v)) throw InputError("point coordinates must be finite");
    }
    if (seen.insert(p).second) points_.push_back(std::move(p));
  }
}

double PointCloudSet::distance(std::size_t i, std::size_t j) const {
  return norm_.distance(points_[i], points_[j]);
}

double PointCloudSet::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      d = std::max(d, distance(i, j));
    }
  }
  return d;
}

ChebyshevResult PointCloudSet::chebyshev_radius() const {
  ChebyshevResult res;
  const int dim = dimension();
  if (norm_.is_sup()) {
    // Exact under sup norms: per coordinate the optimal center is the
    // midpoint of the range and the radius is the largest half-range.
    res.center.resize(dim);
    double radius = 0.0;
    for (int c = 0; c < dim; ++c) {
      double lo = points_[0][c], hi = points_[0][c];
      for (const auto& p : points_) {
        lo = std::min(lo, p[c]);
        hi = std::max(hi, p[c]);
      }
      res.center[c] = 0.5 * (lo + hi);
      radius = std::max(radius, 0.5 * (hi - lo));
    }
    res.radius = radius;
    res.lower = radius;  // exact
    res.exact = true;
    return res;
  }
  // General norm: certified bracket [diam/2, diam].  Candidate centers are
  // the points themselves and all pairwise midpoints; the best candidate
  // tightens the upper end of the bracket.
  double diam = diameter();
  res.lower = 0.5 * diam;
  res.exact = points_.size() == 1;
  std::vector<std::vector<double>> candidates = points_;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      std::vector<double> mid(dim);
      for (int c = 0; c < dim; ++c) mid[c] = 0.5 * (points_[i][c] + points_[j][c]);
      candidates.push_back(std::move(mid));
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& cand : candidates) {
    double worst = 0.0;
    for (const auto& p : points_) worst = std::max(worst, norm_.distance(cand, p));
    if (worst < best) {
      best = worst;
      res.center = cand;
    }
  }
  res.radius = best;
  return res;
}

double sigma_value(int j) {
  if (j < 1) throw InputError("sigma index must be >= 1");
  return 1.0 / std::log2(static_cast<double>(j) + 1.0);
}

PointCloudSet sigma_set(int J) {
  if (J < 1) throw InputError("sigma set requires J >= 1");
  std::vector<std::vector<double>> pts;
  pts.reserve(static_cast<std::size_t>(J) + 1);
  pts.emplace_back(J, 0.0);
  for (int j = 1; j <= J; ++j) {
    std::vector<double> p(J, 0.0);
    p[j - 1] = sigma_value(j);
    pts.push_back(std::move(p));
  }
  return PointCloudSet(std::move(pts), Norm::linf(J), "sigma(" + std::to_string(J) + ")");
}

PointCloudSet uniform_grid_cloud(int npoints) {
  if (npoints < 2) throw InputError("grid cloud requires at least 2 points");
  std::vector<std::vector<double>> pts;
  pts.reserve(npoints);
  for (int i = 0; i < npoints; ++i) {
    pts.push_back({static_cast<double>(i) / (npoints - 1)});
  }
  return PointCloudSet(std::move(pts), Norm::linf(1),
                       "grid(" + std::to_string(npoints) + ")");
}

}  // namespace lw
