#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace lw {

// Norm on R^dim: either an lp norm (p >= 1, p = infinity allowed) or the
// sup norm over a stored sample grid ("sup_grid"), used when points represent
// functions sampled at grid nodes.  sup_grid distances coincide with l-inf;
// the grid is kept for labeling and serialization.
class Norm {
 public:
  enum class Kind { lp, sup_grid };

  static Norm lp(double p, int dim);
  static Norm linf(int dim) { return lp(std::numeric_limits<double>::infinity(), dim); }
  static Norm sup_grid(std::vector<double> grid);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  int dimension() const { return dim_; }
  bool is_sup() const;  // true for l-inf and sup_grid
  const std::vector<double>& grid() const { return grid_; }

  double value(std::span<const double> x) const;
  double distance(std::span<const double> x, std::span<const double> y) const;

 private:
  Norm() = default;
  Kind kind_ = Kind::lp;
  double p_ = 2.0;
  int dim_ = 0;
  std::vector<double> grid_;
};

// Result of a Chebyshev radius computation.  For sup norms the value is
// exact; otherwise `radius` is the best certified upper bound found by a
// candidate-center search and `lower` is the diameter/2 bound, so the true
// radius lies in [lower, radius].
struct ChebyshevResult {
  double radius = 0.0;
  double lower = 0.0;
  std::vector<double> center;
  bool exact = false;
};

// Finite point set in a normed space.  Duplicate points (exact bit equality)
// are dropped on construction, keeping first occurrences in input order.
class PointCloudSet {
 public:
  PointCloudSet(std::vector<std::vector<double>> points, Norm norm,
                std::string label = "");

  std::size_t size() const { return points_.size(); }
  int dimension() const { return norm_.dimension(); }
  const Norm& norm() const { return norm_; }
  const std::string& label() const { return label_; }
  std::span<const double> point(std::size_t i) const { return points_[i]; }
  const std::vector<std::vector<double>>& points() const { return points_; }

  double distance(std::size_t i, std::size_t j) const;
  double diameter() const;
  ChebyshevResult chebyshev_radius() const;

 private:
  std::vector<std::vector<double>> points_;
  Norm norm_;
  std::string label_;
};

// sigma_j = 1 / log2(j + 1), the slowly decaying coordinate weights of the
// standing example set {sigma_j e_j} united with the origin.
double sigma_value(int j);

// Truncated example set: origin plus sigma_j e_j for j = 1..J, in R^J with
// the sup norm.  Pairwise distances equal sigma_min(j, k).
PointCloudSet sigma_set(int J);

// npoints equally spaced values spanning [0, 1] as a 1-d cloud under |.|.
PointCloudSet uniform_grid_cloud(int npoints);

}  // namespace lw
