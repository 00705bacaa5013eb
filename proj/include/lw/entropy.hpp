#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lw/norms.hpp"

namespace lw {

// Covering / entropy machinery for finite point clouds.
//
// covering_number(K, eps) is the least number of closed eps-balls (centers
// anywhere in the space) needed to cover K; the n-th entropy number is the
// least eps so that 2^n balls suffice.  The exact solver restricts centers to
// a rich candidate family which is lossless for sup norms (optimal balls can
// be recentered at per-coordinate midpoints) and reported as a restriction
// for other norms.

enum class CoverMode { exact, greedy };

struct CoveringOptions {
  // Exact mode refuses clouds above this size (branch-and-bound blowup).
  int exact_cap = 22;
  // Cap on the maximal-coverable-subset enumeration in exact mode.
  std::size_t enumeration_cap = 200000;
  // Pairwise midpoints join the greedy candidate centers up to this size.
  int midpoint_cap = 300;
};

// Minimum number of closed eps-balls covering K.
//  - exact: provably minimal over the candidate family (branch-and-bound);
//    requires |K| <= opts.exact_cap, else CapacityError.
//  - greedy: upper bound.  In dimension 1 the sweep solution is optimal;
//    otherwise standard greedy set cover over candidate balls with the usual
//    ln|K|+1 approximation guarantee.
int covering_number(const PointCloudSet& K, double eps, CoverMode mode,
                    const CoveringOptions& opts = {});

// Independent reference for the exact solver: same candidate family, but the
// minimum cover is found by exhaustive dynamic programming over element
// subsets instead of branch-and-bound.  Exponential; small clouds only.
int covering_number_oracle(const PointCloudSet& K, double eps,
                           const CoveringOptions& opts = {});

// Two-sided bracket for the n-th entropy number from bisection on eps.
// method records how the bracket was produced: "exact" brackets the true
// value; "greedy-upper" means the upper end is certified but the lower end
// is heuristic (pair with packing_lower_bound for a certified lower bound).
struct EntropyBracket {
  double lower = 0.0;
  double upper = 0.0;
  std::string method;
};

// tol is relative to the initial upper bound (the Chebyshev radius).
EntropyBracket entropy_number(const PointCloudSet& K, int n, double tol = 1e-6,
                              const CoveringOptions& opts = {});

// Certified lower bound on the n-th entropy number: farthest-point sampling
// selects 2^n + 1 points with pairwise separation s, which forces
// eps_n >= s / 2.  Returns 0 when the cloud has too few points.
double packing_lower_bound(const PointCloudSet& K, int n);
double packing_lower_bound_serial(const PointCloudSet& K, int n);

// Explicit cover of the image of the parameter ball under a Lipschitz map.
struct Cover {
  std::vector<std::vector<double>> centers;
  double radius = 0.0;
  bool verified = false;
};

using ParamMap = std::function<std::vector<double>(std::span<const double>)>;

// Images of a (2 eps/gamma)-spaced lattice of the unit l-inf parameter ball
// under a gamma-Lipschitz map form an eps-cover of the image set.  The
// lattice has at most (2 ceil(gamma/eps) + 1)^param_dim points.  The claimed
// constant is spot-checked on pairs from verify_params and the cover is
// verified against their images; a failure throws CertificateError.
Cover cover_from_lipschitz(const ParamMap& map, double gamma, int param_dim,
                           double eps, const Norm& ambient,
                           const std::vector<std::vector<double>>& verify_params);

// Tabulated brackets for n = 0..n_max.
struct EntropyProfile {
  struct Row {
    int n = 0;
    double lower = 0.0;
    double upper = 0.0;
    std::string method;
  };
  std::vector<Row> rows;

  // Checks lower <= upper per row and nonincreasing uppers.
  void validate() const;
};

EntropyProfile entropy_profile(const PointCloudSet& K, int n_max, double tol = 1e-6,
                               const CoveringOptions& opts = {});

// Axis-aligned lattice covering [-1,1]^dim with fineness delta (every point
// of the ball is within delta of a lattice node in l-inf).  Nodes are spaced
// 2*delta starting at -1, with the endpoint clamped to 1.
std::vector<std::vector<double>> linf_lattice(int dim, double delta);

}  // namespace lw
