#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lw/entropy.hpp"
#include "lw/norms.hpp"

namespace lw {

// A Lipschitz family: parameters from the l-inf ball of the given radius map
// into the ambient space with the claimed per-unit constant.  The product
// constant * radius (the effective budget gamma) is invariant under
// rescale(), which normalizes the domain to the unit ball.
struct LipschitzParametrization {
  int param_dim = 1;
  double radius = 1.0;
  double constant = 1.0;  // Lipschitz constant on the stated domain
  ParamMap map;
  std::string description;

  double gamma() const { return constant * radius; }
};

// Spot-check the claimed constant on seeded random pairs from the domain
// ball; throws CertificateError when a sampled pair beats the claim.
void spot_check(const LipschitzParametrization& par, const Norm& ambient,
                int samples, std::uint64_t seed);

// Reparametrize onto the unit ball: map'(y) = map(radius * y).
LipschitzParametrization rescale(const LipschitzParametrization& par);

// One-sided estimate of how well the family approximates K:
//   upper = max over f in K of min over grid images of dist(f, image) + gamma * delta
// where the grid is a delta-net of the unit parameter ball.  This bounds the
// best approximation from the whole ball, not only from the net.
struct WidthEstimate {
  int n = 0;          // parameter dimension
  double gamma = 0.0; // Lipschitz budget of the family
  double upper = 0.0;
  double delta = 0.0; // net fineness used
  std::string witness;
};

// `grid` must be a delta-net of the unit l-inf ball in param_dim dimensions
// (linf_lattice provides one).  The parametrization must already be on the
// unit ball (rescale first).  Parallel over the points of K.
WidthEstimate width_upper(const PointCloudSet& K, const LipschitzParametrization& par,
                          const std::vector<std::vector<double>>& grid, double delta);
WidthEstimate width_upper_serial(const PointCloudSet& K,
                                 const LipschitzParametrization& par,
                                 const std::vector<std::vector<double>>& grid,
                                 double delta);

// Multiplicative penalties on the Lipschitz constant when changing between
// the natural norm pairs on the parameter ball: 2n+1 and 2 sqrt(n) + 1.
struct NormChangePenalty {
  double linear = 0.0;  // 2n + 1
  double sqrt = 0.0;    // 2 sqrt(n) + 1
};

NormChangePenalty norm_change_penalty(int n);

}  // namespace lw
