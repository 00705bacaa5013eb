#pragma once

#include <cstdint>
#include <vector>

#include "lw/network.hpp"
#include "lw/rates.hpp"

namespace lw {

// Parameter-magnitude budget w(n) as a function of the architecture index
// (depth for deep regimes, width for shallow ones).
//   constant:     w = C            (C >= 1)
//   polynomial:   w = C * n^delta  (C >= 1, delta >= 0)
//   exponential:  w = C * 2^(c n^nu)  (C >= 1, c >= 0, nu >= 0)
struct BoundFamily {
  enum class Kind { constant, polynomial, exponential };

  Kind kind = Kind::constant;
  double C = 1.0;
  double delta = 0.0;  // polynomial
  double c = 0.0;      // exponential
  double nu = 0.0;     // exponential

  static BoundFamily constant(double C);
  static BoundFamily polynomial(double C, double delta);
  static BoundFamily exponential(double C, double c, double nu);

  double eval(double n) const;
};

enum class Regime { deep_sigmoidal, deep_relu, shallow_sigmoidal, shallow_relu };

// Certified Lipschitz bound for the parameter-to-function map y -> Phi_y in
// the sup norm over the unit cube.  `value` is the layer recursion's result,
// `closed_form` the geometric-series envelope, `trace` the per-layer
// recursion values.  value <= closed_form holds whenever the product driving
// the recursion (L*W*w deep sigmoidal, W*w deep relu) is at least 2.
struct LipschitzCertificate {
  double value = 0.0;
  double closed_form = 0.0;
  std::vector<double> trace;
  Regime regime = Regime::deep_sigmoidal;
};

// Depth-n bound, sigmoidal hidden activations with Lipschitz constant L.
// Recursion: T_0 = L(d+1), T_j = LWw T_{j-1} + L(W+1); closed form
// 2L(max(W,d)+1) (LWw)^n.  c0 is the norm-embedding constant.
LipschitzCertificate deep_bound_sigmoidal(int d, int W, double L, double w, int n,
                                          double c0 = 1.0);

// Depth-n bound, relu (or mixed relu/identity) hidden activations.
// Recursion: T_0 = d+1, T_j = Ww T_{j-1} + (d+2) w (Ww)^j + 1; closed form
// (d+2) n (Ww)^(n+1).  Requires W*w >= 2.
LipschitzCertificate deep_bound_relu(int d, int W, double w, int n, double c0 = 1.0);

// One-hidden-layer bound.  Sigmoidal: c0 (L(d+1) + 2L) W w.
// Relu: 3 c0 (d+2) W w^2.  Requires w >= 1.
LipschitzCertificate shallow_bound(int d, int W, double L, double w, ActKind act,
                                   double c0 = 1.0);

struct EmpiricalOptions {
  int trials = 200;
  int grid_points = 65;
  std::uint64_t seed = 20240801;
};

// Sampled lower estimate of the parameter-to-function Lipschitz constant:
// max over seeded random parameter pairs in the l-inf ball of radius w of
// (sup-grid output distance) / (l-inf parameter distance).  Parallel over
// trials with a max reduction; the serial variant is the reference kept for
// the consistency tests.
double empirical_lipschitz(const NetLayout& layout, const Activation& act, double w,
                           const EmpiricalOptions& opts);
double empirical_lipschitz_serial(const NetLayout& layout, const Activation& act,
                                  double w, const EmpiricalOptions& opts);

// Width/depth budget phi(n) = log2(gamma_n) induced by a bound family.
// Deep regimes: phi(n) = c n (1 + log2 w(n)); shallow regimes:
// phi(W) = c (log2 W + log2 w(W)).  `phi` is the symbolic leading-order
// growth family, `phi_value` the exact value at n.
struct PhiGamma {
  GrowthFunction phi;
  double phi_value = 0.0;
  double log2_gamma = 0.0;  // equals phi_value
};

PhiGamma phi_gamma_of(const BoundFamily& family, double n, bool deep, double c = 1.0);

}  // namespace lw
