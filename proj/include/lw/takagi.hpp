#pragma once

#include <vector>

#include "lw/network.hpp"

namespace lw {

// Piecewise-linear hat H(t) = 2 (t)+ - 4 (t - 1/2)+ : the tent over [0, 1]
// with peak H(1/2) = 1, extended by 0 to the left and by decreasing slope -2
// to the right.  Iterating H produces 2^(k-1) tents of height 1 on [0, 1].
double hat(double t);
double hat_iterate(int k, double t);  // k >= 1 compositions

// Weighted sum psi(t) = sum_k c_k H^(k)(t).  The lambda form uses
// c_k = lambda^(-k); its absolute coefficient sum is 1/(|lambda|-1), so the
// family stays in the unit coefficient class for |lambda| >= 2.
struct TakagiSpec {
  std::vector<double> coefficients;
  double lambda = 0.0;  // 0 when the coefficients were given explicitly

  static TakagiSpec from_coefficients(std::vector<double> coeffs);
  static TakagiSpec from_lambda(double lambda, int terms);

  int terms() const { return static_cast<int>(coefficients.size()); }
  double coefficient_l1() const;
  bool in_unit_class() const { return coefficient_l1() <= 1.0 + 1e-12; }
};

double psi(const TakagiSpec& spec, double t);

// Fixed-width deep network computing psi exactly.  Hidden width 4 with
// channels (identity carry of t, relu piece (.)+, relu piece (. - 1/2)+,
// identity accumulator); depth equals the number of terms.  The parameter
// bound is max(4, 4 max_k |c_k|) independent of depth for bounded
// coefficients.
struct TakagiNetwork {
  FeedForwardNet net;
  double param_bound = 4.0;
};

TakagiNetwork build_takagi_network(const TakagiSpec& spec);

// Remaining-mass bound sum_{k > n} |lambda|^(-k) = |lambda|^(-n) / (|lambda|-1).
// Requires |lambda| > 1.
double tail_bound(double lambda, int n);

}  // namespace lw
