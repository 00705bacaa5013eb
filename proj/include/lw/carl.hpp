#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lw/entropy.hpp"
#include "lw/lipbounds.hpp"
#include "lw/rates.hpp"

namespace lw {

// Rate-implication arithmetic.  Everything here is exact formula evaluation;
// outputs carry undetermined multiplicative constants (scale fixed to 1), so
// comparisons are made on exponents and log powers, never on constants.

// Index m * log2(3 gamma / delta) at which a width bound below delta forces
// the entropy number under 2*delta.  degenerate flags delta >= 3 gamma,
// where the index is nonpositive and the transfer says nothing.
struct CarlIndex {
  double value = 0.0;
  long long index = 0;  // ceil(value)
  bool degenerate = false;
};

CarlIndex carl_index(double m, double gamma, double delta);

// Width lower bound transferred from an entropy lower bound, evaluated with
// the composite index n*phi(n):
//   polylog(alpha, beta) -> [log2(n phi(n))]^beta * [n phi(n)]^(-alpha)
//   loginv(alpha)        -> [log2(n phi(n))]^(-alpha)
// Requires phi to dominate log2 n; expo rates are unsupported.
double width_lower_from_entropy(const RateFunction& rate, const GrowthFunction& phi,
                                double n);

// Leading-order form of the same bound as a rate in n alone, using
// n phi(n) ~ c n^(1+p) (log2 n)^q: polylog(alpha(1+p), beta - alpha q);
// loginv is unchanged.
RateFunction width_lower_rate(const RateFunction& rate, const GrowthFunction& phi);

// Approximation-error lower bound for architectures with parameter budget
// wfam, evaluated at depth n (deep) or width W (shallow).  `rate` is the
// assumed entropy lower bound of the class.
struct NNLowerBound {
  RateFunction rate;   // reduced symbolic form in the architecture index
  double value = 0.0;  // rate evaluated at the query index, scale 1
};

NNLowerBound nn_lower_bound_deep(const RateFunction& rate, const BoundFamily& wfam,
                                 double n);
NNLowerBound nn_lower_bound_shallow(const RateFunction& rate, const BoundFamily& wfam,
                                    double W);

// Entropy upper bound from a width decay rate, with budget
// gamma_n = 2^(c n^p (log2 n)^q).  Case split:
//   polylog width, p>0 or (p=0, q>=1)  -> polylog(alpha/(1+p), beta + alpha q/(1+p))
//   polylog width, p=0, q<1            -> polylog(alpha, alpha + beta)
//   expo(c, a=1) width, p<1 or (p=1, q<=0) -> expo(c, 1/2)
//   expo(c, a=1) width, p>1 or (p=1, q>0)  -> expo(c, 1/(p+1), -q/(p+1))
// loginv widths and expo widths with a != 1 are outside the split.
RateFunction entropy_upper_from_width(const RateFunction& width_rate, double p, double q);

// Entropy upper bound from a network approximation rate with parameter
// budget wfam (polynomial delta >= 0, or exponential nu > 0), for the deep
// (index = depth) or shallow (index = width) regime.
RateFunction entropy_upper_from_nn_error(const RateFunction& err_rate,
                                         const BoundFamily& wfam, bool deep);

// Entropy index n * ceil(phi(n) / 2) at which the n-th width with budget
// 2^phi(n) is controlled by the entropy number.
long long width_upper_from_entropy_index(int n, const GrowthFunction& phi);

// Entropy decay forced by an exactly-zero width: bound 6 * 2^(phi(n) - k)
// at index n*k, valid for k > phi(n).
struct ZeroWidthDecay {
  double bound = 0.0;
  long long index = 0;
};

ZeroWidthDecay zero_width_entropy_decay(int n, const GrowthFunction& phi, int k);

// Cross-solver consistency: a width upper bound u at (m, gamma) forces
// entropy lower bounds below 2*delta at index ceil(m log2(3 gamma/delta))
// for every delta > u.  Violations indicate a bug in one of the solvers.
struct WidthDatum {
  double m = 1.0;      // parametrization dimension
  double gamma = 1.0;  // Lipschitz budget
  double upper = 0.0;  // certified width upper bound
};

struct ConsistencyIssue {
  double m = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  long long index = 0;
  double entropy_lower = 0.0;  // offending certified lower bound
  double limit = 0.0;          // 2*delta it should stay under
};

struct ConsistencyReport {
  int checked = 0;
  int skipped = 0;  // index outside the tabulated profile
  bool partial = false;
  std::vector<ConsistencyIssue> violations;
  bool ok() const { return violations.empty(); }
};

// deltas: multipliers applied to each datum's upper bound (all > 1); a
// default ladder is used when empty.
ConsistencyReport check_carl_consistency(const EntropyProfile& entropy,
                                         const std::vector<WidthDatum>& widths,
                                         std::span<const double> delta_factors = {});

// Doubling behaviour of a growth function: max over n in [2, N] of
// phi(c n)/phi(n), plus the analytic finite/infinite classification (all
// built-in kinds are doubling).
struct DoublingReport {
  double sup = 0.0;
  bool finite = true;
};

DoublingReport doubling_sup(const GrowthFunction& phi, double c, int N);

// Width-bracket gap lower bound driven by the ratio r = phi(c n)/phi(n):
// r^alpha (log2 r)^(-beta) for beta > 0, r^alpha otherwise.  Degenerate when
// the ratio does not exceed 1.
struct RatioBound {
  double value = 0.0;
  double ratio = 0.0;
  bool degenerate = false;
};

RatioBound ratio_divergence_bound(double alpha, double beta, const GrowthFunction& phi,
                                  double n, double c = 8.0);

// Entropy index and budget expression for the constant-gamma sandwich
//   d_n^{c1 xi_n^{-c}} <= eps_{c ceil(n log2(1/xi_n))} <= 3 d_n^{gamma},
// for xi_n = 2^(-n) (expo2) or xi_n = n^(-alpha) (poly).  poly with
// alpha = 0 is degenerate (constant xi).
enum class XiKind { expo2, poly };

struct ChainBound {
  long long entropy_index = 0;
  double log2_gamma = 0.0;  // log2 of the budget at n, constant c1 omitted
  std::string gamma_expr;
  bool degenerate = false;
};

ChainBound const_gamma_chain(XiKind kind, double alpha, double n, double c = 1.0);

}  // namespace lw
