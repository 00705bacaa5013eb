#pragma once

#include <string>

namespace lw {

// Decay rate in the index n, tracked up to constants (scale defaults to 1).
//   polylog:  C * (log2 n)^beta * n^(-alpha),   alpha > 0
//   loginv:   C * (log2 n)^(-alpha),            alpha > 0
//   expo:     C * 2^(-c * n^a * (log2 n)^b),    c > 0, 0 < a <= 1
// The b field extends expo with a log power inside the exponent; b = 0 is
// the plain case.  Comparisons between rates are made on exponents and log
// powers only, never on the constants.
struct RateFunction {
  enum class Kind { polylog, loginv, expo };

  Kind kind = Kind::polylog;
  double alpha = 1.0;  // polylog / loginv decay exponent
  double beta = 0.0;   // polylog log power
  double c = 1.0;      // expo exponent constant
  double a = 1.0;      // expo index power, in (0, 1]
  double b = 0.0;      // expo log power inside the exponent
  double scale = 1.0;  // multiplicative constant C

  static RateFunction polylog(double alpha, double beta, double scale = 1.0);
  static RateFunction loginv(double alpha, double scale = 1.0);
  static RateFunction expo(double c, double a, double b = 0.0, double scale = 1.0);

  // Value at n; requires n >= 2 so that log2 n >= 1.
  double eval(double n) const;

  // Smallest index from which the rate is nonincreasing:
  // max(2, e^(beta/alpha)) for polylog with beta > 0, 2 otherwise.
  double monotone_from() const;

  std::string describe() const;
};

// Growth function phi(n), the log2 of the Lipschitz-width budget gamma_n.
//   constant:  c
//   linear:    c * n
//   nlogn:     c * n * log2 n
//   power:     c * n^p * (log2 n)^q
struct GrowthFunction {
  enum class Kind { constant, linear, nlogn, power };

  Kind kind = Kind::linear;
  double c = 1.0;
  double p = 1.0;  // power kind only
  double q = 0.0;  // power kind only

  static GrowthFunction constant(double c);
  static GrowthFunction linear(double c);
  static GrowthFunction nlogn(double c);
  static GrowthFunction power(double c, double p, double q);

  double eval(double n) const;  // requires n >= 2

  // Whether phi(n) >= c' * log2 n holds for some c' > 0 and all large n.
  // Several lower-bound theorems assume this.
  bool dominates_log() const;

  // Effective (p, q) pair with phi(n) comparable to c * n^p (log2 n)^q.
  double power_p() const;
  double power_q() const;

  std::string describe() const;
};

}  // namespace lw
