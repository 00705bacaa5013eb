#include "lw/takagi.hpp"

#include <algorithm>
#include <cmath>

#include "lw/errors.hpp"

namespace lw {

double hat(double t) {
  double a = t > 0.0 ? t : 0.0;
  double b = t - 0.5 > 0.0 ? t - 0.5 : 0.0;
  return 2.0 * a - 4.0 * b;
}

double hat_iterate(int k, double t) {
  if (k < 1) throw InputError("hat iterate needs k >= 1");
  double v = t;
  for (int i = 0; i < k; ++i) v = hat(v);
  return v;
}

TakagiSpec TakagiSpec::from_coefficients(std::vector<double> coeffs) {
  if (coeffs.empty()) throw InputError("coefficient list must be nonempty");
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw InputError("coefficients must be finite");
  }
  TakagiSpec s;
  s.coefficients = std::move(coeffs);
  return s;
}

TakagiSpec TakagiSpec::from_lambda(double lambda, int terms) {
  if (!(std::fabs(lambda) > 1.0)) throw DomainError("lambda form requires |lambda| > 1");
  if (terms < 1) throw InputError("lambda form needs at least 1 term");
  TakagiSpec s;
  s.lambda = lambda;
  s.coefficients.resize(terms);
  double c = 1.0;
  for (int k = 0; k < terms; ++k) {
    c /= lambda;  // exact for powers of two
    s.coefficients[k] = c;
  }
  return s;
}

double TakagiSpec::coefficient_l1() const {
  double s = 0.0;
  for (double c : coefficients) s += std::fabs(c);
  return s;
}

double psi(const TakagiSpec& spec, double t) {
  double h = t;
  double sum = 0.0;
  for (double c : spec.coefficients) {
    h = hat(h);
    sum += c * h;
  }
  return sum;
}

TakagiNetwork build_takagi_network(const TakagiSpec& spec) {
  const int n = spec.terms();
  double cmax = 0.0;
  for (double c : spec.coefficients) cmax = std::max(cmax, std::fabs(c));
  TakagiNetwork out{
      [&] {
        NetLayout layout{1, 4, n};
        // Channels: 0 carries t, 1 holds (x)+, 2 holds (x - 1/2)+,
        // 3 accumulates the weighted sum; x is the running hat iterate
        // reconstructed as 2 * ch1 - 4 * ch2.
        std::vector<AffineLayer> layers;
        AffineLayer first(4, 1);
        first.weights = {1.0, 1.0, 1.0, 0.0};
        first.bias = {0.0, 0.0, -0.5, 0.0};
        layers.push_back(std::move(first));
        for (int j = 1; j < n; ++j) {
          AffineLayer mid(4, 4);
          const double c = spec.coefficients[j - 1];
          mid.weights = {
              1.0, 0.0,      0.0,       0.0,  // t
              0.0, 2.0,      -4.0,      0.0,  // (x)+
              0.0, 2.0,      -4.0,      0.0,  // (x - 1/2)+
              0.0, 2.0 * c,  -4.0 * c,  1.0,  // sum += c * x
          };
          mid.bias = {0.0, 0.0, -0.5, 0.0};
          layers.push_back(std::move(mid));
        }
        AffineLayer last(1, 4);
        const double c = spec.coefficients[n - 1];
        last.weights = {0.0, 2.0 * c, -4.0 * c, 1.0};
        last.bias = {0.0};
        layers.push_back(std::move(last));
        std::vector<std::vector<Activation>> acts(
            n, {Activation::identity(), Activation::relu(), Activation::relu(),
                Activation::identity()});
        double bound = std::max(4.0, 4.0 * cmax);
        return FeedForwardNet(layout, std::move(layers), std::move(acts), bound);
      }(),
      std::max(4.0, 4.0 * cmax)};
  return out;
}

double tail_bound(double lambda, int n) {
  if (n < 0) throw InputError("tail bound needs n >= 0");
  const double L = std::fabs(lambda);
  if (!(L > 1.0)) throw DomainError("tail bound requires |lambda| > 1");
  return std::pow(L, -n) / (L - 1.0);
}

}  // namespace lw
