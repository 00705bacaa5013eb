#include <cmath>
#include <vector>

#include "doctest.h"
#include "lw/carl.hpp"
#include "lw/errors.hpp"

using namespace lw;

namespace {

bool same_shape(const RateFunction& x, const RateFunction& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case RateFunction::Kind::polylog:
      return x.alpha == doctest::Approx(y.alpha) && x.beta == doctest::Approx(y.beta);
    case RateFunction::Kind::loginv:
      return x.alpha == doctest::Approx(y.alpha);
    case RateFunction::Kind::expo:
      return x.c == doctest::Approx(y.c) && x.a == doctest::Approx(y.a) &&
             x.b == doctest::Approx(y.b);
  }
  return false;
}

}  // namespace

TEST_CASE("transfer index formula") {
  auto idx = carl_index(3.0, 1024.0, 0.25);
  CHECK(idx.value == doctest::Approx(3.0 * std::log2(3.0 * 1024.0 / 0.25)));
  CHECK(idx.index == 41);  // ceil(3 log2 12288) = ceil(40.755)
  CHECK_FALSE(idx.degenerate);
  // delta >= 3 gamma gives nothing
  CHECK(carl_index(2.0, 1.0, 3.0).degenerate);
  CHECK_THROWS_AS(carl_index(0.5, 1.0, 0.1), InputError);
  CHECK_THROWS_AS(carl_index(1.0, -1.0, 0.1), InputError);
}

TEST_CASE("width lower bound from an entropy lower bound") {
  // polylog(1,0) with linear budget at n=8: [n phi(n)]^-1 = 1/64
  CHECK(width_lower_from_entropy(RateFunction::polylog(1, 0), GrowthFunction::linear(1),
                                 8) == doctest::Approx(1.0 / 64));
  // loginv(2) with linear budget at n=4: [log2(16)]^-2 = 1/16
  CHECK(width_lower_from_entropy(RateFunction::loginv(2), GrowthFunction::linear(1),
                                 4) == doctest::Approx(1.0 / 16));
  // expo rates and sub-log budgets are rejected
  CHECK_THROWS_AS(width_lower_from_entropy(RateFunction::expo(1, 1),
                                           GrowthFunction::linear(1), 8),
                  DomainError);
  CHECK_THROWS_AS(width_lower_from_entropy(RateFunction::polylog(1, 0),
                                           GrowthFunction::constant(1), 8),
                  DomainError);
}

TEST_CASE("width lower rate reduces the composite index symbolically") {
  // polylog(alpha, beta) against phi ~ n^p log^q: polylog(alpha(1+p), beta - alpha q)
  auto r = width_lower_rate(RateFunction::polylog(2, 1), GrowthFunction::nlogn(3));
  CHECK(same_shape(r, RateFunction::polylog(4, -1)));
  auto r2 = width_lower_rate(RateFunction::polylog(1, 0), GrowthFunction::linear(2));
  CHECK(same_shape(r2, RateFunction::polylog(2, 0)));
  auto r3 = width_lower_rate(RateFunction::loginv(2), GrowthFunction::linear(1));
  CHECK(same_shape(r3, RateFunction::loginv(2)));
}

TEST_CASE("architecture lower bounds at sample indices") {
  // deep, constant budget: polylog(2 alpha, beta); at n=16 that is 1/256
  auto low = nn_lower_bound_deep(RateFunction::polylog(1, 0),
                                 BoundFamily::constant(2), 16);
  CHECK(same_shape(low.rate, RateFunction::polylog(2, 0)));
  CHECK(low.value == doctest::Approx(1.0 / 256));

  // deep, polynomial budget: the log factor costs alpha in the log power
  auto lowp = nn_lower_bound_deep(RateFunction::polylog(1, 0),
                                  BoundFamily::polynomial(1, 2), 16);
  CHECK(same_shape(lowp.rate, RateFunction::polylog(2, -1)));
  CHECK(lowp.value == doctest::Approx(1.0 / 1024));  // (log2 16)^-1 16^-2

  // deep, truly exponential budget nu = 1: polylog((2+nu) alpha, beta)
  auto lowe = nn_lower_bound_deep(RateFunction::polylog(1, 0),
                                  BoundFamily::exponential(1, 1, 1), 4);
  CHECK(same_shape(lowe.rate, RateFunction::polylog(3, 0)));
  CHECK(lowe.value == doctest::Approx(std::pow(4.0, -3.0)));

  // loginv rates pass through unchanged
  auto lowlog = nn_lower_bound_deep(RateFunction::loginv(2),
                                    BoundFamily::constant(2), 4);
  CHECK(same_shape(lowlog.rate, RateFunction::loginv(2)));
  CHECK(lowlog.value == doctest::Approx(0.25));

  // shallow, polynomial budget: polylog(alpha, beta - alpha)
  auto sh = nn_lower_bound_shallow(RateFunction::polylog(1, 0),
                                   BoundFamily::polynomial(1, 1), 16);
  CHECK(same_shape(sh.rate, RateFunction::polylog(1, -1)));
  CHECK(sh.value == doctest::Approx(1.0 / 64));

  // shallow, exponential budget nu = 1: polylog((1+nu) alpha, beta)
  auto she = nn_lower_bound_shallow(RateFunction::polylog(2, 0),
                                    BoundFamily::exponential(1, 1, 1), 4);
  CHECK(same_shape(she.rate, RateFunction::polylog(4, 0)));
  CHECK(she.value == doctest::Approx(std::pow(4.0, -4.0)));

  auto shl = nn_lower_bound_shallow(RateFunction::loginv(3),
                                    BoundFamily::constant(1), 4);
  CHECK(shl.value == doctest::Approx(1.0 / 8.0));

  // expo input rates are outside the transfer
  CHECK_THROWS_AS(nn_lower_bound_deep(RateFunction::expo(1, 1),
                                      BoundFamily::constant(1), 4),
                  DomainError);
}

TEST_CASE("entropy rate from a width rate, all four branches") {
  RateFunction pl = RateFunction::polylog(1, 0);
  // p > 0: alpha/(1+p), beta + alpha q/(1+p)
  CHECK(same_shape(entropy_upper_from_width(pl, 1, 0),
                   RateFunction::polylog(0.5, 0.0)));
  // p = 0, q >= 1: same formula with p = 0
  CHECK(same_shape(entropy_upper_from_width(RateFunction::polylog(2, 1), 0, 1),
                   RateFunction::polylog(2, 3)));
  // p = 0, q < 1: (alpha, alpha + beta)
  CHECK(same_shape(entropy_upper_from_width(RateFunction::polylog(2, 1), 0, 0),
                   RateFunction::polylog(2, 3)));
  // expo width, shallow-growth budget: expo(c, 1/2)
  CHECK(same_shape(entropy_upper_from_width(RateFunction::expo(3, 1), 0.5, 0),
                   RateFunction::expo(3, 0.5)));
  // expo width, steep budget p > 1: expo(c, 1/(p+1), -q/(p+1))
  CHECK(same_shape(entropy_upper_from_width(RateFunction::expo(3, 1), 3, 1),
                   RateFunction::expo(3, 0.25, -0.25)));
  // loginv width rates fall outside the case split
  CHECK_THROWS_AS(entropy_upper_from_width(RateFunction::loginv(1), 1, 0),
                  DomainError);
}

TEST_CASE("entropy rate from a network error rate, golden table") {
  RateFunction pl = RateFunction::polylog(3, 1);
  RateFunction ex = RateFunction::expo(2, 1);
  BoundFamily poly = BoundFamily::polynomial(1, 2);
  BoundFamily expo2 = BoundFamily::exponential(1, 1, 2);

  CHECK(same_shape(entropy_upper_from_nn_error(pl, poly, true),
                   RateFunction::polylog(1.5, 2.5)));
  CHECK(same_shape(entropy_upper_from_nn_error(pl, expo2, true),
                   RateFunction::polylog(0.75, 1.0)));
  CHECK(same_shape(entropy_upper_from_nn_error(ex, poly, true),
                   RateFunction::expo(2, 0.5, -0.5)));
  CHECK(same_shape(entropy_upper_from_nn_error(ex, expo2, true),
                   RateFunction::expo(2, 0.25)));
  CHECK(same_shape(entropy_upper_from_nn_error(pl, poly, false),
                   RateFunction::polylog(3, 4)));
  CHECK(same_shape(entropy_upper_from_nn_error(pl, expo2, false),
                   RateFunction::polylog(1, 1)));
  CHECK(same_shape(entropy_upper_from_nn_error(ex, poly, false),
                   RateFunction::expo(2, 0.5)));
  CHECK(same_shape(entropy_upper_from_nn_error(ex, expo2, false),
                   RateFunction::expo(2, 1.0 / 3.0)));
}

TEST_CASE("round trip: width lower after entropy upper recovers the exponents") {
  // Starting from width rate polylog(alpha, beta) with budget (p, q) and
  // coming back through the composite index keeps the polylog shape with
  // alpha-exponent multiplied by (1+p)/(1+p) = 1.
  for (double p : {0.0, 1.0, 2.0}) {
    RateFunction width = RateFunction::polylog(1.5, 0.5);
    RateFunction ent = entropy_upper_from_width(width, p, 0);
    GrowthFunction phi = p == 0.0 ? GrowthFunction::power(1, 0, 1)
                                  : GrowthFunction::power(1, p, 0);
    if (p > 0) {
      RateFunction back = width_lower_rate(ent, phi);
      CHECK(back.kind == RateFunction::Kind::polylog);
      CHECK(back.alpha == doctest::Approx(1.5));
    }
  }
}

TEST_CASE("entropy index forced by a width at a finite index") {
  // n ceil(phi(n)/2) at n = 1 with phi = linear(2): 1 * ceil(2/2) = 1
  CHECK(width_upper_from_entropy_index(1, GrowthFunction::linear(2)) == 1);
  CHECK(width_upper_from_entropy_index(4, GrowthFunction::linear(2)) == 16);
  CHECK(width_upper_from_entropy_index(3, GrowthFunction::nlogn(1)) ==
        3 * static_cast<long long>(std::ceil(3 * std::log2(3.0) / 2)));
}

TEST_CASE("zero width forces geometric entropy decay") {
  auto z = zero_width_entropy_decay(3, GrowthFunction::power(1, 0, 0) /*c=1*/, 6);
  // phi(3) = 1, bound 6 * 2^(1-6) at index 18
  CHECK(z.index == 18);
  CHECK(z.bound == doctest::Approx(6.0 * std::exp2(1.0 - 6.0)));
  // k must exceed phi(n)
  CHECK_THROWS_AS(zero_width_entropy_decay(3, GrowthFunction::linear(2), 4),
                  DomainError);
}

TEST_CASE("consistency report flags fabricated violations and passes honest data") {
  EntropyProfile profile;
  for (int n = 0; n <= 30; ++n) {
    EntropyProfile::Row row;
    row.n = n;
    row.lower = std::exp2(-(n + 1));
    row.upper = std::exp2(-(n + 1));
    row.method = "exact";
    profile.rows.push_back(row);
  }
  std::vector<WidthDatum> widths = {{1.0, 1.0, 0.01}};
  auto report = check_carl_consistency(profile, widths);
  CHECK(report.ok());
  CHECK(report.checked > 0);

  // corrupt the profile: huge lower bounds violate every transfer
  EntropyProfile bad = profile;
  for (auto& row : bad.rows) row.lower = row.upper = 0.9;
  auto report2 = check_carl_consistency(bad, widths);
  CHECK_FALSE(report2.ok());
  CHECK(!report2.violations.empty());
  CHECK(report2.violations[0].entropy_lower == doctest::Approx(0.9));
}

TEST_CASE("doubling and ratio diagnostics") {
  auto rep = doubling_sup(GrowthFunction::nlogn(2), 2.0, 64);
  CHECK(rep.finite);
  CHECK(rep.sup == doctest::Approx(4.0));  // attained at n = 2

  auto rb = ratio_divergence_bound(1.0, 0.0, GrowthFunction::linear(1), 4.0, 8.0);
  CHECK_FALSE(rb.degenerate);
  CHECK(rb.ratio == doctest::Approx(8.0));
  CHECK(rb.value == doctest::Approx(8.0));

  auto rb2 = ratio_divergence_bound(2.0, 0.0, GrowthFunction::linear(1), 4.0, 8.0);
  CHECK(rb2.value == doctest::Approx(64.0));

  auto rb3 = ratio_divergence_bound(1.0, 1.0, GrowthFunction::linear(1), 4.0, 8.0);
  CHECK(rb3.value == doctest::Approx(8.0 / 3.0));

  // constant phi never beats ratio 1
  auto rb4 = ratio_divergence_bound(1.0, 0.0, GrowthFunction::constant(1), 4.0, 8.0);
  CHECK(rb4.degenerate);
}

TEST_CASE("constant-budget chain indices") {
  auto cb = const_gamma_chain(XiKind::expo2, 0.0, 4.0, 1.0);
  CHECK(cb.entropy_index == 16);  // c ceil(n^2)
  CHECK(cb.log2_gamma == doctest::Approx(4.0));
  CHECK_FALSE(cb.degenerate);

  auto cp = const_gamma_chain(XiKind::poly, 1.0, 8.0, 1.0);
  CHECK(cp.entropy_index == 24);  // ceil(n alpha log2 n) = 24
  CHECK_FALSE(cp.degenerate);

  CHECK(const_gamma_chain(XiKind::poly, 0.0, 8.0, 1.0).degenerate);
}
