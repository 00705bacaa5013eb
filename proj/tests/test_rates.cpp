#include <cmath>

#include "doctest.h"
#include "lw/errors.hpp"
#include "lw/rates.hpp"

using lw::GrowthFunction;
using lw::RateFunction;

TEST_CASE("rate evaluation") {
  CHECK(RateFunction::polylog(1, 0).eval(64) == doctest::Approx(1.0 / 64));
  CHECK(RateFunction::polylog(2, 1).eval(4) == doctest::Approx(2.0 / 16));
  CHECK(RateFunction::loginv(3).eval(4) == doctest::Approx(1.0 / 8));
  CHECK(RateFunction::expo(1, 1).eval(10) == doctest::Approx(std::exp2(-10.0)));
  CHECK(RateFunction::expo(2, 0.5).eval(16) == doctest::Approx(std::exp2(-8.0)));
  // log power inside the exponent: 2^(-c n^a (log2 n)^b)
  CHECK(RateFunction::expo(1, 0.5, -0.5).eval(16) ==
        doctest::Approx(std::exp2(-4.0 / 2.0)));
  CHECK(RateFunction::polylog(1, 0, 5.0).eval(8) == doctest::Approx(5.0 / 8));
}

TEST_CASE("rates reject indices below 2") {
  CHECK_THROWS_AS(RateFunction::polylog(1, 0).eval(1.5), lw::InputError);
  CHECK_THROWS_AS(RateFunction::loginv(1).eval(1.0), lw::InputError);
}

TEST_CASE("rate constructors validate exponents") {
  CHECK_THROWS_AS(RateFunction::polylog(0, 1), lw::DomainError);
  CHECK_THROWS_AS(RateFunction::loginv(-1), lw::DomainError);
  CHECK_THROWS_AS(RateFunction::expo(0, 1), lw::DomainError);
  CHECK_THROWS_AS(RateFunction::expo(1, 0), lw::DomainError);
  CHECK_THROWS_AS(RateFunction::expo(1, 1.5), lw::DomainError);
  CHECK_THROWS_AS(GrowthFunction::power(1, -1, 0), lw::DomainError);
}

TEST_CASE("monotone_from marks the hump of polylog rates") {
  RateFunction r = RateFunction::polylog(1, 2);
  const double from = r.monotone_from();
  CHECK(from == doctest::Approx(std::exp(2.0)));  // e^(beta/alpha)
  // nonincreasing beyond the hump
  double prev = r.eval(from);
  for (double n = from + 1; n < from + 40; n += 1) {
    double cur = r.eval(n);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
  CHECK(RateFunction::loginv(1).monotone_from() == 2.0);
}

TEST_CASE("growth function evaluation") {
  CHECK(GrowthFunction::constant(3).eval(100) == 3.0);
  CHECK(GrowthFunction::linear(2).eval(8) == 16.0);
  CHECK(GrowthFunction::nlogn(1).eval(8) == doctest::Approx(24.0));
  CHECK(GrowthFunction::power(2, 1.5, 1).eval(4) == doctest::Approx(2 * 8.0 * 2.0));
}

TEST_CASE("growth functions know their leading powers") {
  CHECK(GrowthFunction::constant(1).power_p() == 0.0);
  CHECK(GrowthFunction::constant(1).power_q() == 0.0);
  CHECK(GrowthFunction::linear(3).power_p() == 1.0);
  CHECK(GrowthFunction::nlogn(1).power_p() == 1.0);
  CHECK(GrowthFunction::nlogn(1).power_q() == 1.0);
  CHECK(GrowthFunction::power(1, 0.5, -2).power_p() == 0.5);
  CHECK(GrowthFunction::power(1, 0.5, -2).power_q() == -2.0);
}

TEST_CASE("dominates_log classification") {
  CHECK_FALSE(GrowthFunction::constant(5).dominates_log());
  CHECK(GrowthFunction::linear(1).dominates_log());
  CHECK(GrowthFunction::nlogn(1).dominates_log());
  CHECK(GrowthFunction::power(1, 0.5, 0).dominates_log());
  CHECK(GrowthFunction::power(1, 0, 1).dominates_log());   // c log2 n
  CHECK(GrowthFunction::power(1, 0, 2).dominates_log());
  CHECK_FALSE(GrowthFunction::power(1, 0, 0.5).dominates_log());
}

TEST_CASE("describe strings name the shape") {
  CHECK(RateFunction::polylog(1, 0).describe().find("polylog") != std::string::npos);
  CHECK(RateFunction::expo(1, 0.5).describe().find("expo") != std::string::npos);
  CHECK(GrowthFunction::linear(2).describe().find("linear") != std::string::npos);
}
