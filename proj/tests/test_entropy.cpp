#include <cmath>
#include <vector>

#include "doctest.h"
#include "lw/entropy.hpp"
#include "lw/errors.hpp"
#include "lw/norms.hpp"
#include "lw/rng.hpp"

using namespace lw;

TEST_CASE("covering numbers of a 1-d grid, exact counts") {
  PointCloudSet K = uniform_grid_cloud(9);  // {0, 1/8, ..., 1}
  // one ball of radius 1/2 centered at 1/2 covers everything
  CHECK(covering_number(K, 0.5, CoverMode::exact) == 1);
  CHECK(covering_number(K, 0.25, CoverMode::exact) == 2);
  // a radius-1/8 ball catches three consecutive grid points: ceil(9/3) = 3
  CHECK(covering_number(K, 0.125, CoverMode::exact) == 3);
  CHECK(covering_number(K, 0.0, CoverMode::exact) == 9);
  // the 1-d greedy sweep is optimal
  CHECK(covering_number(K, 0.25, CoverMode::greedy) == 2);
  CHECK(covering_number(K, 0.125, CoverMode::greedy) == 3);
}

TEST_CASE("covering number is nonincreasing in the radius") {
  PointCloudSet K = sigma_set(12);
  double prev = 1e9;
  for (double eps : {0.05, 0.1, 0.2, 0.3, 0.5, 1.0}) {
    int cur = covering_number(K, eps, CoverMode::exact);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("exact solver refuses oversized clouds") {
  PointCloudSet K = uniform_grid_cloud(40);
  CHECK_THROWS_AS(covering_number(K, 0.1, CoverMode::exact), CapacityError);
  CHECK_NOTHROW(covering_number(K, 0.1, CoverMode::greedy));
}

TEST_CASE("negative radius is rejected") {
  PointCloudSet K = uniform_grid_cloud(5);
  CHECK_THROWS_AS(covering_number(K, -0.1, CoverMode::exact), InputError);
}

TEST_CASE("exact solver agrees with the exhaustive oracle on random clouds") {
  for (int t = 0; t < 120; ++t) {
    Rng rng = stream_rng(905, t);
    const int dim = 1 + t % 3;
    const int count = 4 + static_cast<int>(rng.next_below(8));
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < count; ++i) {
      std::vector<double> x(dim);
      for (double& v : x) v = rng.next_symmetric(1.0);
      pts.push_back(std::move(x));
    }
    Norm norm = (t % 3 == 0)   ? Norm::linf(dim)
                : (t % 3 == 1) ? Norm::lp(2, dim)
                               : Norm::lp(1, dim);
    PointCloudSet K(std::move(pts), norm);
    const double diam = K.diameter();
    for (double frac : {0.2, 0.45, 0.8}) {
      const double eps = frac * diam;
      CHECK(covering_number(K, eps, CoverMode::exact) ==
            covering_number_oracle(K, eps));
    }
  }
}

TEST_CASE("dyadic grid entropy numbers are powers of two") {
  PointCloudSet K = uniform_grid_cloud(4097);
  for (int n = 0; n <= 5; ++n) {
    auto b = entropy_number(K, n, 1e-4);
    const double expected = std::exp2(-(n + 1));
    CHECK(b.lower <= expected + 1e-12);
    CHECK(b.upper >= expected - 1e-12);
    CHECK(b.upper - b.lower <= 1e-4);
  }
}

TEST_CASE("entropy brackets shrink with n and stay ordered") {
  PointCloudSet K = sigma_set(16);
  EntropyProfile profile = entropy_profile(K, 4, 1e-6);
  profile.validate();
  REQUIRE(profile.rows.size() == 5);
  for (std::size_t i = 0; i < profile.rows.size(); ++i) {
    CHECK(profile.rows[i].lower <= profile.rows[i].upper + 1e-15);
    if (i > 0) CHECK(profile.rows[i].upper <= profile.rows[i - 1].upper + 1e-15);
  }
}

TEST_CASE("sigma set entropy numbers match the weight formula") {
  // exactly 2^n + 1 well-separated points force eps_n = sigma_{2^n} / 2
  PointCloudSet K = sigma_set(20);
  for (int n = 1; n <= 4; ++n) {
    auto b = entropy_number(K, n, 1e-7);
    const double expected = sigma_value(1 << n) / 2.0;
    CHECK(b.lower <= expected * (1 + 1e-6) + 1e-12);
    CHECK(b.upper >= expected * (1 - 1e-6) - 1e-12);
  }
}

TEST_CASE("packing lower bound certifies and matches the serial reference") {
  PointCloudSet K = sigma_set(20);
  for (int n = 1; n <= 3; ++n) {
    const double packing = packing_lower_bound(K, n);
    CHECK(packing == packing_lower_bound_serial(K, n));
    CHECK(packing == doctest::Approx(sigma_value(1 << n) / 2.0));
    auto b = entropy_number(K, n, 1e-7);
    CHECK(packing <= b.upper * (1 + 1e-9));
  }
  // too few points: no packing information
  CHECK(packing_lower_bound(uniform_grid_cloud(3), 5) == 0.0);
}

TEST_CASE("lattice is a delta-net of the unit ball") {
  for (int dim : {1, 2, 3}) {
    for (double delta : {0.5, 0.3}) {
      auto grid = linf_lattice(dim, delta);
      CHECK(!grid.empty());
      Rng rng(17);
      for (int t = 0; t < 100; ++t) {
        std::vector<double> y(dim);
        for (double& v : y) v = rng.next_symmetric(1.0);
        double best = 1e18;
        for (const auto& g : grid) {
          double d = 0.0;
          for (int i = 0; i < dim; ++i) d = std::max(d, std::fabs(g[i] - y[i]));
          best = std::min(best, d);
        }
        CHECK(best <= delta + 1e-12);
      }
    }
  }
}

TEST_CASE("cover_from_lipschitz verifies and covers") {
  // 1-Lipschitz map into R^2 under sup norm: y -> (y, |y|)
  ParamMap map = [](std::span<const double> y) {
    return std::vector<double>{y[0], std::fabs(y[0])};
  };
  std::vector<std::vector<double>> verify;
  Rng rng(5);
  for (int i = 0; i < 50; ++i) verify.push_back({rng.next_symmetric(1.0)});
  Cover cover = cover_from_lipschitz(map, 1.0, 1, 0.25, Norm::linf(2), verify);
  CHECK(cover.verified);
  CHECK(cover.radius == doctest::Approx(0.25));
  // every verification image is within eps of some center
  for (const auto& y : verify) {
    auto img = map(y);
    double best = 1e18;
    for (const auto& c : cover.centers) {
      best = std::min(best, Norm::linf(2).distance(img, c));
    }
    CHECK(best <= 0.25 + 1e-12);
  }
  // a false Lipschitz claim is caught
  ParamMap steep = [](std::span<const double> y) {
    return std::vector<double>{8.0 * y[0], 0.0};
  };
  CHECK_THROWS_AS(cover_from_lipschitz(steep, 1.0, 1, 0.25, Norm::linf(2), verify),
                  CertificateError);
}
