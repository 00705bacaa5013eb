#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "lw/entropy.hpp"
#include "lw/errors.hpp"
#include "lw/norms.hpp"
#include "lw/widths.hpp"

using namespace lw;

namespace {

// 1-Lipschitz family in R^2 (sup norm): y -> (y1, y2) clipped to [-1, 1]^2.
LipschitzParametrization clip_family() {
  LipschitzParametrization par;
  par.param_dim = 2;
  par.radius = 1.0;
  par.constant = 1.0;
  par.description = "clip";
  par.map = [](std::span<const double> y) {
    return std::vector<double>{std::clamp(y[0], -1.0, 1.0),
                               std::clamp(y[1], -1.0, 1.0)};
  };
  return par;
}

}  // namespace

TEST_CASE("width upper bound covers a set inside the family's range") {
  // K consists of four points reachable exactly by the family
  PointCloudSet K({{0.5, 0.5}, {-0.5, 0.25}, {0.0, 0.0}, {1.0, -1.0}}, Norm::linf(2));
  auto par = clip_family();
  const double delta = 0.125;
  auto est = width_upper(K, par, linf_lattice(2, delta), delta);
  CHECK(est.n == 2);
  CHECK(est.gamma == doctest::Approx(1.0));
  CHECK(est.delta == delta);
  // every target is an image, so the bound is at most gamma * delta
  CHECK(est.upper <= par.gamma() * delta + 1e-12);
  CHECK(est.upper >= 0.0);
}

TEST_CASE("width upper bound accounts for unreachable targets") {
  PointCloudSet K({{3.0, 0.0}}, Norm::linf(2));
  auto par = clip_family();
  const double delta = 0.25;
  auto est = width_upper(K, par, linf_lattice(2, delta), delta);
  // the family cannot leave [-1,1]^2, so the bound is at least 2
  CHECK(est.upper >= 2.0 - 1e-12);
}

TEST_CASE("parallel width kernel equals the serial reference") {
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 40; ++i)
    pts.push_back({std::sin(0.1 * i), std::cos(0.2 * i)});
  PointCloudSet K(std::move(pts), Norm::linf(2));
  auto par = clip_family();
  const double delta = 0.2;
  auto grid = linf_lattice(2, delta);
  auto a = width_upper(K, par, grid, delta);
  auto b = width_upper_serial(K, par, grid, delta);
  CHECK(a.upper == b.upper);
  CHECK(a.n == b.n);
  CHECK(a.gamma == b.gamma);
}

TEST_CASE("rescale keeps the budget gamma invariant") {
  LipschitzParametrization par;
  par.param_dim = 1;
  par.radius = 4.0;
  par.constant = 0.5;
  par.map = [](std::span<const double> y) { return std::vector<double>{0.5 * y[0]}; };
  auto unit = rescale(par);
  CHECK(unit.radius == doctest::Approx(1.0));
  CHECK(unit.gamma() == doctest::Approx(par.gamma()));
  // map agrees after the domain change
  std::vector<double> y = {0.5};
  std::vector<double> inner = {2.0};
  CHECK(unit.map(y)[0] == doctest::Approx(par.map(inner)[0]));
}

TEST_CASE("spot check accepts honest constants and flags inflated maps") {
  auto par = clip_family();
  CHECK_NOTHROW(spot_check(par, Norm::linf(2), 60, 11));
  LipschitzParametrization liar = par;
  liar.constant = 0.1;  // claims far less than the true slope 1
  CHECK_THROWS_AS(spot_check(liar, Norm::linf(2), 60, 11), CertificateError);
}

TEST_CASE("norm change penalties") {
  auto p = norm_change_penalty(4);
  CHECK(p.linear == doctest::Approx(9.0));
  CHECK(p.sqrt == doctest::Approx(5.0));
}

TEST_CASE("width estimates are monotone in delta for exact-reach targets") {
  PointCloudSet K({{0.25, -0.75}, {0.5, 0.5}}, Norm::linf(2));
  auto par = clip_family();
  double prev = 1e18;
  for (double delta : {0.5, 0.25, 0.125, 0.0625}) {
    auto est = width_upper(K, par, linf_lattice(2, delta), delta);
    CHECK(est.upper <= prev + 1e-12);
    prev = est.upper;
  }
}
