#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "lw/errors.hpp"
#include "lw/network.hpp"
#include "lw/rng.hpp"

using namespace lw;

namespace {

// Random net with parameters in [-w, w].
FeedForwardNet random_net(const NetLayout& layout, const Activation& act, double w,
                          std::uint64_t seed) {
  Rng rng(seed);
  ParamVector pv;
  pv.layout = layout;
  pv.bound = w;
  pv.values.resize(layout.param_count());
  for (double& v : pv.values) v = rng.next_symmetric(w);
  return unflatten(pv, act);
}

}  // namespace

TEST_CASE("activation values") {
  CHECK(Activation::relu()(-2.0) == 0.0);
  CHECK(Activation::relu()(3.0) == 3.0);
  CHECK(Activation::identity()(-2.0) == -2.0);
  CHECK(Activation::sigmoidal(2.0)(0.7) == doctest::Approx(std::tanh(0.7)));
  CHECK(Activation::sigmoidal(2.0).lipschitz() == 2.0);
  CHECK_THROWS_AS(Activation::sigmoidal(0.5), DomainError);
}

TEST_CASE("hand-computed forward pass, one hidden layer") {
  // f(x) = 2*relu(x - 1) - relu(-x) + 0.5 at width 2
  NetLayout layout{1, 2, 1};
  AffineLayer a0(2, 1);
  a0.weights = {1.0, -1.0};
  a0.bias = {-1.0, 0.0};
  AffineLayer a1(1, 2);
  a1.weights = {2.0, -1.0};
  a1.bias = {0.5};
  FeedForwardNet net(layout, {a0, a1}, uniform_activations(layout, Activation::relu()),
                     2.0);
  std::vector<double> x = {3.0};
  CHECK(net.evaluate(x) == doctest::Approx(2.0 * 2.0 - 0.0 + 0.5));
  x[0] = -2.0;
  CHECK(net.evaluate(x) == doctest::Approx(0.0 - 2.0 + 0.5));

  bool outside = false;
  net.evaluate(x, &outside);
  CHECK(outside);
  x[0] = 0.5;
  net.evaluate(x, &outside);
  CHECK_FALSE(outside);

  CHECK(net.evaluate(x) ==
        doctest::Approx(evaluate_shallow(a0, a1, Activation::relu(), x)));
}

TEST_CASE("constructor validates shapes") {
  NetLayout layout{1, 2, 1};
  AffineLayer a0(2, 1);
  AffineLayer bad(2, 2);  // wrong input width
  AffineLayer a1(1, 2);
  CHECK_THROWS_AS(
      FeedForwardNet(layout, {bad, a1}, uniform_activations(layout, Activation::relu()),
                     1.0),
      InputError);
  CHECK_THROWS_AS(
      FeedForwardNet(layout, {a0}, uniform_activations(layout, Activation::relu()), 1.0),
      InputError);
}

TEST_CASE("flatten / unflatten round-trips parameters") {
  NetLayout layout{2, 3, 4};
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    FeedForwardNet net = random_net(layout, Activation::relu(), 1.5, seed);
    ParamVector pv = flatten(net);
    CHECK(pv.values.size() == layout.param_count());
    FeedForwardNet back = unflatten(pv, Activation::relu());
    Rng rng(seed + 99);
    for (int t = 0; t < 20; ++t) {
      std::vector<double> x = {rng.next_unit(), rng.next_unit()};
      CHECK(net.evaluate(x) == doctest::Approx(back.evaluate(x)).epsilon(1e-15));
    }
  }
}

TEST_CASE("param_count matches the affine chain") {
  NetLayout layout{3, 5, 2};
  // d->W, W->W, W->1 with biases
  CHECK(layout.param_count() == (3 * 5 + 5) + (5 * 5 + 5) + (5 * 1 + 1));
}

TEST_CASE("forward trace stays within the growth envelope") {
  // With |params| <= w and inputs in [0,1]^d, hidden values after layer j
  // are bounded by the bound recursion B_0 = max(1, w(d+1)),
  // B_j = w (W B_{j-1} + 1) under relu / identity / tanh channels.
  NetLayout layout{2, 3, 3};
  for (std::uint64_t seed : {5ull, 6ull}) {
    const double w = 1.25;
    FeedForwardNet net = random_net(layout, Activation::relu(), w, seed);
    Rng rng(seed);
    std::vector<double> x = {rng.next_unit(), rng.next_unit()};
    auto trace = net.forward_trace(x);
    REQUIRE(trace.size() == static_cast<std::size_t>(layout.depth) + 1);
    double bound = w * (layout.d + 1);
    for (int j = 0; j < layout.depth; ++j) {
      for (double v : trace[j]) CHECK(std::fabs(v) <= bound + 1e-9);
      bound = w * (layout.W * bound + 1.0);
    }
    CHECK(trace.back().size() == 1);
    CHECK(std::fabs(trace.back()[0]) <= bound + 1e-9);
    CHECK(trace.back()[0] == doctest::Approx(net.evaluate(x)));
  }
}

TEST_CASE("batch evaluation: parallel kernel agrees with the serial reference") {
  NetLayout layout{2, 4, 3};
  FeedForwardNet net = random_net(layout, Activation::sigmoidal(1.0), 0.75, 11);
  Rng rng(7);
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 257; ++i) pts.push_back({rng.next_unit(), rng.next_unit()});
  auto par = evaluate_batch(net, pts);
  auto ser = evaluate_batch_serial(net, pts);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
}

TEST_CASE("unit grid evaluation endpoints") {
  NetLayout layout{1, 2, 1};
  FeedForwardNet net = random_net(layout, Activation::relu(), 1.0, 3);
  auto vals = evaluate_unit_grid(net, 5);
  REQUIRE(vals.size() == 5);
  std::vector<double> left = {0.0}, right = {1.0};
  CHECK(vals.front() == doctest::Approx(net.evaluate(left)));
  CHECK(vals.back() == doctest::Approx(net.evaluate(right)));
}

TEST_CASE("non-finite intermediates surface as NumericError") {
  NetLayout layout{1, 2, 1};
  AffineLayer a0(2, 1);
  a0.weights = {1.0, -1.0};
  a0.bias = {0.0, 0.0};
  AffineLayer a1(1, 2);
  a1.weights = {1.0, 1.0};
  a1.bias = {0.0};
  FeedForwardNet net(layout, {a0, a1}, uniform_activations(layout, Activation::relu()),
                     1.0);
  std::vector<double> x = {std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(net.evaluate(x), NumericError);

  // exceeding the declared bound is rejected at construction
  ParamVector pv = flatten(net);
  pv.values[0] = 2.0 * pv.bound;
  CHECK_THROWS_AS(unflatten(pv, Activation::relu()), InputError);
}
