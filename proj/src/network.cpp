#include "lw/network.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lw/errors.hpp"
#include "lw/parallel.hpp"

namespace lw {

Activation Activation::sigmoidal(double L) {
  // tanh is 1-Lipschitz; a declared constant below 1 would be false.
  if (!(L >= 1.0)) throw DomainError("sigmoidal activation requires L >= 1");
  return Activation(ActKind::sigmoidal, L);
}

double Activation::operator()(double t) const {
  switch (kind_) {
    case ActKind::relu:
      return t > 0.0 ? t : 0.0;
    case ActKind::identity:
      return t;
    case ActKind::sigmoidal:
      return std::tanh(t);
  }
  return t;  // unreachable
}

AffineLayer::AffineLayer(int r, int c)
    : rows(r), cols(c), weights(static_cast<std::size_t>(r) * c, 0.0), bias(r, 0.0) {
  if (r <= 0 || c <= 0) throw InputError("affine layer dimensions must be positive");
}

void AffineLayer::apply(std::span<const double> in, std::span<double> out) const {
  const double* w = weights.data();
  for (int r = 0; r < rows; ++r) {
    double acc = 0.0;
    for (int c = 0; c < cols; ++c) acc += w[static_cast<std::size_t>(r) * cols + c] * in[c];
    out[r] = acc + bias[r];
  }
}

double AffineLayer::max_abs_entry() const {
  double m = 0.0;
  for (double v : weights) m = std::max(m, std::fabs(v));
  for (double v : bias) m = std::max(m, std::fabs(v));
  return m;
}

std::size_t NetLayout::param_count() const {
  if (d < 1 || W < 1 || depth < 1) throw InputError("layout entries must be >= 1");
  std::size_t count = static_cast<std::size_t>(W) * d + W;  // first layer
  count += static_cast<std::size_t>(depth - 1) * (static_cast<std::size_t>(W) * W + W);
  count += static_cast<std::size_t>(W) + 1;  // output layer
  return count;
}

FeedForwardNet::FeedForwardNet(NetLayout layout, std::vector<AffineLayer> layers,
                               std::vector<std::vector<Activation>> channel_acts,
                               double param_bound)
    : layout_(layout),
      layers_(std::move(layers)),
      channel_acts_(std::move(channel_acts)),
      param_bound_(param_bound) {
  if (layout_.d < 1 || layout_.W < 1 || layout_.depth < 1) {
    throw InputError("network layout entries must be >= 1");
  }
  const std::size_t n = static_cast<std::size_t>(layout_.depth);
  if (layers_.size() != n + 1) throw InputError("network needs depth + 1 affine layers");
  for (std::size_t i = 0; i <= n; ++i) {
    int want_rows = (i == n) ? 1 : layout_.W;
    int want_cols = (i == 0) ? layout_.d : layout_.W;
    if (layers_[i].rows != want_rows || layers_[i].cols != want_cols) {
      throw InputError("affine layer " + std::to_string(i) + " has wrong shape");
    }
  }
  if (channel_acts_.size() != n) {
    throw InputError("need one activation row per hidden layer");
  }
  for (const auto& row : channel_acts_) {
    if (static_cast<int>(row.size()) != layout_.W) {
      throw InputError("activation row width does not match W");
    }
  }
  if (!(param_bound_ > 0.0)) throw InputError("parameter bound must be positive");
  for (const auto& layer : layers_) {
    if (layer.max_abs_entry() > param_bound_) {
      throw InputError("layer entries exceed the declared parameter bound");
    }
  }
}

namespace {

void check_finite(std::span<const double> v, int layer_index) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw NumericError("non-finite value after layer " + std::to_string(layer_index));
    }
  }
}

}  // namespace

double FeedForwardNet::evaluate(std::span<const double> x, bool* outside_domain) const {
  if (static_cast<int>(x.size()) != layout_.d) {
    throw InputError("input dimension does not match the network");
  }
  if (outside_domain) {
    *outside_domain = false;
    for (double v : x) {
      if (v < 0.0 || v > 1.0) *outside_domain = true;
    }
  }
  std::vector<double> cur(x.begin(), x.end());
  std::vector<double> next(layout_.W);
  for (int i = 0; i < layout_.depth; ++i) {
    next.resize(layout_.W);
    layers_[i].apply(cur, next);
    const auto& acts = channel_acts_[i];
    for (int c = 0; c < layout_.W; ++c) next[c] = acts[c](next[c]);
    check_finite(next, i);
    cur = next;
  }
  double out[1];
  layers_.back().apply(cur, out);
  check_finite(std::span<const double>(out, 1), layout_.depth);
  return out[0];
}

std::vector<std::vector<double>> FeedForwardNet::forward_trace(
    std::span<const double> x) const {
  if (static_cast<int>(x.size()) != layout_.d) {
    throw InputError("input dimension does not match the network");
  }
  std::vector<std::vector<double>> trace;
  std::vector<double> cur(x.begin(), x.end());
  std::vector<double> next(layout_.W);
  for (int i = 0; i < layout_.depth; ++i) {
    next.resize(layout_.W);
    layers_[i].apply(cur, next);
    const auto& acts = channel_acts_[i];
    for (int c = 0; c < layout_.W; ++c) next[c] = acts[c](next[c]);
    check_finite(next, i);
    trace.push_back(next);
    cur = next;
  }
  double out[1];
  layers_.back().apply(cur, out);
  trace.push_back({out[0]});
  return trace;
}

double FeedForwardNet::max_abs_param() const {
  double m = 0.0;
  for (const auto& layer : layers_) m = std::max(m, layer.max_abs_entry());
  return m;
}

std::vector<std::vector<Activation>> uniform_activations(const NetLayout& layout,
                                                         const Activation& act) {
  return std::vector<std::vector<Activation>>(
      layout.depth, std::vector<Activation>(layout.W, act));
}

ParamVector flatten(const FeedForwardNet& net) {
  ParamVector pv;
  pv.layout = net.layout();
  pv.bound = net.param_bound();
  pv.values.reserve(pv.layout.param_count());
  for (const auto& layer : net.layers()) {
    pv.values.insert(pv.values.end(), layer.weights.begin(), layer.weights.end());
    pv.values.insert(pv.values.end(), layer.bias.begin(), layer.bias.end());
  }
  return pv;
}

FeedForwardNet unflatten(const ParamVector& params,
                         const std::vector<std::vector<Activation>>& channel_acts) {
  const NetLayout& L = params.layout;
  if (params.values.size() != L.param_count()) {
    throw InputError("parameter vector length does not match the layout");
  }
  for (double v : params.values) {
    if (std::fabs(v) > params.bound) {
      throw InputError("parameter entry exceeds the declared bound");
    }
  }
  std::vector<AffineLayer> layers;
  std::size_t pos = 0;
  auto take_layer = [&](int rows, int cols) {
    AffineLayer layer(rows, cols);
    for (std::size_t i = 0; i < layer.weights.size(); ++i) layer.weights[i] = params.values[pos++];
    for (int r = 0; r < rows; ++r) layer.bias[r] = params.values[pos++];
    layers.push_back(std::move(layer));
  };
  take_layer(L.W, L.d);
  for (int i = 1; i < L.depth; ++i) take_layer(L.W, L.W);
  take_layer(1, L.W);
  return FeedForwardNet(L, std::move(layers), channel_acts, params.bound);
}

FeedForwardNet unflatten(const ParamVector& params, const Activation& act) {
  return unflatten(params, uniform_activations(params.layout, act));
}

double evaluate_shallow(const AffineLayer& a0, const AffineLayer& a1,
                        const Activation& act, std::span<const double> x) {
  if (a1.rows != 1 || a1.cols != a0.rows) {
    throw InputError("shallow evaluation needs shapes d -> W -> 1");
  }
  std::vector<double> hidden(a0.rows);
  a0.apply(x, hidden);
  for (double& h : hidden) h = act(h);
  double out[1];
  a1.apply(hidden, out);
  if (!std::isfinite(out[0])) throw NumericError("non-finite value after layer 1");
  return out[0];
}

std::vector<double> evaluate_batch(const FeedForwardNet& net,
                                   const std::vector<std::vector<double>>& points) {
  std::vector<double> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) { out[i] = net.evaluate(points[i]); });
  return out;
}

std::vector<double> evaluate_batch_serial(const FeedForwardNet& net,
                                          const std::vector<std::vector<double>>& points) {
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = net.evaluate(points[i]);
  return out;
}

std::vector<double> evaluate_unit_grid(const FeedForwardNet& net, int npoints) {
  if (npoints < 2) throw InputError("grid needs at least 2 points");
  std::vector<std::vector<double>> pts;
  pts.reserve(npoints);
  for (int i = 0; i < npoints; ++i) {
    pts.push_back({static_cast<double>(i) / (npoints - 1)});
  }
  return evaluate_batch(net, pts);
}

}  // namespace lw
