#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lw {

enum class ActKind { relu, identity, sigmoidal };

// Scalar activation.  The sigmoidal variant is tanh with a declared Lipschitz
// constant L >= 1 (tanh itself is 1-Lipschitz with range [-1, 1]); the
// declared L enters the Lipschitz bounds, not the evaluation.
class Activation {
 public:
  static Activation relu() { return Activation(ActKind::relu, 1.0); }
  static Activation identity() { return Activation(ActKind::identity, 1.0); }
  static Activation sigmoidal(double L = 1.0);

  ActKind kind() const { return kind_; }
  double lipschitz() const { return L_; }
  double operator()(double t) const;

 private:
  Activation(ActKind kind, double L) : kind_(kind), L_(L) {}
  ActKind kind_;
  double L_;
};

// Dense affine map x -> M x + b with M stored row-major.
struct AffineLayer {
  int rows = 0;
  int cols = 0;
  std::vector<double> weights;  // rows * cols, row-major
  std::vector<double> bias;     // rows

  AffineLayer() = default;
  AffineLayer(int r, int c);
  void apply(std::span<const double> in, std::span<double> out) const;
  double max_abs_entry() const;
};

// Architecture descriptor: input dimension d, hidden width W, depth n
// (number of hidden layers).  The affine chain is d -> W -> ... -> W -> 1
// with n + 1 affine layers; depth 1 is the shallow case.
struct NetLayout {
  int d = 1;
  int W = 1;
  int depth = 1;
  std::size_t param_count() const;
};

// Flattened parameter vector.  Layout: affine layers in order 0..n; within a
// layer the weight matrix row-major, then the bias.  Entries are bounded in
// absolute value by `bound`.
struct ParamVector {
  std::vector<double> values;
  double bound = 1.0;
  NetLayout layout;
};

// Feed-forward network with per-layer, per-channel activations on the hidden
// layers (the final affine layer has no activation).  All hidden layers have
// width W; mixing identity and relu channels in one layer is allowed.
class FeedForwardNet {
 public:
  FeedForwardNet(NetLayout layout, std::vector<AffineLayer> layers,
                 std::vector<std::vector<Activation>> channel_acts,
                 double param_bound);

  const NetLayout& layout() const { return layout_; }
  int input_dim() const { return layout_.d; }
  int width() const { return layout_.W; }
  int depth() const { return layout_.depth; }
  double param_bound() const { return param_bound_; }
  const std::vector<AffineLayer>& layers() const { return layers_; }
  const std::vector<std::vector<Activation>>& channel_activations() const {
    return channel_acts_;
  }

  // Evaluate at a point of R^d.  Evaluation outside the reference domain
  // [0,1]^d is permitted; when `outside_domain` is non-null it is set
  // accordingly.  Throws NumericError (naming the layer) on non-finite
  // intermediates.
  double evaluate(std::span<const double> x, bool* outside_domain = nullptr) const;

  // Post-activation hidden vectors for each hidden layer, then the scalar
  // output as a final singleton entry.  Used by invariant checks.
  std::vector<std::vector<double>> forward_trace(std::span<const double> x) const;

  double max_abs_param() const;

 private:
  NetLayout layout_;
  std::vector<AffineLayer> layers_;
  std::vector<std::vector<Activation>> channel_acts_;
  double param_bound_;
};

// Same activation for every hidden channel of every hidden layer.
std::vector<std::vector<Activation>> uniform_activations(const NetLayout& layout,
                                                         const Activation& act);

ParamVector flatten(const FeedForwardNet& net);
FeedForwardNet unflatten(const ParamVector& params,
                         const std::vector<std::vector<Activation>>& channel_acts);
FeedForwardNet unflatten(const ParamVector& params, const Activation& act);

// One-hidden-layer evaluation from the two affine pieces.
double evaluate_shallow(const AffineLayer& a0, const AffineLayer& a1,
                        const Activation& act, std::span<const double> x);

// Batch evaluation at many points; parallel kernel plus a serial reference
// used by the consistency tests and the benchmark.
std::vector<double> evaluate_batch(const FeedForwardNet& net,
                                   const std::vector<std::vector<double>>& points);
std::vector<double> evaluate_batch_serial(const FeedForwardNet& net,
                                          const std::vector<std::vector<double>>& points);

// Convenience for d = 1: evaluate on npoints equally spaced values in [0, 1].
std::vector<double> evaluate_unit_grid(const FeedForwardNet& net, int npoints);

}  // namespace lw
