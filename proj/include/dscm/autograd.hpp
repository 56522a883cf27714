#pragma once

// Reverse-mode automatic differentiation over NCHW tensors.
//
// Every op returns a fresh `Var`. When gradients are enabled and some input
// requires a gradient, the result keeps its inputs and a backward closure;
// `backward(loss)` walks the recorded graph in reverse topological order.

#include "dscm/tensor.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace dscm::ag {

struct Node {
    Tensor value;
    Tensor grad;
    bool requires_grad = false;
    std::vector<std::shared_ptr<Node>> inputs;
    std::function<void(Node&)> backward;

    /// Allocates a zero gradient matching `value` on first use.
    Tensor& grad_buffer();
};

class Var {
public:
    Var() = default;
    explicit Var(std::shared_ptr<Node> node) : node_(std::move(node)) {}

    bool defined() const { return static_cast<bool>(node_); }
    const Tensor& value() const { return node_->value; }
    Tensor& mutable_value() { return node_->value; }
    const Tensor& grad() const { return node_->grad; }
    const Shape& shape() const { return node_->value.shape(); }
    bool requires_grad() const { return node_->requires_grad; }
    void set_requires_grad(bool on) { node_->requires_grad = on; }
    Node* node() const { return node_.get(); }
    const std::shared_ptr<Node>& shared() const { return node_; }

private:
    std::shared_ptr<Node> node_;
};

/// Disables graph recording on the current thread for its lifetime.
class NoGradGuard {
public:
    NoGradGuard();
    ~NoGradGuard();
    NoGradGuard(const NoGradGuard&) = delete;
    NoGradGuard& operator=(const NoGradGuard&) = delete;

private:
    bool previous_;
};

bool grad_enabled();

Var constant(Tensor value);
/// Leaf whose gradient is accumulated by `backward`.
Var leaf(Tensor value, bool requires_grad = true);

/// Seeds d(root)/d(root) = 1; root must hold exactly one element.
void backward(const Var& root);

// Elementwise (same shape).
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var div(const Var& a, const Var& b);
Var scale(const Var& a, real k);
Var add_scalar(const Var& a, real k);
Var square(const Var& a);
Var exp(const Var& a);
Var log(const Var& a);
Var silu(const Var& a);
Var sigmoid(const Var& a);
Var tanh(const Var& a);
Var softplus(const Var& a);
/// Identity inside [lo, hi]; gradient passes only there.
Var clamp(const Var& a, real lo, real hi);
/// a * m with a constant elementwise multiplier.
Var mul_constant(const Var& a, const Tensor& m);
/// Per-channel affine map x[:, c] * scales[c] + shifts[c].
Var channel_affine(const Var& a, const std::vector<real>& scales, const std::vector<real>& shifts);

// Structural.
Var conv2d(const Var& x, const Var& weight, const Var& bias);
Var linear(const Var& x, const Var& weight, const Var& bias);
Var avg_pool2(const Var& x);
Var upsample2(const Var& x);
Var concat_channels(const std::vector<Var>& parts);
/// [N, K, 1, 1] -> [N, K, h, w].
Var broadcast_spatial(const Var& v, int h, int w);
/// [N, C, H, W] -> [N, C*H*W, 1, 1].
Var flatten(const Var& x);
/// Channel slice [begin, begin + count).
Var slice_channels(const Var& x, int begin, int count);

// Reductions.
Var sum_spatial(const Var& x);   ///< [N, C, H, W] -> [N, C, 1, 1]
Var sum_per_sample(const Var& x);///< [N, C, H, W] -> [N, 1, 1, 1]
Var sum(const Var& x);           ///< -> [1, 1, 1, 1]
Var mean(const Var& x);

/// KL(N(loc, scale^2) || N(0, 1)) summed per sample -> [N, 1, 1, 1].
Var gaussian_kl_standard(const Var& loc, const Var& scale);
/// -log N(target; mean, sigma^2) summed per sample -> [N, 1, 1, 1].
Var gaussian_nll(const Tensor& target, const Var& mean, real sigma);

}  // namespace dscm::ag
