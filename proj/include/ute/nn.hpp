#pragma once

#include <functional>
#include <string>

#include "ute/rng.hpp"
#include "ute/tensor.hpp"

namespace ute::nn {

struct Param {
    Tensor w;
    Tensor g;

    void init_zero(std::vector<int> shape) {
        w = Tensor::zeros(shape);
        g = Tensor::zeros(shape);
    }
    void init_randn(std::vector<int> shape, Rng& rng, double stddev) {
        w = Tensor::randn(shape, rng, stddev);
        g = Tensor::zeros(std::move(shape));
    }
    void zero_grad() {
        for (auto& x : g.v) x = 0.0;
    }
};

using ParamFn = std::function<void(const std::string&, Param&)>;

// ---------------------------------------------------------------------------
// Pure scaled dot-product attention: softmax(Q K^T / sqrt(d)) V.
// Q: (N, dk), K: (M, dk), V: (M, dv).
Tensor attention(const Tensor& q, const Tensor& k, const Tensor& v, double d);

// Row-wise softmax over the last dimension of a 2-D tensor.
Tensor softmax_rows(const Tensor& logits);

// Sinusoidal timestep embedding of even dimension.
Tensor time_embedding(double t, int dim);

// ---------------------------------------------------------------------------
// Layers. Value types; forward caches whatever backward needs, so one
// instance serves a single forward/backward pair at a time.

struct Conv2d {
    int in_ch = 0, out_ch = 0, ksize = 3, stride = 1, pad = 1;
    Param weight;  // (out, in, k, k)
    Param bias;    // (out)
    Tensor x_;

    void init(int in_channels, int out_channels, int k, int s, int p, Rng& rng,
              double init_scale = 1.0);
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gout);
    void visit(const std::string& prefix, const ParamFn& fn);
};

struct Linear {
    int in_dim = 0, out_dim = 0;
    bool has_bias = true;
    Param weight;  // (out, in)
    Param bias;    // (out)
    Tensor x_;

    void init(int in, int out, Rng& rng, bool with_bias = true, bool zero_init = false);
    // x: (M, in) -> (M, out)
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gout);
    void visit(const std::string& prefix, const ParamFn& fn);
};

struct GroupNorm {
    int groups = 1, channels = 0;
    double eps = 1e-5;
    Param gamma, beta;
    Tensor xhat_;
    std::vector<double> inv_std_;

    void init(int num_groups, int num_channels);
    // x: (C, H, W)
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gout);
    void visit(const std::string& prefix, const ParamFn& fn);
};

struct LayerNorm {
    int dim = 0;
    double eps = 1e-5;
    Param gamma, beta;
    Tensor xhat_;
    std::vector<double> inv_std_;

    void init(int d);
    // x: (M, d), normalized per row
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gout);
    void visit(const std::string& prefix, const ParamFn& fn);
};

struct SiLU {
    Tensor x_;
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gout);
};

// Nearest-neighbor 2x upsampling, (C, H, W) -> (C, 2H, 2W).
struct Upsample2x {
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gout);

private:
    int h_ = 0, w_ = 0;
};

// Multi-head attention with external context (cross) or ctx == x (self).
struct MultiHeadAttention {
    int d_model = 0, d_ctx = 0, heads = 1, d_head = 0;
    Linear wq, wk, wv, wo;
    Tensor q_, k_, v_, attn_;  // caches
    Tensor x_in_, ctx_in_;

    void init(int model_dim, int ctx_dim, int num_heads, Rng& rng);
    // x: (N, d_model), ctx: (M, d_ctx)
    Tensor forward(const Tensor& x, const Tensor& ctx);
    // returns grad wrt x; grad wrt ctx accumulated into gctx if non-null
    Tensor backward(const Tensor& gout, Tensor* gctx = nullptr);
    void visit(const std::string& prefix, const ParamFn& fn);
};

// GroupNorm -> SiLU -> conv3x3 (+ timestep bias) -> GroupNorm -> SiLU -> conv3x3,
// residual skip (1x1 conv when channel counts differ). time_dim == 0 disables
// the conditioning path (plain autoencoder residual block).
struct ResBlock {
    int in_ch = 0, out_ch = 0, time_dim = 0;
    GroupNorm n1, n2;
    SiLU a1, a2, at;
    Conv2d c1, c2, skip;
    Linear time_proj;
    bool needs_skip = false;
    Tensor temb_in_;

    void init(int in_channels, int out_channels, int time_dimension, int groups, Rng& rng);
    Tensor forward(const Tensor& x, const Tensor& temb);
    Tensor forward(const Tensor& x) { return forward(x, Tensor{}); }
    // returns grad wrt x; grad wrt temb accumulated into gtemb if non-null
    Tensor backward(const Tensor& gout, Tensor* gtemb = nullptr);
    void visit(const std::string& prefix, const ParamFn& fn);
};

// Pre-norm transformer encoder block over tokens: LN -> self-attn -> res,
// LN -> MLP(4x, SiLU) -> res.
struct TransformerBlock {
    int dim = 0;
    LayerNorm ln1, ln2;
    MultiHeadAttention attn;
    Linear fc1, fc2;
    SiLU act;
    Tensor x1_;

    void init(int d, int heads, Rng& rng);
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gout);
    void visit(const std::string& prefix, const ParamFn& fn);
};

// ---------------------------------------------------------------------------
struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

class Adam {
public:
    explicit Adam(AdamConfig cfg = {}) : cfg_(cfg) {}

    // params are visited in a stable order each step
    void step(const std::function<void(const ParamFn&)>& visit_all);
    void set_lr(double lr) { cfg_.lr = lr; }
    int64_t steps_taken() const { return t_; }

private:
    AdamConfig cfg_;
    int64_t t_ = 0;
    std::vector<double> m_, v_;
};

void zero_grads(const std::function<void(const ParamFn&)>& visit_all);
int64_t count_params(const std::function<void(const ParamFn&)>& visit_all);
double grad_norm(const std::function<void(const ParamFn&)>& visit_all);

}  // namespace ute::nn
