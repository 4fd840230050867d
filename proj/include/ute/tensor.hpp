#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ute/error.hpp"
#include "ute/rng.hpp"

namespace ute {

// Dense row-major tensor of doubles. Feature maps use (C, H, W) order,
// token sequences (M, D).
struct Tensor {
    std::vector<int> shape;
    std::vector<double> v;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
        v.assign(static_cast<size_t>(numel_of(shape)), 0.0);
    }

    static int64_t numel_of(const std::vector<int>& s) {
        int64_t n = 1;
        for (int d : s) {
            check(d >= 0, "tensor: negative dimension");
            n *= d;
        }
        return n;
    }

    int64_t numel() const { return static_cast<int64_t>(v.size()); }
    int dim(int i) const { return shape[static_cast<size_t>(i)]; }
    int ndim() const { return static_cast<int>(shape.size()); }

    static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }

    static Tensor full(std::vector<int> s, double value) {
        Tensor t(std::move(s));
        for (auto& x : t.v) x = value;
        return t;
    }

    static Tensor randn(std::vector<int> s, Rng& rng, double stddev = 1.0) {
        Tensor t(std::move(s));
        for (auto& x : t.v) x = stddev * rng.normal();
        return t;
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    double& at2(int i, int j) { return v[static_cast<size_t>(i) * dim(1) + j]; }
    double at2(int i, int j) const { return v[static_cast<size_t>(i) * dim(1) + j]; }

    double& at3(int c, int y, int x) {
        return v[(static_cast<size_t>(c) * dim(1) + y) * dim(2) + x];
    }
    double at3(int c, int y, int x) const {
        return v[(static_cast<size_t>(c) * dim(1) + y) * dim(2) + x];
    }

    bool all_finite() const {
        for (double x : v)
            if (!std::isfinite(x)) return false;
        return true;
    }

    Tensor& operator+=(const Tensor& o) {
        check(same_shape(o), "tensor: shape mismatch in +=");
        for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
        return *this;
    }

    Tensor& operator*=(double s) {
        for (auto& x : v) x *= s;
        return *this;
    }
};

inline double dot(const Tensor& a, const Tensor& b) {
    check(a.numel() == b.numel(), "tensor: size mismatch in dot");
    double s = 0.0;
    for (size_t i = 0; i < a.v.size(); ++i) s += a.v[i] * b.v[i];
    return s;
}

inline double l2_norm(const Tensor& a) { return std::sqrt(dot(a, a)); }

inline double mse(const Tensor& a, const Tensor& b) {
    check(a.same_shape(b), "tensor: shape mismatch in mse");
    double s = 0.0;
    for (size_t i = 0; i < a.v.size(); ++i) {
        const double d = a.v[i] - b.v[i];
        s += d * d;
    }
    return s / static_cast<double>(a.numel());
}

}  // namespace ute
