#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ute {

// Deterministic RNG used throughout training, sampling and data generation.
// All integer draws come from a single mt19937_64 stream; region selection
// uses u64() % n so the draw-to-index mapping is testable.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive range
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(u64() % static_cast<uint64_t>(hi - lo + 1));
    }

    size_t index(size_t n) { return static_cast<size_t>(u64() % n); }

    // Box-Muller, no cached spare: one normal per call, fixed draw count.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // splitmix64 finalizer; derives independent per-item seeds from a base seed
    static uint64_t derive(uint64_t seed, uint64_t stream) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace ute
