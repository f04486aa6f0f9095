#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wigner {

// splitmix64 finalizer. Used to spread (master_seed, stream) pairs into
// well-separated generator seeds.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t stream_seed(std::uint64_t master_seed,
                                           std::uint64_t stream) noexcept {
    return mix64(master_seed + 0x9E3779B97F4A7C15ull * (stream + 1));
}

// Deterministic random stream: mt19937_64 with explicit bit-to-double
// conversion and a polar-method normal transform, so the produced values
// depend only on (master_seed, stream) and not on the standard library's
// unspecified distribution algorithms.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    RandomStream(std::uint64_t master_seed, std::uint64_t stream)
        : gen_(stream_seed(master_seed, stream)) {}

    // Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via the Marsaglia polar method.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    // Fair +/-1.
    double rademacher() {
        return (gen_() & 1ull) ? 1.0 : -1.0;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace wigner
