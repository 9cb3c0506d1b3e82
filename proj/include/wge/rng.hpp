#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wge {

/// Seeded generator with explicit output mapping, so identical seeds give
/// identical streams regardless of standard-library distribution details.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n), n > 0. Rejection sampling keeps it unbiased.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    bool coin() { return (next_u64() & 1ull) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t pos = v.size(); pos > 1; --pos) {
            const std::size_t other = static_cast<std::size_t>(uniform_int(pos));
            std::swap(v[pos - 1], v[other]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace wge
