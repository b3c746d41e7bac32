#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <random>
#include <vector>

namespace fskit {

/// Seedable deterministic generator shared by every randomized suite.
///
/// Wraps std::mt19937_64 but derives all values from the raw 64-bit stream,
/// because std::uniform_*_distribution output is not pinned by the standard
/// and identical seeds must reproduce identical reports everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n). Requires n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        std::uint64_t x, r;
        do {
            x = engine_();
            r = x % n;
        } while (x - r > std::uint64_t(0) - n);  // reject the final partial block
        return r;
    }

    /// Uniform on the k*2^-53 lattice in [0, 1); 1 - uniform01() is exact.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// k/steps for uniform k in {0, ..., steps}.
    double lattice(int steps) {
        return static_cast<double>(below(static_cast<std::uint64_t>(steps) + 1)) /
               static_cast<double>(steps);
    }

    bool coin() { return (engine_() & 1u) != 0; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(v.size()))];
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}  // namespace fskit
