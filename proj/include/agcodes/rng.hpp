/**
 * @file rng.hpp
 * @brief Seeded random source with platform independent output.
 *
 * std::uniform_int_distribution is implementation defined, so bounded draws are done here by
 * rejection sampling on top of std::mt19937_64, whose raw output is fixed by the standard.
 */
#pragma once

#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

namespace agc {

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x > limit);
        return x % n;
    }

    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform size-k subset of {0..n-1}, sorted (partial Fisher-Yates).
    std::vector<std::size_t> subset(std::size_t n, std::size_t k) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = 0; i < k && i < n; ++i) {
            std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k < n ? k : n);
        std::sort(idx.begin(), idx.end());
        return idx;
    }

    /// Uniform permutation of {0..n-1}.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = n; i > 1; --i) std::swap(idx[i - 1], idx[below(i)]);
        return idx;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace agc
