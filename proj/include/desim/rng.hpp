#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "desim/common.hpp"

namespace desim {

// Derives a child seed from a root seed, a stream name, and an index.
// Children with distinct (name, index) pairs are decorrelated, so parallel
// consumers can each own a stream without sharing generator state.
std::uint64_t derive_seed(std::uint64_t root, std::string_view name,
                          std::uint64_t index = 0);

// Deterministic random stream. The mt19937_64 engine is fully specified by
// the standard; the distributions here are hand-rolled because the stdlib
// distribution objects are not guaranteed to produce identical sequences
// across implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    // Child stream derived from this stream's seed (not its current state).
    Rng derive(std::string_view name, std::uint64_t index = 0) const {
        return Rng(derive_seed(seed_, name, index));
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0,1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on the open interval (0,1); safe to pass through inverse CDFs.
    double uniform_open01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Standard normal via the inverse CDF.
    double normal01();
    double normal(double mu, double sigma) { return mu + sigma * normal01(); }

    // Unbiased integer on [0, n).
    std::uint64_t uniform_int(std::uint64_t n);

    // Index drawn from unnormalized non-negative weights.
    std::size_t weighted_index(const std::vector<double>& weights);

    // k distinct indices from [0, n), order randomized.
    std::vector<std::size_t> pick_k_of_n(std::size_t n, std::size_t k);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = uniform_int(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace desim
