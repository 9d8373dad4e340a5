#include "desim/rng.hpp"

#include "desim/math.hpp"

namespace desim {

namespace {

void fnv_mix_u64(std::uint64_t& h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
}

std::uint64_t avalanche(std::uint64_t h) {
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebull;
    h ^= h >> 31;
    return h;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t root, std::string_view name,
                          std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    fnv_mix_u64(h, root);
    h = fnv1a64(name, h);
    fnv_mix_u64(h, index);
    return avalanche(h);
}

double Rng::normal01() {
    return normal_quantile(uniform_open01());
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
    if (n == 0) fail("uniform_int: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

std::size_t Rng::weighted_index(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) fail("weighted_index: negative weight");
        total += w;
    }
    if (total <= 0.0) fail("weighted_index: weights sum to zero");
    double u = uniform01() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        u -= weights[i];
        if (u < 0.0) return i;
    }
    return weights.size() - 1;
}

std::vector<std::size_t> Rng::pick_k_of_n(std::size_t n, std::size_t k) {
    if (k > n) fail("pick_k_of_n: k > n");
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + uniform_int(n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

} // namespace desim
