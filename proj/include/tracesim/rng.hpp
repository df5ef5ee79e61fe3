#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

// Deterministic randomness plumbing. Every random decision in the library is
// traceable to one master seed through derive_seed(base, purpose, index): the
// purpose label keeps unrelated streams apart even when indices collide, and
// the index separates repetitions (realizations, targets, pairs). The engine
// is std::mt19937_64, whose output sequence is fixed by the standard; the few
// distributions we need are hand-rolled because the std:: ones are
// implementation-defined and would break cross-platform reproducibility.

namespace tracesim {

using Rng = std::mt19937_64;

// splitmix64 finalizer. Good avalanche, cheap, and stateless.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a over the purpose label.
constexpr std::uint64_t hash_label(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::string_view purpose,
                                    std::uint64_t index = 0) noexcept {
    return mix64(mix64(base ^ hash_label(purpose)) + index);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform integer in [0, n). Rejection sampling, no modulo bias.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
    const std::uint64_t zone = (std::numeric_limits<std::uint64_t>::max() / n) * n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= zone);
    return x % n;
}

// Uniform double in the open interval (0, 1); safe to pass to log().
inline double uniform_real01(Rng& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform_real01(rng) < p; }

// Fisher-Yates.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_index(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// k distinct values from [0, n), in selection order (partial Fisher-Yates).
inline std::vector<std::uint32_t> sample_distinct(Rng& rng, std::uint32_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("sample_distinct: k exceeds population");
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::uint32_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(uniform_index(rng, n - i));
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

}  // namespace tracesim
