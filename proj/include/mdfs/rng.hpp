#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace mdfs::rng {

// splitmix64: cheap, well-mixed 64-bit finalizer. Used to derive independent
// sub-seeds so that nested experiment cells never share RNG streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(splitmix64(seed) ^ (0x9e3779b97f4a7c15ULL + salt));
}

constexpr std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a 64
    for (char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Uniform draw in [0, n) by rejection; avoids the implementation-defined
// behaviour of std::uniform_int_distribution so runs reproduce exactly.
inline std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t v;
    do {
        v = gen();
    } while (v >= limit);
    return v % n;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& gen) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[bounded(gen, i)]);
    }
}

}  // namespace mdfs::rng
