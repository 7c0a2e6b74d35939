#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace brmcda {

inline constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Hashes a master seed and a path of stream identifiers (scenario, trial,
// arm, criterion, ...) into an independent sub-seed. Streams with different
// paths are decorrelated regardless of evaluation order.
inline constexpr std::uint64_t stream_seed(std::uint64_t master,
                                           std::initializer_list<std::uint64_t> path) {
    std::uint64_t state = master;
    std::uint64_t h = splitmix64(state);
    for (std::uint64_t id : path) {
        state = h ^ (id * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL);
        h = splitmix64(state);
    }
    return h;
}

// xoshiro256++ (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) { reseed(seed); }
    Rng(std::uint64_t master, std::initializer_list<std::uint64_t> path)
        : Rng(stream_seed(master, path)) {}

    void reseed(std::uint64_t seed) {
        for (auto& w : s_) w = splitmix64(seed);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    // Advances 2^128 steps; equivalent to 2^128 calls of operator().
    void jump();

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4]{};
};

}  // namespace brmcda
