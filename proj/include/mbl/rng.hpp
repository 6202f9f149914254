#ifndef MBL_RNG_HPP
#define MBL_RNG_HPP

#include <cstdint>

namespace mbl {

// Seed plus substream index. Every random draw in the library is a pure
// function of (seed, stream, key), so sampling is reproducible and
// independent of evaluation order and worker count.
struct RandomSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    RandomSeed with_stream(std::uint64_t s) const { return {seed, s}; }
};

namespace rng {

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based generator: hash the (seed, stream, key) triple.
inline std::uint64_t keyed_bits(const RandomSeed& s, std::uint64_t key) {
    std::uint64_t h = mix64(s.seed ^ 0x6a09e667f3bcc909ULL);
    h = mix64(h ^ s.stream);
    h = mix64(h ^ key);
    return h;
}

// Uniform on the open interval (0, 1): 53 mantissa bits, zero mapped away.
inline double keyed_unit(const RandomSeed& s, std::uint64_t key) {
    const std::uint64_t bits = keyed_bits(s, key) >> 11;  // 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

// Pack a 1-based lattice site into a draw key.
inline std::uint64_t site_key(std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace rng
}  // namespace mbl

#endif
