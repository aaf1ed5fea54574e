#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace genex {

// splitmix64, used to derive independent stream seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic random source. The helpers below are hand-rolled so that
// streams are bit-identical across standard library implementations
// (std::uniform_*_distribution makes no such guarantee).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform double in [0, 1), 53 bits of precision
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n), n > 0, unbiased via rejection
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % n;
        std::uint64_t x = eng_();
        while (x >= limit) x = eng_();
        return x % n;
    }

    bool next_bool() { return (eng_() & 1ULL) != 0; }

private:
    std::mt19937_64 eng_;
};

} // namespace genex
