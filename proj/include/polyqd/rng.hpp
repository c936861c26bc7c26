#pragma once

#include <cstdint>
#include <random>

namespace polyqd {

// Deterministic bit source. mt19937_64 is fully specified by the standard,
// and we avoid std distributions (whose outputs are implementation-defined)
// so that identical seeds give identical artifacts everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    int next_bit() {
        if (bits_left_ == 0) {
            buf_ = eng_();
            bits_left_ = 64;
        }
        int b = static_cast<int>(buf_ & 1);
        buf_ >>= 1;
        --bits_left_;
        return b;
    }

    // k <= 64 low-order random bits.
    std::uint64_t next_bits(int k) {
        std::uint64_t r = 0;
        for (int i = 0; i < k; ++i) r |= std::uint64_t(next_bit()) << i;
        return r;
    }

    // Uniform in [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        int k = 0;
        while ((std::uint64_t(1) << k) < bound) ++k;
        for (;;) {
            std::uint64_t v = next_bits(k);
            if (v < bound) return v;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Independent stream for worker i, derived from this seed (splitmix step).
    static std::uint64_t substream(std::uint64_t seed, std::uint64_t i) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
    std::uint64_t buf_ = 0;
    int bits_left_ = 0;
};

}  // namespace polyqd
