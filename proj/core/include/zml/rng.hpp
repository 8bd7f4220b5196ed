#pragma once
// Deterministic RNG for experiment sampling.  std::mt19937_64 is pinned by
// the standard, but the *distributions* are not, so uniform draws are
// derived from raw engine output here.  A given seed therefore produces the
// same sample stream on every platform and compiler.

#include <cstdint>
#include <random>

namespace zml {

class seeded_rng {
public:
    explicit seeded_rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 significant bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Multiply-shift; bias < 2^-64, irrelevant for experiment sampling.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace zml
