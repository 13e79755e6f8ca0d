#pragma once

#include <cstdint>

namespace pba {

// Deterministic 64-bit generator (splitmix64). One instance per logical
// stream; streams are derived from a base seed and a salt so the draws a
// consumer sees never depend on evaluation order or thread count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// Stable (base, salt) -> seed hash used for every stream derivation:
// trial seeds from the master seed, agent streams from a trial seed, etc.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    return detail::mix64(detail::mix64(base + 0x9e3779b97f4a7c15ULL) ^
                         (salt + 0x2545f4914f6cdd1dULL));
}

}  // namespace pba
