#pragma once

#include <cstdint>

namespace hypermatch {

/// Counter-based splittable RNG.
///
/// Every draw is a pure function of (key, counter), so streams can be split by
/// deriving new keys from labels (trial index, arrival index) and replayed
/// exactly regardless of platform or thread scheduling. std:: distributions are
/// deliberately avoided: their output is implementation-defined.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    /// Derives an independent stream keyed by (this key, label).
    CounterRng split(std::uint64_t label) const {
        return CounterRng(mix(key_ ^ mix(label + 0x9e3779b97f4a7c15ULL)));
    }

    std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Uniform in [0, n) by rejection; n must be positive.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = n * (~0ULL / n);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bool() { return (next_u64() & 1ULL) != 0; }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace hypermatch
