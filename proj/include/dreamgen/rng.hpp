#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace dreamgen {

// All seeded randomness in the library flows through this generator.
//
// The sequence is SplitMix64 (Steele/Lea/Flood mixing constants): the state
// advances by the golden-gamma increment and each output is the finalized
// mix of the new state.  Derived draws are defined on top of the raw 64-bit
// stream as follows, so that runs are reproducible from a single seed:
//   uniform double in [0,1):  (next() >> 11) * 2^-53
//   bounded integer in [0,n): next() % n  (modulo reduction)
//   gaussian:                 Box-Muller from two consecutive uniforms,
//                             one variate per pair (the sine branch is
//                             discarded)
//   shuffle:                  Fisher-Yates from the top index down, using
//                             bounded() for each swap
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    std::uint64_t bounded(std::uint64_t n) {
        return next() % n;
    }

    double next_gaussian() {
        double u1 = 1.0 - next_double(); // (0, 1], keeps the log finite
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace dreamgen
