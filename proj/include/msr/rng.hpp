#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace msr {

// Splittable counter-based generator. Every stream is a pure function of
// (key, counter), so derived streams never share state and any draw can be
// reproduced from the master seed alone.
class Rng {
public:
    explicit Rng(uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)), counter_(0) {}

    // Independent child stream; label keeps sibling streams apart.
    Rng split(std::string_view label) const {
        uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
        for (char ch : label) {
            h ^= static_cast<unsigned char>(ch);
            h *= 0x100000001b3ull;
        }
        return Rng(mix(key_ ^ h), 0);
    }

    Rng split(uint64_t index) const { return Rng(mix(key_ + 0x9e3779b97f4a7c15ull * (index + 1)), 0); }

    uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

    // Uniform in [0,1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo,hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Standard normal via Box-Muller; both uniforms strictly positive.
    double normal() {
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Uniform integer in [0, n).
    uint64_t next_below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

private:
    Rng(uint64_t key, uint64_t counter) : key_(key), counter_(counter) {}

    // SplitMix64 finalizer.
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t key_;
    uint64_t counter_;
};

}  // namespace msr
