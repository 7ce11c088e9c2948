#ifndef FREECURVE_RNG_HPP
#define FREECURVE_RNG_HPP

#include <cstdint>

#include "freecurve/rational.hpp"

namespace freecurve {

// Counter-based generator (splitmix64 core). Identical output on every
// platform for a given (seed, counter) pair, and trivially splittable:
// split(label) derives an independent stream without sharing state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), counter_(0) {}

    std::uint64_t next() { return mix(seed_ ^ mix(counter_++)); }

    Rng split(std::uint64_t label) const { return Rng(mix(seed_ + 0x9e3779b97f4a7c15ULL * (label + 1))); }

    // Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        if (hi < lo) return lo;
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Nonzero rational with numerator and denominator in [1, 20], random sign.
    Rat rational() {
        long num = uniform(1, 20);
        long den = uniform(1, 20);
        if (next() & 1) num = -num;
        return rat(num, den);
    }

    Rat positive_rational() { return rat(uniform(1, 20), uniform(1, 20)); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t counter_;
};

}  // namespace freecurve

#endif
