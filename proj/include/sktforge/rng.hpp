#pragma once

#include "sktforge/rational.hpp"

#include <cstdint>
#include <utility>

namespace sktforge {

// Deterministic 64-bit generator; same seed gives the same stream on every
// platform, which keeps randomized evidence runs reproducible.
struct Splitmix64 {
    uint64_t state = 0;

    explicit Splitmix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // inclusive bounds
    int next_int(int lo, int hi) {
        return lo + (int)(next() % (uint64_t)(hi - lo + 1));
    }

    bool next_bool() { return next() & 1; }

    double next_unit() { return (double)(next() >> 11) * 0x1.0p-53; }
};

// num/den with num in [-max_num, max_num], den in [1, max_den]
inline Rational random_rational(Splitmix64& rng, int max_num = 6, int max_den = 4) {
    return Rational(rng.next_int(-max_num, max_num), rng.next_int(1, max_den));
}

inline Rational random_nonzero_rational(Splitmix64& rng, int max_num = 6, int max_den = 4) {
    Rational r = random_rational(rng, max_num, max_den);
    while (r.is_zero()) r = random_rational(rng, max_num, max_den);
    return r;
}

inline Rational random_positive_rational(Splitmix64& rng, int max_num = 6, int max_den = 4) {
    return Rational(rng.next_int(1, max_num), rng.next_int(1, max_den));
}

// Rational point (q, r) on the unit circle with r > 0, via q = (1-m^2)/(1+m^2),
// r = 2m/(1+m^2) for random m > 0. m = 1 lands exactly on (0, 1).
inline std::pair<Rational, Rational> random_circle_point(Splitmix64& rng) {
    Rational m = random_positive_rational(rng, 5, 3);
    Rational m2 = m * m;
    Rational den = Rational(1) + m2;
    return {(Rational(1) - m2) / den, Rational(2) * m / den};
}

} // namespace sktforge
