#pragma once

#include <random>

#include "fruit/quad_field.hpp"

// Deterministic generators and small independent oracles shared by the test
// suites. Oracles deliberately use different algorithms than the library.
namespace testsupport {

using fruit::BigInt;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Uniform-ish signed integer with up to `bits` significant bits.
inline BigInt random_bigint(std::mt19937_64& g, unsigned bits) {
    std::uniform_int_distribution<unsigned> width(0, bits);
    unsigned take = width(g);
    BigInt r = 0;
    for (unsigned got = 0; got < take; got += 32)
        r = (r << 32) + static_cast<unsigned long>(g() & 0xffffffffu);
    r = fruit::mod_floor(r, fruit::pow2(take == 0 ? 1 : take));
    if (g() & 1) r = -r;
    return r;
}

inline fruit::QuadInt random_quadint(std::mt19937_64& g, const fruit::Field& f, unsigned bits) {
    BigInt u = random_bigint(g, bits);
    BigInt v = f.is_rational() ? BigInt(0) : random_bigint(g, bits);
    return fruit::QuadInt(std::move(u), std::move(v), f);
}

// Per-integer square-freeness by direct p^2 divisibility (no sieve, no
// factor stripping).
inline bool oracle_squarefree(long long n) {
    if (n < 0) n = -n;
    for (long long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

}  // namespace testsupport
