#pragma once

#include <cstdint>

#include "chainmod/error.hpp"

namespace chainmod {

// The base ring Z/p^e. Finite, commutative, chain: its ideals are
// 0 = (p^e) < (p^{e-1}) < ... < (p) < (1). All residues are kept reduced in
// [0, p^e) and stored in 64-bit words; construction rejects p^e >= 2^32 so
// products of residues never overflow.
struct ChainRing {
    std::uint64_t p = 2;
    std::uint64_t e = 1;
    std::uint64_t modulus = 2;  // p^e, cached

    ChainRing() = default;
    ChainRing(std::uint64_t p, std::uint64_t e);

    bool operator==(const ChainRing&) const = default;

    std::uint64_t reduce(std::uint64_t x) const { return x % modulus; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % modulus; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + modulus - b) % modulus; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % modulus; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : modulus - a; }

    // p^k for 0 <= k <= e.
    std::uint64_t ppow(std::uint64_t k) const;
};

// Largest k <= e with p^k | x; by convention valuation(0) = e (the maximum),
// so that "order of x in Z/p^a is p^(a - val(x))" holds without branching.
std::uint64_t valuation(std::uint64_t x, const ChainRing& ring);

// Valuation of x relative to the smaller modulus p^m (m <= e), sentinel m for
// x = 0 mod p^m.
std::uint64_t valuation_mod(std::uint64_t x, std::uint64_t p, std::uint64_t m);

// Inverse of a unit x mod p^e. Throws an Input error ("not a unit") if p | x.
std::uint64_t unit_inverse(std::uint64_t x, const ChainRing& ring);

}  // namespace chainmod
