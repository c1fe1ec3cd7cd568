#include "chainmod/ring.hpp"

namespace chainmod {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

ChainRing::ChainRing(std::uint64_t p_, std::uint64_t e_) : p(p_), e(e_) {
    if (!is_prime(p)) throw Error::input("ChainRing: p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error::input("ChainRing: exponent e must be >= 1");
    if (p > (1ull << 31)) throw Error::input("ChainRing: p too large");
    modulus = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        modulus *= p;
        if (modulus >= (1ull << 32))
            throw Error::input("ChainRing: p^e must fit below 2^32");
    }
}

std::uint64_t ChainRing::ppow(std::uint64_t k) const {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r *= p;
    return r;
}

std::uint64_t valuation(std::uint64_t x, const ChainRing& ring) {
    return valuation_mod(x, ring.p, ring.e);
}

std::uint64_t valuation_mod(std::uint64_t x, std::uint64_t p, std::uint64_t m) {
    if (x == 0) return m;
    std::uint64_t v = 0;
    while (v < m && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::uint64_t unit_inverse(std::uint64_t x, const ChainRing& ring) {
    x %= ring.modulus;
    if (x % ring.p == 0) throw Error::input("unit_inverse: not a unit");
    // Extended Euclid on (x, p^e); gcd is 1 since x is a unit.
    std::int64_t r0 = static_cast<std::int64_t>(ring.modulus), r1 = static_cast<std::int64_t>(x);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    std::int64_t m = static_cast<std::int64_t>(ring.modulus);
    std::int64_t inv = ((t0 % m) + m) % m;
    return static_cast<std::uint64_t>(inv);
}

}  // namespace chainmod
