#pragma once

#include <cstdint>
#include <vector>

namespace seqforge::nt {

// Small-integer helpers. All moduli fit comfortably in 32 bits.

bool is_prime(std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::vector<std::int64_t> distinct_prime_factors(std::int64_t n);

/// True when g generates the multiplicative group of Z_p (p prime).
bool is_primitive_root(std::int64_t g, std::int64_t p);

/// Legendre symbol (a/p) in {-1, 0, 1} for odd prime p, via Euler's criterion.
int legendre_symbol(std::int64_t a, std::int64_t p);

/// Floor mod with a non-negative result.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    auto r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace seqforge::nt
