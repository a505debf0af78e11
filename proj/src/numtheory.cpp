#include "seqforge/numtheory.hpp"

namespace seqforge::nt {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t result = 1 % m;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_primitive_root(std::int64_t g, std::int64_t p) {
    if (mod(g, p) == 0) return false;
    for (auto q : distinct_prime_factors(p - 1)) {
        if (pow_mod(g, (p - 1) / q, p) == 1) return false;
    }
    return true;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
    const auto r = pow_mod(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

}  // namespace seqforge::nt
