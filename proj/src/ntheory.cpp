#include "expgraph/ntheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace expgraph {

namespace {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t modulus) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % modulus);
}

}  // namespace

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
    uint64_t result = 1 % modulus;
    uint64_t b = base % modulus;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, b, modulus);
        b = mul_mod(b, b, modulus);
        exp >>= 1;
    }
    return result;
}

bool is_prime(uint64_t m) {
    if (m < 2) return false;
    if (m < 4) return true;
    if (m % 2 == 0) return false;
    for (uint64_t d = 3; d * d <= m; d += 2) {
        if (m % d == 0) return false;
    }
    return true;
}

Factorization factorize(uint64_t m) {
    if (m < 1) throw std::invalid_argument("factorize: m must be >= 1");
    if (m >= kFactorizeCap) {
        throw std::domain_error("factorize: m exceeds the trial-division cap 2^40 (" +
                                std::to_string(kFactorizeCap) + ")");
    }
    Factorization f;
    f.value = m;
    for (uint64_t d = 2; d * d <= m; d += (d == 2) ? 1 : 2) {
        if (m % d != 0) continue;
        uint32_t mult = 0;
        while (m % d == 0) {
            m /= d;
            ++mult;
        }
        f.pairs.emplace_back(d, mult);
    }
    if (m > 1) f.pairs.emplace_back(m, 1);
    return f;
}

uint64_t euler_phi_prime_power(uint64_t p, uint64_t n) {
    if (!is_prime(p)) throw std::invalid_argument("euler_phi_prime_power: p must be prime");
    if (n < 1) throw std::invalid_argument("euler_phi_prime_power: n must be >= 1");
    uint64_t phi = p - 1;
    for (uint64_t i = 1; i < n; ++i) {
        if (phi > UINT64_MAX / p) throw std::overflow_error("euler_phi_prime_power: overflow");
        phi *= p;
    }
    return phi;
}

uint64_t multiplicative_order(uint64_t q, uint64_t p, uint64_t n) {
    if (!is_prime(p)) throw std::invalid_argument("multiplicative_order: p must be prime");
    if (n < 1) throw std::invalid_argument("multiplicative_order: n must be >= 1");
    if (q % p == 0) throw std::invalid_argument("multiplicative_order: gcd(q, p) must be 1");

    uint64_t pn = 1;
    for (uint64_t i = 0; i < n; ++i) {
        if (pn > UINT64_MAX / p) throw std::overflow_error("multiplicative_order: p^n overflow");
        pn *= p;
    }

    // Start at phi(p^n) and strip every prime factor that keeps q^t = 1.
    uint64_t t = euler_phi_prime_power(p, n);
    for (const auto& [prime, mult] : factorize(t).pairs) {
        for (uint32_t i = 0; i < mult; ++i) {
            if (t % prime == 0 && mod_pow(q, t / prime, pn) == 1) {
                t /= prime;
            } else {
                break;
            }
        }
    }
    return t;
}

bool is_primitive_root(uint64_t q, uint64_t p, uint64_t n) {
    return multiplicative_order(q, p, n) == euler_phi_prime_power(p, n);
}

GraphParams::GraphParams(uint64_t p_, uint64_t n_, uint64_t q_) : p(p_), n(n_), q(q_) {
    if (p == 2) {
        throw std::invalid_argument(
            "GraphParams: p = 2 is rejected (out-degree p-1 = 1 degenerates the graph)");
    }
    if (!is_prime(p)) throw std::invalid_argument("GraphParams: p must be an odd prime >= 3");
    if (n < 1) throw std::invalid_argument("GraphParams: n must be >= 1");

    modulus = 1;
    for (uint64_t i = 0; i < n; ++i) {
        if (modulus >= kVertexWidthGuard / p) {
            throw std::invalid_argument("GraphParams: p^n must stay below 2^32");
        }
        modulus *= p;
    }

    if (q < 1) throw std::invalid_argument("GraphParams: q must be a positive integer");
    if (q % p == 0) throw std::invalid_argument("GraphParams: gcd(q, p) must be 1");
    q %= modulus;
}

}  // namespace expgraph
