#pragma once

// Exact modular-arithmetic kernel: powering, trial-division factorization,
// multiplicative orders and primitivity tests. Everything here is a pure
// function of its arguments; all residues fit 64 bits because graph moduli
// are capped at p^n < 2^32.

#include <cstdint>
#include <utility>
#include <vector>

namespace expgraph {

// Hard width guard: p^n must stay strictly below this so that residue
// products fit an unsigned 128-bit intermediate with room to spare.
inline constexpr uint64_t kVertexWidthGuard = uint64_t(1) << 32;

// Trial-division cap for factorize(); phi(p^n) < 2^32 always fits under it.
inline constexpr uint64_t kFactorizeCap = uint64_t(1) << 40;

struct Factorization {
    // (prime, multiplicity) pairs, primes strictly increasing.
    std::vector<std::pair<uint64_t, uint32_t>> pairs;
    uint64_t value = 1;
};

// base^exp mod modulus by repeated squaring; 128-bit intermediates.
uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t modulus);

// Deterministic trial division; m >= 1 is prime iff it has no divisor <= sqrt(m).
bool is_prime(uint64_t m);

// Complete factorization by trial division. Throws std::domain_error if m
// is at or above kFactorizeCap.
Factorization factorize(uint64_t m);

// phi(p^n) = (p-1) * p^(n-1) for prime p, n >= 1.
uint64_t euler_phi_prime_power(uint64_t p, uint64_t n);

// Least t >= 1 with q^t = 1 mod p^n; requires gcd(q, p) = 1.
uint64_t multiplicative_order(uint64_t q, uint64_t p, uint64_t n);

// True iff ord(q mod p^n) = phi(p^n).
bool is_primitive_root(uint64_t q, uint64_t p, uint64_t n);

// The triple (p, n, q) generating an exponentiation graph on Z_{p^n}.
// Validation at construction: p an odd prime (p = 2 is rejected — the
// constructions degenerate there), n >= 1, p^n < 2^32, gcd(q, p) = 1.
// q is reduced mod p^n; q = 1 is permitted.
struct GraphParams {
    uint64_t p;
    uint64_t n;
    uint64_t q;        // canonical residue in [1, p^n)
    uint64_t modulus;  // p^n

    GraphParams(uint64_t p, uint64_t n, uint64_t q);

    uint64_t phi() const { return euler_phi_prime_power(p, n); }
};

}  // namespace expgraph
