#pragma once

// Claim-level verifiers: each assembles censuses, structure checks, and block
// algebra into a VerificationReport with exact-integer rows. Violations are
// first-class results, never masked.

#include <cstdint>
#include <vector>

#include "expgraph/census.hpp"
#include "expgraph/graph.hpp"
#include "expgraph/ntheory.hpp"
#include "expgraph/report.hpp"

namespace expgraph {

// Rows k = 1..k_max: observed = brute-force closed-walk count, bound =
// (p-1)^k. With q primitive mod p the row requires equality, otherwise
// observed <= bound. Notes record the derived prediction ord_p(q)^k, whether
// it matched every row, and ord over the full modulus.
VerificationReport verify_theorem1(const GraphParams& params, uint64_t k_max,
                                   const Limits& limits = {});

// Rows k = 1..k_max: periodic_points(k) <= (p-1)^k. Rows attaining the bound
// (equality, so not strict) are listed in the notes.
VerificationReport verify_corollary(const GraphParams& params, uint64_t k_max,
                                    const Limits& limits = {});

// Aggregates four structural checks, one row each, observed = defect count,
// bound = 0: (1) out-lists constant on classes mod p^{n-1}; (2) projection
// bijects level-n onto level-(n-1) out-lists; (3) extract_blocks block-sum
// equals the level-(n-1) adjacency with empty residual; (4) base-level
// adjacency has identical rows equal to the subgroup indicator, column 0 zero.
// Requires n >= 2.
VerificationReport verify_lemma2(const GraphParams& params, const Limits& limits = {});

// Exact censuses c_n(k) of the perturbed graphs for n = 1..n_max, k = 1..k_max.
// Emits one report per (claim, k): first thm2_stated (rows n = 1..n_max,
// bound p + r*p*(2p(2r+1))^k*(n-1)), then thm2_recurrence (rows n = 2..n_max,
// bound c_{n-1} + r*p*(2(2r+1)p)^k). k is recorded in each report's params.
std::vector<VerificationReport> verify_theorem2(uint64_t p, uint64_t q, uint64_t radius,
                                                uint64_t n_max, uint64_t k_max,
                                                const Limits& limits = {});

// Seeded random block families over the configuration grid
// r in {1,2,3,5} x d in {1,2,3} x bound in {1,5}, `trials` families each,
// every one checked for k = 1..6. One row per configuration (observed =
// families that failed any k), plus a final row requiring at least one
// verified noncommuting pair among the d >= 2 families.
VerificationReport verify_lemma1_suite(uint64_t trials, uint64_t seed);

// Desk grid: p in {3,5,7} x n in {1,2,3} x q in {2,3,5}, gcd-filtered,
// ordered by (p, n, q).
std::vector<GraphParams> desk_grid();
inline constexpr uint64_t kDeskGridKMax = 5;

// Perturbed desk grid: p = 3, q = 2, r in {1,2}, n in {1,2,3}, k <= 3.
inline constexpr uint64_t kPerturbedGridP = 3;
inline constexpr uint64_t kPerturbedGridQ = 2;
inline constexpr uint64_t kPerturbedGridRadii[] = {1, 2};
inline constexpr uint64_t kPerturbedGridNMax = 3;
inline constexpr uint64_t kPerturbedGridKMax = 3;

}  // namespace expgraph
