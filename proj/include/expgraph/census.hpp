#pragma once

// Exact k-cycle counting (closed walks with marked initial vertex) by two
// independent routes — per-start dynamic programming on the explicit graph,
// and the reduced p x p matrix power that never builds the graph — plus the
// k-periodic points of the map f(x) = q^x mod p^n. Counts are unbounded
// integers; no floating point anywhere.

#include <cstdint>
#include <map>

#include <json.hpp>

#include "expgraph/bigint.hpp"
#include "expgraph/graph.hpp"
#include "expgraph/ntheory.hpp"

namespace expgraph {

enum class CensusMethod { brute, reduced };

const char* census_method_name(CensusMethod method);

struct Census {
    GraphParams params;
    uint64_t radius = 0;
    CensusMethod method = CensusMethod::brute;
    std::map<uint64_t, BigInt> counts;  // k -> exact closed-walk count
};

// trace(A^k) computed matrix-free: one DP pass per start vertex over the
// out-lists, exact BigInt accumulators. Starts run on a worker pool; the
// result is deterministic regardless of schedule.
BigInt closed_walk_trace(const ExpGraph& graph, uint64_t k, const Limits& limits = {});

// counts[k] = closed_walk_trace(graph, k) for k = 1..k_max, sharing one DP
// pass per start.
Census closed_walk_trace_all(const ExpGraph& graph, uint64_t k_max,
                             const Limits& limits = {});

// trace(A_1^k) on the p x p base-level adjacency (every row the indicator of
// the subgroup generated by q mod p, column 0 zero), by exponentiation by
// squaring. Time polynomial in p and log k, independent of n. Unperturbed
// parameters only.
BigInt reduced_trace(const GraphParams& params, uint64_t k);
Census reduced_trace_all(const GraphParams& params, uint64_t k_max);

// f(x) = q^x mod p^n with the representative exponent 0 <= x < p^n.
uint64_t f_map(const GraphParams& params, uint64_t x);

// Number of x in [0, p^n) with f iterated k times returning x.
uint64_t periodic_points(const GraphParams& params, uint64_t k, const Limits& limits = {});

// {params: {p,n,q,r}, method, counts: {k: decimal-string}}.
nlohmann::ordered_json census_json(const Census& census);

}  // namespace expgraph
