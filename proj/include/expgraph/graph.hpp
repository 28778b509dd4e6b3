#pragma once

// Exponentiation graphs on Z_{p^n}: vertex x has an edge to q^y mod p^n for
// every integer y = x mod p^n, plus the additive perturbation that shifts
// each target by c in {-r..r}. Adjacency is stored as sorted out-neighbor
// lists; dense matrices are only ever materialized at the p x p base level.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "expgraph/ntheory.hpp"
#include "expgraph/report.hpp"

namespace expgraph {

struct PerturbParams {
    GraphParams base;
    uint64_t radius = 0;  // r = 0 reproduces the unperturbed graph exactly
};

// Desk-scale guards. max_vertices caps explicit graph construction and the
// brute-force census; threads = 0 picks a worker count from the hardware.
struct Limits {
    uint64_t max_vertices = 100000;
    unsigned threads = 0;
};

struct ExpGraph {
    GraphParams params;
    uint64_t radius = 0;
    uint64_t vertex_count = 0;
    std::vector<std::vector<uint32_t>> out;  // sorted, deduplicated targets

    bool perturbed() const { return radius > 0; }
};

// Sparse 0/1 square matrix: per-row sorted column lists.
struct IndicatorMatrix {
    uint64_t side = 0;
    std::vector<std::vector<uint32_t>> rows;
};

// Writing x = y + b*p^{n-1}, the adjacency of a level-n graph splits into a
// p x p grid of p^{n-1}-square blocks with identical block-rows; blocks holds
// the column blocks B_1..B_p of that common block-row. residual_rows lists
// the block-local row indices y whose targets collide modulo p^{n-1} and so
// cannot all be placed in the blocks (perturbed graphs only; empty otherwise).
struct BlockDecomposition {
    uint64_t block_side = 0;
    std::vector<IndicatorMatrix> blocks;
    std::vector<uint32_t> residual_rows;
};

// {q^(x + b*p^(n-1)) mod p^n : b = 0..p-2}, deduplicated and sorted.
std::vector<uint32_t> out_neighbors_closed_form(const GraphParams& params, uint64_t x);

// Direct coset enumeration, independent of the closed form: iterate
// q^x * m^j with m = q^(p^n) mod p^n until the orbit closes.
std::vector<uint32_t> out_neighbors_oracle(const GraphParams& params, uint64_t x);

ExpGraph build_graph(const GraphParams& params, const Limits& limits = {});

// Out-list of x is the union over c in {-r..r} of the shifted base targets,
// reduced to canonical residues in [0, p^n).
ExpGraph build_perturbed_graph(const PerturbParams& params, const Limits& limits = {});

// x mod p^{n-1}; requires n >= 2.
uint64_t project(const GraphParams& params, uint64_t x);

// Out-lists are constant on residue classes mod p^{n-1}: one row per class y,
// observed = number of distinct out-list patterns in the class (1 expected).
VerificationReport check_fact_i(const GraphParams& params);

// Projection maps the level-n out-list of y bijectively onto the level-(n-1)
// out-list of y: per class, observed = distinct projected targets, bound =
// |O^{n-1}(y)|; satisfied requires injectivity and image equality.
VerificationReport check_fact_ii(const GraphParams& params);

// Requires n >= 2 and a graph whose rows are constant on classes mod p^{n-1}.
BlockDecomposition extract_blocks(const ExpGraph& graph);

// One line per vertex: "<vertex>: <t1> <t2> ...", vertices ascending.
void dump_graph(const ExpGraph& graph, std::ostream& os);
std::string dump_graph(const ExpGraph& graph);

}  // namespace expgraph
