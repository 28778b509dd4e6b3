#include "expgraph/graph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace expgraph {

namespace {

void check_vertex(const GraphParams& params, uint64_t x, const char* who) {
    if (x >= params.modulus) {
        throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(x) +
                                    " out of range [0, " + std::to_string(params.modulus) + ")");
    }
}

void check_build_guard(const GraphParams& params, const Limits& limits, const char* who) {
    if (params.modulus > limits.max_vertices) {
        throw std::domain_error(std::string(who) + ": vertex guard exceeded: p^n = " +
                                std::to_string(params.modulus) + " > max_vertices = " +
                                std::to_string(limits.max_vertices));
    }
}

void require_level(const GraphParams& params, const char* who) {
    if (params.n < 2) {
        throw std::domain_error(std::string(who) + ": requires n >= 2 (no smaller level)");
    }
}

}  // namespace

std::vector<uint32_t> out_neighbors_closed_form(const GraphParams& params, uint64_t x) {
    check_vertex(params, x, "out_neighbors_closed_form");
    const uint64_t step = params.modulus / params.p;  // p^{n-1}
    std::vector<uint32_t> targets;
    targets.reserve(params.p - 1);
    for (uint64_t b = 0; b + 2 <= params.p; ++b) {
        targets.push_back(
            static_cast<uint32_t>(mod_pow(params.q, x + b * step, params.modulus)));
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    return targets;
}

std::vector<uint32_t> out_neighbors_oracle(const GraphParams& params, uint64_t x) {
    check_vertex(params, x, "out_neighbors_oracle");
    // m generates the coset steps: q^y over y = x mod p^n is q^x * <q^(p^n)>.
    const uint64_t m = mod_pow(params.q, params.modulus, params.modulus);
    const uint64_t start = mod_pow(params.q, x, params.modulus);
    std::vector<uint32_t> targets;
    uint64_t cur = start;
    do {
        targets.push_back(static_cast<uint32_t>(cur));
        cur = static_cast<uint64_t>((static_cast<unsigned __int128>(cur) * m) % params.modulus);
    } while (cur != start);
    std::sort(targets.begin(), targets.end());
    return targets;
}

ExpGraph build_graph(const GraphParams& params, const Limits& limits) {
    check_build_guard(params, limits, "build_graph");
    ExpGraph g{params, 0, params.modulus, {}};
    g.out.resize(params.modulus);
    for (uint64_t x = 0; x < params.modulus; ++x) {
        g.out[x] = out_neighbors_closed_form(params, x);
    }
    return g;
}

ExpGraph build_perturbed_graph(const PerturbParams& params, const Limits& limits) {
    const GraphParams& base = params.base;
    check_build_guard(base, limits, "build_perturbed_graph");
    const uint64_t V = base.modulus;
    const uint64_t r = params.radius;

    ExpGraph g{base, r, V, {}};
    g.out.resize(V);

    const bool saturated = r >= V || 2 * r + 1 >= V;
    std::vector<uint32_t> all;
    if (saturated) {
        all.resize(V);
        for (uint64_t v = 0; v < V; ++v) all[v] = static_cast<uint32_t>(v);
    }

    for (uint64_t x = 0; x < V; ++x) {
        if (saturated) {
            g.out[x] = all;
            continue;
        }
        std::vector<uint32_t> targets;
        for (uint32_t t : out_neighbors_closed_form(base, x)) {
            // c = -r..r with canonical residues; start at t - r shifted into range.
            uint64_t shifted = (t + V - (r % V)) % V;
            for (uint64_t i = 0; i < 2 * r + 1; ++i) {
                targets.push_back(static_cast<uint32_t>(shifted));
                shifted = (shifted + 1) % V;
            }
        }
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        g.out[x] = std::move(targets);
    }
    return g;
}

uint64_t project(const GraphParams& params, uint64_t x) {
    require_level(params, "project");
    check_vertex(params, x, "project");
    return x % (params.modulus / params.p);
}

VerificationReport check_fact_i(const GraphParams& params) {
    require_level(params, "check_fact_i");
    const uint64_t d = params.modulus / params.p;

    VerificationReport report;
    report.claim = "fact_i";
    report.params = {{"p", params.p}, {"n", params.n}, {"q", params.q}};

    for (uint64_t y = 0; y < d; ++y) {
        const auto reference = out_neighbors_closed_form(params, y);
        uint64_t distinct = 1;
        uint64_t first_mismatch = 0;
        for (uint64_t b = 1; b < params.p; ++b) {
            if (out_neighbors_closed_form(params, y + b * d) != reference) {
                ++distinct;
                if (first_mismatch == 0) first_mismatch = y + b * d;
            }
        }
        report.add_row(y, distinct, 1, distinct == 1);
        if (distinct != 1 && report.notes.empty()) {
            report.notes = "first counterexample: vertices " + std::to_string(y) + " and " +
                           std::to_string(first_mismatch) + " share y = " + std::to_string(y) +
                           " mod p^(n-1) but have different out-lists";
        }
    }
    report.finalize();
    if (report.passed()) {
        report.notes = "out-lists constant on all " + std::to_string(d) +
                       " residue classes mod p^(n-1)";
    }
    return report;
}

VerificationReport check_fact_ii(const GraphParams& params) {
    require_level(params, "check_fact_ii");
    const uint64_t d = params.modulus / params.p;
    const GraphParams lower(params.p, params.n - 1, params.q);

    VerificationReport report;
    report.claim = "fact_ii";
    report.params = {{"p", params.p}, {"n", params.n}, {"q", params.q}};

    for (uint64_t y = 0; y < d; ++y) {
        const auto upper_targets = out_neighbors_closed_form(params, y);
        const auto lower_targets = out_neighbors_closed_form(lower, y);

        std::vector<uint32_t> projected;
        projected.reserve(upper_targets.size());
        for (uint32_t t : upper_targets) projected.push_back(static_cast<uint32_t>(t % d));
        std::sort(projected.begin(), projected.end());
        projected.erase(std::unique(projected.begin(), projected.end()), projected.end());

        const bool injective = projected.size() == upper_targets.size();
        const bool image_equal = projected == lower_targets;
        report.add_row(y, projected.size(), lower_targets.size(), injective && image_equal);
        if (!(injective && image_equal) && report.notes.empty()) {
            report.notes = "first counterexample at y = " + std::to_string(y) +
                           (injective ? ": projected image differs from the level-(n-1) out-list"
                                      : ": projection collides on the level-n out-list");
        }
    }
    report.finalize();
    if (report.passed()) {
        report.notes = "projection bijects every level-n out-list onto its level-(n-1) out-list";
    }
    return report;
}

BlockDecomposition extract_blocks(const ExpGraph& graph) {
    const GraphParams& params = graph.params;
    require_level(params, "extract_blocks");
    const uint64_t d = params.modulus / params.p;

    BlockDecomposition dec;
    dec.block_side = d;
    dec.blocks.resize(params.p);
    for (auto& block : dec.blocks) {
        block.side = d;
        block.rows.resize(d);
    }

    // Rows must be constant on residue classes; the decomposition reads class
    // representatives y directly.
    for (uint64_t y = 0; y < d; ++y) {
        for (uint64_t b = 1; b < params.p; ++b) {
            if (graph.out[y + b * d] != graph.out[y]) {
                throw std::invalid_argument(
                    "extract_blocks: out-lists are not constant on residue classes mod p^(n-1)");
            }
        }
    }

    std::vector<bool> seen(d, false);
    std::vector<uint32_t> touched;
    for (uint64_t y = 0; y < d; ++y) {
        bool collision = false;
        for (uint32_t t : graph.out[y]) {
            const uint32_t col = static_cast<uint32_t>(t % d);
            const uint64_t block = t / d;
            if (seen[col]) {
                // Two targets share a column residue; only the first can live
                // in the blocks, the rest belong to the residual rows.
                collision = true;
                continue;
            }
            seen[col] = true;
            touched.push_back(col);
            dec.blocks[block].rows[y].push_back(col);
        }
        for (uint32_t col : touched) seen[col] = false;
        touched.clear();
        if (collision) dec.residual_rows.push_back(static_cast<uint32_t>(y));
        for (auto& block : dec.blocks) {
            std::sort(block.rows[y].begin(), block.rows[y].end());
        }
    }
    return dec;
}

void dump_graph(const ExpGraph& graph, std::ostream& os) {
    for (uint64_t x = 0; x < graph.vertex_count; ++x) {
        os << x << ':';
        for (uint32_t t : graph.out[x]) os << ' ' << t;
        os << '\n';
    }
}

std::string dump_graph(const ExpGraph& graph) {
    std::ostringstream oss;
    dump_graph(graph, oss);
    return oss.str();
}

}  // namespace expgraph
