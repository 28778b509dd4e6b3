#include "expgraph/census.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "expgraph/blockalg.hpp"

namespace expgraph {

namespace {

void check_census_guard(uint64_t vertex_count, const Limits& limits, const char* who) {
    if (vertex_count > limits.max_vertices) {
        throw std::domain_error(std::string(who) + ": census guard exceeded: p^n = " +
                                std::to_string(vertex_count) + " > max_vertices = " +
                                std::to_string(limits.max_vertices));
    }
}

unsigned worker_count(const Limits& limits, uint64_t starts) {
    unsigned w = limits.threads;
    if (w == 0) {
        w = std::thread::hardware_concurrency();
        if (w == 0) w = 1;
        w = std::min(w, 8u);
    }
    if (starts < w) w = static_cast<unsigned>(starts);
    return std::max(w, 1u);
}

// Closed walks from each start in [lo, hi): one DP pass per start pushing
// exact weights along out-lists, recording the weight back at the start after
// every step. Touched-entry lists keep the clearing cost proportional to the
// reachable set.
void count_starts(const ExpGraph& graph, uint64_t k_max, uint64_t lo, uint64_t hi,
                  std::vector<BigInt>& sums) {
    const uint64_t V = graph.vertex_count;
    std::vector<BigInt> cur(V), nxt(V);
    std::vector<uint32_t> cur_touched, nxt_touched;

    for (uint64_t s = lo; s < hi; ++s) {
        cur[s] = 1;
        cur_touched.push_back(static_cast<uint32_t>(s));
        for (uint64_t step = 1; step <= k_max; ++step) {
            for (uint32_t u : cur_touched) {
                const BigInt& weight = cur[u];
                for (uint32_t t : graph.out[u]) {
                    if (nxt[t].is_zero()) nxt_touched.push_back(t);
                    nxt[t] += weight;
                }
            }
            sums[step - 1] += nxt[s];
            for (uint32_t u : cur_touched) cur[u] = 0;
            cur_touched.clear();
            std::swap(cur, nxt);
            std::swap(cur_touched, nxt_touched);
        }
        for (uint32_t u : cur_touched) cur[u] = 0;
        cur_touched.clear();
    }
}

}  // namespace

const char* census_method_name(CensusMethod method) {
    return method == CensusMethod::brute ? "brute" : "reduced";
}

Census closed_walk_trace_all(const ExpGraph& graph, uint64_t k_max, const Limits& limits) {
    if (k_max < 1) throw std::invalid_argument("closed_walk_trace_all: k_max must be >= 1");
    check_census_guard(graph.vertex_count, limits, "closed_walk_trace_all");

    const uint64_t V = graph.vertex_count;
    const unsigned W = worker_count(limits, V);

    std::vector<std::vector<BigInt>> partial(W, std::vector<BigInt>(k_max));
    std::vector<std::exception_ptr> errors(W);
    std::vector<std::thread> pool;
    pool.reserve(W);

    const uint64_t chunk = (V + W - 1) / W;
    for (unsigned w = 0; w < W; ++w) {
        const uint64_t lo = std::min<uint64_t>(V, w * chunk);
        const uint64_t hi = std::min<uint64_t>(V, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
            try {
                count_starts(graph, k_max, lo, hi, partial[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    Census census{graph.params, graph.radius, CensusMethod::brute, {}};
    for (uint64_t k = 1; k <= k_max; ++k) {
        BigInt total = 0;
        for (unsigned w = 0; w < W; ++w) total += partial[w][k - 1];
        census.counts[k] = std::move(total);
    }
    return census;
}

BigInt closed_walk_trace(const ExpGraph& graph, uint64_t k, const Limits& limits) {
    if (k < 1) throw std::invalid_argument("closed_walk_trace: k must be >= 1");
    return closed_walk_trace_all(graph, k, limits).counts.at(k);
}

BigInt reduced_trace(const GraphParams& params, uint64_t k) {
    if (k < 1) throw std::invalid_argument("reduced_trace: k must be >= 1");

    // Base-level adjacency: every row is the indicator of <q> mod p, so the
    // first column (vertex 0, a non-unit) is zero.
    IntMatrix base(params.p);
    const uint64_t qp = params.q % params.p;
    uint64_t member = qp;
    do {
        for (uint64_t row = 0; row < params.p; ++row) base.at(row, member) = 1;
        member = (member * qp) % params.p;
    } while (member != qp);

    return base.pow(k).trace();
}

Census reduced_trace_all(const GraphParams& params, uint64_t k_max) {
    if (k_max < 1) throw std::invalid_argument("reduced_trace_all: k_max must be >= 1");
    Census census{params, 0, CensusMethod::reduced, {}};
    for (uint64_t k = 1; k <= k_max; ++k) census.counts[k] = reduced_trace(params, k);
    return census;
}

uint64_t f_map(const GraphParams& params, uint64_t x) {
    if (x >= params.modulus) {
        throw std::invalid_argument("f_map: vertex out of range [0, p^n)");
    }
    return mod_pow(params.q, x, params.modulus);
}

uint64_t periodic_points(const GraphParams& params, uint64_t k, const Limits& limits) {
    if (k < 1) throw std::invalid_argument("periodic_points: k must be >= 1");
    check_census_guard(params.modulus, limits, "periodic_points");

    const uint64_t V = params.modulus;
    std::vector<uint32_t> table(V);
    for (uint64_t x = 0; x < V; ++x) table[x] = static_cast<uint32_t>(f_map(params, x));

    uint64_t count = 0;
    for (uint64_t x = 0; x < V; ++x) {
        uint64_t cur = x;
        for (uint64_t i = 0; i < k; ++i) cur = table[cur];
        if (cur == x) ++count;
    }
    return count;
}

nlohmann::ordered_json census_json(const Census& census) {
    nlohmann::ordered_json j;
    j["params"] = {{"p", census.params.p},
                   {"n", census.params.n},
                   {"q", census.params.q},
                   {"r", census.radius}};
    j["method"] = census_method_name(census.method);
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [k, count] : census.counts) {
        counts[std::to_string(k)] = to_decimal(count);
    }
    j["counts"] = std::move(counts);
    return j;
}

}  // namespace expgraph
