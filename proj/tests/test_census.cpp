#include <doctest.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "expgraph/bigint.hpp"
#include "expgraph/census.hpp"
#include "expgraph/graph.hpp"
#include "expgraph/ntheory.hpp"

using namespace expgraph;

namespace {

// Independent census oracle: literal trace(A^k) on a dense adjacency matrix,
// multiplied out naively.
using DenseMatrix = std::vector<std::vector<BigInt>>;

DenseMatrix dense_adjacency(const ExpGraph& graph) {
    const uint64_t V = graph.vertex_count;
    DenseMatrix a(V, std::vector<BigInt>(V));
    for (uint64_t x = 0; x < V; ++x) {
        for (uint32_t t : graph.out[x]) a[x][t] = 1;
    }
    return a;
}

DenseMatrix dense_mul(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    const uint64_t V = lhs.size();
    DenseMatrix out(V, std::vector<BigInt>(V));
    for (uint64_t i = 0; i < V; ++i) {
        for (uint64_t k = 0; k < V; ++k) {
            if (lhs[i][k].is_zero()) continue;
            for (uint64_t j = 0; j < V; ++j) out[i][j] += lhs[i][k] * rhs[k][j];
        }
    }
    return out;
}

BigInt dense_trace_power(const ExpGraph& graph, uint64_t k) {
    const DenseMatrix a = dense_adjacency(graph);
    DenseMatrix power = a;
    for (uint64_t i = 1; i < k; ++i) power = dense_mul(power, a);
    BigInt trace = 0;
    for (uint64_t v = 0; v < graph.vertex_count; ++v) trace += power[v][v];
    return trace;
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("closed_walk_trace frozen values") {
    // self-loops of Gamma_{3,2,2} sit at 5 (2^5 = 5) and 7 (2^10 = 7) only
    CHECK(closed_walk_trace(build_graph(GraphParams(3, 2, 2)), 1) == 2);
    CHECK(closed_walk_trace(build_graph(GraphParams(3, 1, 2)), 3) == 8);  // (p-1)^k
    // walks confined to the subgroup {1,2,4}, complete with loops: 3^2
    CHECK(closed_walk_trace(build_graph(GraphParams(7, 1, 2)), 2) == 9);
}

TEST_CASE("closed_walk_trace matches the dense matrix-power oracle") {
    const ExpGraph g322 = build_graph(GraphParams(3, 2, 2));
    const ExpGraph g712 = build_graph(GraphParams(7, 1, 2));
    const ExpGraph g523 = build_graph(GraphParams(5, 2, 3));
    const ExpGraph perturbed = build_perturbed_graph({GraphParams(3, 2, 2), 1});
    const ExpGraph wide = build_perturbed_graph({GraphParams(5, 2, 2), 2});
    for (const ExpGraph* graph : {&g322, &g712, &g523, &perturbed, &wide}) {
        for (uint64_t k = 1; k <= 4; ++k) {
            CHECK(closed_walk_trace(*graph, k) == dense_trace_power(*graph, k));
        }
    }
}

TEST_CASE("closed_walk_trace_all") {
    const Census c312 = closed_walk_trace_all(build_graph(GraphParams(3, 1, 2)), 3);
    CHECK(c312.counts == std::map<uint64_t, BigInt>{{1, 2}, {2, 4}, {3, 8}});
    CHECK(c312.method == CensusMethod::brute);

    const Census c511 = closed_walk_trace_all(build_graph(GraphParams(5, 1, 1)), 2);
    CHECK(c511.counts == std::map<uint64_t, BigInt>{{1, 1}, {2, 1}});

    const Census perturbed =
        closed_walk_trace_all(build_perturbed_graph({GraphParams(3, 1, 2), 1}), 2);
    CHECK(perturbed.counts == std::map<uint64_t, BigInt>{{1, 3}, {2, 9}});

    SUBCASE("guards") {
        CHECK_THROWS_AS(closed_walk_trace_all(build_graph(GraphParams(3, 2, 2)), 0),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            closed_walk_trace_all(build_graph(GraphParams(3, 2, 2)), 2, Limits{4, 0}),
            std::domain_error);
    }

    SUBCASE("worker count does not change the counts") {
        const ExpGraph graph = build_graph(GraphParams(7, 2, 3));
        const Census one = closed_walk_trace_all(graph, 4, Limits{100000, 1});
        const Census many = closed_walk_trace_all(graph, 4, Limits{100000, 7});
        CHECK(one.counts == many.counts);
    }
}

TEST_CASE("reduced_trace") {
    CHECK(reduced_trace(GraphParams(3, 2, 2), 4) == 16);  // (p-1)^k, q primitive
    CHECK(reduced_trace(GraphParams(7, 3, 2), 2) == 9);   // ord_7(2)^2
    // cross-check against brute force on 243 vertices
    CHECK(reduced_trace(GraphParams(3, 5, 2), 1) ==
          closed_walk_trace(build_graph(GraphParams(3, 5, 2)), 1));
    CHECK_THROWS_AS(reduced_trace(GraphParams(3, 2, 2), 0), std::invalid_argument);
}

TEST_CASE("reduced and brute routes agree and equal ord_p(q)^k") {
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        for (uint64_t n : {1ull, 2ull, 3ull}) {
            for (uint64_t q : {2ull, 3ull, 5ull}) {
                if (q % p == 0) continue;
                const GraphParams params(p, n, q);
                const Census brute = closed_walk_trace_all(build_graph(params), 4);
                const BigInt ord = multiplicative_order(q, p, 1);
                for (uint64_t k = 1; k <= 4; ++k) {
                    CAPTURE(p);
                    CAPTURE(n);
                    CAPTURE(q);
                    CAPTURE(k);
                    CHECK(brute.counts.at(k) == reduced_trace(params, k));
                    CHECK(brute.counts.at(k) == bigint_pow(ord, k));
                    CHECK(brute.counts.at(k) <= bigint_pow(BigInt(p - 1), k));
                }
            }
        }
    }
}

TEST_CASE("f_map") {
    CHECK(f_map(GraphParams(3, 2, 2), 5) == 5);  // 2^5 = 32 = 5 mod 9
    CHECK(f_map(GraphParams(3, 2, 2), 0) == 1);
    CHECK(f_map(GraphParams(3, 2, 2), 3) == 8);
    CHECK_THROWS_AS(f_map(GraphParams(3, 2, 2), 9), std::invalid_argument);
}

TEST_CASE("periodic_points") {
    CHECK(periodic_points(GraphParams(3, 2, 2), 1) == 1);  // only x = 5 is fixed
    // f(0)=1, f(1)=2, f(2)=1 mod 3: no fixed points at all
    CHECK(periodic_points(GraphParams(3, 1, 2), 1) == 0);
    CHECK(periodic_points(GraphParams(5, 1, 1), 1) == 1);  // f = 1, fixed point x = 1

    SUBCASE("periodic points never exceed the closed-walk count") {
        for (uint64_t p : {3ull, 5ull, 7ull}) {
            for (uint64_t n : {1ull, 2ull}) {
                for (uint64_t q : {2ull, 3ull, 5ull}) {
                    if (q % p == 0) continue;
                    const GraphParams params(p, n, q);
                    const ExpGraph graph = build_graph(params);
                    for (uint64_t k = 1; k <= 3; ++k) {
                        CHECK(BigInt(periodic_points(params, k)) <=
                              closed_walk_trace(graph, k));
                    }
                }
            }
        }
    }

    SUBCASE("guards") {
        CHECK_THROWS_AS(periodic_points(GraphParams(3, 2, 2), 0), std::invalid_argument);
        CHECK_THROWS_AS(periodic_points(GraphParams(3, 2, 2), 1, Limits{4, 0}),
                        std::domain_error);
    }
}

TEST_CASE("perturbed counts respect the trivial ceiling") {
    for (uint64_t r : {1ull, 2ull}) {
        for (uint64_t n : {1ull, 2ull, 3ull}) {
            const GraphParams params(3, n, 2);
            const Census census =
                closed_walk_trace_all(build_perturbed_graph({params, r}), 3);
            for (uint64_t k = 1; k <= 3; ++k) {
                const BigInt ceiling = bigint_pow(BigInt((2 * r + 1) * (params.p - 1)), k) *
                                       BigInt(params.modulus);
                CHECK(census.counts.at(k) <= ceiling);
            }
        }
    }
}

TEST_CASE("census JSON uses decimal strings") {
    const Census census = closed_walk_trace_all(build_graph(GraphParams(3, 1, 2)), 2);
    const auto j = census_json(census);
    CHECK(j["params"]["p"] == 3);
    CHECK(j["params"]["r"] == 0);
    CHECK(j["method"] == "brute");
    CHECK(j["counts"]["1"] == "2");
    CHECK(j["counts"]["2"] == "4");
}

}  // TEST_SUITE
