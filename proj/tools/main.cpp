// Command-line front door: graph inspection, exact censuses, claim verifiers,
// and parameter sweeps with JSON/CSV output. Exit codes are a stable contract:
// 0 = pass, 1 = usage or parameter error, 2 = claim violation.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expgraph/census.hpp"
#include "expgraph/graph.hpp"
#include "expgraph/ntheory.hpp"
#include "expgraph/report.hpp"
#include "expgraph/verify.hpp"

namespace {

using namespace expgraph;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output path: " + path);
    file << text;
}

std::string brace_set(const std::vector<uint32_t>& values) {
    std::string s = "{";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(values[i]);
    }
    return s + "}";
}

struct NeighborsOpts {
    uint64_t p = 0, n = 0, q = 0, x = 0;
};

int run_neighbors(const NeighborsOpts& o) {
    const GraphParams params(o.p, o.n, o.q);
    const auto closed = out_neighbors_closed_form(params, o.x);
    const auto oracle = out_neighbors_oracle(params, o.x);
    if (closed == oracle) {
        std::cout << brace_set(closed) << " (oracle agrees)\n";
        return kExitPass;
    }
    std::cout << "closed-form " << brace_set(closed) << " vs oracle " << brace_set(oracle)
              << " (DISAGREEMENT)\n";
    return kExitViolation;
}

struct CensusOpts {
    uint64_t p = 0, n = 0, q = 0, k_max = 0, r = 0;
    uint64_t max_vertices = 100000;
    std::string method;  // empty = both for r = 0, brute otherwise
    std::string out;
};

std::string resolve_method(const std::string& requested, uint64_t r) {
    const std::string method = requested.empty() ? (r == 0 ? "both" : "brute") : requested;
    if (r > 0 && method != "brute") {
        throw std::invalid_argument(
            "reduced counting is defined for unperturbed graphs only (r = 0)");
    }
    return method;
}

int run_census(const CensusOpts& o) {
    const GraphParams params(o.p, o.n, o.q);
    const Limits limits{o.max_vertices, 0};
    const std::string method = resolve_method(o.method, o.r);

    Census census{params, o.r, CensusMethod::brute, {}};
    bool disagreement = false;
    if (method == "reduced") {
        census = reduced_trace_all(params, o.k_max);
    } else {
        const ExpGraph graph = o.r > 0 ? build_perturbed_graph({params, o.r}, limits)
                                       : build_graph(params, limits);
        census = closed_walk_trace_all(graph, o.k_max, limits);
        if (method == "both") {
            const Census reduced = reduced_trace_all(params, o.k_max);
            if (reduced.counts == census.counts) {
                std::cerr << "reduced census agrees with brute census\n";
            } else {
                disagreement = true;
                std::cerr << "census disagreement: brute and reduced methods differ\n";
            }
        }
    }
    write_output(o.out, census_json(census).dump(2) + "\n");
    return disagreement ? kExitViolation : kExitPass;
}

struct PeriodicOpts {
    uint64_t p = 0, n = 0, q = 0, k_max = 0;
    uint64_t max_vertices = 100000;
    std::string format = "text";
    std::string out;
};

int run_periodic(const PeriodicOpts& o) {
    const GraphParams params(o.p, o.n, o.q);
    const Limits limits{o.max_vertices, 0};
    std::vector<uint64_t> counts;
    for (uint64_t k = 1; k <= o.k_max; ++k) counts.push_back(periodic_points(params, k, limits));

    std::string text;
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["params"] = {{"p", o.p}, {"n", o.n}, {"q", o.q}};
        nlohmann::ordered_json per_k = nlohmann::ordered_json::object();
        for (uint64_t k = 1; k <= o.k_max; ++k) {
            per_k[std::to_string(k)] = std::to_string(counts[k - 1]);
        }
        j["counts"] = std::move(per_k);
        text = j.dump(2) + "\n";
    } else {
        for (uint64_t k = 1; k <= o.k_max; ++k) {
            text += "k=" + std::to_string(k) + ": " + std::to_string(counts[k - 1]) + "\n";
        }
    }
    write_output(o.out, text);
    return kExitPass;
}

struct VerifyOpts {
    uint64_t p = 0, n = 0, q = 0, r = 0;
    uint64_t k_max = 0, n_max = 0;
    uint64_t trials = 100, seed = 1;
    uint64_t max_vertices = 100000;
    std::string out;
};

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& out,
                 bool as_array) {
    std::string text;
    if (as_array) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& report : reports) arr.push_back(report_json(report));
        text = arr.dump(2) + "\n";
    } else {
        text = report_json(reports.front()).dump(2) + "\n";
    }
    write_output(out, text);
    const bool violated = std::any_of(reports.begin(), reports.end(),
                                      [](const VerificationReport& r) { return !r.passed(); });
    return violated ? kExitViolation : kExitPass;
}

int run_verify_thm1(const VerifyOpts& o) {
    const GraphParams params(o.p, o.n, o.q);
    return emit_reports({verify_theorem1(params, o.k_max, {o.max_vertices, 0})}, o.out, false);
}

int run_verify_corollary(const VerifyOpts& o) {
    const GraphParams params(o.p, o.n, o.q);
    return emit_reports({verify_corollary(params, o.k_max, {o.max_vertices, 0})}, o.out, false);
}

int run_verify_lemma2(const VerifyOpts& o) {
    const GraphParams params(o.p, o.n, o.q);
    return emit_reports({verify_lemma2(params, {o.max_vertices, 0})}, o.out, false);
}

int run_verify_thm2(const VerifyOpts& o) {
    return emit_reports(verify_theorem2(o.p, o.q, o.r, o.n_max, o.k_max, {o.max_vertices, 0}),
                        o.out, true);
}

int run_verify_lemma1(const VerifyOpts& o) {
    return emit_reports({verify_lemma1_suite(o.trials, o.seed)}, o.out, false);
}

struct SweepOpts {
    std::vector<uint64_t> p_list, q_list;
    uint64_t n_min = 1, n_max = 0, k_max = 0, r = 0;
    uint64_t max_vertices = 100000;
    std::string method;
    std::string format = "csv";
    std::string out;
};

int run_sweep(SweepOpts o) {
    const std::string method = resolve_method(o.method, o.r);
    const Limits limits{o.max_vertices, 0};

    std::sort(o.p_list.begin(), o.p_list.end());
    o.p_list.erase(std::unique(o.p_list.begin(), o.p_list.end()), o.p_list.end());
    std::sort(o.q_list.begin(), o.q_list.end());
    o.q_list.erase(std::unique(o.q_list.begin(), o.q_list.end()), o.q_list.end());

    struct Row {
        uint64_t p, n, q, r, k;
        BigInt count, thm1_bound, ord_pow, thm2_bound;
        bool thm1_ok, thm2_ok;
    };
    std::vector<Row> rows;
    bool disagreement = false;

    for (uint64_t p : o.p_list) {
        for (uint64_t n = o.n_min; n <= o.n_max; ++n) {
            for (uint64_t q : o.q_list) {
                if (q % p == 0) continue;  // gcd(q, p) = 1 filter
                const GraphParams params(p, n, q);
                Census census{params, o.r, CensusMethod::brute, {}};
                if (method == "reduced") {
                    census = reduced_trace_all(params, o.k_max);
                } else {
                    const ExpGraph graph = o.r > 0
                                               ? build_perturbed_graph({params, o.r}, limits)
                                               : build_graph(params, limits);
                    census = closed_walk_trace_all(graph, o.k_max, limits);
                    if (method == "both" &&
                        reduced_trace_all(params, o.k_max).counts != census.counts) {
                        disagreement = true;
                        std::cerr << "census disagreement at p=" << p << " n=" << n
                                  << " q=" << q << "\n";
                    }
                }
                const uint64_t ord = multiplicative_order(q, p, 1);
                const BigInt thm2_base = BigInt(2) * p * (2 * o.r + 1);
                for (uint64_t k = 1; k <= o.k_max; ++k) {
                    Row row{p, n, q, o.r, k, census.counts.at(k),
                            bigint_pow(BigInt(p - 1), k), bigint_pow(BigInt(ord), k),
                            BigInt(p) + BigInt(o.r) * p * bigint_pow(thm2_base, k) * (n - 1),
                            false, false};
                    row.thm1_ok = row.count <= row.thm1_bound;
                    row.thm2_ok = row.count <= row.thm2_bound;
                    rows.push_back(std::move(row));
                }
            }
        }
    }

    std::string text;
    if (o.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Row& row : rows) {
            arr.push_back({{"p", row.p},
                           {"n", row.n},
                           {"q", row.q},
                           {"r", row.r},
                           {"k", row.k},
                           {"count", to_decimal(row.count)},
                           {"thm1_bound", to_decimal(row.thm1_bound)},
                           {"ord_pow", to_decimal(row.ord_pow)},
                           {"thm2_bound", to_decimal(row.thm2_bound)},
                           {"thm1_ok", row.thm1_ok},
                           {"thm2_ok", row.thm2_ok}});
        }
        text = arr.dump(2) + "\n";
    } else {
        text = "p,n,q,r,k,count,thm1_bound,ord_pow,thm2_bound,thm1_ok,thm2_ok\n";
        for (const Row& row : rows) {
            text += std::to_string(row.p) + ',' + std::to_string(row.n) + ',' +
                    std::to_string(row.q) + ',' + std::to_string(row.r) + ',' +
                    std::to_string(row.k) + ',' + to_decimal(row.count) + ',' +
                    to_decimal(row.thm1_bound) + ',' + to_decimal(row.ord_pow) + ',' +
                    to_decimal(row.thm2_bound) + ',' + (row.thm1_ok ? "1" : "0") + ',' +
                    (row.thm2_ok ? "1" : "0") + '\n';
        }
    }
    write_output(o.out, text);
    return disagreement ? kExitViolation : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponentiation-graph census and claim verifier"};
    app.require_subcommand(1);
    int code = kExitPass;

    NeighborsOpts nb;
    auto* neighbors = app.add_subcommand(
        "neighbors", "print the closed-form and coset-oracle out-neighbor sets of a vertex");
    neighbors->add_option("--p", nb.p, "odd prime p")->required();
    neighbors->add_option("--n", nb.n, "exponent n >= 1")->required();
    neighbors->add_option("--q", nb.q, "base q, gcd(q, p) = 1")->required();
    neighbors->add_option("--x", nb.x, "vertex in [0, p^n)")->required();
    neighbors->callback([&] { code = run_neighbors(nb); });

    CensusOpts co;
    auto* census = app.add_subcommand("census", "exact closed-walk counts per length k");
    census->add_option("--p", co.p)->required();
    census->add_option("--n", co.n)->required();
    census->add_option("--q", co.q)->required();
    census->add_option("--k-max", co.k_max, "count walks of length 1..k_max")->required();
    census->add_option("--r", co.r, "perturbation radius (default 0)");
    census->add_option("--method", co.method, "brute | reduced | both (default: both, or brute when r > 0)")
        ->check(CLI::IsMember({"brute", "reduced", "both"}));
    census->add_option("--out", co.out, "write JSON here instead of stdout");
    census->add_option("--max-vertices", co.max_vertices, "brute-force guard override");
    census->callback([&] { code = run_census(co); });

    PeriodicOpts po;
    auto* periodic = app.add_subcommand("periodic", "k-periodic points of f(x) = q^x mod p^n");
    periodic->add_option("--p", po.p)->required();
    periodic->add_option("--n", po.n)->required();
    periodic->add_option("--q", po.q)->required();
    periodic->add_option("--k-max", po.k_max)->required();
    periodic->add_option("--format", po.format)->check(CLI::IsMember({"text", "json"}));
    periodic->add_option("--out", po.out);
    periodic->add_option("--max-vertices", po.max_vertices);
    periodic->callback([&] { code = run_periodic(po); });

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "run a claim verifier and emit its report");
    verify->require_subcommand(1);

    auto* thm1 = verify->add_subcommand("thm1", "census vs (p-1)^k, equality when q is primitive mod p");
    thm1->add_option("--p", vo.p)->required();
    thm1->add_option("--n", vo.n)->required();
    thm1->add_option("--q", vo.q)->required();
    thm1->add_option("--k-max", vo.k_max)->required();
    thm1->add_option("--max-vertices", vo.max_vertices);
    thm1->add_option("--out", vo.out);
    thm1->callback([&] { code = run_verify_thm1(vo); });

    auto* thm2 = verify->add_subcommand(
        "thm2", "perturbed censuses vs the stated bound and the per-level recurrence");
    thm2->add_option("--p", vo.p)->required();
    thm2->add_option("--q", vo.q)->required();
    thm2->add_option("--r", vo.r)->required();
    thm2->add_option("--n-max", vo.n_max)->required();
    thm2->add_option("--k-max", vo.k_max)->required();
    thm2->add_option("--max-vertices", vo.max_vertices);
    thm2->add_option("--out", vo.out);
    thm2->callback([&] { code = run_verify_thm2(vo); });

    auto* corollary = verify->add_subcommand("corollary", "periodic points vs (p-1)^k");
    corollary->add_option("--p", vo.p)->required();
    corollary->add_option("--n", vo.n)->required();
    corollary->add_option("--q", vo.q)->required();
    corollary->add_option("--k-max", vo.k_max)->required();
    corollary->add_option("--max-vertices", vo.max_vertices);
    corollary->add_option("--out", vo.out);
    corollary->callback([&] { code = run_verify_corollary(vo); });

    auto* lemma1 = verify->add_subcommand(
        "lemma1", "block-constant trace identity over seeded random families");
    lemma1->add_option("--trials", vo.trials, "families per configuration (default 100)");
    lemma1->add_option("--seed", vo.seed, "base seed (default 1)");
    lemma1->add_option("--out", vo.out);
    lemma1->callback([&] { code = run_verify_lemma1(vo); });

    auto* lemma2 = verify->add_subcommand("lemma2", "block decomposition structure checks");
    lemma2->add_option("--p", vo.p)->required();
    lemma2->add_option("--n", vo.n)->required();
    lemma2->add_option("--q", vo.q)->required();
    lemma2->add_option("--max-vertices", vo.max_vertices);
    lemma2->add_option("--out", vo.out);
    lemma2->callback([&] { code = run_verify_lemma2(vo); });

    SweepOpts so;
    auto* sweep = app.add_subcommand("sweep", "parameter sweep table (CSV or JSON)");
    sweep->add_option("--p-list", so.p_list, "comma-separated primes")->required()->delimiter(',');
    sweep->add_option("--q-list", so.q_list, "comma-separated bases")->required()->delimiter(',');
    sweep->add_option("--n-min", so.n_min, "lowest exponent (default 1)");
    sweep->add_option("--n-max", so.n_max, "highest exponent")->required();
    sweep->add_option("--k-max", so.k_max)->required();
    sweep->add_option("--r", so.r, "perturbation radius (default 0)");
    sweep->add_option("--method", so.method, "brute | reduced | both (default: both, or brute when r > 0)")
        ->check(CLI::IsMember({"brute", "reduced", "both"}));
    sweep->add_option("--format", so.format, "csv | json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", so.out);
    sweep->add_option("--max-vertices", so.max_vertices);
    sweep->callback([&] { code = run_sweep(so); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int parse_code = app.exit(e);
        return parse_code == 0 ? kExitPass : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return code;
}
