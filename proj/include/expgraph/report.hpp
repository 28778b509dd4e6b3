#pragma once

// Machine-readable pass/violation records shared by the structure checkers
// and the claim verifiers. A report never masks a violation: every comparison
// is kept as an exact-integer row and the verdict is the conjunction.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "expgraph/bigint.hpp"

namespace expgraph {

enum class Verdict { pass, violation };

struct ReportRow {
    uint64_t index = 0;  // k, n, or row/check ordinal depending on the claim
    BigInt observed;
    BigInt bound;
    bool satisfied = false;
};

struct VerificationReport {
    // One of: thm1, corollary, lemma2, thm2_stated, thm2_recurrence,
    // fact_i, fact_ii, lemma1.
    std::string claim;
    std::vector<std::pair<std::string, uint64_t>> params;
    std::vector<ReportRow> rows;
    Verdict verdict = Verdict::pass;
    std::string notes;

    void add_row(uint64_t index, BigInt observed, BigInt bound, bool satisfied) {
        rows.push_back({index, std::move(observed), std::move(bound), satisfied});
    }

    // verdict = pass iff every row is satisfied.
    void finalize() {
        verdict = Verdict::pass;
        for (const auto& r : rows) {
            if (!r.satisfied) {
                verdict = Verdict::violation;
                break;
            }
        }
    }

    bool passed() const { return verdict == Verdict::pass; }
};

// {claim, params, rows: [{index, observed, bound, satisfied}], verdict, notes}
// with observed/bound as decimal strings.
nlohmann::ordered_json report_json(const VerificationReport& report);

}  // namespace expgraph
