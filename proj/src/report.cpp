#include "expgraph/report.hpp"

namespace expgraph {

nlohmann::ordered_json report_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["claim"] = report.claim;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : report.params) params[name] = value;
    j["params"] = std::move(params);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"index", row.index},
                        {"observed", to_decimal(row.observed)},
                        {"bound", to_decimal(row.bound)},
                        {"satisfied", row.satisfied}});
    }
    j["rows"] = std::move(rows);
    j["verdict"] = report.passed() ? "pass" : "violation";
    j["notes"] = report.notes;
    return j;
}

}  // namespace expgraph
