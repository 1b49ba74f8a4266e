#pragma once

#include "gk/integer.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gk {

inline constexpr const char* kVersion = "1.0.0";

enum class ClaimStatus { pass, fail, warn, skip, not_applicable };

inline std::string status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::warn: return "warn";
        case ClaimStatus::skip: return "skip";
        case ClaimStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

struct ClaimOutcome {
    ClaimStatus status = ClaimStatus::fail;
    std::string evidence;
};

/// One machine-checkable assertion, tied to its citation anchor. `expected`
/// is warn for the known index-swap discrepancy and pass everywhere else.
struct Claim {
    std::string id;
    std::string paper_ref;
    std::string quote;
    std::string description;
    ClaimStatus expected = ClaimStatus::pass;
    std::function<ClaimOutcome()> run;
};

struct ClaimRecord {
    std::string id;
    std::string paper_ref;
    std::string quote;
    std::string description;
    ClaimStatus status = ClaimStatus::skip;
    std::string evidence;
};

const std::vector<Claim>& claim_registry();  // defined in claims.hpp

/// Executes every registered claim whose id starts with the filter, in id
/// order. A claim that throws is recorded as skip, never aborts the suite.
inline std::vector<ClaimRecord> run_claims(std::string_view filter = "") {
    std::vector<ClaimRecord> records;
    for (const Claim& c : claim_registry()) {
        if (c.id.rfind(filter, 0) != 0) continue;
        ClaimRecord rec{c.id, c.paper_ref, c.quote, c.description, ClaimStatus::skip, ""};
        try {
            ClaimOutcome out = c.run();
            rec.status = out.status;
            rec.evidence = std::move(out.evidence);
        } catch (const std::exception& e) {
            rec.status = ClaimStatus::skip;
            rec.evidence = std::string("execution error: ") + e.what();
        }
        records.push_back(std::move(rec));
    }
    return records;
}

struct ReportSummary {
    int pass = 0, fail = 0, warn = 0, skip = 0, not_applicable = 0;
};

inline ReportSummary summarize(const std::vector<ClaimRecord>& records) {
    ReportSummary s;
    for (const auto& r : records) {
        switch (r.status) {
            case ClaimStatus::pass: ++s.pass; break;
            case ClaimStatus::fail: ++s.fail; break;
            case ClaimStatus::warn: ++s.warn; break;
            case ClaimStatus::skip: ++s.skip; break;
            case ClaimStatus::not_applicable: ++s.not_applicable; break;
        }
    }
    return s;
}

/// 0 when nothing failed (warn does not fail), 1 otherwise.
inline int exit_status(const std::vector<ClaimRecord>& records) {
    return summarize(records).fail > 0 ? 1 : 0;
}

/// Comparable body: no timestamps, fixed ordering. The header (version and
/// timestamp) is added only when requested.
inline nlohmann::json report_json(const std::vector<ClaimRecord>& records, bool with_header = true) {
    nlohmann::json j;
    if (with_header) {
        std::ostringstream ts;
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        ts << now;
        j["header"] = {{"version", kVersion}, {"timestamp", ts.str()}};
    }
    j["claims"] = nlohmann::json::array();
    for (const auto& r : records)
        j["claims"].push_back({{"id", r.id},
                               {"paper_ref", r.paper_ref},
                               {"quote", r.quote},
                               {"description", r.description},
                               {"status", status_name(r.status)},
                               {"evidence", r.evidence}});
    const ReportSummary s = summarize(records);
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"warn", s.warn}, {"skip", s.skip}};
    return j;
}

inline std::string report_text(const std::vector<ClaimRecord>& records) {
    std::ostringstream out;
    std::size_t width = 0;
    for (const auto& r : records) width = std::max(width, r.id.size());
    for (const auto& r : records) {
        out << r.id << std::string(width - r.id.size() + 2, ' ') << status_name(r.status);
        if (!r.evidence.empty()) out << "  [" << r.evidence << "]";
        out << "\n";
    }
    const ReportSummary s = summarize(records);
    out << "total " << records.size() << ": " << s.pass << " pass, " << s.fail << " fail, " << s.warn
        << " warn, " << s.skip << " skip\n";
    return out.str();
}

}  // namespace gk
