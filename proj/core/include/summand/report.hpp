#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "summand/ring.hpp"
#include "summand/verdict.hpp"

namespace summand {

// One verdict row of a report. `status` is "decided" or "skipped";
// skipped rows carry the reason instead of a result.
struct VerdictEntry {
    PropertyVerdict verdict;
    bool skipped = false;
    std::string skip_reason;
};

nlohmann::json ring_summary(const FiniteRing& r);
nlohmann::json witness_to_json(const Witness& w);
nlohmann::json verdict_to_json(const VerdictEntry& e);
nlohmann::json check_record_to_json(const CheckRecord& c);

// Assembles the report document: top-level keys "ring", "verdicts",
// "theorems", "timings", "caps", "version". Identical inputs produce an
// identical document except for the timings block.
nlohmann::json make_report(const FiniteRing& ring, const std::vector<VerdictEntry>& verdicts,
                           const std::vector<TheoremReport>& theorems,
                           const nlohmann::json& timings, const Caps& caps);

std::string render_markdown(const nlohmann::json& report);

}  // namespace summand
