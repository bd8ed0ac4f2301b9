#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace summand {

// Hard limits for the exhaustive kernels. Checks that would exceed a cap
// throw CapExceeded; suites convert that into a "skipped" record instead of
// silently narrowing the universe they scanned.
struct Caps {
    int size = 4096;             // max carrier size for ring/module construction
    int ideals = 16;             // max ring size for complete ideal enumeration
    std::int64_t hom = 1 << 20;  // max candidate assignments in hom enumeration
    int c2 = 64;                 // max carrier size for C2 decision
};

struct DescriptorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Side { left, right };

inline Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

enum class CheckStatus { passed, failed, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::passed: return "passed";
        case CheckStatus::failed: return "failed";
        default: return "skipped";
    }
}

// Structured counterexample (or certificate). `elems` holds the elements the
// failing instance is built from, in the order the property scans them;
// `members` carries a whole ideal/submodule when one is part of the instance.
struct Witness {
    std::vector<int> elems;
    std::vector<std::string> labels;
    std::vector<int> members;
    std::string note;
};

struct PropertyVerdict {
    std::string property;
    std::optional<Side> side;  // empty for side-free properties
    std::string method;
    bool holds = true;
    std::optional<Witness> witness;
};

struct CheckRecord {
    std::string id;
    std::string subject;
    CheckStatus status = CheckStatus::passed;
    std::string universe;  // what was scanned, e.g. "144 idempotent pairs"
    std::string detail;    // counterexample or skip reason
};

struct TheoremReport {
    std::string subject;
    std::vector<CheckRecord> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::failed) return false;
        return true;
    }
    int count(CheckStatus s) const {
        int n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }
};

inline constexpr const char* kVersion = "0.1.0";

}  // namespace summand
