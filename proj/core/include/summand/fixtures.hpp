#pragma once

#include <string>
#include <vector>

#include "summand/ring.hpp"
#include "summand/verdict.hpp"

namespace summand {

struct FixtureInfo {
    std::string name;
    std::string summary;  // one-line expected outcome
};

struct FixtureOutcome {
    std::string name;
    RingHandle subject;                  // the ring the assertions are about
    std::vector<std::string> trace;      // construction steps, sizes, derived counts
    std::vector<CheckRecord> assertions;

    bool passed() const {
        for (const auto& a : assertions)
            if (a.status == CheckStatus::failed) return false;
        return true;
    }
};

const std::vector<FixtureInfo>& fixture_catalog();
bool is_fixture(const std::string& name);

// The ring a fixture is about; for the endomorphism fixture this constructs
// the whole tower and returns the resulting endomorphism ring.
RingHandle fixture_ring(const std::string& name, const Caps& caps = {});

// Runs the fixture's expected-value assertions.
FixtureOutcome run_fixture(const std::string& name, const Caps& caps = {});

}  // namespace summand
