#pragma once

#include <optional>
#include <string>

#include "summand/ideal.hpp"
#include "summand/ring.hpp"
#include "summand/verdict.hpp"

namespace summand {

enum class SspMethod { definitional, ef_criterion };

inline const char* to_string(SspMethod m) {
    return m == SspMethod::definitional ? "definitional" : "ef-criterion";
}

// Least b with a*b*a = a, or absent.
std::optional<int> is_regular_element(const FiniteRing& r, int a);

// Every element regular; witness = least non-regular element.
PropertyVerdict is_regular_ring(const FiniteRing& r);

// Every idempotent central; witness = least violating (e, r).
PropertyVerdict is_abelian(const FiniteRing& r);

// definitional: the sum of every pair of principal summands splits.
// ef_criterion: the principal ideal of e*f splits, for every idempotent pair.
PropertyVerdict check_ssp(const RingHandle& r, Side side, SspMethod method);

// Every pairwise intersection of principal summands splits.
PropertyVerdict check_sip(const RingHandle& r, Side side);

// Every pairwise sum of principal summands with zero intersection splits.
PropertyVerdict check_c3(const RingHandle& r, Side side);

// Every side-ideal isomorphic (as a module) to a summand is a summand.
// Requires complete ideal enumeration; gated by caps.c2.
PropertyVerdict check_c2(const RingHandle& r, Side side, const Caps& caps = {});

struct RadicalResult {
    BitSet radical;
    bool is_semisimple = false;
};

// Radical via quasi-invertibility: {a : 1 - r*a is a unit for all r}.
// Verified two-sided; is_semisimple iff the radical is zero.
RadicalResult semisimplicity(const FiniteRing& r);

// Runs the cross-check battery on one ring: sum decomposition, principal
// summand criteria, the four-way SSP agreement, the C3/SIP conjunction,
// regular/abelian implications, corner inheritance, the size-2 matrix ring
// equivalence, and the annihilator identity.
TheoremReport theorem_suite(const RingHandle& r, const Caps& caps = {});

// Re-runs the single failing instance a verdict's witness describes.
// Returns true when the witness still fails (i.e. the verdict reproduces).
bool recheck_verdict(const RingHandle& r, const PropertyVerdict& v, const Caps& caps = {});

// theorem_suite plus the module lemma suite over the free modules of rank 1
// and (when it fits the caps) rank 2. This is the whole battery the verify
// command runs. When `timings` is given it receives one (label, ms) entry
// per suite.
std::vector<TheoremReport> verify_suites(const RingHandle& r, const Caps& caps = {},
                                         std::vector<std::pair<std::string, double>>* timings =
                                             nullptr);

}  // namespace summand
