#pragma once

#include <boost/dynamic_bitset.hpp>
#include <map>
#include <optional>
#include <vector>

#include "summand/ring.hpp"
#include "summand/verdict.hpp"

namespace summand {

using BitSet = boost::dynamic_bitset<>;

std::vector<int> to_list(const BitSet& b);

// One-sided ideal of a finite ring, stored as a bit-vector over the carrier.
struct Ideal {
    RingHandle ring;
    Side side = Side::right;
    BitSet members;

    bool contains(int a) const { return members.test(static_cast<std::size_t>(a)); }
    std::size_t count() const { return members.count(); }
    std::vector<int> member_list() const { return to_list(members); }
};

// All elements with e*e = e, ascending. Always contains zero and one.
std::vector<int> idempotents(const FiniteRing& r);

// gR (right) or Rg (left); principal ideals are already additively closed.
Ideal principal_ideal(const RingHandle& r, Side side, int g);

// Smallest side-ideal containing gens: orbit of each generator, then
// additive closure by worklist.
Ideal ideal_generated(const RingHandle& r, Side side, const std::vector<int>& gens);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

// side == left:  l(X) = {r : r*x = 0 for all x in X}, a left ideal.
// side == right: r(X) = {r : x*r = 0 for all x in X}, a right ideal.
Ideal annihilator(const RingHandle& r, Side side, const std::vector<int>& xs);

// Least idempotent generating I on its side, or absent. Absent iff I is not
// a direct summand of the regular module on that side.
std::optional<int> summand_witness(const Ideal& ideal);

// Complete list of side-ideals, breadth-first closure over single-element
// extensions; sorted by member bit-vector. Guarded by size_cap.
std::vector<Ideal> enumerate_ideals(const RingHandle& r, Side side, int size_cap);

// Precomputed summand data for one ring side: the idempotents, each
// principal ideal, and a set -> least-generator map. All pair scans in the
// property checkers run against this index.
struct SummandIndex {
    RingHandle ring;
    Side side = Side::right;
    std::vector<int> idems;
    std::vector<BitSet> principal;            // aligned with idems
    std::map<BitSet, int> least_generator;    // ideal set -> least idempotent
    std::vector<BitSet> summands;             // distinct principal ideals, sorted
    std::vector<int> summand_of;              // idempotent position -> summand position

    std::optional<int> find(const BitSet& set) const {
        auto it = least_generator.find(set);
        if (it == least_generator.end()) return std::nullopt;
        return it->second;
    }
};

SummandIndex build_summand_index(const RingHandle& r, Side side);

}  // namespace summand
