#pragma once

#include <vector>

#include "summand/ideal.hpp"
#include "summand/ring.hpp"

namespace summand::testing {

// Test-side validator, independent of the Ideal construction paths.
inline bool satisfies_ideal_axioms(const FiniteRing& r, Side side, const BitSet& members) {
    if (!members.test(static_cast<std::size_t>(r.zero))) return false;
    const auto list = to_list(members);
    for (int x : list) {
        for (int y : list)
            if (!members.test(static_cast<std::size_t>(r.add_at(x, y)))) return false;
        for (int s = 0; s < r.size; ++s) {
            const int p = side == Side::right ? r.mul_at(x, s) : r.mul_at(s, x);
            if (!members.test(static_cast<std::size_t>(p))) return false;
        }
    }
    return true;
}

// Brute-force oracle: every subset of the carrier, tested against the ideal
// axioms directly. Only usable for rings with at most 16 elements.
inline std::vector<BitSet> all_ideals_by_subsets(const FiniteRing& r, Side side) {
    std::vector<BitSet> out;
    const auto n = static_cast<std::size_t>(r.size);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        BitSet members(n);
        for (std::size_t i = 0; i < n; ++i)
            if (bits & (1u << i)) members.set(i);
        if (satisfies_ideal_axioms(r, side, members)) out.push_back(members);
    }
    return out;
}

// Complement-search oracle for the summand decision: N is a summand of the
// regular module iff some ideal T has N+T = R and N o T = 0. Independent of
// the idempotent-generator route.
inline bool has_complement(const FiniteRing& r, const BitSet& members,
                           const std::vector<BitSet>& ideals) {
    for (const auto& t : ideals) {
        const BitSet meet = members & t;
        if (!(meet.count() == 1 && meet.test(static_cast<std::size_t>(r.zero)))) continue;
        if (members.count() * t.count() != static_cast<std::size_t>(r.size)) continue;
        BitSet sum(static_cast<std::size_t>(r.size));
        for (auto x = members.find_first(); x != BitSet::npos; x = members.find_next(x))
            for (auto y = t.find_first(); y != BitSet::npos; y = t.find_next(y))
                sum.set(static_cast<std::size_t>(
                    r.add_at(static_cast<int>(x), static_cast<int>(y))));
        if (sum.count() == static_cast<std::size_t>(r.size)) return true;
    }
    return false;
}

inline BitSet bits_of(int size, const std::vector<int>& members) {
    BitSet out(static_cast<std::size_t>(size));
    for (int m : members) out.set(static_cast<std::size_t>(m));
    return out;
}

}  // namespace summand::testing
