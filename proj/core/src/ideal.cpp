#include "summand/ideal.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace summand {

std::vector<int> to_list(const BitSet& b) {
    std::vector<int> out;
    out.reserve(b.count());
    for (auto i = b.find_first(); i != BitSet::npos; i = b.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

namespace {

void require_same(const Ideal& a, const Ideal& b) {
    if (a.ring.get() != b.ring.get())
        throw std::invalid_argument("ideal operation: ring mismatch");
    if (a.side != b.side) throw std::invalid_argument("ideal operation: side mismatch");
}

// Sum of two additive subgroups, assembled coset by coset.
BitSet subgroup_sum(const FiniteRing& r, const BitSet& a, const BitSet& b) {
    BitSet out = a;
    const auto alist = to_list(a);
    for (auto y = b.find_first(); y != BitSet::npos; y = b.find_next(y)) {
        if (out.test(y)) continue;
        for (int x : alist) out.set(static_cast<std::size_t>(r.add_at(x, static_cast<int>(y))));
    }
    return out;
}

BitSet orbit(const FiniteRing& r, Side side, int g) {
    BitSet out(static_cast<std::size_t>(r.size));
    if (side == Side::right) {
        for (int x = 0; x < r.size; ++x) out.set(static_cast<std::size_t>(r.mul_at(g, x)));
    } else {
        for (int x = 0; x < r.size; ++x) out.set(static_cast<std::size_t>(r.mul_at(x, g)));
    }
    return out;
}

}  // namespace

std::vector<int> idempotents(const FiniteRing& r) {
    std::vector<int> out;
    for (int a = 0; a < r.size; ++a)
        if (r.is_idempotent(a)) out.push_back(a);
    return out;
}

Ideal principal_ideal(const RingHandle& r, Side side, int g) {
    return Ideal{r, side, orbit(*r, side, g)};
}

Ideal ideal_generated(const RingHandle& r, Side side, const std::vector<int>& gens) {
    BitSet members(static_cast<std::size_t>(r->size));
    members.set(static_cast<std::size_t>(r->zero));
    for (int g : gens) members |= orbit(*r, side, g);

    // Worklist additive closure; the seed is negation-closed, so the result
    // is a subgroup.
    std::deque<int> work(members.count());
    {
        std::size_t i = 0;
        for (auto b = members.find_first(); b != BitSet::npos; b = members.find_next(b))
            work[i++] = static_cast<int>(b);
    }
    std::vector<int> known(work.begin(), work.end());
    while (!work.empty()) {
        const int x = work.front();
        work.pop_front();
        for (std::size_t i = 0; i < known.size(); ++i) {
            const int s = r->add_at(x, known[i]);
            if (!members.test(static_cast<std::size_t>(s))) {
                members.set(static_cast<std::size_t>(s));
                known.push_back(s);
                work.push_back(s);
            }
        }
    }
    return Ideal{r, side, std::move(members)};
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same(a, b);
    return Ideal{a.ring, a.side, subgroup_sum(*a.ring, a.members, b.members)};
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    require_same(a, b);
    return Ideal{a.ring, a.side, a.members & b.members};
}

Ideal annihilator(const RingHandle& r, Side side, const std::vector<int>& xs) {
    BitSet members(static_cast<std::size_t>(r->size));
    for (int a = 0; a < r->size; ++a) {
        bool kills = true;
        for (int x : xs) {
            const int p = side == Side::left ? r->mul_at(a, x) : r->mul_at(x, a);
            if (p != r->zero) {
                kills = false;
                break;
            }
        }
        if (kills) members.set(static_cast<std::size_t>(a));
    }
    return Ideal{r, side, std::move(members)};
}

std::optional<int> summand_witness(const Ideal& ideal) {
    const auto& r = *ideal.ring;
    for (int e = 0; e < r.size; ++e) {
        if (!r.is_idempotent(e)) continue;
        if (orbit(r, ideal.side, e) == ideal.members) return e;
    }
    return std::nullopt;
}

std::vector<Ideal> enumerate_ideals(const RingHandle& r, Side side, int size_cap) {
    if (r->size > size_cap)
        throw CapExceeded("enumerate_ideals: ring size " + std::to_string(r->size) +
                          " exceeds cap " + std::to_string(size_cap));

    BitSet zero_ideal(static_cast<std::size_t>(r->size));
    zero_ideal.set(static_cast<std::size_t>(r->zero));

    std::set<BitSet> seen{zero_ideal};
    std::deque<BitSet> work{zero_ideal};
    while (!work.empty()) {
        BitSet current = work.front();
        work.pop_front();
        for (int x = 0; x < r->size; ++x) {
            if (current.test(static_cast<std::size_t>(x))) continue;
            BitSet extended = subgroup_sum(*r, current, orbit(*r, side, x));
            if (seen.insert(extended).second) work.push_back(extended);
        }
    }

    std::vector<Ideal> out;
    out.reserve(seen.size());
    for (const auto& members : seen) out.push_back(Ideal{r, side, members});
    return out;
}

SummandIndex build_summand_index(const RingHandle& r, Side side) {
    SummandIndex idx;
    idx.ring = r;
    idx.side = side;
    idx.idems = idempotents(*r);
    idx.principal.reserve(idx.idems.size());
    for (int e : idx.idems) {
        BitSet set = orbit(*r, side, e);
        idx.least_generator.emplace(set, e);  // first insert wins: least e
        idx.principal.push_back(std::move(set));
    }
    idx.summands.reserve(idx.least_generator.size());
    std::map<BitSet, int> position;
    for (const auto& [set, gen] : idx.least_generator) {
        position.emplace(set, static_cast<int>(idx.summands.size()));
        idx.summands.push_back(set);
    }
    idx.summand_of.reserve(idx.idems.size());
    for (const auto& set : idx.principal) idx.summand_of.push_back(position.at(set));
    return idx;
}

}  // namespace summand
