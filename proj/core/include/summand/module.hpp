#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "summand/ideal.hpp"
#include "summand/ring.hpp"
#include "summand/verdict.hpp"

namespace summand {

// Finite right module over a finite ring. Left modules are realized as
// right modules over the opposite ring.
struct FiniteModule {
    RingHandle ring;
    int size = 0;
    std::vector<std::int32_t> add;  // size*size
    int zero = 0;
    std::vector<std::int32_t> act;  // size*ring->size, (x, r) -> x.r
    std::vector<std::string> labels;
    std::string name;
    bool is_free = false;
    int free_rank = 0;

    int add_at(int x, int y) const { return add[static_cast<std::size_t>(x) * size + y]; }
    int act_at(int x, int r) const { return act[static_cast<std::size_t>(x) * ring->size + r]; }
    int neg(int x) const {
        for (int y = 0; y < size; ++y)
            if (add_at(x, y) == zero) return y;
        return zero;
    }
    std::string label(int x) const {
        if (x >= 0 && x < static_cast<int>(labels.size())) return labels[x];
        return std::to_string(x);
    }
};

using ModuleHandle = std::shared_ptr<const FiniteModule>;

ModuleHandle free_module(const RingHandle& r, int n, const Caps& caps = {});
ModuleHandle ideal_module(const Ideal& ideal, const Caps& caps = {});     // right ideals
ModuleHandle quotient_module(const Ideal& ideal, const Caps& caps = {});  // R/I, right ideal
ModuleHandle direct_sum(const ModuleHandle& a, const ModuleHandle& b, const Caps& caps = {});

struct Submodule {
    ModuleHandle parent;
    BitSet members;

    std::size_t count() const { return members.count(); }
    std::vector<int> member_list() const { return to_list(members); }
};

// The submodule set restricted to its own module structure.
ModuleHandle submodule_module(const ModuleHandle& m, const BitSet& members);

AxiomReport validate_module(const FiniteModule& m);

Submodule submodule_generated(const ModuleHandle& m, const std::vector<int>& gens);

struct ModuleMap {
    ModuleHandle source;
    ModuleHandle target;
    std::vector<std::int32_t> table;  // element-wise images

    int apply(int x) const { return table[static_cast<std::size_t>(x)]; }
    bool is_bijective() const;
    BitSet image() const;
};

// Greedy generating set: repeatedly adjoin the least element not yet
// generated. Exposed for tests.
std::vector<int> greedy_generators(const ModuleHandle& m);

// All module homomorphisms M -> N, enumerated over generator images and
// pruned through graph submodules of M (+) N; sorted by image table.
// Throws CapExceeded when |N|^g exceeds caps.hom.
std::vector<ModuleMap> hom_maps(const ModuleHandle& m, const ModuleHandle& n,
                                const Caps& caps = {});

struct EndomorphismRing {
    RingHandle ring;               // table-kind ring over the map list
    ModuleHandle module;
    std::vector<ModuleMap> maps;   // index in `ring` -> map
};

// Pointwise addition, composition as multiplication: (f*g)(x) = f(g(x)).
EndomorphismRing endomorphism_ring(const ModuleHandle& m, const Caps& caps = {});

// Least bijective hom M -> N, or absent. Sizes must match.
std::optional<ModuleMap> is_isomorphic(const ModuleHandle& m, const ModuleHandle& n,
                                       const Caps& caps = {});

// Least idempotent endomorphism with image exactly N, or absent.
std::optional<ModuleMap> summand_witness_module(const ModuleHandle& m, const Submodule& n,
                                                const Caps& caps = {});

std::vector<Submodule> enumerate_submodules(const ModuleHandle& m, int size_cap);

enum class ModuleProp { ssp, sip, c2, c3 };

inline const char* to_string(ModuleProp p) {
    switch (p) {
        case ModuleProp::ssp: return "ssp";
        case ModuleProp::sip: return "sip";
        case ModuleProp::c2: return "c2";
        default: return "c3";
    }
}

PropertyVerdict module_property(const ModuleHandle& m, ModuleProp prop, const Caps& caps = {});

// Witness re-check for module-level verdicts.
bool recheck_module_verdict(const ModuleHandle& m, const PropertyVerdict& v,
                            const Caps& caps = {});

// Per module: C3+SIP forces SSP; for free modules, module SSP matches the
// endomorphism ring's SSP, endomorphism-ring regularity matches SSP of the
// doubled module, and C3 of the doubled module forces C2.
TheoremReport module_lemma_suite(const std::vector<ModuleHandle>& corpus, const Caps& caps = {});

}  // namespace summand
