#include <set>

#include "doctest.h"
#include "summand/module.hpp"
#include "summand/properties.hpp"
#include "test_helpers.hpp"

using namespace summand;
using namespace summand::testing;

namespace {

DescriptorPtr ut2() { return make_pattern(2, make_zmod(2), {{1, 1}, {0, 1}}); }

// N (+) R/L over the opposite of the triangular ring: the module tower the
// endomorphism fixture is built from.
struct Tower {
    RingHandle opposite;
    ModuleHandle n;
    ModuleHandle m;
    ModuleHandle u;
};

Tower build_tower() {
    const auto base = construct(ut2());
    const auto op = opposite_ring(*base);
    BitSet n_members(8), l_members(8);
    for (int x = 0; x < 8; ++x) {
        if (x / 4 == 0) n_members.set(static_cast<std::size_t>(x));   // zero (1,1) entry
        if (x % 2 == 0) l_members.set(static_cast<std::size_t>(x));   // zero (2,2) entry
    }
    Tower t;
    t.opposite = op;
    t.n = ideal_module(Ideal{op, Side::right, n_members});
    t.m = quotient_module(Ideal{op, Side::right, l_members});
    t.u = direct_sum(t.n, t.m);
    return t;
}

// Module subgroup sum, test-side.
BitSet sum_sets(const FiniteModule& m, const BitSet& a, const BitSet& b) {
    BitSet out(static_cast<std::size_t>(m.size));
    for (auto x = a.find_first(); x != BitSet::npos; x = a.find_next(x))
        for (auto y = b.find_first(); y != BitSet::npos; y = b.find_next(y))
            out.set(static_cast<std::size_t>(m.add_at(static_cast<int>(x), static_cast<int>(y))));
    return out;
}

}  // namespace

TEST_CASE("free module construction") {
    const auto f2 = construct(make_zmod(2));
    const auto m = free_module(f2, 2);
    CHECK(m->size == 4);
    CHECK(m->is_free);
    CHECK(validate_module(*m).passed);

    const auto z4 = construct(make_zmod(4));
    const auto big = direct_sum(free_module(z4, 1), free_module(z4, 1));
    CHECK(big->size == 16);
    CHECK(validate_module(*big).passed);
}

TEST_CASE("quotient module of the triangular ring tower") {
    const auto t = build_tower();
    CHECK(t.n->size == 4);
    CHECK(t.m->size == 2);
    CHECK(t.u->size == 8);
    CHECK(validate_module(*t.n).passed);
    CHECK(validate_module(*t.m).passed);
    CHECK(validate_module(*t.u).passed);
}

TEST_CASE("validate_module catches a corrupted action") {
    const auto z4 = construct(make_zmod(4));
    const auto m = free_module(z4, 1);
    FiniteModule broken = *m;
    broken.act[static_cast<std::size_t>(1) * 4 + 1] = 2;  // 1.1 becomes 2
    const auto report = validate_module(broken);
    REQUIRE_FALSE(report.passed);
    CHECK_FALSE(report.witness.empty());
}

TEST_CASE("submodule generation") {
    const auto f2 = construct(make_zmod(2));
    const auto m = free_module(f2, 2);
    CHECK(submodule_generated(m, {}).member_list() == std::vector<int>{0});
    // (1,0) has index 2; its span is {(0,0),(1,0)}.
    CHECK(submodule_generated(m, {2}).member_list() == std::vector<int>{0, 2});
}

TEST_CASE("greedy generators") {
    const auto z4 = construct(make_zmod(4));
    CHECK(greedy_generators(free_module(z4, 1)) == std::vector<int>{1});
    CHECK(greedy_generators(free_module(z4, 2)) == std::vector<int>{1, 4});
}

TEST_CASE("hom enumeration counts") {
    const auto f2 = construct(make_zmod(2));
    const auto m1 = free_module(f2, 1);
    CHECK(hom_maps(m1, m1).size() == 2);

    const auto z4 = construct(make_zmod(4));
    const auto r1 = free_module(z4, 1);
    const auto endos = hom_maps(r1, r1);
    REQUIRE(endos.size() == 4);
    // Sorted by table: multiplications by 0, 1, 2, 3.
    CHECK(endos[0].table == std::vector<std::int32_t>{0, 0, 0, 0});
    CHECK(endos[1].table == std::vector<std::int32_t>{0, 1, 2, 3});
    CHECK(endos[2].table == std::vector<std::int32_t>{0, 2, 0, 2});
    CHECK(endos[3].table == std::vector<std::int32_t>{0, 3, 2, 1});

    Caps tiny;
    tiny.hom = 2;
    CHECK_THROWS_AS(hom_maps(free_module(f2, 2), free_module(f2, 2), tiny), CapExceeded);
}

TEST_CASE("graph of an isomorphism generates a graph submodule") {
    const auto f2 = construct(make_zmod(2));
    const auto m = free_module(f2, 2);
    const auto mm = direct_sum(m, m);
    // K = {(0,0),(1,0)} maps onto L = {(0,0),(0,1)} by the swap; the graph
    // {(x, f(x))} is generated by the single pair ((1,0),(0,1)) = index 9.
    const auto graph = submodule_generated(mm, {2 * m->size + 1});
    CHECK(graph.member_list() == std::vector<int>{0, 9});
    // Graph shape: the first projection is injective on the members.
    std::set<int> firsts;
    for (int x : graph.member_list()) firsts.insert(x / m->size);
    CHECK(firsts.size() == graph.count());
}

TEST_CASE("hom counts between the tower modules") {
    const auto t = build_tower();
    CHECK(hom_maps(t.n, t.m).size() == 2);
    CHECK(hom_maps(t.m, t.n).size() == 1);  // only the zero map
    CHECK(hom_maps(t.m, t.m).size() == 2);
}

TEST_CASE("every enumerated map is a homomorphism") {
    const auto t = build_tower();
    const auto maps = hom_maps(t.u, t.u);
    for (const auto& f : maps) {
        for (int x = 0; x < t.u->size; ++x) {
            for (int y = 0; y < t.u->size; ++y)
                CHECK(f.apply(t.u->add_at(x, y)) == t.u->add_at(f.apply(x), f.apply(y)));
            for (int s = 0; s < t.opposite->size; ++s)
                CHECK(f.apply(t.u->act_at(x, s)) == t.u->act_at(f.apply(x), s));
        }
    }
    // Completeness on a brute-force scale: all 8^8 maps is too many to scan,
    // but every table built from generator images must already be present.
    CHECK(maps.size() == 8);
}

TEST_CASE("endomorphism ring of a rank-one free module is the ring itself") {
    const auto z4 = construct(make_zmod(4));
    const auto er = endomorphism_ring(free_module(z4, 1));
    CHECK(er.ring->size == 4);
    CHECK(er.ring->add == z4->add);
    CHECK(er.ring->mul == z4->mul);
    CHECK(er.ring->zero == 0);
    CHECK(er.ring->one == 1);
}

TEST_CASE("endomorphism ring of the rank-two free module over the field") {
    const auto f2 = construct(make_zmod(2));
    const auto er = endomorphism_ring(free_module(f2, 2));
    CHECK(er.ring->size == 16);
    CHECK(validate_axioms(*er.ring).passed);

    const auto m2 = construct(make_matrix(2, make_zmod(2)));
    CHECK(is_regular_ring(*er.ring).holds == is_regular_ring(*m2).holds);
    CHECK(is_abelian(*er.ring).holds == is_abelian(*m2).holds);
    CHECK(check_ssp(er.ring, Side::right, SspMethod::definitional).holds ==
          check_ssp(m2, Side::right, SspMethod::definitional).holds);
    CHECK(semisimplicity(*er.ring).is_semisimple);
}

TEST_CASE("module isomorphism") {
    const auto z4 = construct(make_zmod(4));
    const auto m = free_module(z4, 1);
    const auto self = is_isomorphic(m, m);
    REQUIRE(self.has_value());
    CHECK(self->is_bijective());

    const auto ideal = ideal_module(ideal_generated(z4, Side::right, {2}));
    const auto quot = quotient_module(ideal_generated(z4, Side::right, {2}));
    CHECK(ideal->size == 2);
    CHECK(quot->size == 2);
    CHECK(is_isomorphic(ideal, quot).has_value());
    CHECK_FALSE(is_isomorphic(m, ideal).has_value());
}

TEST_CASE("endomorphism rings of rank-two free modules mirror matrix rings") {
    for (const auto& base : {make_zmod(2), make_zmod(4), make_zmod(6),
                             make_product({make_zmod(2), make_zmod(2)})}) {
        const auto r = construct(base);
        CAPTURE(describe(*base));
        const auto er = endomorphism_ring(free_module(r, 2));
        const auto m2 = construct(make_matrix(2, base));
        CHECK(er.ring->size == m2->size);
        CHECK(check_ssp(er.ring, Side::right, SspMethod::definitional).holds ==
              check_ssp(m2, Side::right, SspMethod::definitional).holds);
    }
}

TEST_CASE("module isomorphism is symmetric with invertible witnesses") {
    const auto z4 = construct(make_zmod(4));
    const auto a = ideal_module(ideal_generated(z4, Side::right, {2}));
    const auto b = quotient_module(ideal_generated(z4, Side::right, {2}));
    const auto forward = is_isomorphic(a, b);
    const auto backward = is_isomorphic(b, a);
    REQUIRE(forward.has_value());
    REQUIRE(backward.has_value());
    for (int x = 0; x < a->size; ++x) CHECK(backward->apply(forward->apply(x)) == x);
}

TEST_CASE("module summand witnesses") {
    const auto z4 = construct(make_zmod(4));
    const auto m = free_module(z4, 1);

    const auto whole = summand_witness_module(m, submodule_generated(m, {1}));
    REQUIRE(whole.has_value());
    CHECK(whole->table == std::vector<std::int32_t>{0, 1, 2, 3});

    const auto zero = summand_witness_module(m, submodule_generated(m, {}));
    REQUIRE(zero.has_value());
    CHECK(zero->table == std::vector<std::int32_t>{0, 0, 0, 0});

    CHECK_FALSE(summand_witness_module(m, submodule_generated(m, {2})).has_value());
}

TEST_CASE("module summand witness agrees with the complement oracle") {
    const auto z4 = construct(make_zmod(4));
    const auto t = build_tower();
    for (const auto& m : {free_module(z4, 2), t.u, t.n}) {
        CAPTURE(m->name);
        const auto subs = enumerate_submodules(m, 16);
        for (const auto& sub : subs) {
            bool complement = false;
            for (const auto& other : subs) {
                const BitSet meet = sub.members & other.members;
                if (!(meet.count() == 1 && meet.test(static_cast<std::size_t>(m->zero))))
                    continue;
                if (sub.members.count() * other.members.count() !=
                    static_cast<std::size_t>(m->size))
                    continue;
                if (sum_sets(*m, sub.members, other.members).count() ==
                    static_cast<std::size_t>(m->size)) {
                    complement = true;
                    break;
                }
            }
            CHECK(summand_witness_module(m, sub).has_value() == complement);
        }
    }
}

TEST_CASE("module properties") {
    const auto f2 = construct(make_zmod(2));
    for (const auto& m : {free_module(f2, 1), free_module(f2, 2)}) {
        CHECK(module_property(m, ModuleProp::ssp).holds);
        CHECK(module_property(m, ModuleProp::sip).holds);
        CHECK(module_property(m, ModuleProp::c2).holds);
        CHECK(module_property(m, ModuleProp::c3).holds);
    }

    const auto z4 = construct(make_zmod(4));
    const auto r1 = free_module(z4, 1);
    CHECK(module_property(r1, ModuleProp::c2).holds);
    CHECK(module_property(r1, ModuleProp::c3).holds);

    const auto r2 = free_module(z4, 2);
    const auto ssp = module_property(r2, ModuleProp::ssp);
    CHECK_FALSE(ssp.holds);
    CHECK(recheck_module_verdict(r2, ssp));
}

TEST_CASE("ring verdicts match rank-one module verdicts") {
    for (const auto& desc : {make_zmod(4), make_zmod(6), ut2(),
                             make_pattern(3, make_zmod(2), {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}})}) {
        const auto r = construct(desc);
        const auto m = free_module(r, 1);
        CAPTURE(describe(*desc));
        CHECK(module_property(m, ModuleProp::ssp).holds ==
              check_ssp(r, Side::right, SspMethod::definitional).holds);
        CHECK(module_property(m, ModuleProp::sip).holds == check_sip(r, Side::right).holds);
        CHECK(module_property(m, ModuleProp::c3).holds == check_c3(r, Side::right).holds);
        CHECK(module_property(m, ModuleProp::c2).holds == check_c2(r, Side::right).holds);
    }
}

TEST_CASE("the direct-sum module is c3 but not sip") {
    const auto t = build_tower();
    CHECK(module_property(t.u, ModuleProp::c3).holds);
    const auto sip = module_property(t.u, ModuleProp::sip);
    CHECK_FALSE(sip.holds);
    CHECK(recheck_module_verdict(t.u, sip));
}

TEST_CASE("module lemma suite over the shipped corpus") {
    const auto f2 = construct(make_zmod(2));
    const auto z4 = construct(make_zmod(4));
    const auto t = build_tower();
    const std::vector<ModuleHandle> corpus = {
        free_module(f2, 1), free_module(f2, 2), free_module(z4, 1), free_module(z4, 2),
        ideal_module(ideal_generated(z4, Side::right, {2})),
        t.n, t.m, t.u,
    };
    const auto report = module_lemma_suite(corpus);
    for (const auto& c : report.checks) {
        CAPTURE(c.id);
        CAPTURE(c.subject);
        CAPTURE(c.detail);
        CHECK(c.status != CheckStatus::failed);
    }
}
