#include "summand/fixtures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "summand/ideal.hpp"
#include "summand/module.hpp"
#include "summand/properties.hpp"

namespace summand {

namespace {

void expect(FixtureOutcome& out, const std::string& id, bool ok, const std::string& detail) {
    CheckRecord c{id, out.name, ok ? CheckStatus::passed : CheckStatus::failed, "", ""};
    if (!ok) c.detail = detail;
    out.assertions.push_back(std::move(c));
}

std::string bools(bool b) { return b ? "true" : "false"; }

std::string witness_text(const PropertyVerdict& v) {
    if (!v.witness) return "none";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.witness->labels.size(); ++i) {
        if (i) os << ", ";
        os << v.witness->labels[i];
    }
    os << ")";
    return os.str();
}

DescriptorPtr ut2_f2_descriptor() {
    return make_pattern(2, make_zmod(2), {{1, 1}, {0, 1}});
}

DescriptorPtr remark_2_10_descriptor() {
    return make_pattern(3, make_zmod(2), {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
}

int index_of_label(const FiniteRing& r, const std::string& label) {
    for (int i = 0; i < r.size; ++i)
        if (r.label(i) == label) return i;
    throw std::logic_error("fixture: no element labeled " + label);
}

bool is_right_ideal(const FiniteRing& r, const BitSet& members) {
    if (!members.test(static_cast<std::size_t>(r.zero))) return false;
    const auto list = to_list(members);
    for (int x : list) {
        for (int y : list)
            if (!members.test(static_cast<std::size_t>(r.add_at(x, y)))) return false;
        for (int s = 0; s < r.size; ++s)
            if (!members.test(static_cast<std::size_t>(r.mul_at(x, s)))) return false;
    }
    return true;
}

// The triangular-ring endomorphism fixture: R is upper triangular 2x2 over
// the two-element field, N and L are the column and row left ideals, and the
// subject ring is End(N (+) R/L) computed over the opposite ring.
struct EndoFixtureParts {
    RingHandle base;
    RingHandle opposite;
    BitSet n_members;
    BitSet l_members;
    ModuleHandle n_module;
    ModuleHandle quotient;
    ModuleHandle u;
    EndomorphismRing endo;
};

EndoFixtureParts build_endo_fixture(const Caps& caps) {
    EndoFixtureParts parts;
    parts.base = construct(ut2_f2_descriptor(), caps);
    parts.opposite = opposite_ring(*parts.base);

    // Entries of an element x are (a11, a12, a22) with a11 most significant:
    // x = a11*4 + a12*2 + a22.
    parts.n_members.resize(static_cast<std::size_t>(parts.base->size));
    parts.l_members.resize(static_cast<std::size_t>(parts.base->size));
    for (int x = 0; x < parts.base->size; ++x) {
        const int a11 = x / 4;
        const int a22 = x % 2;
        if (a11 == 0) parts.n_members.set(static_cast<std::size_t>(x));
        if (a22 == 0) parts.l_members.set(static_cast<std::size_t>(x));
    }

    parts.n_module = ideal_module(Ideal{parts.opposite, Side::right, parts.n_members}, caps);
    parts.quotient = quotient_module(Ideal{parts.opposite, Side::right, parts.l_members}, caps);
    parts.u = direct_sum(parts.n_module, parts.quotient, caps);
    parts.endo = endomorphism_ring(parts.u, caps);
    return parts;
}

FixtureOutcome run_simple_ring_fixture(const std::string& name, const Caps& caps) {
    FixtureOutcome out;
    out.name = name;

    if (name == "f2") {
        out.subject = construct(make_zmod(2), caps);
        const auto& r = out.subject;
        out.trace.push_back("ring: " + describe(*r->descriptor) + ", size 2");
        expect(out, "size", r->size == 2, "size " + std::to_string(r->size));
        expect(out, "regular", is_regular_ring(*r).holds, "field must be regular");
        expect(out, "semisimple", semisimplicity(*r).is_semisimple, "radical not zero");
        expect(out, "ssp", check_ssp(r, Side::right, SspMethod::definitional).holds,
               "ssp expected");
        expect(out, "ideal-count", enumerate_ideals(r, Side::right, caps.ideals).size() == 2,
               "expected exactly the zero ideal and the ring");
        return out;
    }

    if (name == "zmod-4") {
        out.subject = construct(make_zmod(4), caps);
        const auto& r = out.subject;
        out.trace.push_back("ring: " + describe(*r->descriptor) + ", size 4");
        expect(out, "idempotents", idempotents(*r) == std::vector<int>{0, 1},
               "expected {0, 1}");
        const auto reg = is_regular_ring(*r);
        expect(out, "not-regular",
               !reg.holds && reg.witness && reg.witness->elems == std::vector<int>{2},
               "expected witness 2, got " + witness_text(reg));
        const auto rad = semisimplicity(*r);
        expect(out, "radical",
               !rad.is_semisimple && to_list(rad.radical) == std::vector<int>{0, 2},
               "expected radical {0, 2}");
        expect(out, "ssp",
               check_ssp(r, Side::right, SspMethod::definitional).holds &&
                   check_ssp(r, Side::left, SspMethod::definitional).holds,
               "commutative ring must be ssp");
        expect(out, "c2", check_c2(r, Side::right, caps).holds, "c2 expected");
        return out;
    }

    if (name == "zmod-6") {
        out.subject = construct(make_zmod(6), caps);
        const auto& r = out.subject;
        out.trace.push_back("ring: " + describe(*r->descriptor) + ", size 6");
        expect(out, "idempotents", idempotents(*r) == std::vector<int>{0, 1, 3, 4},
               "expected {0, 1, 3, 4}");
        expect(out, "semisimple", semisimplicity(*r).is_semisimple, "radical not zero");
        const auto ideal = ideal_generated(r, Side::right, {2});
        expect(out, "principal-ideal", ideal.member_list() == std::vector<int>{0, 2, 4},
               "expected {0, 2, 4}");
        expect(out, "summand-witness", summand_witness(ideal) == std::optional<int>(4),
               "expected witness 4");
        expect(out, "ssp", check_ssp(r, Side::right, SspMethod::definitional).holds,
               "commutative ring must be ssp");
        return out;
    }

    if (name == "f2xf2") {
        out.subject = construct(make_product({make_zmod(2), make_zmod(2)}), caps);
        const auto& r = out.subject;
        out.trace.push_back("ring: " + describe(*r->descriptor) + ", size 4");
        expect(out, "idempotent-count", idempotents(*r).size() == 4,
               "every element should be idempotent");
        expect(out, "abelian", is_abelian(*r).holds, "commutative ring");
        expect(out, "sip", check_sip(r, Side::right).holds, "sip expected");
        expect(out, "ssp", check_ssp(r, Side::right, SspMethod::definitional).holds,
               "ssp expected");
        return out;
    }

    if (name == "m2-f2") {
        out.subject = construct(make_matrix(2, make_zmod(2)), caps);
        const auto& r = out.subject;
        out.trace.push_back("ring: " + describe(*r->descriptor) + ", size 16");
        expect(out, "size", r->size == 16, "size " + std::to_string(r->size));
        expect(out, "regular", is_regular_ring(*r).holds, "matrix ring over a field is regular");
        expect(out, "ssp",
               check_ssp(r, Side::right, SspMethod::definitional).holds &&
                   check_ssp(r, Side::left, SspMethod::definitional).holds,
               "regular ring must be ssp");
        expect(out, "not-abelian", !is_abelian(*r).holds, "matrix units do not commute");
        expect(out, "semisimple", semisimplicity(*r).is_semisimple, "radical not zero");
        return out;
    }

    if (name == "m2-zmod4") {
        out.subject = construct(make_matrix(2, make_zmod(4)), caps);
        const auto& r = out.subject;
        out.trace.push_back("ring: " + describe(*r->descriptor) + ", size 256");
        const auto base = construct(make_zmod(4), caps);
        expect(out, "base-not-regular", !is_regular_ring(*base).holds,
               "zmod(4) must not be regular");
        const auto ssp = check_ssp(r, Side::right, SspMethod::definitional);
        expect(out, "ssp-fails", !ssp.holds, "expected ssp to fail");
        if (!ssp.holds) {
            out.trace.push_back("ssp witness: " + witness_text(ssp));
            expect(out, "ssp-witness-refails", recheck_verdict(r, ssp, caps),
                   "witness did not reproduce");
        }
        return out;
    }

    if (name == "ut2-f2") {
        out.subject = construct(ut2_f2_descriptor(), caps);
        const auto& r = out.subject;
        out.trace.push_back("ring: " + describe(*r->descriptor) + ", size 8");
        expect(out, "size", r->size == 8, "size " + std::to_string(r->size));
        expect(out, "sip-left", check_sip(r, Side::left).holds, "left sip expected");
        expect(out, "sip-right", check_sip(r, Side::right).holds, "right sip expected");
        const auto ssp = check_ssp(r, Side::right, SspMethod::definitional);
        expect(out, "ssp-fails", !ssp.holds, "expected ssp to fail");
        expect(out, "c3-right-fails", !check_c3(r, Side::right).holds,
               "right c3 expected to fail");
        if (!ssp.holds) {
            out.trace.push_back("ssp witness: " + witness_text(ssp));
            expect(out, "ssp-witness-refails", recheck_verdict(r, ssp, caps),
                   "witness did not reproduce");
        }
        return out;
    }

    throw DescriptorError("unknown fixture: " + name);
}

FixtureOutcome run_remark_2_10(const Caps& caps) {
    FixtureOutcome out;
    out.name = "remark-2-10";
    out.subject = construct(remark_2_10_descriptor(), caps);
    const auto& r = out.subject;
    out.trace.push_back("ring: " + describe(*r->descriptor) + ", size " +
                        std::to_string(r->size));

    const auto idems = idempotents(*r);
    out.trace.push_back("idempotent count: " + std::to_string(idems.size()));
    expect(out, "idempotent-count", idems.size() == 12,
           "expected 12, got " + std::to_string(idems.size()));

    std::set<std::string> got;
    for (int e : idems) got.insert(r->label(e));
    const std::set<std::string> want = {"0",
                                        "1",
                                        "e11",
                                        "e22",
                                        "e33",
                                        "e11+e22",
                                        "e11+e33",
                                        "e22+e33",
                                        "e11+e13",
                                        "e33+e13",
                                        "e11+e22+e13",
                                        "e22+e33+e13"};
    {
        std::ostringstream os;
        for (int e : idems) os << r->label(e) << " ";
        out.trace.push_back("idempotents: " + os.str());
    }
    expect(out, "idempotent-labels", got == want, "labeled idempotents differ from the list");

    // Stated expectation: right c3 holds. The exhaustive scan decides; a
    // disagreement is reported as a failure with the computed witness.
    const auto c3r = check_c3(r, Side::right);
    out.trace.push_back("computed right c3: " + bools(c3r.holds) +
                        (c3r.holds ? "" : ", witness " + witness_text(c3r)));
    expect(out, "right-c3", c3r.holds,
           "stated expectation: right c3 holds; computed: fails at " + witness_text(c3r));

    const auto sipl = check_sip(r, Side::left);
    out.trace.push_back("computed left sip: " + bools(sipl.holds));
    expect(out, "left-sip", sipl.holds, "left sip expected to hold");

    const auto ssp = check_ssp(r, Side::left, SspMethod::definitional);
    out.trace.push_back("computed left ssp: " + bools(ssp.holds) +
                        (ssp.holds ? "" : ", least witness " + witness_text(ssp)));
    expect(out, "ssp-fails", !ssp.holds, "expected ssp to fail");
    if (!ssp.holds)
        expect(out, "ssp-witness-refails", recheck_verdict(r, ssp, caps),
               "witness did not reproduce");

    // The stated failing pair must fail the single-instance summand check.
    const int e4 = index_of_label(*r, "e11+e22");
    const int e7 = index_of_label(*r, "e11+e13");
    const auto stated_sum =
        ideal_sum(principal_ideal(r, Side::left, e4), principal_ideal(r, Side::left, e7));
    out.trace.push_back("stated pair ideal size: " + std::to_string(stated_sum.count()));
    expect(out, "stated-pair-fails-summand-check", !summand_witness(stated_sum).has_value(),
           "the sum generated by the stated pair unexpectedly splits");

    return out;
}

FixtureOutcome run_remark_2_9(const Caps& caps) {
    FixtureOutcome out;
    out.name = "remark-2-9";

    const auto parts = build_endo_fixture(caps);
    out.subject = parts.endo.ring;
    out.trace.push_back("base ring: " + describe(*parts.base->descriptor) + ", size " +
                        std::to_string(parts.base->size));
    out.trace.push_back("column left ideal size: " + std::to_string(parts.n_members.count()));
    out.trace.push_back("row left ideal size: " + std::to_string(parts.l_members.count()));
    out.trace.push_back("quotient module size: " + std::to_string(parts.quotient->size));
    out.trace.push_back("direct sum size: " + std::to_string(parts.u->size));
    out.trace.push_back("endomorphism ring size: " + std::to_string(parts.endo.ring->size));

    expect(out, "column-set-is-ideal", is_right_ideal(*parts.opposite, parts.n_members),
           "column set is not a right ideal of the opposite ring");
    expect(out, "row-set-is-ideal", is_right_ideal(*parts.opposite, parts.l_members),
           "row set is not a right ideal of the opposite ring");
    expect(out, "module-axioms", validate_module(*parts.u).passed,
           "direct sum fails module axioms");

    const auto& s = parts.endo.ring;
    const auto sip_left = check_sip(s, Side::left);
    const auto sip_right = check_sip(s, Side::right);
    const auto ssp = check_ssp(s, Side::right, SspMethod::definitional);
    out.trace.push_back("computed: sip left " + bools(sip_left.holds) + ", sip right " +
                        bools(sip_right.holds) + ", ssp " + bools(ssp.holds) +
                        (ssp.holds ? "" : " (witness " + witness_text(ssp) + ")"));

    expect(out, "sip-left", sip_left.holds, "left sip expected to hold");
    expect(out, "sip-right", sip_right.holds, "right sip expected to hold");
    expect(out, "ssp-fails", !ssp.holds, "expected ssp to fail");
    if (!ssp.holds)
        expect(out, "ssp-witness-refails", recheck_verdict(s, ssp, caps),
               "witness did not reproduce");
    return out;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_catalog() {
    static const std::vector<FixtureInfo> catalog = {
        {"zmod-4", "commutative chain ring: ssp holds, not regular (witness 2), radical {0,2}"},
        {"zmod-6", "semisimple commutative ring: idempotents {0,1,3,4}"},
        {"f2", "two-element field: regular, semisimple, ssp"},
        {"f2xf2", "product of two fields: abelian, every element idempotent, ssp"},
        {"m2-f2", "2x2 matrices over the two-element field: regular, ssp, not abelian"},
        {"m2-zmod4", "2x2 matrices over zmod(4): ssp fails since the base ring is not regular"},
        {"ut2-f2", "upper triangular 2x2 over the two-element field: sip both sides, ssp fails"},
        {"remark-2-9",
         "endomorphism ring of the triangular-ring module tower: sip both sides, ssp fails"},
        {"remark-2-10",
         "16-element pattern ring: 12 idempotents, left sip, ssp fails; includes the stated "
         "right-c3 expectation"},
    };
    return catalog;
}

bool is_fixture(const std::string& name) {
    for (const auto& f : fixture_catalog())
        if (f.name == name) return true;
    return false;
}

RingHandle fixture_ring(const std::string& name, const Caps& caps) {
    if (name == "zmod-4") return construct(make_zmod(4), caps);
    if (name == "zmod-6") return construct(make_zmod(6), caps);
    if (name == "f2") return construct(make_zmod(2), caps);
    if (name == "f2xf2") return construct(make_product({make_zmod(2), make_zmod(2)}), caps);
    if (name == "m2-f2") return construct(make_matrix(2, make_zmod(2)), caps);
    if (name == "m2-zmod4") return construct(make_matrix(2, make_zmod(4)), caps);
    if (name == "ut2-f2") return construct(ut2_f2_descriptor(), caps);
    if (name == "remark-2-10") return construct(remark_2_10_descriptor(), caps);
    if (name == "remark-2-9") return build_endo_fixture(caps).endo.ring;
    throw DescriptorError("unknown fixture: " + name);
}

FixtureOutcome run_fixture(const std::string& name, const Caps& caps) {
    if (name == "remark-2-10") return run_remark_2_10(caps);
    if (name == "remark-2-9") return run_remark_2_9(caps);
    return run_simple_ring_fixture(name, caps);
}

}  // namespace summand
