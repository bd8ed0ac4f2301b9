#include <set>

#include "doctest.h"
#include "summand/ring.hpp"

using namespace summand;

namespace {

DescriptorPtr remark_pattern() {
    return make_pattern(3, make_zmod(2), {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
}

int by_label(const FiniteRing& r, const std::string& label) {
    for (int i = 0; i < r.size; ++i)
        if (r.label(i) == label) return i;
    FAIL("no element labeled ", label);
    return -1;
}

}  // namespace

TEST_CASE("zmod construction and arithmetic") {
    const auto r = construct(make_zmod(4));
    CHECK(r->size == 4);
    CHECK(r->zero == 0);
    CHECK(r->one == 1);
    CHECK(r->add_at(2, 3) == 1);
    CHECK(r->mul_at(2, 3) == 2);
    CHECK(r->pow(2, 2) == 0);
    CHECK(r->pow(3, 0) == r->one);
    CHECK(r->sub(1, 3) == 2);
    CHECK(r->neg(1) == 3);
    CHECK(validate_axioms(*r).passed);
}

TEST_CASE("one-element ring is allowed") {
    const auto r = construct(make_zmod(1));
    CHECK(r->size == 1);
    CHECK(r->zero == r->one);
    CHECK(validate_axioms(*r).passed);
}

TEST_CASE("matrix ring over the two-element field") {
    const auto r = construct(make_matrix(2, make_zmod(2)));
    CHECK(r->size == 16);
    CHECK(validate_axioms(*r).passed);
    const int e11 = by_label(*r, "e11");
    const int e12 = by_label(*r, "e12");
    CHECK(r->mul_at(e11, e12) == e12);
    CHECK(r->mul_at(e12, e11) == r->zero);
    CHECK(r->label(r->zero) == "0");
    CHECK(r->label(r->one) == "1");
}

TEST_CASE("pattern ring construction") {
    const auto r = construct(remark_pattern());
    CHECK(r->size == 16);
    CHECK(validate_axioms(*r).passed);
    // Row-major free entries (1,1),(1,3),(2,2),(3,3); the first is the most
    // significant digit of the element index.
    CHECK(by_label(*r, "e11") == 8);
    CHECK(by_label(*r, "e13") == 4);
    CHECK(by_label(*r, "e22") == 2);
    CHECK(by_label(*r, "e33") == 1);
    CHECK(r->one == 11);
}

TEST_CASE("pattern masks are checked") {
    CHECK_THROWS_AS(make_pattern(3, make_zmod(2), {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}),
                    DescriptorError);
    CHECK_THROWS_AS(make_pattern(2, make_zmod(2), {{1, 1}, {0, 0}}), DescriptorError);
}

TEST_CASE("product ring") {
    const auto r = construct(make_product({make_zmod(2), make_zmod(3)}));
    CHECK(r->size == 6);
    CHECK(validate_axioms(*r).passed);
    CHECK(r->label(r->zero) == "(0,0)");
    CHECK(r->label(r->one) == "(1,1)");
}

TEST_CASE("size cap is enforced") {
    Caps caps;
    caps.size = 100;
    CHECK_THROWS_AS(construct(make_matrix(2, make_zmod(4)), caps), CapExceeded);
    CHECK_NOTHROW(construct(make_matrix(2, make_zmod(3)), caps));
}

TEST_CASE("corner ring at the identity and at zero") {
    const auto r = construct(make_matrix(2, make_zmod(2)));
    const auto at_one = corner_ring(*r, r->one);
    CHECK(at_one.ring->size == r->size);
    CHECK(at_one.embedding.size() == static_cast<std::size_t>(r->size));

    const auto at_zero = corner_ring(*r, r->zero);
    CHECK(at_zero.ring->size == 1);

    CHECK_THROWS_AS(corner_ring(*r, by_label(*r, "e12")), DescriptorError);
}

TEST_CASE("corner ring matches the brute-force carrier") {
    const auto r = construct(remark_pattern());
    const int e5 = by_label(*r, "e11+e33");
    const auto corner = corner_ring(*r, e5);

    std::set<int> expected;
    for (int x = 0; x < r->size; ++x) expected.insert(r->mul_at(r->mul_at(e5, x), e5));
    CHECK(corner.ring->size == 8);
    CHECK(expected.size() == 8);
    std::set<int> embedded(corner.embedding.begin(), corner.embedding.end());
    CHECK(embedded == expected);
    CHECK(validate_axioms(*corner.ring).passed);
}

TEST_CASE("corner descriptor kind") {
    const auto desc = make_corner(remark_pattern(), 9);  // e11+e33
    const auto r = construct(desc);
    CHECK(r->size == 8);
    CHECK_THROWS_AS(construct(make_corner(remark_pattern(), 4)), DescriptorError);
}

TEST_CASE("opposite ring") {
    const auto z4 = construct(make_zmod(4));
    const auto op = opposite_ring(*z4);
    CHECK(op->mul == z4->mul);

    const auto m2 = construct(make_matrix(2, make_zmod(2)));
    const auto opop = opposite_ring(*opposite_ring(*m2));
    CHECK(opop->mul == m2->mul);
    CHECK(opop->add == m2->add);

    const auto pat_op = opposite_ring(*construct(remark_pattern()));
    CHECK(validate_axioms(*pat_op).passed);
}

TEST_CASE("axiom validation catches a corrupted table") {
    const auto z4 = construct(make_zmod(4));
    FiniteRing broken = *z4;
    broken.mul[static_cast<std::size_t>(1) * 4 + 2] = 3;  // 1*2 becomes 3
    const auto report = validate_axioms(broken);
    REQUIRE_FALSE(report.passed);
    CHECK(report.axiom == "multiplication-associativity");
    REQUIRE(report.witness.size() == 3);
    const auto [a, b, c] = std::tuple{report.witness[0], report.witness[1], report.witness[2]};
    CHECK(broken.mul_at(broken.mul_at(a, b), c) != broken.mul_at(a, broken.mul_at(b, c)));
    CHECK(report.witness == std::vector<int>{1, 2, 2});
}

TEST_CASE("table descriptors are axiom-checked at construction") {
    const auto z4 = construct(make_zmod(4));
    TableSpec spec;
    spec.size = 4;
    spec.add.assign(z4->add.begin(), z4->add.end());
    spec.mul.assign(z4->mul.begin(), z4->mul.end());
    spec.zero = 0;
    spec.one = 1;
    CHECK_NOTHROW(construct(make_table(spec)));

    spec.mul[static_cast<std::size_t>(1) * 4 + 2] = 3;
    CHECK_THROWS_AS(construct(make_table(spec)), DescriptorError);
}

TEST_CASE("element numbering is deterministic") {
    const auto a = construct(remark_pattern());
    const auto b = construct(remark_pattern());
    CHECK(a->add == b->add);
    CHECK(a->mul == b->mul);
    CHECK(a->labels == b->labels);
}

TEST_CASE("invertibility scan") {
    const auto z4 = construct(make_zmod(4));
    const auto inv3 = invertibility(*z4, 3);
    CHECK(inv3.two_sided == 3);
    const auto inv2 = invertibility(*z4, 2);
    CHECK_FALSE(inv2.two_sided.has_value());
    CHECK(inv2.left_inverses.empty());

    const auto m2 = construct(make_matrix(2, make_zmod(2)));
    CHECK_FALSE(invertibility(*m2, by_label(*m2, "e11")).two_sided.has_value());
}

TEST_CASE("every constructed corpus ring satisfies the axioms") {
    const std::vector<DescriptorPtr> corpus = {
        make_zmod(2),
        make_zmod(3),
        make_zmod(4),
        make_zmod(6),
        make_zmod(8),
        make_product({make_zmod(2), make_zmod(2)}),
        make_pattern(2, make_zmod(2), {{1, 1}, {0, 1}}),
        remark_pattern(),
        make_matrix(2, make_zmod(2)),
        make_matrix(2, make_zmod(4)),
    };
    for (const auto& desc : corpus) {
        const auto r = construct(desc);
        CAPTURE(describe(*desc));
        CHECK(validate_axioms(*r).passed);
    }
}
