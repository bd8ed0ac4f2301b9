#pragma once

#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "summand/descriptor.hpp"
#include "summand/verdict.hpp"

namespace summand {

// Explicit finite ring: carrier {0, ..., size-1} with dense operation
// tables. Immutable after construction; safe to share across tasks.
struct FiniteRing {
    int size = 0;
    std::vector<std::int32_t> add;  // size*size, row-major
    std::vector<std::int32_t> mul;
    int zero = 0;
    int one = 0;
    DescriptorPtr descriptor;
    std::vector<std::string> labels;  // optional, for reports

    int add_at(int a, int b) const { return add[static_cast<std::size_t>(a) * size + b]; }
    int mul_at(int a, int b) const { return mul[static_cast<std::size_t>(a) * size + b]; }

    int neg(int a) const {
        for (int b = 0; b < size; ++b)
            if (add_at(a, b) == zero) return b;
        return zero;  // unreachable for valid rings
    }
    int sub(int a, int b) const { return add_at(a, neg(b)); }

    int pow(int a, long long k) const {
        if (k < 0) throw std::invalid_argument("pow: exponent must be non-negative");
        int acc = one;
        int base = a;
        while (k > 0) {
            if (k & 1) acc = mul_at(acc, base);
            base = mul_at(base, base);
            k >>= 1;
        }
        return acc;
    }

    bool is_idempotent(int a) const { return mul_at(a, a) == a; }

    std::string label(int a) const {
        if (a >= 0 && a < static_cast<int>(labels.size())) return labels[a];
        return std::to_string(a);
    }
};

using RingHandle = std::shared_ptr<const FiniteRing>;

// Builds the ring a descriptor describes. Element numbering is deterministic
// for a fixed descriptor. Table-kind descriptors are fully axiom-checked and
// rejected with DescriptorError if they do not describe a ring.
RingHandle construct(const DescriptorPtr& desc, const Caps& caps = {});

struct AxiomReport {
    bool passed = true;
    std::string axiom;          // empty when passed
    std::vector<int> witness;   // smallest violating tuple, scan order
};

// Exhaustive scan of all ring axioms.
AxiomReport validate_axioms(const FiniteRing& r);

struct InverseScan {
    std::optional<int> two_sided;
    std::vector<int> left_inverses;
    std::vector<int> right_inverses;
};

// Finite rings are Dedekind-finite: a one-sided inverse is two-sided. The
// scan asserts that agreement.
InverseScan invertibility(const FiniteRing& r, int a);

struct CornerRing {
    RingHandle ring;
    std::vector<int> embedding;  // corner element index -> base element index
};

// eRe with identity e, for an idempotent e.
CornerRing corner_ring(const FiniteRing& r, int e);

// Same carrier and addition, reversed multiplication.
RingHandle opposite_ring(const FiniteRing& r);

}  // namespace summand
