#include "summand/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace summand {

namespace {

long long checked_power(int base, int exponent, const Caps& caps, const char* what) {
    long long total = 1;
    for (int i = 0; i < exponent; ++i) {
        total *= base;
        if (total > caps.size)
            throw CapExceeded(std::string(what) + ": carrier size exceeds cap " +
                              std::to_string(caps.size));
        if (total == 0) break;
    }
    return total;
}

std::string coefficient_prefix(const std::string& label) {
    if (label == "1") return "";
    if (label.find('+') != std::string::npos || label.find(',') != std::string::npos)
        return "(" + label + ")";
    return label;
}

// Rings whose elements are matrices with entries at a fixed set of
// positions. The full matrix ring is the all-ones mask.
struct EntryRingBuilder {
    int dim;
    const FiniteRing& base;
    std::vector<std::pair<int, int>> positions;  // free (row, col), row-major
    std::vector<int> pos_index;                  // dim*dim -> slot or -1
    long long size = 0;

    EntryRingBuilder(int n, const FiniteRing& b, const std::vector<std::uint8_t>& mask,
                     const Caps& caps, const char* what)
        : dim(n), base(b), pos_index(static_cast<std::size_t>(n) * n, -1) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mask[static_cast<std::size_t>(i) * n + j]) {
                    pos_index[static_cast<std::size_t>(i) * n + j] =
                        static_cast<int>(positions.size());
                    positions.emplace_back(i, j);
                }
        size = checked_power(base.size, static_cast<int>(positions.size()), caps, what);
    }

    int slots() const { return static_cast<int>(positions.size()); }

    void decode(long long index, std::vector<int>& out) const {
        const int k = slots();
        out.resize(static_cast<std::size_t>(k));
        for (int s = k - 1; s >= 0; --s) {
            out[static_cast<std::size_t>(s)] = static_cast<int>(index % base.size);
            index /= base.size;
        }
    }

    long long encode(const std::vector<int>& entries) const {
        long long index = 0;
        for (int s = 0; s < slots(); ++s) index = index * base.size + entries[static_cast<std::size_t>(s)];
        return index;
    }

    std::string label_of(const std::vector<int>& entries) const {
        bool is_zero = true, is_identity = true;
        for (int s = 0; s < slots(); ++s) {
            const auto [i, j] = positions[static_cast<std::size_t>(s)];
            const int v = entries[static_cast<std::size_t>(s)];
            if (v != base.zero) is_zero = false;
            if (i == j ? v != base.one : v != base.zero) is_identity = false;
        }
        if (is_zero) return "0";
        if (is_identity) return "1";
        std::ostringstream os;
        bool first = true;
        auto emit = [&](int s) {
            const auto [i, j] = positions[static_cast<std::size_t>(s)];
            const int v = entries[static_cast<std::size_t>(s)];
            if (v == base.zero) return;
            if (!first) os << "+";
            first = false;
            os << coefficient_prefix(base.label(v)) << "e" << (i + 1) << (j + 1);
        };
        for (int s = 0; s < slots(); ++s)
            if (positions[static_cast<std::size_t>(s)].first == positions[static_cast<std::size_t>(s)].second)
                emit(s);
        for (int s = 0; s < slots(); ++s)
            if (positions[static_cast<std::size_t>(s)].first != positions[static_cast<std::size_t>(s)].second)
                emit(s);
        return os.str();
    }

    FiniteRing build(DescriptorPtr desc) const {
        FiniteRing r;
        r.size = static_cast<int>(size);
        r.descriptor = std::move(desc);
        const int k = slots();
        const int n = r.size;

        // Per-result-slot contributions: result (i,j) sums base products of
        // slots (i,k) and (k,j). Positions outside the mask vanish, and mask
        // closure guarantees products never land outside it.
        std::vector<std::vector<std::pair<int, int>>> contrib(static_cast<std::size_t>(k));
        for (int s = 0; s < k; ++s) {
            const auto [i, j] = positions[static_cast<std::size_t>(s)];
            for (int m = 0; m < dim; ++m) {
                const int sa = pos_index[static_cast<std::size_t>(i) * dim + m];
                const int sb = pos_index[static_cast<std::size_t>(m) * dim + j];
                if (sa >= 0 && sb >= 0) contrib[static_cast<std::size_t>(s)].emplace_back(sa, sb);
            }
        }

        std::vector<std::vector<int>> entry(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) decode(x, entry[static_cast<std::size_t>(x)]);

        r.add.resize(static_cast<std::size_t>(n) * n);
        r.mul.resize(static_cast<std::size_t>(n) * n);
        std::vector<int> buf(static_cast<std::size_t>(k));
        for (int x = 0; x < n; ++x) {
            const auto& a = entry[static_cast<std::size_t>(x)];
            for (int y = 0; y < n; ++y) {
                const auto& b = entry[static_cast<std::size_t>(y)];
                for (int s = 0; s < k; ++s)
                    buf[static_cast<std::size_t>(s)] =
                        base.add_at(a[static_cast<std::size_t>(s)], b[static_cast<std::size_t>(s)]);
                r.add[static_cast<std::size_t>(x) * n + y] = static_cast<std::int32_t>(encode(buf));
                for (int s = 0; s < k; ++s) {
                    int acc = base.zero;
                    for (const auto& [sa, sb] : contrib[static_cast<std::size_t>(s)])
                        acc = base.add_at(acc, base.mul_at(a[static_cast<std::size_t>(sa)],
                                                           b[static_cast<std::size_t>(sb)]));
                    buf[static_cast<std::size_t>(s)] = acc;
                }
                r.mul[static_cast<std::size_t>(x) * n + y] = static_cast<std::int32_t>(encode(buf));
            }
        }

        std::vector<int> zero_entries(static_cast<std::size_t>(k), base.zero);
        r.zero = static_cast<int>(encode(zero_entries));
        std::vector<int> one_entries(static_cast<std::size_t>(k), base.zero);
        for (int s = 0; s < k; ++s) {
            const auto [i, j] = positions[static_cast<std::size_t>(s)];
            if (i == j) one_entries[static_cast<std::size_t>(s)] = base.one;
        }
        r.one = static_cast<int>(encode(one_entries));

        r.labels.reserve(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) r.labels.push_back(label_of(entry[static_cast<std::size_t>(x)]));
        return r;
    }
};

FiniteRing build_zmod(int n, DescriptorPtr desc, const Caps& caps) {
    if (n > caps.size)
        throw CapExceeded("zmod: carrier size exceeds cap " + std::to_string(caps.size));
    FiniteRing r;
    r.size = n;
    r.descriptor = std::move(desc);
    r.zero = 0;
    r.one = n == 1 ? 0 : 1;
    r.add.resize(static_cast<std::size_t>(n) * n);
    r.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r.add[static_cast<std::size_t>(a) * n + b] = static_cast<std::int32_t>((a + b) % n);
            r.mul[static_cast<std::size_t>(a) * n + b] =
                static_cast<std::int32_t>((static_cast<long long>(a) * b) % n);
        }
    r.labels.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) r.labels.push_back(std::to_string(a));
    return r;
}

FiniteRing build_product(const std::vector<RingHandle>& factors, DescriptorPtr desc,
                         const Caps& caps) {
    long long total = 1;
    for (const auto& f : factors) {
        total *= f->size;
        if (total > caps.size)
            throw CapExceeded("product: carrier size exceeds cap " + std::to_string(caps.size));
    }
    const int n = static_cast<int>(total);
    const int k = static_cast<int>(factors.size());

    auto decode = [&](long long index, std::vector<int>& out) {
        out.resize(static_cast<std::size_t>(k));
        for (int s = k - 1; s >= 0; --s) {
            out[static_cast<std::size_t>(s)] = static_cast<int>(index % factors[static_cast<std::size_t>(s)]->size);
            index /= factors[static_cast<std::size_t>(s)]->size;
        }
    };
    auto encode = [&](const std::vector<int>& t) {
        long long index = 0;
        for (int s = 0; s < k; ++s) index = index * factors[static_cast<std::size_t>(s)]->size + t[static_cast<std::size_t>(s)];
        return index;
    };

    FiniteRing r;
    r.size = n;
    r.descriptor = std::move(desc);
    r.add.resize(static_cast<std::size_t>(n) * n);
    r.mul.resize(static_cast<std::size_t>(n) * n);

    std::vector<std::vector<int>> tup(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) decode(x, tup[static_cast<std::size_t>(x)]);

    std::vector<int> buf(static_cast<std::size_t>(k));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (int s = 0; s < k; ++s)
                buf[static_cast<std::size_t>(s)] = factors[static_cast<std::size_t>(s)]->add_at(
                    tup[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)],
                    tup[static_cast<std::size_t>(y)][static_cast<std::size_t>(s)]);
            r.add[static_cast<std::size_t>(x) * n + y] = static_cast<std::int32_t>(encode(buf));
            for (int s = 0; s < k; ++s)
                buf[static_cast<std::size_t>(s)] = factors[static_cast<std::size_t>(s)]->mul_at(
                    tup[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)],
                    tup[static_cast<std::size_t>(y)][static_cast<std::size_t>(s)]);
            r.mul[static_cast<std::size_t>(x) * n + y] = static_cast<std::int32_t>(encode(buf));
        }

    std::vector<int> t(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) t[static_cast<std::size_t>(s)] = factors[static_cast<std::size_t>(s)]->zero;
    r.zero = static_cast<int>(encode(t));
    for (int s = 0; s < k; ++s) t[static_cast<std::size_t>(s)] = factors[static_cast<std::size_t>(s)]->one;
    r.one = static_cast<int>(encode(t));

    r.labels.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        std::ostringstream os;
        os << "(";
        for (int s = 0; s < k; ++s) {
            if (s) os << ",";
            os << factors[static_cast<std::size_t>(s)]->label(
                tup[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]);
        }
        os << ")";
        r.labels.push_back(os.str());
    }
    return r;
}

}  // namespace

RingHandle construct(const DescriptorPtr& desc, const Caps& caps) {
    if (!desc) throw DescriptorError("construct: empty descriptor");
    return std::visit(
        [&](const auto& spec) -> RingHandle {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, ZmodSpec>) {
                return std::make_shared<FiniteRing>(build_zmod(spec.modulus, desc, caps));
            } else if constexpr (std::is_same_v<T, TableSpec>) {
                if (spec.size > caps.size)
                    throw CapExceeded("table: carrier size exceeds cap " +
                                      std::to_string(caps.size));
                FiniteRing r;
                r.size = spec.size;
                r.add.assign(spec.add.begin(), spec.add.end());
                r.mul.assign(spec.mul.begin(), spec.mul.end());
                r.zero = spec.zero;
                r.one = spec.one;
                r.descriptor = desc;
                if (auto report = validate_axioms(r); !report.passed) {
                    std::ostringstream os;
                    os << "table does not describe a ring: " << report.axiom << " fails at (";
                    for (std::size_t i = 0; i < report.witness.size(); ++i) {
                        if (i) os << ",";
                        os << report.witness[i];
                    }
                    os << ")";
                    throw DescriptorError(os.str());
                }
                return std::make_shared<FiniteRing>(std::move(r));
            } else if constexpr (std::is_same_v<T, MatrixSpec>) {
                auto base = construct(spec.base, caps);
                std::vector<std::uint8_t> mask(
                    static_cast<std::size_t>(spec.dim) * spec.dim, 1);
                EntryRingBuilder builder(spec.dim, *base, mask, caps, "matrix");
                return std::make_shared<FiniteRing>(builder.build(desc));
            } else if constexpr (std::is_same_v<T, PatternSpec>) {
                auto base = construct(spec.base, caps);
                EntryRingBuilder builder(spec.dim, *base, spec.mask, caps, "pattern");
                return std::make_shared<FiniteRing>(builder.build(desc));
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                std::vector<RingHandle> factors;
                factors.reserve(spec.factors.size());
                for (const auto& f : spec.factors) factors.push_back(construct(f, caps));
                return std::make_shared<FiniteRing>(build_product(factors, desc, caps));
            } else if constexpr (std::is_same_v<T, CornerSpec>) {
                auto base = construct(spec.base, caps);
                if (spec.idem < 0 || spec.idem >= base->size)
                    throw DescriptorError("corner: element index out of range");
                if (!base->is_idempotent(spec.idem))
                    throw DescriptorError("corner: element " + std::to_string(spec.idem) +
                                          " is not idempotent in the base ring");
                auto corner = corner_ring(*base, spec.idem);
                auto patched = *corner.ring;
                patched.descriptor = desc;
                return std::make_shared<FiniteRing>(std::move(patched));
            } else {
                auto base = construct(spec.base, caps);
                auto op = opposite_ring(*base);
                auto patched = *op;
                patched.descriptor = desc;
                return std::make_shared<FiniteRing>(std::move(patched));
            }
        },
        desc->spec);
}

AxiomReport validate_axioms(const FiniteRing& r) {
    const int n = r.size;
    auto bad = [&](const char* axiom, std::vector<int> w) {
        return AxiomReport{false, axiom, std::move(w)};
    };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = r.add_at(a, b);
            if (ab < 0 || ab >= n) return bad("addition-closure", {a, b});
            const int mab = r.mul_at(a, b);
            if (mab < 0 || mab >= n) return bad("multiplication-closure", {a, b});
        }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.add_at(r.add_at(a, b), c) != r.add_at(a, r.add_at(b, c)))
                    return bad("addition-associativity", {a, b, c});

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (r.add_at(a, b) != r.add_at(b, a)) return bad("addition-commutativity", {a, b});

    for (int a = 0; a < n; ++a)
        if (r.add_at(a, r.zero) != a) return bad("zero-identity", {a});

    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b) found = r.add_at(a, b) == r.zero;
        if (!found) return bad("additive-inverse", {a});
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.mul_at(r.mul_at(a, b), c) != r.mul_at(a, r.mul_at(b, c)))
                    return bad("multiplication-associativity", {a, b, c});

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (r.mul_at(a, r.add_at(b, c)) != r.add_at(r.mul_at(a, b), r.mul_at(a, c)))
                    return bad("left-distributivity", {a, b, c});
                if (r.mul_at(r.add_at(a, b), c) != r.add_at(r.mul_at(a, c), r.mul_at(b, c)))
                    return bad("right-distributivity", {a, b, c});
            }

    for (int a = 0; a < n; ++a) {
        if (r.mul_at(r.one, a) != a) return bad("one-left-identity", {a});
        if (r.mul_at(a, r.one) != a) return bad("one-right-identity", {a});
    }

    if (n > 1 && r.zero == r.one) return bad("zero-distinct-from-one", {r.zero});
    return {};
}

InverseScan invertibility(const FiniteRing& r, int a) {
    InverseScan out;
    for (int b = 0; b < r.size; ++b) {
        const bool left = r.mul_at(b, a) == r.one;
        const bool right = r.mul_at(a, b) == r.one;
        if (left) out.left_inverses.push_back(b);
        if (right) out.right_inverses.push_back(b);
        if (left && right && !out.two_sided) out.two_sided = b;
    }
    // Dedekind-finiteness of finite rings.
    assert(out.left_inverses.empty() == out.right_inverses.empty());
    assert(out.left_inverses.empty() == !out.two_sided.has_value());
    return out;
}

CornerRing corner_ring(const FiniteRing& r, int e) {
    if (e < 0 || e >= r.size) throw DescriptorError("corner: element index out of range");
    if (!r.is_idempotent(e))
        throw DescriptorError("corner: element " + std::to_string(e) + " is not idempotent");

    std::vector<int> carrier;
    std::vector<int> back(static_cast<std::size_t>(r.size), -1);
    for (int x = 0; x < r.size; ++x) {
        const int y = r.mul_at(r.mul_at(e, x), e);
        if (back[static_cast<std::size_t>(y)] < 0) {
            back[static_cast<std::size_t>(y)] = 0;
            carrier.push_back(y);
        }
    }
    std::sort(carrier.begin(), carrier.end());
    std::fill(back.begin(), back.end(), -1);
    for (std::size_t i = 0; i < carrier.size(); ++i)
        back[static_cast<std::size_t>(carrier[i])] = static_cast<int>(i);

    FiniteRing c;
    c.size = static_cast<int>(carrier.size());
    c.descriptor = make_corner(r.descriptor, e);
    c.zero = back[static_cast<std::size_t>(r.zero)];
    c.one = back[static_cast<std::size_t>(e)];
    c.add.resize(static_cast<std::size_t>(c.size) * c.size);
    c.mul.resize(static_cast<std::size_t>(c.size) * c.size);
    for (int i = 0; i < c.size; ++i)
        for (int j = 0; j < c.size; ++j) {
            c.add[static_cast<std::size_t>(i) * c.size + j] = static_cast<std::int32_t>(
                back[static_cast<std::size_t>(r.add_at(carrier[static_cast<std::size_t>(i)],
                                                       carrier[static_cast<std::size_t>(j)]))]);
            c.mul[static_cast<std::size_t>(i) * c.size + j] = static_cast<std::int32_t>(
                back[static_cast<std::size_t>(r.mul_at(carrier[static_cast<std::size_t>(i)],
                                                       carrier[static_cast<std::size_t>(j)]))]);
        }
    c.labels.reserve(carrier.size());
    for (int rep : carrier) c.labels.push_back(r.label(rep));
    return {std::make_shared<FiniteRing>(std::move(c)), std::move(carrier)};
}

RingHandle opposite_ring(const FiniteRing& r) {
    FiniteRing o;
    o.size = r.size;
    o.zero = r.zero;
    o.one = r.one;
    o.add = r.add;
    o.labels = r.labels;
    o.descriptor = make_opposite(r.descriptor);
    o.mul.resize(static_cast<std::size_t>(r.size) * r.size);
    for (int a = 0; a < r.size; ++a)
        for (int b = 0; b < r.size; ++b)
            o.mul[static_cast<std::size_t>(a) * r.size + b] =
                static_cast<std::int32_t>(r.mul_at(b, a));
    return std::make_shared<FiniteRing>(std::move(o));
}

}  // namespace summand
