#include "summand/module.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "summand/properties.hpp"

namespace summand {

namespace {

void check_size(long long size, const Caps& caps, const char* what) {
    if (size > caps.size)
        throw CapExceeded(std::string(what) + ": carrier size " + std::to_string(size) +
                          " exceeds cap " + std::to_string(caps.size));
}

// Sum of two additive subgroups of the module carrier, coset by coset.
BitSet module_sum(const FiniteModule& m, const BitSet& a, const BitSet& b) {
    BitSet out = a;
    const auto alist = to_list(a);
    for (auto y = b.find_first(); y != BitSet::npos; y = b.find_next(y)) {
        if (out.test(y)) continue;
        for (int x : alist) out.set(static_cast<std::size_t>(m.add_at(x, static_cast<int>(y))));
    }
    return out;
}

// Cyclic submodule x.R; already additively closed.
BitSet cyclic_orbit(const FiniteModule& m, int x) {
    BitSet out(static_cast<std::size_t>(m.size));
    for (int r = 0; r < m.ring->size; ++r) out.set(static_cast<std::size_t>(m.act_at(x, r)));
    return out;
}

}  // namespace

bool ModuleMap::is_bijective() const {
    if (!source || !target || source->size != target->size) return false;
    BitSet seen(static_cast<std::size_t>(target->size));
    for (int y : table) seen.set(static_cast<std::size_t>(y));
    return seen.count() == static_cast<std::size_t>(target->size);
}

BitSet ModuleMap::image() const {
    BitSet out(static_cast<std::size_t>(target->size));
    for (int y : table) out.set(static_cast<std::size_t>(y));
    return out;
}

ModuleHandle free_module(const RingHandle& r, int n, const Caps& caps) {
    if (n < 1) throw DescriptorError("free module: rank must be >= 1");
    long long size = 1;
    for (int i = 0; i < n; ++i) {
        size *= r->size;
        check_size(size, caps, "free module");
    }

    FiniteModule m;
    m.ring = r;
    m.size = static_cast<int>(size);
    m.zero = 0;
    m.name = "free(" + describe(*r->descriptor) + ", " + std::to_string(n) + ")";
    m.is_free = true;
    m.free_rank = n;

    auto decode = [&](long long index, std::vector<int>& out) {
        out.resize(static_cast<std::size_t>(n));
        for (int s = n - 1; s >= 0; --s) {
            out[static_cast<std::size_t>(s)] = static_cast<int>(index % r->size);
            index /= r->size;
        }
    };
    auto encode = [&](const std::vector<int>& t) {
        long long index = 0;
        for (int s = 0; s < n; ++s) index = index * r->size + t[static_cast<std::size_t>(s)];
        return index;
    };

    std::vector<std::vector<int>> tup(static_cast<std::size_t>(m.size));
    for (int x = 0; x < m.size; ++x) decode(x, tup[static_cast<std::size_t>(x)]);

    m.add.resize(static_cast<std::size_t>(m.size) * m.size);
    std::vector<int> buf(static_cast<std::size_t>(n));
    for (int x = 0; x < m.size; ++x)
        for (int y = 0; y < m.size; ++y) {
            for (int s = 0; s < n; ++s)
                buf[static_cast<std::size_t>(s)] =
                    r->add_at(tup[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)],
                              tup[static_cast<std::size_t>(y)][static_cast<std::size_t>(s)]);
            m.add[static_cast<std::size_t>(x) * m.size + y] =
                static_cast<std::int32_t>(encode(buf));
        }

    m.act.resize(static_cast<std::size_t>(m.size) * r->size);
    for (int x = 0; x < m.size; ++x)
        for (int s = 0; s < r->size; ++s) {
            for (int k = 0; k < n; ++k)
                buf[static_cast<std::size_t>(k)] =
                    r->mul_at(tup[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)], s);
            m.act[static_cast<std::size_t>(x) * r->size + s] =
                static_cast<std::int32_t>(encode(buf));
        }

    m.labels.reserve(static_cast<std::size_t>(m.size));
    for (int x = 0; x < m.size; ++x) {
        if (n == 1) {
            m.labels.push_back(r->label(tup[static_cast<std::size_t>(x)][0]));
        } else {
            std::ostringstream os;
            os << "(";
            for (int s = 0; s < n; ++s) {
                if (s) os << ",";
                os << r->label(tup[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]);
            }
            os << ")";
            m.labels.push_back(os.str());
        }
    }
    return std::make_shared<FiniteModule>(std::move(m));
}

namespace {

ModuleHandle restrict_to(const RingHandle& ring, const std::vector<int>& carrier,
                         const std::vector<std::string>& labels,
                         const std::vector<std::int32_t>& full_add,
                         const std::vector<std::int32_t>& full_act, int full_size, int zero,
                         std::string name) {
    std::vector<int> back(static_cast<std::size_t>(full_size), -1);
    for (std::size_t i = 0; i < carrier.size(); ++i)
        back[static_cast<std::size_t>(carrier[i])] = static_cast<int>(i);

    FiniteModule m;
    m.ring = ring;
    m.size = static_cast<int>(carrier.size());
    m.zero = back[static_cast<std::size_t>(zero)];
    m.name = std::move(name);
    m.add.resize(static_cast<std::size_t>(m.size) * m.size);
    m.act.resize(static_cast<std::size_t>(m.size) * ring->size);
    for (int i = 0; i < m.size; ++i) {
        for (int j = 0; j < m.size; ++j)
            m.add[static_cast<std::size_t>(i) * m.size + j] = back[static_cast<std::size_t>(
                full_add[static_cast<std::size_t>(carrier[static_cast<std::size_t>(i)]) * full_size +
                         carrier[static_cast<std::size_t>(j)]])];
        for (int s = 0; s < ring->size; ++s)
            m.act[static_cast<std::size_t>(i) * ring->size + s] = back[static_cast<std::size_t>(
                full_act[static_cast<std::size_t>(carrier[static_cast<std::size_t>(i)]) *
                             ring->size +
                         s])];
    }
    m.labels.reserve(carrier.size());
    for (int rep : carrier)
        m.labels.push_back(rep < static_cast<int>(labels.size()) ? labels[static_cast<std::size_t>(rep)]
                                                                 : std::to_string(rep));
    return std::make_shared<FiniteModule>(std::move(m));
}

}  // namespace

ModuleHandle ideal_module(const Ideal& ideal, const Caps& caps) {
    if (ideal.side != Side::right)
        throw DescriptorError("ideal module: left ideals are realized over the opposite ring");
    const auto& r = *ideal.ring;
    check_size(static_cast<long long>(ideal.count()), caps, "ideal module");

    // The regular module structure restricted to the member set.
    std::vector<std::int32_t> act(static_cast<std::size_t>(r.size) * r.size);
    for (int x = 0; x < r.size; ++x)
        for (int s = 0; s < r.size; ++s)
            act[static_cast<std::size_t>(x) * r.size + s] =
                static_cast<std::int32_t>(r.mul_at(x, s));

    return restrict_to(ideal.ring, ideal.member_list(), r.labels, r.add, act, r.size, r.zero,
                       "ideal-module(" + describe(*r.descriptor) + ", " +
                           std::to_string(ideal.count()) + " elements)");
}

ModuleHandle quotient_module(const Ideal& ideal, const Caps& caps) {
    if (ideal.side != Side::right)
        throw DescriptorError("quotient module: left ideals are realized over the opposite ring");
    const auto& r = *ideal.ring;

    const auto members = ideal.member_list();
    std::vector<int> rep(static_cast<std::size_t>(r.size), -1);
    for (int x = 0; x < r.size; ++x) {
        int least = x;
        for (int m : members) least = std::min(least, r.add_at(x, m));
        rep[static_cast<std::size_t>(x)] = least;
    }

    std::vector<int> carrier;
    std::vector<int> index(static_cast<std::size_t>(r.size), -1);
    for (int x = 0; x < r.size; ++x)
        if (rep[static_cast<std::size_t>(x)] == x) {
            index[static_cast<std::size_t>(x)] = static_cast<int>(carrier.size());
            carrier.push_back(x);
        }
    check_size(static_cast<long long>(carrier.size()), caps, "quotient module");

    FiniteModule m;
    m.ring = ideal.ring;
    m.size = static_cast<int>(carrier.size());
    m.zero = index[static_cast<std::size_t>(rep[static_cast<std::size_t>(r.zero)])];
    m.name = "quotient(" + describe(*r.descriptor) + ", " + std::to_string(m.size) + " cosets)";
    m.add.resize(static_cast<std::size_t>(m.size) * m.size);
    m.act.resize(static_cast<std::size_t>(m.size) * r.size);
    for (int i = 0; i < m.size; ++i) {
        for (int j = 0; j < m.size; ++j)
            m.add[static_cast<std::size_t>(i) * m.size + j] =
                index[static_cast<std::size_t>(rep[static_cast<std::size_t>(r.add_at(
                    carrier[static_cast<std::size_t>(i)], carrier[static_cast<std::size_t>(j)]))])];
        for (int s = 0; s < r.size; ++s)
            m.act[static_cast<std::size_t>(i) * r.size + s] =
                index[static_cast<std::size_t>(rep[static_cast<std::size_t>(r.mul_at(
                    carrier[static_cast<std::size_t>(i)], s))])];
    }
    m.labels.reserve(carrier.size());
    for (int c : carrier) m.labels.push_back("[" + r.label(c) + "]");
    return std::make_shared<FiniteModule>(std::move(m));
}

ModuleHandle direct_sum(const ModuleHandle& a, const ModuleHandle& b, const Caps& caps) {
    if (a->ring.get() != b->ring.get())
        throw std::invalid_argument("direct sum: modules over different rings");
    const long long size = static_cast<long long>(a->size) * b->size;
    check_size(size, caps, "direct sum");

    FiniteModule m;
    m.ring = a->ring;
    m.size = static_cast<int>(size);
    m.zero = a->zero * b->size + b->zero;
    m.name = "sum(" + a->name + ", " + b->name + ")";
    m.add.resize(static_cast<std::size_t>(m.size) * m.size);
    m.act.resize(static_cast<std::size_t>(m.size) * m.ring->size);
    for (int x = 0; x < m.size; ++x) {
        const int x1 = x / b->size, x2 = x % b->size;
        for (int y = 0; y < m.size; ++y) {
            const int y1 = y / b->size, y2 = y % b->size;
            m.add[static_cast<std::size_t>(x) * m.size + y] =
                static_cast<std::int32_t>(a->add_at(x1, y1) * b->size + b->add_at(x2, y2));
        }
        for (int s = 0; s < m.ring->size; ++s)
            m.act[static_cast<std::size_t>(x) * m.ring->size + s] =
                static_cast<std::int32_t>(a->act_at(x1, s) * b->size + b->act_at(x2, s));
    }
    m.labels.reserve(static_cast<std::size_t>(m.size));
    for (int x = 0; x < m.size; ++x)
        m.labels.push_back("(" + a->label(x / b->size) + "," + b->label(x % b->size) + ")");
    return std::make_shared<FiniteModule>(std::move(m));
}

ModuleHandle submodule_module(const ModuleHandle& m, const BitSet& members) {
    return restrict_to(m->ring, to_list(members), m->labels, m->add, m->act, m->size, m->zero,
                       "submodule(" + m->name + ", " + std::to_string(members.count()) +
                           " elements)");
}

AxiomReport validate_module(const FiniteModule& m) {
    const int n = m.size;
    const int rs = m.ring->size;
    auto bad = [&](const char* axiom, std::vector<int> w) {
        return AxiomReport{false, axiom, std::move(w)};
    };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (m.add_at(m.add_at(x, y), z) != m.add_at(x, m.add_at(y, z)))
                    return bad("addition-associativity", {x, y, z});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (m.add_at(x, y) != m.add_at(y, x)) return bad("addition-commutativity", {x, y});
    for (int x = 0; x < n; ++x)
        if (m.add_at(x, m.zero) != x) return bad("zero-identity", {x});
    for (int x = 0; x < n; ++x) {
        bool found = false;
        for (int y = 0; y < n && !found; ++y) found = m.add_at(x, y) == m.zero;
        if (!found) return bad("additive-inverse", {x});
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int s = 0; s < rs; ++s)
                if (m.act_at(m.add_at(x, y), s) != m.add_at(m.act_at(x, s), m.act_at(y, s)))
                    return bad("action-distributes-over-module-addition", {x, y, s});
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < rs; ++s)
            for (int t = 0; t < rs; ++t) {
                if (m.act_at(x, m.ring->add_at(s, t)) !=
                    m.add_at(m.act_at(x, s), m.act_at(x, t)))
                    return bad("action-distributes-over-scalar-addition", {x, s, t});
                if (m.act_at(x, m.ring->mul_at(s, t)) != m.act_at(m.act_at(x, s), t))
                    return bad("action-scalar-associativity", {x, s, t});
            }
    for (int x = 0; x < n; ++x)
        if (m.act_at(x, m.ring->one) != x) return bad("action-identity", {x});
    return {};
}

Submodule submodule_generated(const ModuleHandle& m, const std::vector<int>& gens) {
    BitSet members(static_cast<std::size_t>(m->size));
    members.set(static_cast<std::size_t>(m->zero));
    for (int g : gens) members |= cyclic_orbit(*m, g);

    std::deque<int> work;
    std::vector<int> known;
    for (auto b = members.find_first(); b != BitSet::npos; b = members.find_next(b)) {
        work.push_back(static_cast<int>(b));
        known.push_back(static_cast<int>(b));
    }
    while (!work.empty()) {
        const int x = work.front();
        work.pop_front();
        for (std::size_t i = 0; i < known.size(); ++i) {
            const int s = m->add_at(x, known[i]);
            if (!members.test(static_cast<std::size_t>(s))) {
                members.set(static_cast<std::size_t>(s));
                known.push_back(s);
                work.push_back(s);
            }
        }
    }
    return Submodule{m, std::move(members)};
}

std::vector<int> greedy_generators(const ModuleHandle& m) {
    std::vector<int> gens;
    BitSet span(static_cast<std::size_t>(m->size));
    span.set(static_cast<std::size_t>(m->zero));
    while (span.count() < static_cast<std::size_t>(m->size)) {
        int g = -1;
        for (int x = 0; x < m->size; ++x)
            if (!span.test(static_cast<std::size_t>(x))) {
                g = x;
                break;
            }
        gens.push_back(g);
        span = module_sum(*m, span, cyclic_orbit(*m, g));
    }
    return gens;
}

std::vector<ModuleMap> hom_maps(const ModuleHandle& m, const ModuleHandle& n, const Caps& caps) {
    if (m->ring.get() != n->ring.get())
        throw std::invalid_argument("hom enumeration: modules over different rings");

    const auto gens = greedy_generators(m);
    const int depth = static_cast<int>(gens.size());

    // Prefix submodule sizes gate the graph test at each level.
    std::vector<std::size_t> prefix_size(static_cast<std::size_t>(depth) + 1);
    {
        BitSet span(static_cast<std::size_t>(m->size));
        span.set(static_cast<std::size_t>(m->zero));
        prefix_size[0] = 1;
        for (int i = 0; i < depth; ++i) {
            span = module_sum(*m, span, cyclic_orbit(*m, gens[static_cast<std::size_t>(i)]));
            prefix_size[static_cast<std::size_t>(i) + 1] = span.count();
        }
    }

    long long candidates = 1;
    for (int i = 0; i < depth; ++i) {
        candidates *= n->size;
        if (candidates > caps.hom)
            throw CapExceeded("hom enumeration: " + std::to_string(n->size) + "^" +
                              std::to_string(depth) + " candidate assignments exceed cap " +
                              std::to_string(caps.hom));
    }

    const int rs = m->ring->size;
    const std::size_t pair_bits = static_cast<std::size_t>(m->size) * n->size;
    auto pair_of = [&](int x, int y) {
        return static_cast<std::size_t>(x) * n->size + static_cast<std::size_t>(y);
    };

    // DFS over generator images. The partial map is kept as a submodule of
    // M (+) N; it extends to a hom of the prefix submodule iff its size
    // matches the prefix size.
    std::vector<BitSet> level_set(static_cast<std::size_t>(depth) + 1,
                                  BitSet(pair_bits));
    std::vector<std::vector<int>> level_list(static_cast<std::size_t>(depth) + 1);
    level_set[0].set(pair_of(m->zero, n->zero));
    level_list[0] = {static_cast<int>(pair_of(m->zero, n->zero))};

    std::vector<ModuleMap> out;
    std::vector<int> orbit_buf;
    orbit_buf.reserve(static_cast<std::size_t>(rs));

    auto pair_add = [&](int p, int q) {
        const int px = p / n->size, py = p % n->size;
        const int qx = q / n->size, qy = q % n->size;
        return static_cast<int>(pair_of(m->add_at(px, qx), n->add_at(py, qy)));
    };

    auto emit_leaf = [&](const std::vector<int>& pairs) {
        ModuleMap map;
        map.source = m;
        map.target = n;
        map.table.assign(static_cast<std::size_t>(m->size), 0);
        for (int p : pairs) map.table[static_cast<std::size_t>(p / n->size)] =
            static_cast<std::int32_t>(p % n->size);
        out.push_back(std::move(map));
    };

    auto dfs = [&](auto&& self, int level) -> void {
        if (level == depth) {
            emit_leaf(level_list[static_cast<std::size_t>(level)]);
            return;
        }
        const int g = gens[static_cast<std::size_t>(level)];
        for (int y = 0; y < n->size; ++y) {
            orbit_buf.clear();
            for (int s = 0; s < rs; ++s)
                orbit_buf.push_back(static_cast<int>(pair_of(m->act_at(g, s), n->act_at(y, s))));

            auto& tset = level_set[static_cast<std::size_t>(level) + 1];
            auto& tlist = level_list[static_cast<std::size_t>(level) + 1];
            tset = level_set[static_cast<std::size_t>(level)];
            tlist = level_list[static_cast<std::size_t>(level)];
            const auto& base_list = level_list[static_cast<std::size_t>(level)];

            bool overgrown = false;
            for (int s : orbit_buf) {
                if (tset.test(static_cast<std::size_t>(s))) continue;
                for (int t : base_list) {
                    const int p = pair_add(s, t);
                    if (!tset.test(static_cast<std::size_t>(p))) {
                        tset.set(static_cast<std::size_t>(p));
                        tlist.push_back(p);
                    }
                }
                if (tlist.size() > prefix_size[static_cast<std::size_t>(level) + 1]) {
                    overgrown = true;
                    break;
                }
            }
            if (!overgrown && tlist.size() == prefix_size[static_cast<std::size_t>(level) + 1])
                self(self, level + 1);
        }
    };
    dfs(dfs, 0);

    std::sort(out.begin(), out.end(),
              [](const ModuleMap& a, const ModuleMap& b) { return a.table < b.table; });
    return out;
}

EndomorphismRing endomorphism_ring(const ModuleHandle& m, const Caps& caps) {
    auto maps = hom_maps(m, m, caps);
    if (static_cast<long long>(maps.size()) > caps.size)
        throw CapExceeded("endomorphism ring: " + std::to_string(maps.size()) +
                          " maps exceed size cap " + std::to_string(caps.size));

    const auto gens = greedy_generators(m);
    const int depth = static_cast<int>(gens.size());

    // Endomorphisms are identified by their generator images: a dense key
    // table makes addition/composition lookups O(#generators).
    long long key_space = 1;
    for (int i = 0; i < depth; ++i) key_space *= m->size;
    auto key_of = [&](auto&& image_at) {
        long long key = 0;
        for (int i = 0; i < depth; ++i)
            key = key * m->size + image_at(gens[static_cast<std::size_t>(i)]);
        return key;
    };
    std::vector<int> index_of(static_cast<std::size_t>(std::max<long long>(key_space, 1)), -1);
    for (std::size_t i = 0; i < maps.size(); ++i)
        index_of[static_cast<std::size_t>(
            key_of([&](int g) { return maps[i].table[static_cast<std::size_t>(g)]; }))] =
            static_cast<int>(i);

    const int size = static_cast<int>(maps.size());
    FiniteRing ring;
    ring.size = size;
    ring.add.resize(static_cast<std::size_t>(size) * size);
    ring.mul.resize(static_cast<std::size_t>(size) * size);
    for (int i = 0; i < size; ++i) {
        const auto& f = maps[static_cast<std::size_t>(i)].table;
        for (int j = 0; j < size; ++j) {
            const auto& g = maps[static_cast<std::size_t>(j)].table;
            const long long add_key = key_of([&](int x) {
                return m->add_at(f[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(x)]);
            });
            const long long mul_key = key_of([&](int x) {
                return f[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])];
            });
            ring.add[static_cast<std::size_t>(i) * size + j] = index_of[static_cast<std::size_t>(add_key)];
            ring.mul[static_cast<std::size_t>(i) * size + j] = index_of[static_cast<std::size_t>(mul_key)];
        }
    }

    for (int i = 0; i < size; ++i) {
        const auto& t = maps[static_cast<std::size_t>(i)].table;
        bool zero = true, identity = true;
        for (int x = 0; x < m->size; ++x) {
            if (t[static_cast<std::size_t>(x)] != m->zero) zero = false;
            if (t[static_cast<std::size_t>(x)] != x) identity = false;
        }
        if (zero) ring.zero = i;
        if (identity) ring.one = i;
    }

    ring.labels.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        std::ostringstream os;
        os << "[";
        for (int x = 0; x < m->size; ++x) {
            if (x) os << " ";
            os << maps[static_cast<std::size_t>(i)].table[static_cast<std::size_t>(x)];
        }
        os << "]";
        ring.labels.push_back(os.str());
    }

    TableSpec spec;
    spec.size = size;
    spec.add.assign(ring.add.begin(), ring.add.end());
    spec.mul.assign(ring.mul.begin(), ring.mul.end());
    spec.zero = ring.zero;
    spec.one = ring.one;
    ring.descriptor = std::make_shared<RingDescriptor>(RingDescriptor{std::move(spec)});

    EndomorphismRing out;
    out.ring = std::make_shared<FiniteRing>(std::move(ring));
    out.module = m;
    out.maps = std::move(maps);
    return out;
}

std::optional<ModuleMap> is_isomorphic(const ModuleHandle& m, const ModuleHandle& n,
                                       const Caps& caps) {
    if (m->size != n->size) return std::nullopt;
    for (const auto& map : hom_maps(m, n, caps))
        if (map.is_bijective()) return map;
    return std::nullopt;
}

std::optional<ModuleMap> summand_witness_module(const ModuleHandle& m, const Submodule& sub,
                                                const Caps& caps) {
    if (sub.parent.get() != m.get())
        throw std::invalid_argument("summand witness: submodule of a different module");
    for (const auto& map : hom_maps(m, m, caps)) {
        bool idempotent = true;
        for (int x = 0; x < m->size && idempotent; ++x)
            idempotent = map.table[static_cast<std::size_t>(
                             map.table[static_cast<std::size_t>(x)])] ==
                         map.table[static_cast<std::size_t>(x)];
        if (idempotent && map.image() == sub.members) return map;
    }
    return std::nullopt;
}

std::vector<Submodule> enumerate_submodules(const ModuleHandle& m, int size_cap) {
    if (m->size > size_cap)
        throw CapExceeded("enumerate_submodules: module size " + std::to_string(m->size) +
                          " exceeds cap " + std::to_string(size_cap));

    BitSet zero_mod(static_cast<std::size_t>(m->size));
    zero_mod.set(static_cast<std::size_t>(m->zero));

    std::set<BitSet> seen{zero_mod};
    std::deque<BitSet> work{zero_mod};
    while (!work.empty()) {
        BitSet current = work.front();
        work.pop_front();
        for (int x = 0; x < m->size; ++x) {
            if (current.test(static_cast<std::size_t>(x))) continue;
            BitSet extended = module_sum(*m, current, cyclic_orbit(*m, x));
            if (seen.insert(extended).second) work.push_back(extended);
        }
    }

    std::vector<Submodule> out;
    out.reserve(seen.size());
    for (const auto& members : seen) out.push_back(Submodule{m, members});
    return out;
}

namespace {

struct SummandImages {
    std::vector<ModuleMap> endos;            // sorted by table
    std::vector<int> idempotent_indices;     // positions in endos
    std::map<BitSet, int> least_projection;  // image -> least endo index
    std::vector<std::pair<BitSet, int>> images;  // distinct, by least projection index
};

SummandImages collect_summands(const ModuleHandle& m, const Caps& caps) {
    SummandImages s;
    s.endos = hom_maps(m, m, caps);
    for (std::size_t i = 0; i < s.endos.size(); ++i) {
        const auto& t = s.endos[i].table;
        bool idem = true;
        for (int x = 0; x < m->size && idem; ++x)
            idem = t[static_cast<std::size_t>(t[static_cast<std::size_t>(x)])] ==
                   t[static_cast<std::size_t>(x)];
        if (!idem) continue;
        s.idempotent_indices.push_back(static_cast<int>(i));
        s.least_projection.emplace(s.endos[i].image(), static_cast<int>(i));
    }
    for (const auto& [set, idx] : s.least_projection) s.images.emplace_back(set, idx);
    std::sort(s.images.begin(), s.images.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return s;
}

Witness module_pair_witness(int pi, int pj, const BitSet& failing, std::string note) {
    Witness w;
    w.elems = {pi, pj};
    w.labels = {"projection#" + std::to_string(pi), "projection#" + std::to_string(pj)};
    w.members = to_list(failing);
    w.note = std::move(note);
    return w;
}

}  // namespace

PropertyVerdict module_property(const ModuleHandle& m, ModuleProp prop, const Caps& caps) {
    const char* name = to_string(prop);

    if (prop == ModuleProp::c2) {
        if (m->size > caps.c2)
            throw CapExceeded("module c2: size " + std::to_string(m->size) + " exceeds cap " +
                              std::to_string(caps.c2));
        const auto s = collect_summands(m, caps);
        const auto subs = enumerate_submodules(m, caps.c2);
        PropertyVerdict v{name, std::nullopt, "submodule-enumeration", true, std::nullopt};
        for (const auto& sub : subs) {
            if (s.least_projection.contains(sub.members)) continue;
            for (const auto& [image, pi] : s.images) {
                if (image.count() != sub.members.count()) continue;
                if (is_isomorphic(submodule_module(m, sub.members), submodule_module(m, image),
                                  caps)) {
                    v.holds = false;
                    Witness w;
                    w.elems = {pi};
                    w.labels = {"projection#" + std::to_string(pi)};
                    w.members = sub.member_list();
                    w.note =
                        "submodule is isomorphic to this projection's image but is not a summand";
                    v.witness = std::move(w);
                    return v;
                }
            }
        }
        return v;
    }

    const auto s = collect_summands(m, caps);
    PropertyVerdict v{name, std::nullopt, "idempotent-endomorphisms", true, std::nullopt};
    for (std::size_t i = 0; i < s.images.size(); ++i)
        for (std::size_t j = i; j < s.images.size(); ++j) {
            const auto& [a, pi] = s.images[i];
            const auto& [b, pj] = s.images[j];
            BitSet target;
            if (prop == ModuleProp::sip) {
                target = a & b;
            } else {
                const BitSet cap_set = a & b;
                if (prop == ModuleProp::c3 &&
                    !(cap_set.count() == 1 && cap_set.test(static_cast<std::size_t>(m->zero))))
                    continue;
                target = module_sum(*m, a, b);
            }
            if (!s.least_projection.contains(target)) {
                v.holds = false;
                v.witness = module_pair_witness(
                    pi, pj, target,
                    std::string(name) + ": no idempotent endomorphism has this image");
                return v;
            }
        }
    return v;
}

bool recheck_module_verdict(const ModuleHandle& m, const PropertyVerdict& v, const Caps& caps) {
    if (v.holds || !v.witness) return false;
    const auto& w = *v.witness;
    const auto s = collect_summands(m, caps);

    auto is_summand_set = [&](const BitSet& set) { return s.least_projection.contains(set); };

    if (v.property == "c2") {
        if (w.elems.size() != 1) return false;
        BitSet members(static_cast<std::size_t>(m->size));
        for (int x : w.members) members.set(static_cast<std::size_t>(x));
        if (is_summand_set(members)) return false;
        const int pi = w.elems[0];
        if (pi < 0 || pi >= static_cast<int>(s.endos.size())) return false;
        return is_isomorphic(submodule_module(m, members),
                             submodule_module(m, s.endos[static_cast<std::size_t>(pi)].image()),
                             caps)
            .has_value();
    }

    if (w.elems.size() != 2) return false;
    const int pi = w.elems[0], pj = w.elems[1];
    if (pi < 0 || pj < 0 || pi >= static_cast<int>(s.endos.size()) ||
        pj >= static_cast<int>(s.endos.size()))
        return false;
    const BitSet a = s.endos[static_cast<std::size_t>(pi)].image();
    const BitSet b = s.endos[static_cast<std::size_t>(pj)].image();
    if (v.property == "sip") return !is_summand_set(a & b);
    if (v.property == "c3") {
        const BitSet cap_set = a & b;
        if (!(cap_set.count() == 1 && cap_set.test(static_cast<std::size_t>(m->zero))))
            return false;
        return !is_summand_set(module_sum(*m, a, b));
    }
    if (v.property == "ssp") return !is_summand_set(module_sum(*m, a, b));
    return false;
}

namespace {

std::string witness_suffix(const PropertyVerdict& v) {
    if (v.holds || !v.witness) return "";
    std::ostringstream os;
    os << " (witness:";
    for (const auto& label : v.witness->labels) os << " " << label;
    if (!v.witness->members.empty()) os << ", " << v.witness->members.size() << " members";
    os << ")";
    return os.str();
}

}  // namespace

TheoremReport module_lemma_suite(const std::vector<ModuleHandle>& corpus, const Caps& caps) {
    TheoremReport report;
    report.subject = "module corpus (" + std::to_string(corpus.size()) + " modules)";

    for (const auto& m : corpus) {
        const bool is_free = m->is_free;

        {
            CheckRecord c{"c3-and-sip-imply-ssp", m->name, CheckStatus::passed,
                          "summand pairs of " + m->name, ""};
            try {
                const auto c3 = module_property(m, ModuleProp::c3, caps);
                const auto sip = module_property(m, ModuleProp::sip, caps);
                if (c3.holds && sip.holds) {
                    const auto ssp = module_property(m, ModuleProp::ssp, caps);
                    if (!ssp.holds) {
                        c.status = CheckStatus::failed;
                        c.detail = "c3 and sip hold but ssp fails" + witness_suffix(ssp);
                    }
                } else {
                    c.universe += " (vacuous: c3 or sip fails)";
                }
            } catch (const CapExceeded& e) {
                c.status = CheckStatus::skipped;
                c.detail = e.what();
            }
            report.checks.push_back(std::move(c));
        }

        if (is_free) {
            CheckRecord c{"free-ssp-matches-endomorphism-ring", m->name, CheckStatus::passed,
                          "free modules only", ""};
            try {
                const auto module_ssp = module_property(m, ModuleProp::ssp, caps);
                const auto er = endomorphism_ring(m, caps);
                const auto ring_ssp = check_ssp(er.ring, Side::right, SspMethod::definitional);
                if (module_ssp.holds != ring_ssp.holds) {
                    c.status = CheckStatus::failed;
                    c.detail = std::string("module ssp=") + (module_ssp.holds ? "true" : "false") +
                               " endomorphism ring ssp=" + (ring_ssp.holds ? "true" : "false") +
                               witness_suffix(module_ssp) + witness_suffix(ring_ssp);
                }
            } catch (const CapExceeded& e) {
                c.status = CheckStatus::skipped;
                c.detail = e.what();
            }
            report.checks.push_back(std::move(c));
        }

        if (is_free) {
            CheckRecord c{"endo-regular-iff-double-ssp", m->name, CheckStatus::passed,
                          "free modules only", ""};
            try {
                const auto er = endomorphism_ring(m, caps);
                const bool regular = is_regular_ring(*er.ring).holds;
                const auto doubled = direct_sum(m, m, caps);
                const bool double_ssp = module_property(doubled, ModuleProp::ssp, caps).holds;
                if (regular != double_ssp) {
                    c.status = CheckStatus::failed;
                    c.detail = std::string("endomorphism ring regular=") +
                               (regular ? "true" : "false") +
                               " doubled module ssp=" + (double_ssp ? "true" : "false");
                }
            } catch (const CapExceeded& e) {
                c.status = CheckStatus::skipped;
                c.detail = e.what();
            }
            report.checks.push_back(std::move(c));
        }

        {
            CheckRecord c{"double-c3-implies-c2", m->name, CheckStatus::passed,
                          "doubled module summand pairs", ""};
            try {
                const auto doubled = direct_sum(m, m, caps);
                const auto c3 = module_property(doubled, ModuleProp::c3, caps);
                if (c3.holds) {
                    const auto c2 = module_property(m, ModuleProp::c2, caps);
                    if (!c2.holds) {
                        c.status = CheckStatus::failed;
                        c.detail = "doubled module is c3 but the module is not c2" +
                                   witness_suffix(c2);
                    }
                } else {
                    c.universe += " (vacuous: doubled module is not c3)";
                }
            } catch (const CapExceeded& e) {
                c.status = CheckStatus::skipped;
                c.detail = e.what();
            }
            report.checks.push_back(std::move(c));
        }
    }

    return report;
}

}  // namespace summand
