#include "summand/properties.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "summand/module.hpp"

namespace summand {

namespace {

Witness make_witness(const FiniteRing& r, std::vector<int> elems, std::string note) {
    Witness w;
    w.elems = std::move(elems);
    w.labels.reserve(w.elems.size());
    for (int e : w.elems) w.labels.push_back(r.label(e));
    w.note = std::move(note);
    return w;
}

BitSet subgroup_sum(const FiniteRing& r, const BitSet& a, const std::vector<int>& alist,
                    const BitSet& b) {
    BitSet out = a;
    for (auto y = b.find_first(); y != BitSet::npos; y = b.find_next(y)) {
        if (out.test(y)) continue;
        for (int x : alist) out.set(static_cast<std::size_t>(r.add_at(x, static_cast<int>(y))));
    }
    return out;
}

bool is_zero_set(const FiniteRing& r, const BitSet& s) {
    return s.count() == 1 && s.test(static_cast<std::size_t>(r.zero));
}

// Computes the failure matrix over distinct summand pairs, then maps it back
// to the lexicographically least failing idempotent pair.
template <typename FailFn>
PropertyVerdict pair_scan(const RingHandle& r, const SummandIndex& idx, const char* property,
                          const char* method, Side side, FailFn&& fails, const char* note) {
    const int k = static_cast<int>(idx.summands.size());
    std::vector<char> fail(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            const bool f = fails(i, j);
            fail[static_cast<std::size_t>(i) * k + j] = f;
            fail[static_cast<std::size_t>(j) * k + i] = f;
        }

    PropertyVerdict v{property, side, method, true, std::nullopt};
    for (std::size_t p = 0; p < idx.idems.size(); ++p)
        for (std::size_t q = 0; q < idx.idems.size(); ++q)
            if (fail[static_cast<std::size_t>(idx.summand_of[p]) * k + idx.summand_of[q]]) {
                v.holds = false;
                v.witness = make_witness(*r, {idx.idems[p], idx.idems[q]}, note);
                return v;
            }
    return v;
}

}  // namespace

std::optional<int> is_regular_element(const FiniteRing& r, int a) {
    for (int b = 0; b < r.size; ++b)
        if (r.mul_at(r.mul_at(a, b), a) == a) return b;
    return std::nullopt;
}

PropertyVerdict is_regular_ring(const FiniteRing& r) {
    PropertyVerdict v{"regular", std::nullopt, "exhaustive-scan", true, std::nullopt};
    for (int a = 0; a < r.size; ++a) {
        if (!is_regular_element(r, a)) {
            v.holds = false;
            v.witness = make_witness(r, {a}, "no b with a*b*a = a");
            return v;
        }
    }
    return v;
}

PropertyVerdict is_abelian(const FiniteRing& r) {
    PropertyVerdict v{"abelian", std::nullopt, "exhaustive-scan", true, std::nullopt};
    for (int e = 0; e < r.size; ++e) {
        if (!r.is_idempotent(e)) continue;
        for (int x = 0; x < r.size; ++x)
            if (r.mul_at(e, x) != r.mul_at(x, e)) {
                v.holds = false;
                v.witness = make_witness(r, {e, x}, "idempotent does not commute");
                return v;
            }
    }
    return v;
}

PropertyVerdict check_ssp(const RingHandle& r, Side side, SspMethod method) {
    const auto idx = build_summand_index(r, side);

    if (method == SspMethod::definitional) {
        std::vector<std::vector<int>> lists;
        lists.reserve(idx.summands.size());
        for (const auto& s : idx.summands) lists.push_back(to_list(s));
        auto fails = [&](int i, int j) {
            const BitSet sum = subgroup_sum(*r, idx.summands[static_cast<std::size_t>(i)],
                                            lists[static_cast<std::size_t>(i)],
                                            idx.summands[static_cast<std::size_t>(j)]);
            return !idx.find(sum).has_value();
        };
        return pair_scan(r, idx, "ssp", "definitional", side, fails,
                         "sum of the two principal summands has no idempotent generator");
    }

    // Principal-ideal criterion on products of idempotents: memoized per
    // product element since distinct pairs often share the same product.
    std::vector<signed char> memo(static_cast<std::size_t>(r->size), -1);
    auto product_splits = [&](int g) {
        auto& m = memo[static_cast<std::size_t>(g)];
        if (m < 0) {
            BitSet set(static_cast<std::size_t>(r->size));
            if (side == Side::right)
                for (int x = 0; x < r->size; ++x)
                    set.set(static_cast<std::size_t>(r->mul_at(g, x)));
            else
                for (int x = 0; x < r->size; ++x)
                    set.set(static_cast<std::size_t>(r->mul_at(x, g)));
            m = idx.find(set).has_value() ? 1 : 0;
        }
        return m == 1;
    };

    PropertyVerdict v{"ssp", side, "ef-criterion", true, std::nullopt};
    for (int e : idx.idems)
        for (int f : idx.idems) {
            if (product_splits(r->mul_at(e, f))) continue;
            v.holds = false;
            v.witness = make_witness(
                *r, {e, f}, "the principal ideal of e*f has no idempotent generator");
            return v;
        }
    return v;
}

PropertyVerdict check_sip(const RingHandle& r, Side side) {
    const auto idx = build_summand_index(r, side);
    auto fails = [&](int i, int j) {
        const BitSet cap =
            idx.summands[static_cast<std::size_t>(i)] & idx.summands[static_cast<std::size_t>(j)];
        return !idx.find(cap).has_value();
    };
    return pair_scan(r, idx, "sip", "definitional", side, fails,
                     "intersection of the two principal summands has no idempotent generator");
}

PropertyVerdict check_c3(const RingHandle& r, Side side) {
    const auto idx = build_summand_index(r, side);
    std::vector<std::vector<int>> lists;
    lists.reserve(idx.summands.size());
    for (const auto& s : idx.summands) lists.push_back(to_list(s));
    auto fails = [&](int i, int j) {
        const BitSet cap =
            idx.summands[static_cast<std::size_t>(i)] & idx.summands[static_cast<std::size_t>(j)];
        if (!is_zero_set(*r, cap)) return false;
        const BitSet sum =
            subgroup_sum(*r, idx.summands[static_cast<std::size_t>(i)],
                         lists[static_cast<std::size_t>(i)], idx.summands[static_cast<std::size_t>(j)]);
        return !idx.find(sum).has_value();
    };
    return pair_scan(r, idx, "c3", "definitional", side, fails,
                     "summands intersect in zero but their sum has no idempotent generator");
}

PropertyVerdict check_c2(const RingHandle& r, Side side, const Caps& caps) {
    if (r->size > caps.c2)
        throw CapExceeded("c2: ring size " + std::to_string(r->size) + " exceeds cap " +
                          std::to_string(caps.c2));

    const auto ideals = enumerate_ideals(r, side, caps.c2);
    const auto idx = build_summand_index(r, side);

    // Distinct summands keyed by their least idempotent generator, ascending.
    std::vector<std::pair<int, const BitSet*>> summands;
    summands.reserve(idx.least_generator.size());
    for (const auto& [set, gen] : idx.least_generator) summands.emplace_back(gen, &set);
    std::sort(summands.begin(), summands.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const RingHandle module_ring = side == Side::right ? r : opposite_ring(*r);

    PropertyVerdict v{"c2", side, "ideal-enumeration", true, std::nullopt};
    for (const auto& ideal : ideals) {
        if (idx.find(ideal.members)) continue;
        const auto n_mod = ideal_module(Ideal{module_ring, Side::right, ideal.members}, caps);
        for (const auto& [gen, set] : summands) {
            if (set->count() != ideal.members.count()) continue;
            const auto s_mod = ideal_module(Ideal{module_ring, Side::right, *set}, caps);
            if (is_isomorphic(n_mod, s_mod, caps)) {
                v.holds = false;
                Witness w = make_witness(*r, {gen},
                                         "ideal is isomorphic to the summand generated by this "
                                         "idempotent but is not itself a summand");
                w.members = ideal.member_list();
                v.witness = std::move(w);
                return v;
            }
        }
    }
    return v;
}

RadicalResult semisimplicity(const FiniteRing& r) {
    const int n = r.size;
    std::vector<char> unit(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (r.mul_at(u, v) == r.one && r.mul_at(v, u) == r.one) {
                unit[static_cast<std::size_t>(u)] = 1;
                break;
            }

    std::vector<int> neg(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (r.add_at(a, b) == r.zero) {
                neg[static_cast<std::size_t>(a)] = b;
                break;
            }

    RadicalResult out;
    out.radical.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        bool quasi = true;
        for (int x = 0; x < n && quasi; ++x)
            quasi = unit[static_cast<std::size_t>(
                r.add_at(r.one, neg[static_cast<std::size_t>(r.mul_at(x, a))]))];
        if (quasi) out.radical.set(static_cast<std::size_t>(a));
    }

    // The quasi-invertible set must come out as a two-sided ideal.
    const auto members = to_list(out.radical);
    for (int a : members) {
        for (int b : members)
            if (!out.radical.test(static_cast<std::size_t>(r.add_at(a, b))))
                throw std::logic_error("radical set is not additively closed");
        for (int x = 0; x < n; ++x) {
            if (!out.radical.test(static_cast<std::size_t>(r.mul_at(x, a))) ||
                !out.radical.test(static_cast<std::size_t>(r.mul_at(a, x))))
                throw std::logic_error("radical set is not a two-sided ideal");
        }
    }

    out.is_semisimple = is_zero_set(r, out.radical);
    return out;
}

namespace {

std::string pair_text(const FiniteRing& r, int e, int f) {
    return "(" + r.label(e) + ", " + r.label(f) + ")";
}

}  // namespace

TheoremReport theorem_suite(const RingHandle& r, const Caps& caps) {
    TheoremReport report;
    report.subject = describe(*r->descriptor);

    const auto right_idx = build_summand_index(r, Side::right);
    const auto left_idx = build_summand_index(r, Side::left);
    const auto& idems = right_idx.idems;
    const std::string pair_universe =
        std::to_string(idems.size() * idems.size()) + " idempotent pairs";

    auto right_orbit = [&](int g) {
        BitSet set(static_cast<std::size_t>(r->size));
        for (int x = 0; x < r->size; ++x) set.set(static_cast<std::size_t>(r->mul_at(g, x)));
        return set;
    };
    auto left_orbit = [&](int g) {
        BitSet set(static_cast<std::size_t>(r->size));
        for (int x = 0; x < r->size; ++x) set.set(static_cast<std::size_t>(r->mul_at(x, g)));
        return set;
    };

    // Sum decomposition: eR + fR = eR + ((1-e)f)R with zero overlap.
    {
        CheckRecord c{"sum-decomposition", report.subject, CheckStatus::passed, pair_universe, ""};
        for (int e : idems) {
            const BitSet eR = right_orbit(e);
            const auto elist = to_list(eR);
            for (int f : idems) {
                const int g = r->mul_at(r->sub(r->one, e), f);
                const BitSet fR = right_orbit(f);
                const BitSet gR = right_orbit(g);
                const BitSet lhs = subgroup_sum(*r, eR, elist, fR);
                const BitSet rhs = subgroup_sum(*r, eR, elist, gR);
                if (lhs != rhs || !is_zero_set(*r, eR & gR)) {
                    c.status = CheckStatus::failed;
                    c.detail = "pair " + pair_text(*r, e, f);
                    break;
                }
            }
            if (c.status == CheckStatus::failed) break;
        }
        report.checks.push_back(std::move(c));
    }

    // The sum splits iff the reduced principal ideal splits.
    {
        CheckRecord c{"sum-reduction-equivalence", report.subject, CheckStatus::passed,
                      pair_universe, ""};
        for (int e : idems) {
            const BitSet eR = right_orbit(e);
            const auto elist = to_list(eR);
            for (int f : idems) {
                const int g = r->mul_at(r->sub(r->one, e), f);
                const BitSet sum = subgroup_sum(*r, eR, elist, right_orbit(f));
                const bool sum_splits = right_idx.find(sum).has_value();
                const bool reduced_splits = right_idx.find(right_orbit(g)).has_value();
                if (sum_splits != reduced_splits) {
                    c.status = CheckStatus::failed;
                    c.detail = "pair " + pair_text(*r, e, f);
                    break;
                }
            }
            if (c.status == CheckStatus::failed) break;
        }
        report.checks.push_back(std::move(c));
    }

    // Element regularity matches principal summands on both sides.
    {
        CheckRecord c{"principal-summand-regularity", report.subject, CheckStatus::passed,
                      std::to_string(r->size) + " elements", ""};
        for (int a = 0; a < r->size; ++a) {
            const bool regular = is_regular_element(*r, a).has_value();
            const bool right_splits = right_idx.find(right_orbit(a)).has_value();
            const bool left_splits = left_idx.find(left_orbit(a)).has_value();
            if (regular != right_splits || regular != left_splits) {
                c.status = CheckStatus::failed;
                c.detail = "element " + r->label(a);
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }

    const auto ssp_rd = check_ssp(r, Side::right, SspMethod::definitional);
    const auto ssp_re = check_ssp(r, Side::right, SspMethod::ef_criterion);
    const auto ssp_ld = check_ssp(r, Side::left, SspMethod::definitional);
    const auto ssp_le = check_ssp(r, Side::left, SspMethod::ef_criterion);

    {
        CheckRecord c{"ssp-four-way-agreement", report.subject, CheckStatus::passed,
                      "2 sides x 2 criteria", ""};
        if (!(ssp_rd.holds == ssp_re.holds && ssp_rd.holds == ssp_ld.holds &&
              ssp_rd.holds == ssp_le.holds)) {
            c.status = CheckStatus::failed;
            std::ostringstream os;
            os << "right/definitional=" << ssp_rd.holds << " right/ef=" << ssp_re.holds
               << " left/definitional=" << ssp_ld.holds << " left/ef=" << ssp_le.holds;
            c.detail = os.str();
        }
        report.checks.push_back(std::move(c));
    }

    const auto sip_r = check_sip(r, Side::right);
    const auto sip_l = check_sip(r, Side::left);
    const auto c3_r = check_c3(r, Side::right);
    const auto c3_l = check_c3(r, Side::left);

    {
        CheckRecord c{"ssp-iff-c3-and-sip", report.subject, CheckStatus::passed,
                      "both sides", ""};
        const bool right_conj = c3_r.holds && sip_r.holds;
        const bool left_conj = c3_l.holds && sip_l.holds;
        if (ssp_rd.holds != right_conj || ssp_rd.holds != left_conj) {
            c.status = CheckStatus::failed;
            std::ostringstream os;
            os << "ssp=" << ssp_rd.holds << " right(c3=" << c3_r.holds << ",sip=" << sip_r.holds
               << ") left(c3=" << c3_l.holds << ",sip=" << sip_l.holds << ")";
            c.detail = os.str();
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckRecord c{"regular-or-abelian-implies-ssp", report.subject, CheckStatus::passed,
                      "ring-level implication", ""};
        const auto reg = is_regular_ring(*r);
        const auto ab = is_abelian(*r);
        if ((reg.holds || ab.holds) && !ssp_rd.holds) {
            c.status = CheckStatus::failed;
            c.detail = std::string("regular=") + (reg.holds ? "true" : "false") +
                       " abelian=" + (ab.holds ? "true" : "false") + " but ssp=false";
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckRecord c{"corner-rings-inherit-ssp", report.subject, CheckStatus::passed,
                      std::to_string(idems.size()) + " corner rings", ""};
        if (!ssp_rd.holds) {
            c.universe = "vacuous: ring is not ssp";
        } else {
            for (int e : idems) {
                const auto corner = corner_ring(*r, e);
                const auto verdict = check_ssp(corner.ring, Side::right, SspMethod::definitional);
                if (!verdict.holds) {
                    c.status = CheckStatus::failed;
                    c.detail = "corner at idempotent " + r->label(e);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckRecord c{"matrix-ssp-iff-base-regular", report.subject, CheckStatus::passed, "", ""};
        try {
            const auto m2 = construct(make_matrix(2, r->descriptor), caps);
            c.universe = "2x2 matrix ring, " + std::to_string(m2->size) + " elements";
            const bool regular = is_regular_ring(*r).holds;
            const bool matrix_ssp = check_ssp(m2, Side::right, SspMethod::definitional).holds;
            if (regular != matrix_ssp) {
                c.status = CheckStatus::failed;
                c.detail = std::string("base regular=") + (regular ? "true" : "false") +
                           " but matrix ssp=" + (matrix_ssp ? "true" : "false");
            }
        } catch (const CapExceeded& e) {
            c.status = CheckStatus::skipped;
            c.detail = e.what();
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckRecord c{"summand-intersection-annihilator-identity", report.subject,
                      CheckStatus::passed, pair_universe, ""};
        for (int e : idems) {
            const BitSet eR = right_orbit(e);
            const BitSet le = left_orbit(r->sub(r->one, e));
            const auto le_list = to_list(le);
            for (int f : idems) {
                const BitSet cap = eR & right_orbit(f);
                const BitSet single =
                    annihilator(r, Side::right, {r->sub(r->one, e)}).members &
                    annihilator(r, Side::right, {r->sub(r->one, f)}).members;
                const BitSet joint_set =
                    subgroup_sum(*r, le, le_list, left_orbit(r->sub(r->one, f)));
                const BitSet joint = annihilator(r, Side::right, to_list(joint_set)).members;
                if (cap != single || cap != joint) {
                    c.status = CheckStatus::failed;
                    c.detail = "pair " + pair_text(*r, e, f);
                    break;
                }
            }
            if (c.status == CheckStatus::failed) break;
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

std::vector<TheoremReport> verify_suites(const RingHandle& r, const Caps& caps,
                                         std::vector<std::pair<std::string, double>>* timings) {
    const auto timed = [&](const std::string& label, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        auto result = fn();
        if (timings)
            timings->emplace_back(
                label, std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count());
        return result;
    };

    std::vector<TheoremReport> out;
    out.push_back(timed("theorem-suite", [&] { return theorem_suite(r, caps); }));
    std::vector<ModuleHandle> modules;
    modules.push_back(free_module(r, 1, caps));
    try {
        modules.push_back(free_module(r, 2, caps));
    } catch (const CapExceeded&) {
    }
    out.push_back(
        timed("module-lemma-suite", [&] { return module_lemma_suite(modules, caps); }));
    return out;
}

bool recheck_verdict(const RingHandle& r, const PropertyVerdict& v, const Caps& caps) {
    if (v.holds || !v.witness) return false;
    const auto& w = *v.witness;
    const Side side = v.side.value_or(Side::right);

    if (v.property == "regular") {
        return w.elems.size() == 1 && !is_regular_element(*r, w.elems[0]).has_value();
    }
    if (v.property == "abelian") {
        if (w.elems.size() != 2) return false;
        const int e = w.elems[0], x = w.elems[1];
        return r->is_idempotent(e) && r->mul_at(e, x) != r->mul_at(x, e);
    }
    if (v.property == "ssp" && v.method == "ef-criterion") {
        if (w.elems.size() != 2) return false;
        const int e = w.elems[0], f = w.elems[1];
        if (!r->is_idempotent(e) || !r->is_idempotent(f)) return false;
        return !summand_witness(principal_ideal(r, side, r->mul_at(e, f))).has_value();
    }
    if (v.property == "ssp" || v.property == "c3") {
        if (w.elems.size() != 2) return false;
        const int e = w.elems[0], f = w.elems[1];
        if (!r->is_idempotent(e) || !r->is_idempotent(f)) return false;
        const auto a = principal_ideal(r, side, e);
        const auto b = principal_ideal(r, side, f);
        if (v.property == "c3" &&
            !is_zero_set(*r, ideal_intersect(a, b).members))
            return false;
        return !summand_witness(ideal_sum(a, b)).has_value();
    }
    if (v.property == "sip") {
        if (w.elems.size() != 2) return false;
        const int e = w.elems[0], f = w.elems[1];
        if (!r->is_idempotent(e) || !r->is_idempotent(f)) return false;
        const auto a = principal_ideal(r, side, e);
        const auto b = principal_ideal(r, side, f);
        return !summand_witness(ideal_intersect(a, b)).has_value();
    }
    if (v.property == "c2") {
        if (w.elems.size() != 1 || w.members.empty()) return false;
        BitSet members(static_cast<std::size_t>(r->size));
        for (int m : w.members) members.set(static_cast<std::size_t>(m));
        const Ideal n{r, side, members};
        if (summand_witness(n).has_value()) return false;
        const RingHandle module_ring = side == Side::right ? r : opposite_ring(*r);
        const auto n_mod = ideal_module(Ideal{module_ring, Side::right, members}, caps);
        const auto s_mod = ideal_module(
            Ideal{module_ring, Side::right, principal_ideal(r, side, w.elems[0]).members}, caps);
        return is_isomorphic(n_mod, s_mod, caps).has_value();
    }
    return false;
}

}  // namespace summand
