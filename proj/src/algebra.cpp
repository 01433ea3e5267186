#include "sci/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace sci {

CheckResult check_ok() { return {true, {}}; }
CheckResult check_fail(std::string detail) { return {false, std::move(detail)}; }

namespace {

std::string nm(const FiniteStructure& s, Elem a) { return s.names[a]; }

std::string pair_witness(const FiniteStructure& s, Elem a, Elem b) {
    return "a=" + nm(s, a) + ", b=" + nm(s, b);
}

bool lattice_le(const FiniteStructure& s, Elem a, Elem b) { return s.fand(a, b) == a; }

}  // namespace

CheckResult is_boolean_algebra(const FiniteStructure& s) {
    const unsigned n = s.n;
    for (Elem a = 0; a < n; ++a) {
        if (s.fand(a, s.top) != a) return check_fail("a & top != a at a=" + nm(s, a));
        if (s.For(a, s.bot) != a) return check_fail("a | bot != a at a=" + nm(s, a));
        if (s.fand(a, s.fnot(a)) != s.bot) return check_fail("a & ~a != bot at a=" + nm(s, a));
        if (s.For(a, s.fnot(a)) != s.top) return check_fail("a | ~a != top at a=" + nm(s, a));
        for (Elem b = 0; b < n; ++b) {
            if (s.fand(a, b) != s.fand(b, a)) return check_fail("& not commutative at " + pair_witness(s, a, b));
            if (s.For(a, b) != s.For(b, a)) return check_fail("| not commutative at " + pair_witness(s, a, b));
            if (s.fand(a, s.For(a, b)) != a) return check_fail("absorption a&(a|b) fails at " + pair_witness(s, a, b));
            if (s.For(a, s.fand(a, b)) != a) return check_fail("absorption a|(a&b) fails at " + pair_witness(s, a, b));
            if (s.fimp(a, b) != s.For(s.fnot(a), b))
                return check_fail("imp(a,b) != ~a | b at " + pair_witness(s, a, b));
            for (Elem c = 0; c < n; ++c) {
                if (s.fand(s.fand(a, b), c) != s.fand(a, s.fand(b, c)))
                    return check_fail("& not associative at (" + nm(s, a) + "," + nm(s, b) + "," + nm(s, c) + ")");
                if (s.For(s.For(a, b), c) != s.For(a, s.For(b, c)))
                    return check_fail("| not associative at (" + nm(s, a) + "," + nm(s, b) + "," + nm(s, c) + ")");
                if (s.fand(a, s.For(b, c)) != s.For(s.fand(a, b), s.fand(a, c)))
                    return check_fail("& does not distribute over | at (" + nm(s, a) + "," + nm(s, b) + "," + nm(s, c) + ")");
                if (s.For(a, s.fand(b, c)) != s.fand(s.For(a, b), s.For(a, c)))
                    return check_fail("| does not distribute over & at (" + nm(s, a) + "," + nm(s, b) + "," + nm(s, c) + ")");
            }
        }
    }
    return check_ok();
}

std::vector<bool> lattice_order(const FiniteStructure& s) {
    if (auto r = is_boolean_algebra(s); !r) throw std::invalid_argument("lattice_order: " + r.detail);
    std::vector<bool> le(std::size_t(s.n) * s.n);
    for (Elem a = 0; a < s.n; ++a)
        for (Elem b = 0; b < s.n; ++b) le[a * s.n + b] = lattice_le(s, a, b);
    return le;
}

Congruence congruence_from_preorder(const FiniteStructure& s) {
    if (!s.has_preorder()) throw std::invalid_argument("congruence_from_preorder: no preorder attached");
    Congruence c;
    c.class_of.assign(s.n, 0);
    std::vector<bool> seen(s.n, false);
    for (Elem a = 0; a < s.n; ++a) {
        if (seen[a]) continue;
        unsigned cid = static_cast<unsigned>(c.classes.size());
        std::vector<Elem> members;
        for (Elem b = a; b < s.n; ++b) {
            if (!seen[b] && s.le(a, b) && s.le(b, a)) {
                seen[b] = true;
                c.class_of[b] = cid;
                members.push_back(b);
            }
        }
        c.classes.push_back(std::move(members));
    }
    return c;
}

namespace {

CheckResult congruence_violation(const FiniteStructure& s, const char* opname, Elem a, Elem a2, Elem b,
                                 Elem b2) {
    return check_fail(std::string("~ is not a congruence for ") + opname + " at cell (" + nm(s, a) + "~" +
                      nm(s, a2) + ", " + nm(s, b) + "~" + nm(s, b2) + ")");
}

}  // namespace

CheckResult check_congruence(const FiniteStructure& s, const Congruence& c) {
    const auto cls = [&](Elem e) { return c.class_of[e]; };
    for (Elem a = 0; a < s.n; ++a) {
        for (Elem a2 = 0; a2 < s.n; ++a2) {
            if (cls(a) != cls(a2)) continue;
            if (cls(s.fnot(a)) != cls(s.fnot(a2))) return congruence_violation(s, "~", a, a2, a, a2);
            for (Elem b = 0; b < s.n; ++b) {
                for (Elem b2 = 0; b2 < s.n; ++b2) {
                    if (cls(b) != cls(b2)) continue;
                    if (cls(s.fand(a, b)) != cls(s.fand(a2, b2)))
                        return congruence_violation(s, "&", a, a2, b, b2);
                    if (cls(s.For(a, b)) != cls(s.For(a2, b2)))
                        return congruence_violation(s, "|", a, a2, b, b2);
                    if (cls(s.fimp(a, b)) != cls(s.fimp(a2, b2)))
                        return congruence_violation(s, "->", a, a2, b, b2);
                }
            }
        }
    }
    return check_ok();
}

FiniteStructure quotient(const FiniteStructure& s, const Congruence& c) {
    if (auto r = check_congruence(s, c); !r) throw std::runtime_error("quotient: " + r.detail);
    FiniteStructure q;
    q.n = static_cast<unsigned>(c.classes.size());
    q.names.resize(q.n);
    std::vector<Elem> rep(q.n);
    for (unsigned i = 0; i < q.n; ++i) {
        rep[i] = c.classes[i].front();
        q.names[i] = "[" + s.names[rep[i]] + "]";
    }
    const auto cls = [&](Elem e) { return c.class_of[e]; };
    q.op_and.resize(std::size_t(q.n) * q.n);
    q.op_or.resize(std::size_t(q.n) * q.n);
    q.op_imp.resize(std::size_t(q.n) * q.n);
    q.op_not.resize(q.n);
    for (unsigned i = 0; i < q.n; ++i) {
        q.op_not[i] = cls(s.fnot(rep[i]));
        for (unsigned j = 0; j < q.n; ++j) {
            q.op_and[i * q.n + j] = cls(s.fand(rep[i], rep[j]));
            q.op_or[i * q.n + j] = cls(s.For(rep[i], rep[j]));
            q.op_imp[i * q.n + j] = cls(s.fimp(rep[i], rep[j]));
        }
    }
    q.bot = cls(s.bot);
    q.top = cls(s.top);
    if (s.has_preorder()) {
        q.preorder.assign(std::size_t(q.n) * q.n, false);
        for (unsigned i = 0; i < q.n; ++i)
            for (unsigned j = 0; j < q.n; ++j) q.preorder[i * q.n + j] = s.le(rep[i], rep[j]);
    }
    return q;
}

CheckResult is_boolean_prealgebra(const FiniteStructure& s) {
    if (!s.has_preorder()) return check_fail("(a) no preorder attached");
    for (Elem a = 0; a < s.n; ++a)
        if (!s.le(a, a)) return check_fail("(a) preorder not reflexive at a=" + nm(s, a));
    for (Elem a = 0; a < s.n; ++a)
        for (Elem b = 0; b < s.n; ++b) {
            if (!s.le(a, b)) continue;
            for (Elem c = 0; c < s.n; ++c)
                if (s.le(b, c) && !s.le(a, c))
                    return check_fail("(a) preorder not transitive at (" + nm(s, a) + "," + nm(s, b) + "," +
                                      nm(s, c) + ")");
        }
    Congruence c = congruence_from_preorder(s);
    if (auto r = check_congruence(s, c); !r) return check_fail("(b) " + r.detail);
    FiniteStructure q = quotient(s, c);
    if (auto r = is_boolean_algebra(q); !r) return check_fail("(c) quotient: " + r.detail);
    for (Elem a = 0; a < s.n; ++a) {
        for (Elem b = 0; b < s.n; ++b) {
            const Elem m = s.fand(a, b);
            const bool approx = s.le(m, a) && s.le(a, m);
            if (s.le(a, b) != approx) return check_fail("(d) witness " + pair_witness(s, a, b));
        }
    }
    return check_ok();
}

// ── Filters ──────────────────────────────────────────────────────────────────

namespace {

// preorder if attached, otherwise the lattice order of the tables
bool eff_le(const FiniteStructure& s, Elem a, Elem b) {
    return s.has_preorder() ? s.le(a, b) : lattice_le(s, a, b);
}

}  // namespace

bool is_filter_direct(const FiniteStructure& s, const std::vector<bool>& subset) {
    for (Elem a = 0; a < s.n; ++a) {
        if (!subset[a]) continue;
        for (Elem b = 0; b < s.n; ++b) {
            if (subset[b] && !subset[s.fand(a, b)]) return false;
            if (eff_le(s, a, b) && !subset[b]) return false;
        }
    }
    return true;
}

bool is_filter_via_quotient(const FiniteStructure& s, const std::vector<bool>& subset) {
    // closure under ~
    for (Elem a = 0; a < s.n; ++a)
        for (Elem b = 0; b < s.n; ++b)
            if (eff_le(s, a, b) && eff_le(s, b, a) && subset[a] != subset[b]) return false;
    // image in the quotient must be meet-closed and upward closed
    FiniteStructure t = s;
    if (!t.has_preorder()) {
        t.preorder.assign(std::size_t(t.n) * t.n, false);
        for (Elem a = 0; a < t.n; ++a)
            for (Elem b = 0; b < t.n; ++b) t.preorder[a * t.n + b] = lattice_le(t, a, b);
    }
    Congruence c = congruence_from_preorder(t);
    FiniteStructure q = quotient(t, c);
    std::vector<bool> img(q.n, false);
    for (Elem a = 0; a < s.n; ++a)
        if (subset[a]) img[c.class_of[a]] = true;
    for (Elem x = 0; x < q.n; ++x) {
        if (!img[x]) continue;
        for (Elem y = 0; y < q.n; ++y) {
            if (img[y] && !img[q.fand(x, y)]) return false;
            if (lattice_le(q, x, y) && !img[y]) return false;
        }
    }
    return true;
}

bool is_filter(const FiniteStructure& s, const std::vector<bool>& subset) {
    const bool direct = is_filter_direct(s, subset);
    const bool via_quotient = is_filter_via_quotient(s, subset);
    if (direct != via_quotient)
        throw std::logic_error("filter characterizations disagree on a subset");
    return direct;
}

bool is_proper_filter(const FiniteStructure& s, const std::vector<bool>& subset) {
    return is_filter(s, subset) && !subset[s.bot];
}

bool is_ultrafilter(const FiniteStructure& s, const std::vector<bool>& subset) {
    if (!is_proper_filter(s, subset)) return false;
    if (!subset[s.top]) return false;  // non-empty
    for (Elem a = 0; a < s.n; ++a)
        if (!subset[a] && !subset[s.fnot(a)]) return false;
    return true;
}

std::vector<std::vector<bool>> enumerate_ultrafilters(const FiniteStructure& s) {
    if (s.n > 20) throw std::invalid_argument("enumerate_ultrafilters: carrier too large");
    std::vector<std::vector<bool>> out;
    const std::uint64_t total = 1ull << s.n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<bool> subset(s.n);
        for (Elem e = 0; e < s.n; ++e) subset[e] = (mask >> e) & 1u;
        if (is_ultrafilter(s, subset)) out.push_back(std::move(subset));
    }
    return out;
}

// ── Model classes ────────────────────────────────────────────────────────────

const char* class_name(ClassId c) noexcept {
    switch (c) {
        case ClassId::BooleanPrealgebra: return "BooleanPrealgebra";
        case ClassId::SCIModel: return "SCIModel";
        case ClassId::SCI3Model: return "SCI3Model";
        case ClassId::S1SPAlgebra: return "S1SPAlgebra";
        case ClassId::S3Algebra: return "S3Algebra";
        case ClassId::StrongS4Algebra: return "StrongS4Algebra";
        case ClassId::InteriorAlgebra: return "InteriorAlgebra";
        case ClassId::S5Algebra: return "S5Algebra";
    }
    return "?";
}

std::optional<ClassId> parse_class(const std::string& name) noexcept {
    if (name == "prealgebra") return ClassId::BooleanPrealgebra;
    if (name == "sci") return ClassId::SCIModel;
    if (name == "sci3") return ClassId::SCI3Model;
    if (name == "s1sp") return ClassId::S1SPAlgebra;
    if (name == "s3") return ClassId::S3Algebra;
    if (name == "s4") return ClassId::StrongS4Algebra;
    if (name == "interior") return ClassId::InteriorAlgebra;
    if (name == "s5") return ClassId::S5Algebra;
    return std::nullopt;
}

CheckResult is_sci_model(const FiniteStructure& s) {
    if (!s.has_equiv()) return check_fail("no identity table attached");
    if (!s.has_true_set()) return check_fail("no designated set attached");
    if (!s.has_preorder()) return check_fail("no preorder attached");
    if (auto r = is_boolean_prealgebra(s); !r) return r;
    if (!is_ultrafilter(s, s.true_set)) return check_fail("designated set is not an ultrafilter");
    for (Elem a = 0; a < s.n; ++a)
        for (Elem b = 0; b < s.n; ++b) {
            const bool designated = s.in_true(s.fequiv(a, b));
            if (designated != (a == b))
                return check_fail("identity condition fails at " + pair_witness(s, a, b));
        }
    return check_ok();
}

CheckResult is_sci3_model(const FiniteStructure& s) {
    if (auto r = is_sci_model(s); !r) return r;
    if (auto r = is_boolean_algebra(s); !r) return check_fail("carrier is not a Boolean algebra: " + r.detail);
    for (Elem a = 0; a < s.n; ++a)
        for (Elem b = 0; b < s.n; ++b) {
            if (!lattice_le(s, a, b)) continue;
            if (!lattice_le(s, s.fequiv(a, s.top), s.fequiv(b, s.top)))
                return check_fail("equiv(.,top) not monotone at " + pair_witness(s, a, b));
        }
    return check_ok();
}

namespace {

CheckResult box_expansion_common(const FiniteStructure& s, bool need_true_set) {
    if (!s.has_box()) return check_fail("no box table attached");
    if (auto r = is_boolean_algebra(s); !r) return check_fail("carrier is not a Boolean algebra: " + r.detail);
    if (need_true_set) {
        if (!s.has_true_set()) return check_fail("no designated set attached");
        if (!is_ultrafilter(s, s.true_set)) return check_fail("designated set is not an ultrafilter");
    }
    return check_ok();
}

CheckResult box_condition_1(const FiniteStructure& s) {
    for (Elem a = 0; a < s.n; ++a) {
        const bool designated = s.in_true(s.fbox(a));
        if (designated != (a == s.top))
            return check_fail("condition (1) fails at a=" + nm(s, a));
    }
    return check_ok();
}

CheckResult box_condition_2(const FiniteStructure& s) {
    for (Elem a = 0; a < s.n; ++a)
        if (!lattice_le(s, s.fbox(a), a)) return check_fail("condition (2) fails at a=" + nm(s, a));
    return check_ok();
}

}  // namespace

CheckResult is_s1sp_algebra(const FiniteStructure& s) {
    if (auto r = box_expansion_common(s, true); !r) return r;
    if (auto r = box_condition_1(s); !r) return r;
    if (auto r = box_condition_2(s); !r) return r;
    for (Elem a = 0; a < s.n; ++a)
        for (Elem b = 0; b < s.n; ++b)
            for (Elem c = 0; c < s.n; ++c) {
                const Elem lhs = s.fand(s.fbox(s.fimp(a, b)), s.fbox(s.fimp(b, c)));
                if (!lattice_le(s, lhs, s.fbox(s.fimp(a, c))))
                    return check_fail("condition (3) fails at (" + nm(s, a) + "," + nm(s, b) + "," + nm(s, c) + ")");
            }
    return check_ok();
}

CheckResult is_s3_algebra(const FiniteStructure& s) {
    if (auto r = box_expansion_common(s, true); !r) return r;
    if (auto r = box_condition_1(s); !r) return r;
    if (auto r = box_condition_2(s); !r) return r;
    for (Elem a = 0; a < s.n; ++a)
        for (Elem b = 0; b < s.n; ++b)
            if (!lattice_le(s, s.fbox(s.fimp(a, b)), s.fbox(s.fimp(s.fbox(a), s.fbox(b)))))
                return check_fail("condition (S3) fails at " + pair_witness(s, a, b));
    return check_ok();
}

CheckResult is_strong_s4_algebra(const FiniteStructure& s) {
    if (auto r = box_expansion_common(s, true); !r) return r;
    if (auto r = box_condition_1(s); !r) return r;
    if (auto r = box_condition_2(s); !r) return r;
    for (Elem a = 0; a < s.n; ++a) {
        if (!lattice_le(s, s.fbox(a), s.fbox(s.fbox(a))))
            return check_fail("condition (S4) fails at a=" + nm(s, a));
        for (Elem b = 0; b < s.n; ++b)
            if (!lattice_le(s, s.fbox(s.fimp(a, b)), s.fimp(s.fbox(a), s.fbox(b))))
                return check_fail("condition (K) fails at " + pair_witness(s, a, b));
    }
    return check_ok();
}

CheckResult is_interior_algebra(const FiniteStructure& s) {
    if (auto r = box_expansion_common(s, false); !r) return r;
    if (s.fbox(s.top) != s.top) return check_fail("box(top) != top");
    for (Elem a = 0; a < s.n; ++a) {
        if (!lattice_le(s, s.fbox(a), a)) return check_fail("box(a) <= a fails at a=" + nm(s, a));
        if (s.fbox(s.fbox(a)) != s.fbox(a)) return check_fail("box not idempotent at a=" + nm(s, a));
        for (Elem b = 0; b < s.n; ++b)
            if (s.fbox(s.fand(a, b)) != s.fand(s.fbox(a), s.fbox(b)))
                return check_fail("box(a&b) != box(a)&box(b) at " + pair_witness(s, a, b));
    }
    return check_ok();
}

CheckResult is_s5_algebra(const FiniteStructure& s) {
    if (auto r = box_expansion_common(s, false); !r) return r;
    for (Elem a = 0; a < s.n; ++a) {
        const Elem want = (a == s.top) ? s.top : s.bot;
        if (s.fbox(a) != want) return check_fail("box table differs from the two-valued necessity at a=" + nm(s, a));
    }
    return check_ok();
}

CheckResult check_class(const FiniteStructure& s, ClassId c) {
    switch (c) {
        case ClassId::BooleanPrealgebra: return is_boolean_prealgebra(s);
        case ClassId::SCIModel: return is_sci_model(s);
        case ClassId::SCI3Model: return is_sci3_model(s);
        case ClassId::S1SPAlgebra: return is_s1sp_algebra(s);
        case ClassId::S3Algebra: return is_s3_algebra(s);
        case ClassId::StrongS4Algebra: return is_strong_s4_algebra(s);
        case ClassId::InteriorAlgebra: return is_interior_algebra(s);
        case ClassId::S5Algebra: return is_s5_algebra(s);
    }
    throw std::logic_error("unreachable");
}

std::vector<ClassId> classify(const FiniteStructure& s) {
    std::vector<ClassId> out;
    for (ClassId c : kAllClasses)
        if (check_class(s, c)) out.push_back(c);
    return out;
}

Elem diamond(const FiniteStructure& s, Elem a) {
    if (!s.has_box()) throw std::invalid_argument("diamond: no box table attached");
    return s.fnot(s.fbox(s.fnot(a)));
}

// ── Constructions ────────────────────────────────────────────────────────────

std::vector<Elem> heyting_rpc_table(const FiniteStructure& lattice) {
    const unsigned n = lattice.n;
    auto le = [&](Elem a, Elem b) { return lattice.fand(a, b) == a; };
    std::vector<Elem> rpc(std::size_t(n) * n);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            // greatest c with a & c <= b
            bool found = false;
            Elem best = 0;
            for (Elem c = 0; c < n; ++c) {
                if (!le(lattice.fand(a, c), b)) continue;
                if (!found || le(best, c)) {
                    // candidate; must dominate every previous solution
                    best = c;
                }
                found = true;
            }
            // verify best dominates all solutions (otherwise no greatest one)
            for (Elem c = 0; c < n; ++c)
                if (le(lattice.fand(a, c), b) && !le(c, best))
                    throw std::invalid_argument("heyting_rpc_table: no relative pseudo-complement at (" +
                                                lattice.names[a] + "," + lattice.names[b] + ")");
            rpc[a * n + b] = best;
        }
    }
    return rpc;
}

namespace {

bool is_lattice_filter_nonempty(const FiniteStructure& lat, const std::vector<bool>& f) {
    auto le = [&](Elem a, Elem b) { return lat.fand(a, b) == a; };
    if (!f[lat.top]) return false;
    for (Elem a = 0; a < lat.n; ++a) {
        if (!f[a]) continue;
        for (Elem b = 0; b < lat.n; ++b) {
            if (f[b] && !f[lat.fand(a, b)]) return false;
            if (le(a, b) && !f[b]) return false;
        }
    }
    return true;
}

}  // namespace

bool is_lattice_ultrafilter(const FiniteStructure& lattice, const std::vector<bool>& subset) {
    if (!is_lattice_filter_nonempty(lattice, subset)) return false;
    if (subset[lattice.bot]) return false;
    // maximal among proper filters: no proper filter strictly contains it
    if (lattice.n > 20) throw std::invalid_argument("is_lattice_ultrafilter: carrier too large");
    const std::uint64_t total = 1ull << lattice.n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<bool> g(lattice.n);
        bool superset = true, strict = false;
        for (Elem e = 0; e < lattice.n; ++e) {
            g[e] = (mask >> e) & 1u;
            if (subset[e] && !g[e]) superset = false;
            if (g[e] && !subset[e]) strict = true;
        }
        if (!superset || !strict) continue;
        if (!g[lattice.bot] && is_lattice_filter_nonempty(lattice, g)) return false;
    }
    return true;
}

FiniteStructure heyting_to_prealgebra(const FiniteStructure& heyting, const std::vector<bool>& ultrafilter) {
    if (ultrafilter.size() != heyting.n)
        throw std::invalid_argument("heyting_to_prealgebra: subset size mismatch");
    if (!is_lattice_ultrafilter(heyting, ultrafilter))
        throw std::invalid_argument("heyting_to_prealgebra: designated subset is not an ultrafilter");
    FiniteStructure s = heyting;
    s.op_imp = heyting_rpc_table(heyting);
    s.op_not.resize(s.n);
    for (Elem a = 0; a < s.n; ++a) s.op_not[a] = s.op_imp[a * s.n + heyting.bot];
    s.preorder.assign(std::size_t(s.n) * s.n, false);
    for (Elem a = 0; a < s.n; ++a)
        for (Elem b = 0; b < s.n; ++b) s.preorder[a * s.n + b] = ultrafilter[s.op_imp[a * s.n + b]];
    return s;
}

FiniteStructure prealgebra_from_filter(const FiniteStructure& s) {
    if (s.op_imp.empty() || !s.has_true_set())
        throw std::invalid_argument("prealgebra_from_filter: needs op_imp and true_set");
    FiniteStructure t = s;
    t.preorder.assign(std::size_t(t.n) * t.n, false);
    for (Elem a = 0; a < t.n; ++a)
        for (Elem b = 0; b < t.n; ++b) t.preorder[a * t.n + b] = t.in_true(t.fimp(a, b));
    return t;
}

FiniteStructure sci_model_from_modal_algebra(const FiniteStructure& s) {
    if (!s.has_box() || !s.has_true_set())
        throw std::invalid_argument("sci_model_from_modal_algebra: needs op_box and true_set");
    FiniteStructure t = s;
    t.op_equiv.resize(std::size_t(t.n) * t.n);
    for (Elem a = 0; a < t.n; ++a)
        for (Elem b = 0; b < t.n; ++b) t.op_equiv[a * t.n + b] = t.fbox(t.fiff(a, b));
    t.op_box.clear();
    t = with_lattice_preorder(std::move(t));
    return t;
}

FiniteStructure modal_algebra_from_sci_model(const FiniteStructure& s) {
    if (!s.has_equiv()) throw std::invalid_argument("modal_algebra_from_sci_model: needs op_equiv");
    FiniteStructure t = s;
    t.op_box.resize(t.n);
    for (Elem a = 0; a < t.n; ++a) t.op_box[a] = t.fequiv(a, t.top);
    t.op_equiv.clear();
    t.preorder.clear();
    return t;
}

// ── Enumeration ──────────────────────────────────────────────────────────────

std::uint64_t ExpansionSpace::candidate_count(std::uint64_t cap) const {
    std::uint64_t total = 1;
    for (const auto& choices : cells) {
        if (choices.empty()) return 0;
        if (total > cap / choices.size()) return cap;
        total *= choices.size();
    }
    return std::min(total, cap);
}

FiniteStructure ExpansionSpace::materialize(std::uint64_t index) const {
    FiniteStructure s = base;
    std::vector<Elem> picks(cells.size());
    for (std::size_t i = cells.size(); i-- > 0;) {
        const auto& choices = cells[i];
        picks[i] = choices[index % choices.size()];
        index /= choices.size();
    }
    if (equiv_mode) {
        s.op_equiv.assign(std::size_t(s.n) * s.n, 0);
        for (std::size_t i = 0; i < picks.size(); ++i) s.op_equiv[i] = picks[i];
    } else {
        s.op_box = picks;
    }
    return s;
}

std::vector<ExpansionSpace> expansion_spaces(unsigned base_size, ClassId cls) {
    unsigned atoms = 0;
    switch (base_size) {
        case 2: atoms = 1; break;
        case 4: atoms = 2; break;
        case 8: atoms = 3; break;
        default: throw std::invalid_argument("expansion_spaces: base size must be 2, 4 or 8");
    }
    const FiniteStructure base = powerset_algebra(atoms);
    const unsigned n = base.n;

    std::vector<ExpansionSpace> spaces;
    if (cls == ClassId::BooleanPrealgebra) {
        ExpansionSpace sp;
        sp.base = with_lattice_preorder(base);
        sp.cls = cls;
        sp.equiv_mode = false;
        spaces.push_back(std::move(sp));  // no cells: exactly one structure
        return spaces;
    }

    const bool needs_true_set = cls == ClassId::SCIModel || cls == ClassId::SCI3Model ||
                                cls == ClassId::S1SPAlgebra || cls == ClassId::S3Algebra ||
                                cls == ClassId::StrongS4Algebra;
    const bool equiv_mode = cls == ClassId::SCIModel || cls == ClassId::SCI3Model;

    auto subsets_of = [&](Elem a) {
        std::vector<Elem> out;
        for (Elem c = 0; c < n; ++c)
            if ((c & a) == c) out.push_back(c);
        return out;
    };

    auto make_space = [&](const std::vector<bool>* uf) {
        ExpansionSpace sp;
        sp.base = base;
        sp.cls = cls;
        sp.equiv_mode = equiv_mode;
        if (uf) sp.base.true_set = *uf;
        if (equiv_mode) {
            sp.base = with_lattice_preorder(std::move(sp.base));
            for (Elem a = 0; a < n; ++a)
                for (Elem b = 0; b < n; ++b) {
                    std::vector<Elem> choices;
                    for (Elem c = 0; c < n; ++c)
                        if ((*uf)[c] == (a == b)) choices.push_back(c);
                    sp.cells.push_back(std::move(choices));
                }
        } else {
            for (Elem a = 0; a < n; ++a) {
                std::vector<Elem> choices;
                switch (cls) {
                    case ClassId::S1SPAlgebra:
                    case ClassId::S3Algebra:
                    case ClassId::StrongS4Algebra:
                        for (Elem c : subsets_of(a))
                            if ((*uf)[c] == (a == base.top)) choices.push_back(c);
                        break;
                    case ClassId::InteriorAlgebra:
                        choices = (a == base.top) ? std::vector<Elem>{base.top} : subsets_of(a);
                        break;
                    case ClassId::S5Algebra:
                        choices.push_back(a == base.top ? base.top : base.bot);
                        break;
                    default:
                        throw std::logic_error("unreachable");
                }
                sp.cells.push_back(std::move(choices));
            }
        }
        return sp;
    };

    if (needs_true_set) {
        for (const auto& uf : enumerate_ultrafilters(with_lattice_preorder(base)))
            spaces.push_back(make_space(&uf));
    } else {
        spaces.push_back(make_space(nullptr));
    }
    return spaces;
}

EnumStatus enumerate_expansions(unsigned base_size, ClassId cls, const EnumBudget& budget,
                                const std::function<bool(const FiniteStructure&)>& yield) {
    std::uint64_t scanned = 0;
    bool exhausted = false;
    for (const ExpansionSpace& sp : expansion_spaces(base_size, cls)) {
        if (sp.cells.empty()) {
            if (check_class(sp.base, cls) && !yield(sp.base)) return EnumStatus::Complete;
            continue;
        }
        const std::uint64_t total = sp.candidate_count(UINT64_MAX);
        std::uint64_t limit = total;
        if (scanned >= budget.max_candidates) {
            exhausted = true;
            break;
        }
        if (total > budget.max_candidates - scanned) {
            limit = budget.max_candidates - scanned;
            exhausted = true;
        }
        for (std::uint64_t idx = 0; idx < limit; ++idx) {
            FiniteStructure s = sp.materialize(idx);
            if (check_class(s, cls)) {
                if (!yield(s)) return exhausted ? EnumStatus::BudgetExhausted : EnumStatus::Complete;
            }
        }
        scanned += limit;
    }
    return exhausted ? EnumStatus::BudgetExhausted : EnumStatus::Complete;
}

std::vector<CensusRow> census(const std::vector<unsigned>& sizes, const std::vector<ClassId>& classes,
                              const EnumBudget& budget) {
    std::vector<CensusRow> rows;
    for (unsigned size : sizes) {
        for (ClassId cls : classes) {
            std::uint64_t count = 0;
            EnumStatus st = enumerate_expansions(size, cls, budget, [&](const FiniteStructure&) {
                ++count;
                return true;
            });
            rows.push_back({size, cls, count, st == EnumStatus::Complete});
        }
    }
    return rows;
}

}  // namespace sci
