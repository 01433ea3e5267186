#include "sci/semantics.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace sci {

Elem evaluate(const FiniteStructure& s, const Assignment& g, const Formula& f) {
    switch (f.kind()) {
        case Kind::Var: return g.at(f.var_index());
        case Kind::Bot: return s.bot;
        case Kind::Top: return s.top;
        case Kind::Neg: return s.fnot(evaluate(s, g, f.lhs()));
        case Kind::And: return s.fand(evaluate(s, g, f.lhs()), evaluate(s, g, f.rhs()));
        case Kind::Or: return s.For(evaluate(s, g, f.lhs()), evaluate(s, g, f.rhs()));
        case Kind::Imp: return s.fimp(evaluate(s, g, f.lhs()), evaluate(s, g, f.rhs()));
        case Kind::Equiv:
            if (!s.has_equiv()) throw std::invalid_argument("evaluate: structure has no identity table");
            return s.fequiv(evaluate(s, g, f.lhs()), evaluate(s, g, f.rhs()));
        case Kind::Box:
            if (!s.has_box()) throw std::invalid_argument("evaluate: structure has no box table");
            return s.fbox(evaluate(s, g, f.lhs()));
    }
    throw std::logic_error("unreachable");
}

bool satisfies(const FiniteStructure& s, const Assignment& g, const Formula& f) {
    if (!s.has_true_set()) throw std::invalid_argument("satisfies: structure has no designated set");
    return s.in_true(evaluate(s, g, f));
}

namespace {

// Iterates assignments over `vs` in lexicographic order (first variable most
// significant); returns the first falsifying one.
std::optional<Assignment> first_falsifying(const FiniteStructure& s, const Formula& f,
                                           const std::vector<unsigned>& vs) {
    std::vector<Elem> tuple(vs.size(), 0);
    while (true) {
        Assignment g;
        for (std::size_t i = 0; i < vs.size(); ++i) g.values[vs[i]] = tuple[i];
        if (!satisfies(s, g, f)) return g;
        std::size_t i = tuple.size();
        while (i > 0) {
            --i;
            if (++tuple[i] < s.n) break;
            tuple[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (tuple.empty()) return std::nullopt;
    }
}

}  // namespace

ValidityReport valid_in_model(const FiniteStructure& s, const Formula& f) {
    auto vset = vars(f);
    std::vector<unsigned> vs(vset.begin(), vset.end());
    if (auto g = first_falsifying(s, f, vs)) return {false, *g};
    return {true, {}};
}

namespace {

// Search plan: which enumeration class to scan and how to adapt each
// structure before evaluating the formula.
struct SearchPlan {
    ClassId enum_class;
    bool derive_box = false;    // modal formula over an identity-side structure
    bool derive_equiv = false;  // identity formula over a box-side structure
};

SearchPlan make_plan(const Formula& f, ClassId cls) {
    const bool modal = f.contains_box();
    const bool sci_side = cls == ClassId::SCIModel || cls == ClassId::SCI3Model;
    if (sci_side) {
        if (modal) return {cls, true, false};
        return {cls, false, false};
    }
    if (cls == ClassId::BooleanPrealgebra)
        throw std::invalid_argument("searching the bare prealgebra class is not supported; pick a model class");
    if (modal || !f.contains_equiv()) return {cls, false, false};
    // identity-language formula against a box-side class
    switch (cls) {
        case ClassId::S1SPAlgebra: return {ClassId::SCIModel, false, false};
        case ClassId::S3Algebra: return {ClassId::SCI3Model, false, false};
        default:
            throw std::invalid_argument(std::string("class ") + class_name(cls) +
                                        " has no identity-language counterpart; use a modal formula");
    }
}

FiniteStructure adapt(const SearchPlan& plan, const FiniteStructure& s) {
    if (plan.derive_box) return modal_algebra_from_sci_model(s);
    if (plan.derive_equiv) return sci_model_from_modal_algebra(s);
    return s;
}

struct Hit {
    std::uint64_t index;
    FiniteStructure model;
    Assignment assignment;
};

// First candidate index in [begin,end) whose adapted structure satisfies the
// class predicate and falsifies the formula.  Classes whose predicate does
// not involve a designated set (interior, s5) are searched once per
// ultrafilter of the carrier, in ultrafilter order.
std::optional<Hit> scan_range(const ExpansionSpace& sp, const SearchPlan& plan, const Formula& f,
                              const std::vector<unsigned>& vs,
                              const std::vector<std::vector<bool>>& ufs, std::uint64_t begin,
                              std::uint64_t end) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        FiniteStructure s = sp.materialize(idx);
        if (!check_class(s, sp.cls)) continue;
        if (s.has_true_set()) {
            FiniteStructure t = adapt(plan, s);
            if (auto g = first_falsifying(t, f, vs)) return Hit{idx, s, *g};
        } else {
            for (const auto& uf : ufs) {
                FiniteStructure su = s;
                su.true_set = uf;
                FiniteStructure t = adapt(plan, su);
                if (auto g = first_falsifying(t, f, vs)) return Hit{idx, su, *g};
            }
        }
    }
    return std::nullopt;
}

std::vector<unsigned> sizes_up_to(unsigned max_size) {
    std::vector<unsigned> sizes;
    for (unsigned s : {2u, 4u, 8u})
        if (s <= max_size) sizes.push_back(s);
    return sizes;
}

}  // namespace

CountermodelResult find_countermodel(const Formula& f, ClassId cls, const SearchOptions& opts) {
    const SearchPlan plan = make_plan(f, cls);
    auto vset = vars(f);
    std::vector<unsigned> vs(vset.begin(), vset.end());

    bool exhausted = false;
    for (unsigned size : sizes_up_to(opts.max_size)) {
        std::vector<std::vector<bool>> ufs;  // for classes carrying no designated set
        for (const ExpansionSpace& sp : expansion_spaces(size, plan.enum_class)) {
            if (!sp.base.has_true_set() && ufs.empty())
                ufs = enumerate_ultrafilters(with_lattice_preorder(sp.base));
            const std::uint64_t total = sp.candidate_count(UINT64_MAX);
            std::uint64_t limit = total;
            if (total > opts.budget.max_candidates) {
                limit = opts.budget.max_candidates;
                exhausted = true;
            }
            std::optional<Hit> best;
            const unsigned jobs = std::max(1u, opts.jobs);
            if (jobs == 1 || limit < 1024) {
                best = scan_range(sp, plan, f, vs, ufs, 0, limit);
            } else {
                // Fixed contiguous partition; the earliest global index wins,
                // so the outcome is independent of the worker count.
                std::vector<std::optional<Hit>> hits(jobs);
                std::vector<std::thread> threads;
                const std::uint64_t chunk = (limit + jobs - 1) / jobs;
                for (unsigned w = 0; w < jobs; ++w) {
                    const std::uint64_t b = std::min<std::uint64_t>(limit, w * chunk);
                    const std::uint64_t e = std::min<std::uint64_t>(limit, b + chunk);
                    threads.emplace_back([&, b, e, w] { hits[w] = scan_range(sp, plan, f, vs, ufs, b, e); });
                }
                for (auto& t : threads) t.join();
                for (auto& h : hits)
                    if (h && (!best || h->index < best->index)) best = h;
            }
            if (best) {
                CountermodelResult r;
                r.status = SearchStatus::Found;
                r.model = best->model;
                r.assignment = best->assignment;
                r.size = size;
                return r;
            }
        }
    }
    CountermodelResult r;
    r.status = exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NoneFound;
    return r;
}

CountermodelResult refute_consequence(const std::vector<Formula>& hypotheses, const Formula& conclusion,
                                      ClassId cls, const SearchOptions& opts) {
    Formula combined = conclusion;
    for (const Formula& h : hypotheses) combined = Formula::conj(combined, h);
    const SearchPlan plan = make_plan(combined, cls);

    std::set<unsigned> vset = vars(conclusion);
    for (const Formula& h : hypotheses) {
        auto hv = vars(h);
        vset.insert(hv.begin(), hv.end());
    }
    std::vector<unsigned> vs(vset.begin(), vset.end());

    bool exhausted = false;
    for (unsigned size : sizes_up_to(opts.max_size)) {
        std::vector<std::vector<bool>> ufs;
        for (const ExpansionSpace& sp : expansion_spaces(size, plan.enum_class)) {
            if (!sp.base.has_true_set() && ufs.empty())
                ufs = enumerate_ultrafilters(with_lattice_preorder(sp.base));
            const std::uint64_t total = sp.candidate_count(UINT64_MAX);
            std::uint64_t limit = total;
            if (total > opts.budget.max_candidates) {
                limit = opts.budget.max_candidates;
                exhausted = true;
            }
            for (std::uint64_t idx = 0; idx < limit; ++idx) {
                FiniteStructure s0 = sp.materialize(idx);
                if (!check_class(s0, sp.cls)) continue;
                const std::size_t variants = s0.has_true_set() ? 1 : ufs.size();
                for (std::size_t u = 0; u < variants; ++u) {
                    FiniteStructure s = s0;
                    if (!s.has_true_set()) s.true_set = ufs[u];
                    FiniteStructure t = adapt(plan, s);
                    // all assignments over the combined variable set, lexicographic
                    std::vector<Elem> tuple(vs.size(), 0);
                    bool done = false;
                    while (true) {
                        Assignment g;
                        for (std::size_t i = 0; i < vs.size(); ++i) g.values[vs[i]] = tuple[i];
                        bool all_hyps = true;
                        for (const Formula& h : hypotheses)
                            if (!satisfies(t, g, h)) {
                                all_hyps = false;
                                break;
                            }
                        if (all_hyps && !satisfies(t, g, conclusion)) {
                            CountermodelResult r;
                            r.status = SearchStatus::Found;
                            r.model = s;
                            r.assignment = g;
                            r.size = size;
                            return r;
                        }
                        std::size_t i = tuple.size();
                        if (i == 0) break;
                        while (i > 0) {
                            --i;
                            if (++tuple[i] < t.n) break;
                            tuple[i] = 0;
                            if (i == 0) done = true;
                        }
                        if (done) break;
                    }
                }
            }
        }
    }
    CountermodelResult r;
    r.status = exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NoneFound;
    return r;
}

std::size_t discernibility_count(const FiniteStructure& s, unsigned depth) {
    std::set<Elem> values;
    for (Elem e = 0; e < s.n; ++e) values.insert(e % s.n);  // canonical x_i -> i mod n
    values.insert(s.bot);
    values.insert(s.top);
    for (unsigned d = 0; d < depth; ++d) {
        std::set<Elem> next = values;
        for (Elem a : values) {
            next.insert(s.fnot(a));
            if (s.has_box()) next.insert(s.fbox(a));
            for (Elem b : values) {
                next.insert(s.fand(a, b));
                next.insert(s.For(a, b));
                next.insert(s.fimp(a, b));
                if (s.has_equiv()) next.insert(s.fequiv(a, b));
            }
        }
        if (next == values) break;
        values = std::move(next);
    }
    return values.size();
}

}  // namespace sci
