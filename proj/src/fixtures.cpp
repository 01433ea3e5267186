#include "sci/cpc.hpp"
#include "sci/proof.hpp"

namespace sci {

// ── DerivationBuilder ────────────────────────────────────────────────────────

DerivationBuilder::DerivationBuilder(SystemId sys) : sys_(sys) {}

std::size_t DerivationBuilder::push(Formula f, Justification just) {
    script_.steps.push_back({std::move(f), std::move(just)});
    return script_.steps.size();
}

std::size_t DerivationBuilder::hyp(const Formula& f) { return push(f, {RuleKind::Hyp, {}, {}, {}, 0}); }

std::size_t DerivationBuilder::cpc(const Formula& f) { return ax("cpc", f); }

std::size_t DerivationBuilder::ax(const std::string& scheme, const Formula& f) {
    const SystemInfo& info = system_info(sys_);
    if (!matches_scheme(info.lang, scheme, f))
        throw std::logic_error("builder: formula is not an instance of scheme \"" + scheme + "\"");
    return push(f, {RuleKind::Axiom, scheme, {}, {}, 0});
}

std::size_t DerivationBuilder::ts(const std::string& scheme, const Formula& f) {
    const SystemInfo& info = system_info(sys_);
    if (!matches_scheme(info.lang, scheme, f))
        throw std::logic_error("builder: formula is not an instance of scheme \"" + scheme + "\"");
    return push(f, {RuleKind::TheoremScheme, scheme, {}, {}, 0});
}

std::size_t DerivationBuilder::sp(const Formula& f) { return ts("sp", f); }

std::size_t DerivationBuilder::mp(std::size_t minor, std::size_t major) {
    const Formula& mi = formula(minor);
    const Formula& ma = formula(major);
    if (ma.kind() != Kind::Imp || ma.lhs() != mi)
        throw std::logic_error("builder: mp premises do not fit");
    return push(ma.rhs(), {RuleKind::MP, {}, {minor, major}, {}, 0});
}

std::size_t DerivationBuilder::an(std::size_t axiom_step) {
    const SystemInfo& info = system_info(sys_);
    const Step& src = script_.steps.at(axiom_step - 1);
    if (src.just.rule != RuleKind::Axiom) throw std::logic_error("builder: an premise is not an axiom step");
    return push(Formula::box_in(info.lang, src.formula), {RuleKind::AN, {}, {axiom_step}, {}, 0});
}

std::size_t DerivationBuilder::spse(std::size_t eq_step, const Formula& context, unsigned var) {
    const SystemInfo& info = system_info(sys_);
    auto eq = as_equivalence(info.lang, formula(eq_step));
    if (!eq) throw std::logic_error("builder: spse premise is not a strict equivalence");
    Formula f = Formula::equiv_in(info.lang, substitute(context, var, eq->first),
                                  substitute(context, var, eq->second));
    return push(std::move(f), {RuleKind::SPSE, {}, {eq_step}, context, var});
}

std::size_t DerivationBuilder::chain(std::size_t ab, std::size_t bc) {
    const Formula& f1 = formula(ab);
    const Formula& f2 = formula(bc);
    if (f1.kind() != Kind::Imp || f2.kind() != Kind::Imp || f1.rhs() != f2.lhs())
        throw std::logic_error("builder: chain premises do not fit");
    const Formula a = f1.lhs(), b = f1.rhs(), c = f2.rhs();
    std::size_t g = cpc(Formula::imp(f1, Formula::imp(f2, Formula::imp(a, c))));
    std::size_t m = mp(ab, g);
    return mp(bc, m);
}

std::size_t DerivationBuilder::conj_intro(std::size_t a, std::size_t b) {
    const Formula fa = formula(a), fb = formula(b);
    std::size_t g = cpc(Formula::imp(fa, Formula::imp(fb, Formula::conj(fa, fb))));
    std::size_t m = mp(a, g);
    return mp(b, m);
}

std::size_t DerivationBuilder::conj_elim1(std::size_t ab) {
    const Formula& f = formula(ab);
    if (f.kind() != Kind::And) throw std::logic_error("builder: conj_elim on a non-conjunction");
    std::size_t g = cpc(Formula::imp(f, f.lhs()));
    return mp(ab, g);
}

std::size_t DerivationBuilder::conj_elim2(std::size_t ab) {
    const Formula& f = formula(ab);
    if (f.kind() != Kind::And) throw std::logic_error("builder: conj_elim on a non-conjunction");
    std::size_t g = cpc(Formula::imp(f, f.rhs()));
    return mp(ab, g);
}

const Formula& DerivationBuilder::formula(std::size_t step) const {
    return script_.steps.at(step - 1).formula;
}

std::size_t DerivationBuilder::size() const noexcept { return script_.steps.size(); }

DerivationScript DerivationBuilder::take() { return std::move(script_); }

// ── Shipped derivations ──────────────────────────────────────────────────────

namespace {

using F = Formula;

const unsigned kCtxVar = 100;  // substitution variable for contexts; clear of x0..x5

F x(unsigned i) { return F::var(i); }
F T() { return F::top(); }

// modal strict equivalence ([](a->b) & [](b->a))
F eqm(const F& a, const F& b) { return F::equiv_in(Language::Modal, a, b); }
// identity-side necessitation (a == T)
F bxs(const F& a) { return F::box_in(Language::Sci, a); }

// (p == q) -> (chi[x:=p] == chi[x:=q]) instance for the builder's language
std::size_t sp_into(DerivationBuilder& b, const F& p, const F& q, const F& chi) {
    const Language lang = system_language(b.system());
    F inst = F::imp(F::equiv_in(lang, p, q),
                    F::equiv_in(lang, substitute(chi, kCtxVar, p), substitute(chi, kCtxVar, q)));
    return b.sp(inst);
}

// From a strict-equivalence step (P == Q), the implication P -> Q.
std::size_t eq_use_fwd(DerivationBuilder& b, std::size_t eq_step) {
    const F& f = b.formula(eq_step);
    if (system_language(b.system()) == Language::Sci) {
        auto pq = as_equivalence(Language::Sci, f);
        std::size_t i2 = b.ax("id2", F::imp(f, F::imp(pq->first, pq->second)));
        return b.mp(eq_step, i2);
    }
    std::size_t bx = b.conj_elim1(eq_step);  // [](P -> Q)
    std::size_t a2 = b.ax("2", F::imp(b.formula(bx), b.formula(bx).lhs()));
    return b.mp(bx, a2);
}

std::size_t eq_use_bwd(DerivationBuilder& b, std::size_t eq_step) {
    const F& f = b.formula(eq_step);
    if (system_language(b.system()) == Language::Sci) {
        auto pq = as_equivalence(Language::Sci, f);
        // symmetry via the substitution principle, then id2
        std::size_t sym = sp_into(b, pq->first, pq->second, F::equiv(x(kCtxVar), pq->first));
        // (P==Q) -> ((P==P) == (Q==P))
        std::size_t pp = b.ax("id1", F::equiv(pq->first, pq->first));
        std::size_t e = b.mp(eq_step, sym);  // (P==P) == (Q==P)
        std::size_t use = eq_use_fwd(b, e);  // (P==P) -> (Q==P)
        std::size_t qp = b.mp(pp, use);      // Q == P
        return eq_use_fwd(b, qp);            // Q -> P
    }
    std::size_t bx = b.conj_elim2(eq_step);  // [](Q -> P)
    std::size_t a2 = b.ax("2", F::imp(b.formula(bx), b.formula(bx).lhs()));
    return b.mp(bx, a2);
}

// Strict equivalence of boxes: ([] X == [] (T -> X)), via the theorem
// (X == (T -> X)) lifted into the box context.  Uses spse in systems that
// carry it, the substitution principle otherwise.
std::size_t boxes_of_top_imp(DerivationBuilder& b, const F& X) {
    const F tx = F::imp(T(), X);
    std::size_t c1 = b.cpc(F::imp(X, tx));
    std::size_t b1 = b.an(c1);
    std::size_t c2 = b.cpc(F::imp(tx, X));
    std::size_t b2 = b.an(c2);
    std::size_t eq = b.conj_intro(b1, b2);  // X == (T -> X)
    const F chi = F::box(x(kCtxVar));
    if (system_info(b.system()).has_spse) return b.spse(eq, chi, kCtxVar);
    std::size_t inst = sp_into(b, X, tx, chi);
    return b.mp(eq, inst);  // [] X == [] (T -> X)
}

struct NSteps {
    std::size_t fwd;   // [] X -> (X == T)
    std::size_t bwd;   // (X == T) -> [] X
    std::size_t both;  // the biconditional
};

// The necessity principle: [] X <-> (X == T).
NSteps derive_n(DerivationBuilder& b, const F& X) {
    const F bx = F::box(X);
    const F btx = F::box(F::imp(T(), X));
    const F eq_top = eqm(X, T());  // ([](X->T) & [](T->X))
    std::size_t boxes = boxes_of_top_imp(b, X);
    std::size_t fwd_boxes = eq_use_fwd(b, boxes);  // []X -> [](T->X)
    std::size_t bwd_boxes = eq_use_bwd(b, boxes);  // [](T->X) -> []X
    std::size_t cx = b.cpc(F::imp(X, T()));
    std::size_t bxt = b.an(cx);  // [](X->T)
    std::size_t glue = b.cpc(F::imp(b.formula(bxt), F::imp(F::imp(bx, btx), F::imp(bx, eq_top))));
    std::size_t g1 = b.mp(bxt, glue);
    std::size_t fwd = b.mp(fwd_boxes, g1);  // []X -> (X==T)
    std::size_t el = b.cpc(F::imp(eq_top, btx));
    std::size_t bwd = b.chain(el, bwd_boxes);  // (X==T) -> []X
    std::size_t both = b.conj_intro(fwd, bwd);
    return {fwd, bwd, both};
}

// []( T -> X ) -> [] X, the elimination half used by the distribution proofs.
std::size_t box_top_elim(DerivationBuilder& b, const F& X) {
    std::size_t boxes = boxes_of_top_imp(b, X);
    return eq_use_bwd(b, boxes);
}

Fixture make_principle_n(SystemId sys, const std::string& name) {
    DerivationBuilder b(sys);
    derive_n(b, x(0));
    Fixture fx;
    fx.name = name;
    fx.system = sys;
    fx.conclusion = b.formula(b.size());
    fx.script = b.take();
    return fx;
}

Fixture make_k_s1sp() {
    DerivationBuilder b(SystemId::S1SP);
    const F A = x(0), B = x(1);
    const F bab = F::box(F::imp(A, B)), ba = F::box(A), bb = F::box(B), btb = F::box(F::imp(T(), B));
    NSteps na = derive_n(b, A);
    // (A == T) -> ([](A->B) == [](T->B))
    std::size_t lift = sp_into(b, A, T(), F::box(F::imp(x(kCtxVar), B)));
    std::size_t k3 = b.chain(na.fwd, lift);  // []A -> ([](A->B) == [](T->B))
    // ([](A->B) == [](T->B)) -> ([](A->B) -> [](T->B))
    std::size_t use1 = b.cpc(F::imp(eqm(bab, btb), F::box(F::imp(bab, btb))));
    std::size_t use2 = b.ax("2", F::imp(F::box(F::imp(bab, btb)), F::imp(bab, btb)));
    std::size_t use = b.chain(use1, use2);
    std::size_t k7 = b.chain(k3, use);  // []A -> ([](A->B) -> [](T->B))
    std::size_t k8 = box_top_elim(b, B);  // [](T->B) -> []B
    std::size_t glue = b.cpc(F::imp(F::imp(ba, F::imp(bab, btb)),
                                    F::imp(F::imp(btb, bb), F::imp(bab, F::imp(ba, bb)))));
    std::size_t g1 = b.mp(k7, glue);
    std::size_t concl = b.mp(k8, g1);
    Fixture fx{"k_in_s1sp", SystemId::S1SP, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

Fixture make_box_meet_s1sp() {
    DerivationBuilder b(SystemId::S1SP);
    const F A = x(0), B = x(1);
    const F AB = F::conj(A, B);
    const F bAB = F::box(AB), bA = F::box(A), bB = F::box(B);

    // one conjunct at a time: [](A&B) -> []A   (and symmetrically for B)
    auto half = [&](const F& target) {
        std::size_t boxes = boxes_of_top_imp(b, AB);
        std::size_t to_top = eq_use_fwd(b, boxes);  // [](A&B) -> [](T->(A&B))
        std::size_t proj = b.cpc(F::imp(AB, target));
        std::size_t bproj = b.an(proj);  // []((A&B)->target)
        const F bt_ab = F::box(F::imp(T(), AB));
        const F bt_t = F::box(F::imp(T(), target));
        std::size_t trans = b.ax("3'", F::imp(F::conj(bt_ab, b.formula(bproj)), bt_t));
        std::size_t glue = b.cpc(F::imp(F::imp(bAB, bt_ab),
                                        F::imp(b.formula(bproj),
                                               F::imp(b.formula(trans), F::imp(bAB, bt_t)))));
        std::size_t g1 = b.mp(to_top, glue);
        std::size_t g2 = b.mp(bproj, g1);
        std::size_t to_bt = b.mp(trans, g2);            // [](A&B) -> [](T->target)
        std::size_t elim = box_top_elim(b, target);     // [](T->target) -> []target
        return b.chain(to_bt, elim);                    // [](A&B) -> []target
    };
    std::size_t h1 = half(A);
    std::size_t h2 = half(B);
    std::size_t glue1 = b.cpc(F::imp(b.formula(h1), F::imp(b.formula(h2), F::imp(bAB, F::conj(bA, bB)))));
    std::size_t g1 = b.mp(h1, glue1);
    std::size_t fwd = b.mp(h2, g1);  // [](A&B) -> ([]A & []B)

    // converse
    NSteps nb = derive_n(b, B);
    std::size_t lift = sp_into(b, B, T(), F::box(F::conj(A, x(kCtxVar))));
    std::size_t r3 = b.chain(nb.fwd, lift);  // []B -> ([](A&B) == [](A&T))
    const F bAT = F::box(F::conj(A, T()));
    std::size_t use1 = b.cpc(F::imp(eqm(bAB, bAT), F::box(F::imp(bAT, bAB))));
    std::size_t use2 = b.ax("2", F::imp(F::box(F::imp(bAT, bAB)), F::imp(bAT, bAB)));
    std::size_t use = b.chain(use1, use2);
    std::size_t r5 = b.chain(r3, use);  // []B -> ([](A&T) -> [](A&B))
    std::size_t c1 = b.cpc(F::imp(A, F::conj(A, T())));
    std::size_t b1 = b.an(c1);
    std::size_t c2 = b.cpc(F::imp(F::conj(A, T()), A));
    std::size_t b2 = b.an(c2);
    std::size_t eqA = b.conj_intro(b1, b2);  // A == (A & T)
    std::size_t lift2 = sp_into(b, A, F::conj(A, T()), F::box(x(kCtxVar)));
    std::size_t eqbox = b.mp(eqA, lift2);       // []A == [](A&T)
    std::size_t toAT = eq_use_fwd(b, eqbox);    // []A -> [](A&T)
    std::size_t glue2 = b.cpc(F::imp(F::imp(bB, F::imp(bAT, bAB)),
                                     F::imp(F::imp(bA, bAT), F::imp(bB, F::imp(bA, bAB)))));
    std::size_t g2 = b.mp(r5, glue2);
    std::size_t curried = b.mp(toAT, g2);  // []B -> ([]A -> [](A&B))
    std::size_t uncurry = b.cpc(F::imp(b.formula(curried), F::imp(F::conj(bA, bB), bAB)));
    std::size_t bwd = b.mp(curried, uncurry);  // ([]A & []B) -> [](A&B)

    std::size_t concl = b.conj_intro(fwd, bwd);
    Fixture fx{"box_meet_in_s1sp", SystemId::S1SP, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

Fixture make_box_n_s1sp() {
    DerivationBuilder b(SystemId::S1SP);
    const F p = x(0);
    const F pt = F::iff(p, T());
    std::size_t c1 = b.cpc(F::imp(p, pt));
    std::size_t b1 = b.an(c1);
    std::size_t c2 = b.cpc(F::imp(pt, p));
    std::size_t b2 = b.an(c2);
    std::size_t eq = b.conj_intro(b1, b2);  // p == (p <-> T)
    std::size_t lift = sp_into(b, p, pt, F::box(x(kCtxVar)));
    std::size_t concl = b.mp(eq, lift);  // [] p == [](p <-> T)
    Fixture fx{"box_n_in_s1sp", SystemId::S1SP, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

Fixture make_k_s3() {
    DerivationBuilder b(SystemId::S3);
    const F A = x(0), B = x(1);
    std::size_t m1 = b.ax("3", F::imp(F::box(F::imp(A, B)), F::box(F::imp(F::box(A), F::box(B)))));
    std::size_t m2 = b.ax("2", F::imp(F::box(F::imp(F::box(A), F::box(B))), F::imp(F::box(A), F::box(B))));
    std::size_t concl = b.chain(m1, m2);
    Fixture fx{"k_in_s3", SystemId::S3, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

Fixture make_neg_congruence_s3() {
    DerivationBuilder b(SystemId::S3);
    const F A = x(0), B = x(1);
    auto half = [&](const F& u, const F& v) {
        // [](u->v) -> [](~v -> ~u)
        std::size_t c = b.cpc(F::imp(F::imp(u, v), F::imp(F::neg(v), F::neg(u))));
        std::size_t bc = b.an(c);
        std::size_t s3 = b.ax("3", F::imp(b.formula(bc),
                                          F::box(F::imp(F::box(F::imp(u, v)),
                                                        F::box(F::imp(F::neg(v), F::neg(u)))))));
        std::size_t m = b.mp(bc, s3);
        std::size_t a2 = b.ax("2", F::imp(b.formula(m), b.formula(m).lhs()));
        return b.mp(m, a2);
    };
    std::size_t t1 = half(A, B);  // [](A->B) -> [](~B->~A)
    std::size_t t2 = half(B, A);  // [](B->A) -> [](~A->~B)
    const F p1 = F::box(F::imp(A, B)), p2 = F::box(F::imp(B, A));
    const F d1 = F::box(F::imp(F::neg(A), F::neg(B))), d2 = F::box(F::imp(F::neg(B), F::neg(A)));
    std::size_t glue = b.cpc(F::imp(F::imp(p1, d2),
                                    F::imp(F::imp(p2, d1), F::imp(F::conj(p1, p2), F::conj(d1, d2)))));
    std::size_t g1 = b.mp(t1, glue);
    std::size_t concl = b.mp(t2, g1);
    Fixture fx{"neg_congruence_in_s3", SystemId::S3, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

Fixture make_id1_s1sp_eq() {
    DerivationBuilder b(SystemId::S1SP_EQ);
    const F p = x(0);
    std::size_t c = b.cpc(F::iff(p, p));
    std::size_t nec = b.an(c);  // (p <-> p) == T
    std::size_t one = b.ax("1", F::iff(F::equiv(p, p), bxs(F::iff(p, p))));
    std::size_t back = b.conj_elim2(one);  // ((p<->p) == T) -> (p == p)
    std::size_t concl = b.mp(nec, back);
    Fixture fx{"id1_in_s1sp_eq", SystemId::S1SP_EQ, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

Fixture make_id2_s1sp_eq() {
    DerivationBuilder b(SystemId::S1SP_EQ);
    const F p = x(0), q = x(1);
    std::size_t one = b.ax("1", F::iff(F::equiv(p, q), bxs(F::iff(p, q))));
    std::size_t fwd = b.conj_elim1(one);  // (p==q) -> ((p<->q) == T)
    std::size_t two = b.ax("2", F::imp(bxs(F::iff(p, q)), F::iff(p, q)));
    std::size_t to_iff = b.chain(fwd, two);  // (p==q) -> (p<->q)
    std::size_t el = b.cpc(F::imp(F::iff(p, q), F::imp(p, q)));
    std::size_t concl = b.chain(to_iff, el);
    Fixture fx{"id2_in_s1sp_eq", SystemId::S1SP_EQ, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

Fixture make_strict_equiv_s1sp_eq() {
    DerivationBuilder b(SystemId::S1SP_EQ);
    const F p = x(0), q = x(1);
    const F E = F::equiv(p, q);
    const F B = bxs(F::iff(p, q));
    std::size_t one = b.ax("1", F::iff(E, B));
    std::size_t nec = b.an(one);  // ((E<->B)) == T
    std::size_t inst = b.ax("1", F::iff(F::equiv(E, B), bxs(F::iff(E, B))));
    std::size_t back = b.conj_elim2(inst);  // (((E<->B))==T) -> ((E==B))
    std::size_t concl = b.mp(nec, back);
    Fixture fx{"strict_equiv_of_identity_in_s1sp_eq", SystemId::S1SP_EQ, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

Fixture make_box_meet_half_s3_eq() {
    DerivationBuilder b(SystemId::S3_EQ);
    const F A = x(0), B = x(1);
    const F AB = F::conj(A, B);
    auto half = [&](const F& target) {
        std::size_t c = b.cpc(F::imp(AB, target));
        std::size_t nec = b.an(c);  // ((A&B)->target) == T
        std::size_t s3 = b.ax("3", F::imp(bxs(F::imp(AB, target)),
                                          bxs(F::imp(bxs(AB), bxs(target)))));
        std::size_t m = b.mp(nec, s3);
        std::size_t a2 = b.ax("2", F::imp(b.formula(m), b.formula(m).lhs()));
        return b.mp(m, a2);  // []((A&B)) -> [](target)  [identity-side boxes]
    };
    std::size_t h1 = half(A);
    std::size_t h2 = half(B);
    std::size_t glue = b.cpc(F::imp(b.formula(h1),
                                    F::imp(b.formula(h2),
                                           F::imp(bxs(AB), F::conj(bxs(A), bxs(B))))));
    std::size_t g1 = b.mp(h1, glue);
    std::size_t concl = b.mp(h2, g1);
    Fixture fx{"box_meet_half_in_s3_eq", SystemId::S3_EQ, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

Fixture make_id3_s3_eq() {
    DerivationBuilder b(SystemId::S3_EQ);
    const F p = x(0), q = x(1);
    const F iff_pq = F::iff(p, q);
    const F iff_n = F::iff(F::neg(p), F::neg(q));
    std::size_t c = b.cpc(F::imp(iff_pq, iff_n));
    std::size_t nec = b.an(c);
    std::size_t s3 = b.ax("3", F::imp(bxs(F::imp(iff_pq, iff_n)), bxs(F::imp(bxs(iff_pq), bxs(iff_n)))));
    std::size_t m = b.mp(nec, s3);
    std::size_t a2 = b.ax("2", F::imp(b.formula(m), b.formula(m).lhs()));
    std::size_t boxes = b.mp(m, a2);  // []((p<->q)) -> []((~p<->~q))
    std::size_t one1 = b.ax("1", F::iff(F::equiv(p, q), bxs(iff_pq)));
    std::size_t to_box = b.conj_elim1(one1);  // (p==q) -> [](p<->q)
    std::size_t one2 = b.ax("1", F::iff(F::equiv(F::neg(p), F::neg(q)), bxs(iff_n)));
    std::size_t from_box = b.conj_elim2(one2);  // []( ~p<->~q ) -> (~p == ~q)
    std::size_t t = b.chain(to_box, boxes);
    std::size_t concl = b.chain(t, from_box);
    Fixture fx{"id3_in_s3_eq", SystemId::S3_EQ, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

Fixture make_symmetry_sci() {
    DerivationBuilder b(SystemId::SCI);
    const F p = x(0), q = x(1);
    const F A = F::equiv(p, q);
    const F D = F::equiv(p, p);
    const F E = F::equiv(q, p);
    std::size_t s1 = sp_into(b, p, q, F::equiv(x(kCtxVar), p));  // (p==q) -> ((p==p) == (q==p))
    const F Bf = F::equiv(D, E);
    std::size_t s2 = b.ax("id2", F::imp(Bf, F::imp(D, E)));
    std::size_t s3 = b.ax("id1", D);
    std::size_t glue = b.cpc(F::imp(F::imp(A, Bf),
                                    F::imp(F::imp(Bf, F::imp(D, E)), F::imp(D, F::imp(A, E)))));
    std::size_t g1 = b.mp(s1, glue);
    std::size_t g2 = b.mp(s2, g1);
    std::size_t concl = b.mp(s3, g2);
    Fixture fx{"symmetry_in_sci", SystemId::SCI, b.formula(concl), {}};
    fx.script = b.take();
    return fx;
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;
    out.push_back(make_principle_n(SystemId::S1, "principle_n_in_s1"));
    out.push_back(make_principle_n(SystemId::S1SP, "principle_n_in_s1sp"));
    out.push_back(make_k_s1sp());
    out.push_back(make_box_meet_s1sp());
    out.push_back(make_box_n_s1sp());
    out.push_back(make_k_s3());
    out.push_back(make_neg_congruence_s3());
    out.push_back(make_id1_s1sp_eq());
    out.push_back(make_id2_s1sp_eq());
    out.push_back(make_strict_equiv_s1sp_eq());
    out.push_back(make_box_meet_half_s3_eq());
    out.push_back(make_id3_s3_eq());
    out.push_back(make_symmetry_sci());
    return out;
}

}  // namespace

const std::vector<Fixture>& fixture_derivations() {
    static const std::vector<Fixture> fixtures = build_fixtures();
    return fixtures;
}

}  // namespace sci
