#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sci/cpc.hpp"
#include "sci/parse.hpp"
#include "sci/proof.hpp"

using namespace sci;
using F = Formula;

TEST_CASE("axiom matching") {
    CHECK(match_axiom(SystemId::SCI, parse("x0 == x0", Language::Sci)) == "id1");
    CHECK(match_axiom(SystemId::S3, parse("[](x0 -> x1) -> []([]x0 -> []x1)", Language::Modal)) == "3");
    CHECK(match_axiom(SystemId::S1SP_EQ, parse("(x0 == x1) <-> [](x0 <-> x1)", Language::Sci)) == "1");
    CHECK(match_axiom(SystemId::SCI, parse("x0 == x1", Language::Sci)) == std::nullopt);
    CHECK(match_axiom(SystemId::SCI_EXT, parse("(x0 <-> x1) -> (x0 == x1)", Language::Sci)) == "fregean");
    // the boxed-tautology scheme
    CHECK(match_axiom(SystemId::SCI_PLUS, parse("[](x0 -> x0)", Language::Sci)) == "taut-nec");
    CHECK(match_axiom(SystemId::SCI_PLUS, parse("[](x0 -> x1)", Language::Sci)) == std::nullopt);
}

TEST_CASE("cpc instances") {
    CHECK(matches_scheme(Language::Sci, "cpc", parse("(x0 == x1) | ~(x0 == x1)", Language::Sci)));
    CHECK(!matches_scheme(Language::Modal, "cpc", parse("[]x0 -> x0", Language::Modal)));
    CHECK(matches_scheme(Language::Sci, "cpc", parse("T", Language::Sci)));
}

TEST_CASE("substitution-principle matching") {
    SUBCASE("negation congruence is an instance with a fresh context variable") {
        auto m = match_sp(parse("(x0 == x1) -> (~x0 == ~x1)", Language::Sci), Language::Sci);
        REQUIRE(m);
        CHECK(m->chi == F::neg(F::var(2)));
        CHECK(m->var == 2);
        CHECK(m->lhs == F::var(0));
        CHECK(m->rhs == F::var(1));
    }
    SUBCASE("a context without the variable is the degenerate instance") {
        auto m = match_sp(parse("(x0 == x1) -> (x2 == x2)", Language::Sci), Language::Sci);
        REQUIRE(m);
        CHECK(m->chi == F::var(2));
    }
    SUBCASE("symmetry is not a direct instance") {
        CHECK(!match_sp(parse("(x0 == x1) -> (x1 == x0)", Language::Sci), Language::Sci));
    }
    SUBCASE("modal instances use the strict-equivalence shape") {
        F inst = F::imp(F::equiv_in(Language::Modal, F::var(0), F::var(1)),
                        F::equiv_in(Language::Modal, F::box(F::var(0)), F::box(F::var(1))));
        auto m = match_sp(inst, Language::Modal);
        REQUIRE(m);
        CHECK(m->chi == F::box(F::var(2)));
    }
    SUBCASE("reflexive antecedent demands equal consequent sides") {
        CHECK(match_sp(parse("(x0 == x0) -> (x1 == x1)", Language::Sci), Language::Sci));
        CHECK(!match_sp(parse("(x0 == x0) -> (x1 == x2)", Language::Sci), Language::Sci));
    }
}

TEST_CASE("derivations with hypotheses") {
    DerivationScript s;
    const F hyp = parse("x0 == x1", Language::Sci);
    s.steps.push_back({hyp, {RuleKind::Hyp, {}, {}, {}, 0}});
    s.steps.push_back({parse("(x0 == x1) -> (x0 -> x1)", Language::Sci),
                       {RuleKind::Axiom, "id2", {}, {}, 0}});
    s.steps.push_back({parse("x0 -> x1", Language::Sci), {RuleKind::MP, {}, {1, 2}, {}, 0}});
    const F concl = parse("x0 -> x1", Language::Sci);
    CHECK(check_derivation(SystemId::SCI, {hyp}, s, &concl));

    SUBCASE("missing hypothesis") {
        CHECK(!check_derivation(SystemId::SCI, {}, s, &concl));
        CHECK(check_derivation(SystemId::SCI, {}, s).failed_step == 1);
    }
    SUBCASE("swapped premises break strict shape checking") {
        DerivationScript bad = s;
        bad.steps[2].just.from = {2, 1};
        CHECK(!check_derivation(SystemId::SCI, {hyp}, bad));
    }
    SUBCASE("forward references are rejected") {
        DerivationScript bad = s;
        bad.steps[2].just.from = {1, 3};
        CHECK(!check_derivation(SystemId::SCI, {hyp}, bad));
    }
    SUBCASE("wrong conclusion") {
        const F other = parse("x1 -> x0", Language::Sci);
        CHECK(!check_derivation(SystemId::SCI, {hyp}, s, &other));
    }
}

TEST_CASE("necessitation discipline") {
    // necessitation may only point at an axiom-justified step
    DerivationBuilder b(SystemId::S1SP_EQ);
    std::size_t c = b.cpc(parse("x0 -> x0", Language::Sci));
    b.an(c);
    DerivationScript good = b.take();
    CHECK(check_derivation(SystemId::S1SP_EQ, {}, good));

    SUBCASE("an on a modus-ponens step is rejected") {
        DerivationScript s;
        s.steps.push_back({parse("x0 -> x0", Language::Sci), {RuleKind::Axiom, "cpc", {}, {}, 0}});
        s.steps.push_back({parse("(x0 -> x0) -> (x1 -> x1)", Language::Sci),
                           {RuleKind::Axiom, "cpc", {}, {}, 0}});
        s.steps.push_back({parse("x1 -> x1", Language::Sci), {RuleKind::MP, {}, {1, 2}, {}, 0}});
        s.steps.push_back({parse("(x1 -> x1) == T", Language::Sci), {RuleKind::AN, {}, {3}, {}, 0}});
        auto out = check_derivation(SystemId::S1SP_EQ, {}, s);
        CHECK(!out);
        CHECK(out.failed_step == 4);
    }
    SUBCASE("an on a theorem-scheme step is rejected") {
        DerivationScript s;
        s.steps.push_back({parse("(x0 == x1) -> (~x0 == ~x1)", Language::Sci),
                           {RuleKind::TheoremScheme, "sp", {}, {}, 0}});
        s.steps.push_back({parse("((x0 == x1) -> (~x0 == ~x1)) == T", Language::Sci),
                           {RuleKind::AN, {}, {1}, {}, 0}});
        CHECK(!check_derivation(SystemId::S1SP_EQ, {}, s));
    }
    SUBCASE("an is unavailable in the base identity calculus") {
        DerivationScript s;
        s.steps.push_back({parse("x0 -> x0", Language::Sci), {RuleKind::Axiom, "cpc", {}, {}, 0}});
        s.steps.push_back({parse("(x0 -> x0) == T", Language::Sci), {RuleKind::AN, {}, {1}, {}, 0}});
        CHECK(!check_derivation(SystemId::SCI, {}, s));
    }
}

TEST_CASE("proved-equivalents substitution is exclusive to the weakest modal system") {
    DerivationBuilder b(SystemId::S1);
    std::size_t c1 = b.cpc(parse("x0 -> (T -> x0)", Language::Modal));
    std::size_t b1 = b.an(c1);
    std::size_t c2 = b.cpc(parse("(T -> x0) -> x0", Language::Modal));
    std::size_t b2 = b.an(c2);
    std::size_t eq = b.conj_intro(b1, b2);
    b.spse(eq, F::box(F::var(7)), 7);
    DerivationScript s = b.take();
    CHECK(check_derivation(SystemId::S1, {}, s));
    // the same script is rejected where the rule is absent
    auto out = check_derivation(SystemId::S3, {}, s);
    CHECK(!out);
    CHECK(out.message.find("spse") != std::string::npos);
}

TEST_CASE("spse premise must be hypothesis-free") {
    const F hyp = F::equiv_in(Language::Modal, F::var(0), F::var(1));
    DerivationScript s;
    s.steps.push_back({hyp, {RuleKind::Hyp, {}, {}, {}, 0}});
    Justification j{RuleKind::SPSE, {}, {1}, F::box(F::var(7)), 7};
    s.steps.push_back({F::equiv_in(Language::Modal, F::box(F::var(0)), F::box(F::var(1))), j});
    auto out = check_derivation(SystemId::S1, {hyp}, s);
    CHECK(!out);
    CHECK(out.failed_step == 2);
}

TEST_CASE("every shipped fixture checks in its system") {
    for (const Fixture& fx : fixture_derivations()) {
        INFO(fx.name);
        auto out = check_derivation(fx.system, {}, fx.script, &fx.conclusion);
        INFO("step ", out.failed_step, ": ", out.message);
        CHECK(out.ok);
    }
}

TEST_CASE("mutating any justification breaks a fixture") {
    for (const Fixture& fx : fixture_derivations()) {
        INFO(fx.name);
        for (std::size_t k = 0; k < fx.script.steps.size(); ++k) {
            DerivationScript mutated = fx.script;
            mutated.steps[k].just = {RuleKind::Hyp, {}, {}, {}, 0};
            CHECK(!check_derivation(fx.system, {}, mutated, &fx.conclusion));
        }
    }
}

namespace {

std::vector<SystemId> extensions_of(SystemId sys) {
    switch (sys) {
        case SystemId::SCI:
            return {SystemId::SCI_EXT, SystemId::SCI_PLUS, SystemId::SCI_3, SystemId::S1SP_EQ,
                    SystemId::S3_EQ, SystemId::S4_EQ, SystemId::S5_EQ};
        case SystemId::SCI_PLUS: return {SystemId::SCI_3, SystemId::S1SP_EQ, SystemId::S3_EQ,
                                         SystemId::S4_EQ, SystemId::S5_EQ};
        case SystemId::S1SP_EQ: return {SystemId::S3_EQ, SystemId::S4_EQ, SystemId::S5_EQ};
        case SystemId::S3_EQ: return {SystemId::S4_EQ, SystemId::S5_EQ};
        case SystemId::S4_EQ: return {SystemId::S5_EQ};
        case SystemId::S1SP: return {SystemId::S3, SystemId::S4, SystemId::S5};
        case SystemId::S3: return {SystemId::S4, SystemId::S5};
        case SystemId::S4: return {SystemId::S5};
        default: return {};
    }
}

}  // namespace

TEST_CASE("fixtures re-check verbatim in every extension of their system") {
    for (const Fixture& fx : fixture_derivations()) {
        for (SystemId ext : extensions_of(fx.system)) {
            INFO(fx.name, " in ", system_name(ext));
            auto out = check_derivation(ext, {}, fx.script, &fx.conclusion);
            INFO("step ", out.failed_step, ": ", out.message);
            CHECK(out.ok);
        }
    }
}

namespace {

// Derives a congruence axiom instance for a binary connective using only the
// substitution principle, the first two identity axioms and tautologies.
DerivationScript congruence_via_sp(Kind op, const F& p1, const F& q1, const F& p2, const F& q2) {
    auto mk = [&](const F& a, const F& b) {
        switch (op) {
            case Kind::And: return F::conj(a, b);
            case Kind::Or: return F::disj(a, b);
            case Kind::Imp: return F::imp(a, b);
            default: return F::equiv(a, b);
        }
    };
    DerivationBuilder b(SystemId::SCI);
    const F e1 = F::equiv(p1, q1), e2 = F::equiv(p2, q2);
    const F x1 = F::equiv(mk(p1, p2), mk(q1, p2));
    const F y = F::equiv(mk(q1, p2), mk(q1, q2));
    const F x2 = F::equiv(mk(p1, p2), mk(q1, q2));
    std::size_t v1 = b.sp(F::imp(e1, x1));
    std::size_t v2 = b.sp(F::imp(e2, y));
    std::size_t v3 = b.sp(F::imp(y, F::equiv(x1, x2)));
    std::size_t v4 = b.ax("id2", F::imp(F::equiv(x1, x2), F::imp(x1, x2)));
    const F z = F::equiv(x1, x2);
    std::size_t glue = b.cpc(F::imp(
        F::imp(e1, x1),
        F::imp(F::imp(e2, y),
               F::imp(F::imp(y, z),
                      F::imp(F::imp(z, F::imp(x1, x2)), F::imp(F::conj(e1, e2), x2))))));
    std::size_t m1 = b.mp(v1, glue);
    std::size_t m2 = b.mp(v2, m1);
    std::size_t m3 = b.mp(v3, m2);
    b.mp(v4, m3);
    return b.take();
}

}  // namespace

TEST_CASE("the substitution principle subsumes the congruence axioms") {
    const std::vector<F> pool = {F::var(0), F::var(1), F::neg(F::var(0)), F::top(),
                                 F::conj(F::var(0), F::var(1))};
    SUBCASE("negation congruence instances match directly") {
        for (const F& p : pool)
            for (const F& q : pool) {
                F inst = F::imp(F::equiv(p, q), F::equiv(F::neg(p), F::neg(q)));
                if (p == q) continue;  // handled by the degenerate clause below
                CHECK(match_sp(inst, Language::Sci));
            }
        CHECK(match_sp(F::imp(F::equiv(F::var(0), F::var(0)),
                              F::equiv(F::neg(F::var(0)), F::neg(F::var(0)))),
                       Language::Sci));
    }
    SUBCASE("binary congruence instances are derivable from the principle") {
        for (Kind op : {Kind::Or, Kind::And, Kind::Imp, Kind::Equiv}) {
            for (std::size_t i = 0; i < pool.size(); ++i) {
                // a representative slice: vary one pair, keep the other small
                DerivationScript s =
                    congruence_via_sp(op, pool[i], pool[(i + 1) % pool.size()], F::var(2), F::var(3));
                CHECK(check_derivation(SystemId::SCI, {}, s));
                DerivationScript deg = congruence_via_sp(op, pool[i], pool[i], pool[i], F::var(3));
                CHECK(check_derivation(SystemId::SCI, {}, deg));
            }
        }
    }
}

TEST_CASE("script files round-trip") {
    for (const Fixture& fx : fixture_derivations()) {
        std::ostringstream out;
        script_to_jsonl(fx.script, out);
        std::istringstream in(out.str());
        DerivationScript back = script_from_jsonl(in, system_language(fx.system));
        REQUIRE(back.steps.size() == fx.script.steps.size());
        for (std::size_t i = 0; i < back.steps.size(); ++i) {
            CHECK(back.steps[i].formula == fx.script.steps[i].formula);
            CHECK(back.steps[i].just.rule == fx.script.steps[i].just.rule);
        }
        CHECK(check_derivation(fx.system, {}, back, &fx.conclusion));
    }
}

TEST_CASE("fixture inventory") {
    // one derivation per principle per system level
    std::vector<std::string> names;
    for (const Fixture& fx : fixture_derivations()) names.push_back(fx.name);
    for (const char* expected :
         {"principle_n_in_s1", "principle_n_in_s1sp", "k_in_s1sp", "box_meet_in_s1sp",
          "box_n_in_s1sp", "k_in_s3", "neg_congruence_in_s3", "id1_in_s1sp_eq", "id2_in_s1sp_eq",
          "strict_equiv_of_identity_in_s1sp_eq", "box_meet_half_in_s3_eq", "id3_in_s3_eq",
          "symmetry_in_sci"}) {
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    }
}

#include "helpers.hpp"
#include "sci/semantics.hpp"
#include "sci/translate.hpp"

TEST_CASE("fixture conclusions survive translation into the dual class") {
    using sci::testing::collect;
    std::vector<FiniteStructure> s3_algebras;
    for (unsigned size : {2u, 4u})
        for (auto& s : collect(size, ClassId::S3Algebra)) s3_algebras.push_back(std::move(s));
    std::vector<FiniteStructure> s3_eq_models;
    for (const FiniteStructure& s : s3_algebras) s3_eq_models.push_back(sci_model_from_modal_algebra(s));

    for (const Fixture& fx : fixture_derivations()) {
        if (fx.system == SystemId::S3_EQ) {
            F translated = box(fx.conclusion);
            for (const FiniteStructure& s : s3_algebras) {
                INFO(fx.name);
                CHECK(valid_in_model(s, translated).valid);
            }
        }
        if (fx.system == SystemId::S3) {
            F translated = id(fx.conclusion);
            for (const FiniteStructure& m : s3_eq_models) {
                INFO(fx.name);
                CHECK(valid_in_model(m, translated).valid);
            }
        }
    }
}
