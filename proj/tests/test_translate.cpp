#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sci/canonical.hpp"
#include "sci/parse.hpp"
#include "sci/semantics.hpp"
#include "sci/translate.hpp"

using namespace sci;
using F = Formula;

TEST_CASE("box is homomorphic and maps identity to a boxed biconditional") {
    CHECK(box(F::var(0)) == F::var(0));
    CHECK(box(F::equiv(F::var(0), F::top())) ==
          F::box(F::iff(F::var(0), F::top())));
    CHECK(box(F::neg(F::equiv(F::var(0), F::var(0)))) ==
          F::neg(F::box(F::iff(F::var(0), F::var(0)))));
    CHECK_THROWS_AS(box(F::box(F::var(0))), std::invalid_argument);
}

TEST_CASE("id is homomorphic and maps box to identity-with-T") {
    CHECK(id(F::box(F::var(0))) == F::equiv(F::var(0), F::top()));
    CHECK(id(F::box(F::box(F::var(0)))) ==
          F::equiv(F::equiv(F::var(0), F::top()), F::top()));
    CHECK(id(F::imp(F::var(1), F::var(1))) == F::imp(F::var(1), F::var(1)));
    CHECK_THROWS_AS(id(F::equiv(F::var(0), F::var(0))), std::invalid_argument);
}

TEST_CASE("star replaces identities innermost-first") {
    CHECK(star(F::equiv(F::var(0), F::var(0))) ==
          F::conj(F::imp(F::var(0), F::var(0)), F::imp(F::var(0), F::var(0))));
    CHECK(star(F::var(5)) == F::var(5));
    F inner = F::iff(F::var(0), F::top());
    CHECK(star(F::equiv(F::equiv(F::var(0), F::top()), F::top())) == F::iff(inner, F::top()));
    CHECK(!star(parse("(x0 == x1) & ((x0 == x1) == T)", Language::Sci)).contains_equiv());
}

TEST_CASE("round-trip compositions") {
    CHECK(roundtrip_box_id(F::var(0)) == F::var(0));
    CHECK(roundtrip_box_id(F::box(F::var(0))) == F::box(F::iff(F::var(0), F::top())));
    CHECK(roundtrip_id_box(F::equiv(F::var(0), F::var(1))) ==
          F::equiv(F::conj(F::imp(F::var(0), F::var(1)), F::imp(F::var(1), F::var(0))), F::top()));
}

TEST_CASE("translations preserve variables and never emit the foreign connective") {
    FormulaSampler sci_gen(31, Language::Sci, 6);
    FormulaSampler modal_gen(32, Language::Modal, 6);
    for (int i = 0; i < 300; ++i) {
        F f = sci_gen.next();
        F bf = box(f);
        CHECK(!bf.contains_equiv());
        CHECK(vars(bf) == vars(f));
        CHECK(!star(f).contains_equiv());
        F g = modal_gen.next();
        F ig = id(g);
        CHECK(!ig.contains_box());
        CHECK(vars(ig) == vars(g));
    }
}

namespace {

// A genuine four-element algebra for the box-side conditions whose box table
// is not monotone: box({1}) = {1} while box({0,1}) = {0}.
FiniteStructure nonmonotone_s1sp_algebra() {
    FiniteStructure s = powerset_algebra(2);
    s.true_set = {false, true, false, true};  // {0}, {0,1}
    s.op_box = {0, 0, 2, 1};
    return s;
}

// The identity clause of box can also be written as the two-conjunct form
// [](bp -> bq) & [](bq -> bp); this library uses the boxed biconditional.
// The forms are interchangeable at the level of designated-set membership
// but not element-by-element, which the tests below pin down.
Formula two_conjunct_box(const Formula& f) {
    switch (f.kind()) {
        case Kind::Var:
        case Kind::Bot:
        case Kind::Top:
            return f;
        case Kind::Neg: return F::neg(two_conjunct_box(f.lhs()));
        case Kind::And: return F::conj(two_conjunct_box(f.lhs()), two_conjunct_box(f.rhs()));
        case Kind::Or: return F::disj(two_conjunct_box(f.lhs()), two_conjunct_box(f.rhs()));
        case Kind::Imp: return F::imp(two_conjunct_box(f.lhs()), two_conjunct_box(f.rhs()));
        case Kind::Equiv: {
            F a = two_conjunct_box(f.lhs()), b = two_conjunct_box(f.rhs());
            return F::conj(F::box(F::imp(a, b)), F::box(F::imp(b, a)));
        }
        default:
            throw std::invalid_argument("two_conjunct_box: Box node in input");
    }
}

}  // namespace

TEST_CASE("the two box clauses differ element-wise in a non-monotone algebra") {
    FiniteStructure s = nonmonotone_s1sp_algebra();
    REQUIRE(is_s1sp_algebra(s));

    const F f = F::box(F::var(0));  // modal input
    Assignment g;
    g.values[0] = 2;  // {1}

    // biconditional clause: the round trip is exact
    CHECK(evaluate(s, g, roundtrip_box_id(f)) == evaluate(s, g, f));

    // two-conjunct clause: the round trip lands on a different element and
    // even leaves the designated set on a formula the original satisfies
    F tc = two_conjunct_box(id(f));
    CHECK(evaluate(s, g, tc) != evaluate(s, g, f));
    F h = F::box(F::disj(F::box(F::var(0)), F::var(1)));
    Assignment g2;
    g2.values[0] = 2;  // {1}
    g2.values[1] = 1;  // {0}
    CHECK(satisfies(s, g2, h));
    CHECK(!satisfies(s, g2, two_conjunct_box(id(h))));
}

TEST_CASE("both box clauses agree at membership level for outermost identities") {
    // box(p == q) for purely Boolean p, q: the boxed biconditional and the
    // two-conjunct form always agree on designated-set membership.  (Nested
    // identities do not: the box table is not membership-functional, see the
    // element-wise test above.)
    FormulaSampler gen(77, Language::Sci, 4, 2);
    std::vector<F> samples;
    for (int i = 0; i < 60; ++i) samples.push_back(F::equiv(star(gen.next()), star(gen.next())));
    for (unsigned size : {2u, 4u}) {
        for (const FiniteStructure& s : testing::collect(size, ClassId::S1SPAlgebra)) {
            for (const F& f : samples) {
                F via_iff = box(f);
                F via_conj = two_conjunct_box(f);
                auto vset = vars(f);
                std::vector<unsigned> vs(vset.begin(), vset.end());
                std::vector<Elem> tuple(vs.size(), 0);
                while (true) {
                    Assignment g;
                    for (std::size_t i = 0; i < vs.size(); ++i) g.values[vs[i]] = tuple[i];
                    CHECK(satisfies(s, g, via_iff) == satisfies(s, g, via_conj));
                    std::size_t i = tuple.size();
                    bool done = tuple.empty();
                    while (i > 0) {
                        --i;
                        if (++tuple[i] < s.n) break;
                        tuple[i] = 0;
                        if (i == 0) done = true;
                    }
                    if (done) break;
                }
            }
        }
    }
}

TEST_CASE("boxing an identity-side necessitation equals boxing after translation") {
    // box(([] p)-as-identity) and [](box p) evaluate to the same element in
    // every Boolean-algebra expansion
    FormulaSampler gen(123, Language::Sci, 4, 2);
    for (const FiniteStructure& s : testing::collect(4, ClassId::S1SPAlgebra)) {
        for (int i = 0; i < 40; ++i) {
            F phi = gen.next();
            F lhs = box(F::equiv(phi, F::top()));
            F rhs = F::box(box(phi));
            for (Elem a = 0; a < s.n; ++a)
                for (Elem b = 0; b < s.n; ++b) {
                    Assignment g;
                    g.values[0] = a;
                    g.values[1] = b;
                    CHECK(evaluate(s, g, lhs) == evaluate(s, g, rhs));
                    CHECK(satisfies(s, g, lhs) == satisfies(s, g, rhs));
                }
        }
    }
}
