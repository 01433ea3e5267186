#include "sci/canonical.hpp"

#include "sci/cpc.hpp"
#include "sci/translate.hpp"

namespace sci {

bool intensional_true(const Formula& f) {
    switch (f.kind()) {
        case Kind::Var: return f.var_index() % 2 == 0;
        case Kind::Bot: return false;
        case Kind::Top: return true;
        case Kind::Equiv: return f.lhs() == f.rhs();
        case Kind::Neg: return !intensional_true(f.lhs());
        case Kind::And: return intensional_true(f.lhs()) && intensional_true(f.rhs());
        case Kind::Or: return intensional_true(f.lhs()) || intensional_true(f.rhs());
        case Kind::Imp: return !intensional_true(f.lhs()) || intensional_true(f.rhs());
        case Kind::Box:
            throw std::invalid_argument("intensional_true: Box node outside the identity language");
    }
    throw std::logic_error("unreachable");
}

bool intensional_satisfies(const Formula& f) { return intensional_true(f); }

Formula intensional_denotation(const Formula& f) {
    if (f.contains_box())
        throw std::invalid_argument("intensional_denotation: Box node outside the identity language");
    return f;
}

bool intensional_preceq(const Formula& a, const Formula& b) {
    return intensional_true(Formula::imp(a, b));
}

FiniteStructure extensional_model() {
    FiniteStructure s;
    s.n = 2;
    s.names = {"0", "1"};
    s.op_and = {0, 0, 0, 1};
    s.op_or = {0, 1, 1, 1};
    s.op_imp = {1, 1, 0, 1};
    s.op_not = {1, 0};
    s.op_equiv = {1, 0, 0, 1};
    s.bot = 0;
    s.top = 1;
    s.true_set = {false, true};
    s.preorder = {true, true, false, true};
    return s;
}

bool sci_ext_theoremhood(const Formula& f) { return cpc_tautology(star(f)); }

FormulaSampler::FormulaSampler(std::uint64_t seed, Language lang, unsigned max_depth, unsigned var_count)
    : rng_(seed), lang_(lang), max_depth_(max_depth), var_count_(var_count == 0 ? 1 : var_count) {}

Formula FormulaSampler::next() { return gen(max_depth_); }

Formula FormulaSampler::gen(unsigned depth_left) {
    const unsigned leaf_kinds = 3;       // var, bot, top
    const unsigned inner_kinds = 5;      // ~ & | -> and the language's own connective
    const unsigned total = depth_left == 0 ? leaf_kinds : leaf_kinds + inner_kinds;
    switch (rng_() % total) {
        case 0: return Formula::var(static_cast<unsigned>(rng_() % var_count_));
        case 1: return Formula::bot();
        case 2: return Formula::top();
        case 3: return Formula::neg(gen(depth_left - 1));
        case 4: return Formula::conj(gen(depth_left - 1), gen(depth_left - 1));
        case 5: return Formula::disj(gen(depth_left - 1), gen(depth_left - 1));
        case 6: return Formula::imp(gen(depth_left - 1), gen(depth_left - 1));
        default:
            if (lang_ == Language::Sci) return Formula::equiv(gen(depth_left - 1), gen(depth_left - 1));
            return Formula::box(gen(depth_left - 1));
    }
}

}  // namespace sci
