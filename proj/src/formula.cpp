#include "sci/formula.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace sci {

const char* kind_name(Kind k) noexcept {
    switch (k) {
        case Kind::Var: return "Var";
        case Kind::Bot: return "Bot";
        case Kind::Top: return "Top";
        case Kind::Neg: return "Neg";
        case Kind::And: return "And";
        case Kind::Or: return "Or";
        case Kind::Imp: return "Imp";
        case Kind::Equiv: return "Equiv";
        case Kind::Box: return "Box";
    }
    return "?";
}

const char* language_name(Language lang) noexcept {
    return lang == Language::Sci ? "sci" : "modal";
}

struct Formula::Node {
    Kind kind;
    unsigned var = 0;
    Formula lhs, rhs;
    std::size_t hash = 0;
    unsigned height = 0;
    bool has_equiv = false;
    bool has_box = false;
};

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Kind k, unsigned var, Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->var = var;
    n->lhs = a;
    n->rhs = b;
    std::size_t h = hash_combine(static_cast<std::size_t>(k) * 0x9e3779b9u, var);
    unsigned height = 0;
    if (a) {
        h = hash_combine(h, a.hash());
        height = std::max(height, a.height() + 1);
        n->has_equiv = a.contains_equiv();
        n->has_box = a.contains_box();
    }
    if (b) {
        h = hash_combine(h, b.hash());
        height = std::max(height, b.height() + 1);
        n->has_equiv = n->has_equiv || b.contains_equiv();
        n->has_box = n->has_box || b.contains_box();
    }
    if (k == Kind::Equiv) n->has_equiv = true;
    if (k == Kind::Box) n->has_box = true;
    n->hash = h;
    n->height = height;
    return Formula(std::move(n));
}

Formula Formula::var(unsigned index) { return make(Kind::Var, index, {}, {}); }
Formula Formula::bot() { return make(Kind::Bot, 0, {}, {}); }
Formula Formula::top() { return make(Kind::Top, 0, {}, {}); }
Formula Formula::neg(Formula a) { return make(Kind::Neg, 0, std::move(a), {}); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, 0, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, 0, std::move(a), std::move(b)); }
Formula Formula::imp(Formula a, Formula b) { return make(Kind::Imp, 0, std::move(a), std::move(b)); }
Formula Formula::equiv(Formula a, Formula b) { return make(Kind::Equiv, 0, std::move(a), std::move(b)); }
Formula Formula::box(Formula a) { return make(Kind::Box, 0, std::move(a), {}); }

Formula Formula::iff(Formula a, Formula b) {
    return conj(imp(a, b), imp(b, a));
}

Formula Formula::box_in(Language lang, Formula a) {
    if (lang == Language::Modal) return box(std::move(a));
    return equiv(std::move(a), top());
}

Formula Formula::equiv_in(Language lang, Formula a, Formula b) {
    if (lang == Language::Sci) return equiv(std::move(a), std::move(b));
    return conj(box(imp(a, b)), box(imp(b, a)));
}

Kind Formula::kind() const { return n_->kind; }

unsigned Formula::var_index() const {
    if (n_->kind != Kind::Var) throw std::logic_error("var_index on a non-variable node");
    return n_->var;
}

Formula Formula::lhs() const { return n_->lhs; }
Formula Formula::rhs() const { return n_->rhs; }

std::size_t Formula::hash() const noexcept { return n_ ? n_->hash : 0; }
unsigned Formula::height() const noexcept { return n_ ? n_->height : 0; }
bool Formula::contains_equiv() const noexcept { return n_ && n_->has_equiv; }
bool Formula::contains_box() const noexcept { return n_ && n_->has_box; }

bool Formula::operator==(const Formula& o) const noexcept {
    if (n_ == o.n_) return true;
    if (!n_ || !o.n_) return false;
    if (n_->hash != o.n_->hash) return false;
    if (n_->kind != o.n_->kind || n_->var != o.n_->var) return false;
    return n_->lhs == o.n_->lhs && n_->rhs == o.n_->rhs;
}

bool in_language(const Formula& f, Language lang) noexcept {
    if (lang == Language::Sci) return !f.contains_box();
    return !f.contains_equiv();
}

Language language_of(const Formula& f) noexcept {
    if (f.contains_equiv()) return Language::Sci;
    if (f.contains_box()) return Language::Modal;
    return Language::Sci;
}

namespace {

void collect_vars(const Formula& f, std::set<unsigned>& out) {
    if (f.kind() == Kind::Var) {
        out.insert(f.var_index());
        return;
    }
    if (f.lhs()) collect_vars(f.lhs(), out);
    if (f.rhs()) collect_vars(f.rhs(), out);
}

}  // namespace

std::set<unsigned> vars(const Formula& f) {
    std::set<unsigned> out;
    collect_vars(f, out);
    return out;
}

unsigned fresh_var_base(const Formula& f) {
    auto vs = vars(f);
    return vs.empty() ? 0u : *vs.rbegin() + 1u;
}

namespace {

void collect_subformulas(const Formula& f, std::unordered_set<Formula, FormulaHash>& seen,
                         std::vector<Formula>& out) {
    if (seen.count(f)) return;
    if (f.lhs()) collect_subformulas(f.lhs(), seen, out);
    if (f.rhs()) collect_subformulas(f.rhs(), seen, out);
    if (seen.insert(f).second) out.push_back(f);
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
    std::unordered_set<Formula, FormulaHash> seen;
    std::vector<Formula> out;
    collect_subformulas(f, seen, out);
    return out;
}

namespace {

Formula substitute_rec(const Formula& chi, unsigned x, const Formula& phi) {
    switch (chi.kind()) {
        case Kind::Var:
            return chi.var_index() == x ? phi : chi;
        case Kind::Bot:
        case Kind::Top:
            return chi;
        case Kind::Neg:
            return Formula::neg(substitute_rec(chi.lhs(), x, phi));
        case Kind::Box:
            return Formula::box(substitute_rec(chi.lhs(), x, phi));
        case Kind::And:
            return Formula::conj(substitute_rec(chi.lhs(), x, phi), substitute_rec(chi.rhs(), x, phi));
        case Kind::Or:
            return Formula::disj(substitute_rec(chi.lhs(), x, phi), substitute_rec(chi.rhs(), x, phi));
        case Kind::Imp:
            return Formula::imp(substitute_rec(chi.lhs(), x, phi), substitute_rec(chi.rhs(), x, phi));
        case Kind::Equiv:
            return Formula::equiv(substitute_rec(chi.lhs(), x, phi), substitute_rec(chi.rhs(), x, phi));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Formula substitute(const Formula& chi, unsigned x, const Formula& phi) {
    if ((chi.contains_equiv() && phi.contains_box()) ||
        (chi.contains_box() && phi.contains_equiv())) {
        throw std::invalid_argument("substitute: operands belong to different languages");
    }
    return substitute_rec(chi, x, phi);
}

unsigned rank(const Formula& f) {
    switch (f.kind()) {
        case Kind::Var:
        case Kind::Bot:
        case Kind::Top:
        case Kind::Equiv:
            return 0;
        case Kind::Neg:
            return rank(f.lhs()) + 1;
        case Kind::And:
        case Kind::Or:
        case Kind::Imp:
            return std::max(rank(f.lhs()), rank(f.rhs())) + 1;
        case Kind::Box:
            throw std::invalid_argument("rank: Box node outside the identity language");
    }
    throw std::logic_error("unreachable");
}

namespace {

struct SkeletonBuilder {
    unsigned next;
    std::unordered_map<Formula, unsigned, FormulaHash> assigned;
    std::vector<std::pair<Formula, unsigned>> order;

    Formula walk(const Formula& f) {
        if (f.kind() == Kind::Equiv || f.kind() == Kind::Box) {
            auto it = assigned.find(f);
            if (it == assigned.end()) {
                it = assigned.emplace(f, next++).first;
                order.emplace_back(f, it->second);
            }
            return Formula::var(it->second);
        }
        switch (f.kind()) {
            case Kind::Var:
            case Kind::Bot:
            case Kind::Top:
                return f;
            case Kind::Neg:
                return Formula::neg(walk(f.lhs()));
            case Kind::And:
                return Formula::conj(walk(f.lhs()), walk(f.rhs()));
            case Kind::Or:
                return Formula::disj(walk(f.lhs()), walk(f.rhs()));
            case Kind::Imp:
                return Formula::imp(walk(f.lhs()), walk(f.rhs()));
            default:
                throw std::logic_error("unreachable");
        }
    }
};

}  // namespace

Skeleton boolean_skeleton(const Formula& f) {
    if (!f.contains_equiv() && !f.contains_box()) return {f, {}};
    SkeletonBuilder b{fresh_var_base(f), {}, {}};
    Formula s = b.walk(f);
    return {s, std::move(b.order)};
}

}  // namespace sci
