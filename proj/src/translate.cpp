#include "sci/translate.hpp"

namespace sci {

namespace {

Formula box_rec(const Formula& f) {
    switch (f.kind()) {
        case Kind::Var:
        case Kind::Bot:
        case Kind::Top:
            return f;
        case Kind::Neg: return Formula::neg(box_rec(f.lhs()));
        case Kind::And: return Formula::conj(box_rec(f.lhs()), box_rec(f.rhs()));
        case Kind::Or: return Formula::disj(box_rec(f.lhs()), box_rec(f.rhs()));
        case Kind::Imp: return Formula::imp(box_rec(f.lhs()), box_rec(f.rhs()));
        case Kind::Equiv:
            return Formula::box(Formula::iff(box_rec(f.lhs()), box_rec(f.rhs())));
        case Kind::Box:
            throw std::invalid_argument("box: input contains a Box node");
    }
    throw std::logic_error("unreachable");
}

Formula id_rec(const Formula& f) {
    switch (f.kind()) {
        case Kind::Var:
        case Kind::Bot:
        case Kind::Top:
            return f;
        case Kind::Neg: return Formula::neg(id_rec(f.lhs()));
        case Kind::And: return Formula::conj(id_rec(f.lhs()), id_rec(f.rhs()));
        case Kind::Or: return Formula::disj(id_rec(f.lhs()), id_rec(f.rhs()));
        case Kind::Imp: return Formula::imp(id_rec(f.lhs()), id_rec(f.rhs()));
        case Kind::Box:
            return Formula::equiv(id_rec(f.lhs()), Formula::top());
        case Kind::Equiv:
            throw std::invalid_argument("id: input contains an Equiv node");
    }
    throw std::logic_error("unreachable");
}

Formula star_rec(const Formula& f) {
    if (!f.contains_equiv()) return f;
    switch (f.kind()) {
        case Kind::Neg: return Formula::neg(star_rec(f.lhs()));
        case Kind::And: return Formula::conj(star_rec(f.lhs()), star_rec(f.rhs()));
        case Kind::Or: return Formula::disj(star_rec(f.lhs()), star_rec(f.rhs()));
        case Kind::Imp: return Formula::imp(star_rec(f.lhs()), star_rec(f.rhs()));
        case Kind::Equiv:
            // children first: nested identities collapse innermost-first
            return Formula::iff(star_rec(f.lhs()), star_rec(f.rhs()));
        default:
            return f;
    }
}

}  // namespace

Formula box(const Formula& f) {
    if (f.contains_box()) throw std::invalid_argument("box: input contains a Box node");
    return box_rec(f);
}

Formula id(const Formula& f) {
    if (f.contains_equiv()) throw std::invalid_argument("id: input contains an Equiv node");
    return id_rec(f);
}

Formula star(const Formula& f) {
    if (f.contains_box()) throw std::invalid_argument("star: input contains a Box node");
    return star_rec(f);
}

Formula roundtrip_box_id(const Formula& modal_f) { return box(id(modal_f)); }
Formula roundtrip_id_box(const Formula& sci_f) { return id(box(sci_f)); }

}  // namespace sci
