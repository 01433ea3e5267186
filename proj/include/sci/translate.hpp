#ifndef SCI_TRANSLATE_HPP
#define SCI_TRANSLATE_HPP

#include "sci/formula.hpp"

namespace sci {

// ── Translations between the two object languages ───────────────────────────
//
// box : identity language -> modal language.  Homomorphic on the Boolean
// connectives; an identity node becomes a boxed biconditional:
//
//     box(p == q)  =  [] ((box p -> box q) & (box q -> box p))
//
// id : modal language -> identity language.  Homomorphic on the Boolean
// connectives; a boxed formula becomes an identity with T:
//
//     id([] p)  =  (id p == T)

// Throws std::invalid_argument when f contains a Box node.
Formula box(const Formula& f);

// Throws std::invalid_argument when f contains an Equiv node.
Formula id(const Formula& f);

// Replaces every identity subformula (p == q), innermost first, by the
// biconditional expansion ((p -> q) & (q -> p)).  The result is purely
// Boolean.
Formula star(const Formula& f);

// Compositions used by the semantic round-trip checks.
Formula roundtrip_box_id(const Formula& modal_f);
Formula roundtrip_id_box(const Formula& sci_f);

}  // namespace sci

#endif  // SCI_TRANSLATE_HPP
