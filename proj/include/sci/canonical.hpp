#ifndef SCI_CANONICAL_HPP
#define SCI_CANONICAL_HPP

#include <cstdint>
#include <random>

#include "sci/formula.hpp"
#include "sci/structure.hpp"

namespace sci {

// ── The syntactic (intensional) model ───────────────────────────────────────
//
// The carrier is the set of identity-language formulas itself; a formula
// denotes itself under the identity assignment.  Truth is decided by rank
// recursion: bottom is out, top is in, a variable is in exactly when its
// index is even, an identity is in exactly when its two sides are the same
// tree, and ~ & | -> are classical on already-decided operands.  The carrier
// is infinite, so this model is exposed as a decision procedure rather than
// a FiniteStructure.

bool intensional_true(const Formula& f);          // throws on a Box node
bool intensional_satisfies(const Formula& f);     // identity assignment
Formula intensional_denotation(const Formula& f); // the formula itself
// phi <= psi in the syntactic preorder: (phi -> psi) is true.
bool intensional_preceq(const Formula& a, const Formula& b);

// ── The two-valued (extensional) model ──────────────────────────────────────

// Two elements 0 < 1; identity coincides with material equivalence;
// designated set {1}; the total order attached as preorder.
FiniteStructure extensional_model();

// Theoremhood in the extension of the identity calculus by the collapse
// axiom: replace every identity by a biconditional and check the truth
// table.
bool sci_ext_theoremhood(const Formula& f);

// ── Seeded random formulas ──────────────────────────────────────────────────
//
// Deterministic across platforms: draws come from std::mt19937_64 reduced by
// modulo (no distribution objects).  Constructors are chosen uniformly until
// the depth cap forces a leaf; variables come from x0..x(var_count-1).

class FormulaSampler {
public:
    FormulaSampler(std::uint64_t seed, Language lang, unsigned max_depth, unsigned var_count = 6);
    Formula next();

private:
    Formula gen(unsigned depth_left);
    std::mt19937_64 rng_;
    Language lang_;
    unsigned max_depth_;
    unsigned var_count_;
};

}  // namespace sci

#endif  // SCI_CANONICAL_HPP
