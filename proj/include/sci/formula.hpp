#ifndef SCI_FORMULA_HPP
#define SCI_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sci {

// ── Object languages ────────────────────────────────────────────────────────
//
// Two propositional languages share one node type:
//
//   identity language  — Boolean connectives plus a primitive identity
//                        connective `==`; `[]` is an abbreviation expanded at
//                        parse time ([]p ~> (p == T)).
//   modal language     — Boolean connectives plus a primitive `[]`; `==` is
//                        an abbreviation ((p == q) ~> ([](p->q) & [](q->p))).
//
// A well-formed tree never mixes Equiv and Box nodes: trees in the identity
// language carry no Box node, trees in the modal language no Equiv node.

enum class Kind : std::uint8_t { Var, Bot, Top, Neg, And, Or, Imp, Equiv, Box };
enum class Language : std::uint8_t { Sci, Modal };

const char* kind_name(Kind k) noexcept;
const char* language_name(Language lang) noexcept;

// Immutable formula tree with shared subtrees.  Structural equality is
// syntactic identity of trees; hashes, heights and language flags are cached
// per node, so trees are cheap to compare and safe to share across threads.
class Formula {
public:
    Formula() = default;  // empty handle; only valid as an internal sentinel

    static Formula var(unsigned index);
    static Formula bot();
    static Formula top();
    static Formula neg(Formula a);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula imp(Formula a, Formula b);
    static Formula equiv(Formula a, Formula b);
    static Formula box(Formula a);

    // (a <-> b) is derived notation: (a -> b) & (b -> a).
    static Formula iff(Formula a, Formula b);
    // Language-directed defined symbols.
    static Formula box_in(Language lang, Formula a);
    static Formula equiv_in(Language lang, Formula a, Formula b);

    explicit operator bool() const noexcept { return n_ != nullptr; }

    Kind kind() const;
    unsigned var_index() const;  // Var nodes only
    Formula lhs() const;         // unary child for Neg/Box
    Formula rhs() const;

    std::size_t hash() const noexcept;
    unsigned height() const noexcept;  // leaves have height 0
    bool contains_equiv() const noexcept;
    bool contains_box() const noexcept;

    bool operator==(const Formula& o) const noexcept;
    bool operator!=(const Formula& o) const noexcept { return !(*this == o); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static Formula make(Kind k, unsigned var, Formula a, Formula b);

    std::shared_ptr<const Node> n_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// True when f is a well-formed tree of the given language.
bool in_language(const Formula& f, Language lang) noexcept;
// Sci when the tree contains Equiv, Modal when it contains Box, Sci for a
// purely Boolean tree.
Language language_of(const Formula& f) noexcept;

std::set<unsigned> vars(const Formula& f);
// 0 when f has no variable, otherwise 1 + the largest index in f.
unsigned fresh_var_base(const Formula& f);

// Distinct subformulas in post-order (children before parents).
std::vector<Formula> subformulas(const Formula& f);

// Replaces every occurrence of variable x in chi by phi.  Throws
// std::invalid_argument when the result would mix Equiv and Box nodes.
Formula substitute(const Formula& chi, unsigned x, const Formula& phi);

// Rank of an identity-language formula: variables, constants and identities
// have rank 0; ~ adds one; binary Boolean nodes take max of children plus
// one.  Throws std::invalid_argument on a Box node.
unsigned rank(const Formula& f);

// Boolean skeleton: every maximal subtree rooted at Equiv or Box is replaced
// by a fresh variable, identical subtrees by the same variable.  Fresh
// indices start above every index occurring in f and are assigned in
// first-occurrence (depth-first, left to right) order.
struct Skeleton {
    Formula skeleton;
    // (abstracted subtree, fresh variable index) in assignment order
    std::vector<std::pair<Formula, unsigned>> abstraction;
};
Skeleton boolean_skeleton(const Formula& f);

}  // namespace sci

#endif  // SCI_FORMULA_HPP
