#ifndef SCI_SEMANTICS_HPP
#define SCI_SEMANTICS_HPP

#include <map>
#include <optional>
#include <vector>

#include "sci/algebra.hpp"
#include "sci/formula.hpp"
#include "sci/structure.hpp"

namespace sci {

// Variable-to-element valuation; only the variables of the formula under
// evaluation need to be mapped.
struct Assignment {
    std::map<unsigned, Elem> values;

    Elem at(unsigned var) const {
        auto it = values.find(var);
        if (it == values.end()) throw std::invalid_argument("assignment: unmapped variable x" + std::to_string(var));
        return it->second;
    }
};

// Homomorphic extension of the assignment.  An Equiv node needs op_equiv, a
// Box node op_box; a missing table raises std::invalid_argument.
Elem evaluate(const FiniteStructure& s, const Assignment& g, const Formula& f);

// gamma(f) lies in the designated set.  Requires true_set.
bool satisfies(const FiniteStructure& s, const Assignment& g, const Formula& f);

struct ValidityReport {
    bool valid = true;
    Assignment countervaluation;  // lexicographically first, when not valid
};

// Quantifies over the variables occurring in f only.
ValidityReport valid_in_model(const FiniteStructure& s, const Formula& f);

// ── Countermodel search ──────────────────────────────────────────────────────
//
// Searches the enumeration stream of the class, sizes ascending, for the
// first structure falsifying f under some assignment.  A formula in the
// identity language combined with a box-side class searches the class's
// identity-language counterpart: s1sp pairs with the identity models carried
// by Boolean algebras (free identity table), s3 with the monotone ones; the
// remaining box-side classes have no identity-language counterpart and are
// rejected.  A modal formula with an identity-side class evaluates through
// the derived box table box(a) = equiv(a, top).

enum class SearchStatus { Found, NoneFound, BudgetExhausted };

struct CountermodelResult {
    SearchStatus status = SearchStatus::NoneFound;
    FiniteStructure model;   // meaningful when status == Found
    Assignment assignment;   // falsifying (or hypothesis-separating) valuation
    unsigned size = 0;
};

struct SearchOptions {
    unsigned max_size = 4;       // searches base sizes {2,4,8} up to this bound
    EnumBudget budget;           // per-class candidate budget
    unsigned jobs = 1;           // affects speed only, never the result
};

CountermodelResult find_countermodel(const Formula& f, ClassId cls, const SearchOptions& opts);

// Searches for a structure and assignment satisfying every hypothesis and
// falsifying the conclusion.
CountermodelResult refute_consequence(const std::vector<Formula>& hypotheses, const Formula& conclusion,
                                      ClassId cls, const SearchOptions& opts);

// Number of distinct elements denoted by formulas of the given maximum
// height under the canonical assignment x_i -> element (i mod n).
std::size_t discernibility_count(const FiniteStructure& s, unsigned depth);

}  // namespace sci

#endif  // SCI_SEMANTICS_HPP
