#ifndef SCI_ALGEBRA_HPP
#define SCI_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sci/structure.hpp"

namespace sci {

// Predicate result with a human-readable diagnostic.  A failing check names
// the first violated condition together with a concrete witnessing tuple.
struct CheckResult {
    bool ok = true;
    std::string detail;
    explicit operator bool() const noexcept { return ok; }
};

CheckResult check_ok();
CheckResult check_fail(std::string detail);

// ── Boolean algebras and prealgebras ────────────────────────────────────────

// Equation scan: commutativity, associativity, absorption, distributivity,
// complementation, unit laws and the implication identity
// imp(a,b) = or(not(a), b).  The one-element structure passes vacuously.
CheckResult is_boolean_algebra(const FiniteStructure& s);

// a <= b :<=> and(a,b) = a.  Requires is_boolean_algebra.
std::vector<bool> lattice_order(const FiniteStructure& s);

struct Congruence {
    std::vector<std::vector<Elem>> classes;  // ordered by least member
    std::vector<unsigned> class_of;          // element -> class id
};

// a ~ b :<=> a <= b and b <= a under the structure's preorder.  Throws when
// no preorder is attached.
Congruence congruence_from_preorder(const FiniteStructure& s);

// Verifies that the partition respects and/or/not/imp.
CheckResult check_congruence(const FiniteStructure& s, const Congruence& c);

// Quotient structure on congruence classes (representative = least member).
// Keeps an induced preorder; drops equiv/box/true_set.  Throws
// std::runtime_error with a witnessing cell when c is not a congruence.
FiniteStructure quotient(const FiniteStructure& s, const Congruence& c);

// Four clauses, reported in order:
//   (a) preorder reflexive and transitive
//   (b) ~ is a congruence
//   (c) the quotient is a Boolean algebra
//   (d) a <= b  <=>  and(a,b) ~ a   for all a, b
CheckResult is_boolean_prealgebra(const FiniteStructure& s);

// ── Filters ──────────────────────────────────────────────────────────────────
//
// Subsets are given as membership vectors of length n.  Two equivalent filter
// predicates are computed and must agree: the quotient-image definition (the
// subset is closed under ~ and its image is a filter of the quotient algebra)
// and the direct two-clause characterization (closed under meets, upward
// closed under the preorder).  The empty set counts as a filter; an
// ultrafilter is additionally non-empty, proper and maximal.

bool is_filter(const FiniteStructure& s, const std::vector<bool>& subset);
bool is_proper_filter(const FiniteStructure& s, const std::vector<bool>& subset);
bool is_ultrafilter(const FiniteStructure& s, const std::vector<bool>& subset);
std::vector<std::vector<bool>> enumerate_ultrafilters(const FiniteStructure& s);

// The two routes individually (exposed for the agreement checks).
bool is_filter_direct(const FiniteStructure& s, const std::vector<bool>& subset);
bool is_filter_via_quotient(const FiniteStructure& s, const std::vector<bool>& subset);

// ── Model classes ────────────────────────────────────────────────────────────

enum class ClassId {
    BooleanPrealgebra,
    SCIModel,
    SCI3Model,
    S1SPAlgebra,
    S3Algebra,
    StrongS4Algebra,
    InteriorAlgebra,
    S5Algebra,
};

const char* class_name(ClassId c) noexcept;
std::optional<ClassId> parse_class(const std::string& name) noexcept;
inline constexpr ClassId kAllClasses[] = {
    ClassId::BooleanPrealgebra, ClassId::SCIModel,        ClassId::SCI3Model,
    ClassId::S1SPAlgebra,       ClassId::S3Algebra,       ClassId::StrongS4Algebra,
    ClassId::InteriorAlgebra,   ClassId::S5Algebra,
};

// Identity-side classes.
CheckResult is_sci_model(const FiniteStructure& s);
CheckResult is_sci3_model(const FiniteStructure& s);

// Box-side classes; every box table below is over a Boolean algebra carrier.
//   s1sp:      (1) box(a) designated iff a = top; (2) box(a) <= a;
//              (3) and(box(imp(a,b)), box(imp(b,c))) <= box(imp(a,c))
//   s3:        (1), (2), box(imp(a,b)) <= box(imp(box(a), box(b)))
//   strong s4: (1), (2), box(imp(a,b)) <= imp(box(a), box(b)),
//              box(a) <= box(box(a))
//   interior:  box(a) <= a; box idempotent; box(and) = and(box, box);
//              box(top) = top       (no designated set involved)
//   s5:        box(a) = top when a = top, else bot  (no designated set)
CheckResult is_s1sp_algebra(const FiniteStructure& s);
CheckResult is_s3_algebra(const FiniteStructure& s);
CheckResult is_strong_s4_algebra(const FiniteStructure& s);
CheckResult is_interior_algebra(const FiniteStructure& s);
CheckResult is_s5_algebra(const FiniteStructure& s);

CheckResult check_class(const FiniteStructure& s, ClassId c);
std::vector<ClassId> classify(const FiniteStructure& s);

// Closure operator not(box(not(a))).
Elem diamond(const FiniteStructure& s, Elem a);

// ── Constructions ────────────────────────────────────────────────────────────

// Relative pseudo-complement table of a finite Heyting algebra given by its
// lattice (op_and/op_or/bot/top): rpc(a,b) = max { c : and(a,c) <= b }.
// Throws std::invalid_argument when some cell has no greatest solution.
std::vector<Elem> heyting_rpc_table(const FiniteStructure& lattice);

// Lattice filters (no preorder involved): non-empty, meet-closed, upward
// closed w.r.t. the lattice order; ultrafilter = proper and maximal.
bool is_lattice_ultrafilter(const FiniteStructure& lattice, const std::vector<bool>& subset);

// Builds a Boolean prealgebra from a finite Heyting algebra and an
// ultrafilter U of it: op_imp becomes the relative pseudo-complement,
// op_not(a) = rpc(a, bot), and the preorder is a <= b :<=> rpc(a,b) in U.
// Throws std::invalid_argument when U is not an ultrafilter.
FiniteStructure heyting_to_prealgebra(const FiniteStructure& heyting, const std::vector<bool>& ultrafilter);

// Attaches the preorder a <= b :<=> imp(a,b) in the designated set.
// Requires op_imp and true_set.
FiniteStructure prealgebra_from_filter(const FiniteStructure& s);

// Mutual transformations between the two expansion roles:
//   equiv(a,b) := box(iff(a,b))   (box side -> identity side)
//   box(a)     := equiv(a, top)   (identity side -> box side)
FiniteStructure sci_model_from_modal_algebra(const FiniteStructure& s);
FiniteStructure modal_algebra_from_sci_model(const FiniteStructure& s);

// ── Enumeration ──────────────────────────────────────────────────────────────
//
// All enumeration fixes the powerset algebra of the given size as the
// carrier and varies only the expansion: the designated ultrafilter and the
// identity table (identity-side classes) or the box table (box-side
// classes).  Identity tables are constrained cell-wise (diagonal cells range
// over the designated set, off-diagonal cells over its complement); box
// tables are constrained by the pointwise conditions of the class.  The
// candidate stream is ordered: ultrafilters ascending, then table cells in
// row-major lexicographic order.

enum class EnumStatus { Complete, BudgetExhausted };

struct EnumBudget {
    std::uint64_t max_candidates = 4'000'000;  // candidate tables scanned
};

// One ultrafilter's (or, for classes without a designated set, the single)
// candidate space: per-cell choice lists in lexicographic cell order.
struct ExpansionSpace {
    FiniteStructure base;                   // carrier + preorder/true_set as applicable
    bool equiv_mode = false;                // cells fill op_equiv (n*n) or op_box (n)
    std::vector<std::vector<Elem>> cells;   // sorted candidate lists
    ClassId cls = ClassId::SCIModel;

    // min(candidate count, cap); exact when not capped
    std::uint64_t candidate_count(std::uint64_t cap) const;
    FiniteStructure materialize(std::uint64_t index) const;
};

// The candidate spaces for a class at a given base size (2, 4 or 8).
std::vector<ExpansionSpace> expansion_spaces(unsigned base_size, ClassId cls);

// Streams every structure of the class in deterministic order.  The callback
// returns false to stop early (status still reports budget state).
EnumStatus enumerate_expansions(unsigned base_size, ClassId cls, const EnumBudget& budget,
                                const std::function<bool(const FiniteStructure&)>& yield);

struct CensusRow {
    unsigned size;
    ClassId cls;
    std::uint64_t count;
    bool complete;  // false when the budget cut the scan short
};
std::vector<CensusRow> census(const std::vector<unsigned>& sizes, const std::vector<ClassId>& classes,
                              const EnumBudget& budget);

}  // namespace sci

#endif  // SCI_ALGEBRA_HPP
