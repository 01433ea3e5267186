#ifndef SCI_CPC_HPP
#define SCI_CPC_HPP

#include "sci/formula.hpp"

namespace sci {

// Classical truth-table evaluation of a purely Boolean formula under the
// assignment encoded in `bits`: variable x_i with position p in `var_order`
// is true iff bit p of `bits` is set.  Throws std::invalid_argument on
// Equiv/Box nodes or variables missing from var_order.
bool eval_classical(const Formula& f, const std::vector<unsigned>& var_order,
                    std::uint64_t bits);

// True iff the purely Boolean formula holds in every row of its truth table.
bool truth_table_tautology(const Formula& pure_boolean);

// A formula "has the form of a classical tautology" iff its Boolean skeleton
// is a truth-table tautology.  Throws std::length_error when the skeleton
// has more than 20 distinct atoms.
bool cpc_tautology(const Formula& f);

}  // namespace sci

#endif  // SCI_CPC_HPP
