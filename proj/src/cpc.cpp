#include "sci/cpc.hpp"

#include <algorithm>

namespace sci {

bool eval_classical(const Formula& f, const std::vector<unsigned>& var_order,
                    std::uint64_t bits) {
    switch (f.kind()) {
        case Kind::Var: {
            auto it = std::find(var_order.begin(), var_order.end(), f.var_index());
            if (it == var_order.end())
                throw std::invalid_argument("eval_classical: variable not in var_order");
            return (bits >> (it - var_order.begin())) & 1u;
        }
        case Kind::Bot: return false;
        case Kind::Top: return true;
        case Kind::Neg: return !eval_classical(f.lhs(), var_order, bits);
        case Kind::And:
            return eval_classical(f.lhs(), var_order, bits) && eval_classical(f.rhs(), var_order, bits);
        case Kind::Or:
            return eval_classical(f.lhs(), var_order, bits) || eval_classical(f.rhs(), var_order, bits);
        case Kind::Imp:
            return !eval_classical(f.lhs(), var_order, bits) || eval_classical(f.rhs(), var_order, bits);
        case Kind::Equiv:
        case Kind::Box:
            throw std::invalid_argument("eval_classical: non-Boolean node");
    }
    throw std::logic_error("unreachable");
}

bool truth_table_tautology(const Formula& pure_boolean) {
    auto vs = vars(pure_boolean);
    std::vector<unsigned> order(vs.begin(), vs.end());
    if (order.size() > 20) throw std::length_error("truth table over more than 20 atoms");
    const std::uint64_t rows = 1ull << order.size();
    for (std::uint64_t bits = 0; bits < rows; ++bits) {
        if (!eval_classical(pure_boolean, order, bits)) return false;
    }
    return true;
}

bool cpc_tautology(const Formula& f) {
    return truth_table_tautology(boolean_skeleton(f).skeleton);
}

}  // namespace sci
