#ifndef SCI_TESTS_HELPERS_HPP
#define SCI_TESTS_HELPERS_HPP

#include <vector>

#include "sci/algebra.hpp"
#include "sci/structure.hpp"

namespace sci::testing {

// The four-element identity model over the powerset of {0,1}: inclusion as
// preorder, designated set {{0},{0,1}}, identity table sending the diagonal
// to {0} and every other pair to {1}.
inline FiniteStructure paper_four_element_model() {
    FiniteStructure s = with_lattice_preorder(powerset_algebra(2));
    s.true_set = {false, true, false, true};  // {0} and {0,1}
    s.op_equiv.assign(16, 0);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) s.op_equiv[a * 4 + b] = (a == b) ? 1 : 2;
    return s;
}

// Three-element chain 0 < m < 1 as a lattice (meet = min, join = max).
inline FiniteStructure chain_lattice(unsigned n) {
    FiniteStructure s;
    s.n = n;
    for (unsigned i = 0; i < n; ++i) s.names.push_back("c" + std::to_string(i));
    s.op_and.resize(n * n);
    s.op_or.resize(n * n);
    s.op_imp.assign(n * n, 0);  // replaced by the relative pseudo-complement
    s.op_not.assign(n, 0);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            s.op_and[a * n + b] = std::min(a, b);
            s.op_or[a * n + b] = std::max(a, b);
        }
    s.bot = 0;
    s.top = n - 1;
    return s;
}

inline std::vector<FiniteStructure> collect(unsigned size, ClassId cls, std::size_t limit = SIZE_MAX,
                                            EnumBudget budget = {}) {
    std::vector<FiniteStructure> out;
    enumerate_expansions(size, cls, budget, [&](const FiniteStructure& s) {
        out.push_back(s);
        return out.size() < limit;
    });
    return out;
}

}  // namespace sci::testing

#endif
