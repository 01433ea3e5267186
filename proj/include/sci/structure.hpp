#ifndef SCI_STRUCTURE_HPP
#define SCI_STRUCTURE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace sci {

using Elem = unsigned;

// A finite structure for Boolean (pre)algebras and their expansions: a
// carrier of n named elements, total operation tables, and optional
// expansion data (an identity table, a box table, a designated subset, a
// preorder).  Structures are plain values; nothing is mutated after
// construction by the algebra routines.
struct FiniteStructure {
    std::vector<std::string> names;  // size n, used by the JSON format
    unsigned n = 0;

    std::vector<Elem> op_and, op_or, op_imp;  // n*n, row-major
    std::vector<Elem> op_not;                 // n
    Elem bot = 0, top = 0;

    std::vector<Elem> op_equiv;    // n*n or empty
    std::vector<Elem> op_box;      // n or empty
    std::vector<bool> true_set;    // n or empty
    std::vector<bool> preorder;    // n*n or empty

    bool has_equiv() const noexcept { return !op_equiv.empty(); }
    bool has_box() const noexcept { return !op_box.empty(); }
    bool has_true_set() const noexcept { return !true_set.empty(); }
    bool has_preorder() const noexcept { return !preorder.empty(); }

    Elem fand(Elem a, Elem b) const { return op_and[a * n + b]; }
    Elem For(Elem a, Elem b) const { return op_or[a * n + b]; }
    Elem fimp(Elem a, Elem b) const { return op_imp[a * n + b]; }
    Elem fnot(Elem a) const { return op_not[a]; }
    Elem fequiv(Elem a, Elem b) const { return op_equiv[a * n + b]; }
    Elem fbox(Elem a) const { return op_box[a]; }
    Elem fiff(Elem a, Elem b) const { return fand(fimp(a, b), fimp(b, a)); }
    bool in_true(Elem a) const { return true_set[a]; }
    bool le(Elem a, Elem b) const { return preorder[a * n + b]; }

    std::size_t true_count() const;
};

// The Boolean algebra of all subsets of {0,...,atoms-1}.  Element i is the
// bitmask i; names follow set notation ("{}", "{0}", "{0,1}", ...).  No
// preorder, designated set or expansion table attached.
FiniteStructure powerset_algebra(unsigned atoms);

// Attaches the lattice order a <= b :<=> a & b == a as the preorder.
FiniteStructure with_lattice_preorder(FiniteStructure s);

struct ModelFormatError : std::runtime_error {
    ModelFormatError(const std::string& path, const std::string& what)
        : std::runtime_error(what + " (at " + path + ")"), json_path(path) {}
    std::string json_path;
};

// JSON model format:
//   {"elements":["{}","{0}",...],
//    "ops":{"and":[[..]],"or":[[..]],"not":[..],"imp":[[..]],
//           "bot":"{}","top":"{0,1}"},
//    "equiv":[[..]]?, "box":[..]?, "true_set":[..]?, "preorder":[[bool]]?}
// Table cells are element indices; "bot"/"top"/"true_set" entries may be
// names or indices.  Errors cite the offending JSON path.
FiniteStructure model_from_json(const nlohmann::json& j);
nlohmann::ordered_json model_to_json(const FiniteStructure& s);
FiniteStructure load_model_file(const std::string& path);

}  // namespace sci

#endif  // SCI_STRUCTURE_HPP
