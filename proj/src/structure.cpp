#include "sci/structure.hpp"

#include <algorithm>
#include <fstream>

namespace sci {

std::size_t FiniteStructure::true_count() const {
    return static_cast<std::size_t>(std::count(true_set.begin(), true_set.end(), true));
}

FiniteStructure powerset_algebra(unsigned atoms) {
    if (atoms == 0 || atoms > 16) throw std::invalid_argument("powerset_algebra: atoms must be in 1..16");
    FiniteStructure s;
    s.n = 1u << atoms;
    const Elem mask = s.n - 1;
    s.names.resize(s.n);
    for (Elem e = 0; e < s.n; ++e) {
        std::string name = "{";
        bool first = true;
        for (unsigned a = 0; a < atoms; ++a) {
            if (e & (1u << a)) {
                if (!first) name += ',';
                name += std::to_string(a);
                first = false;
            }
        }
        name += '}';
        s.names[e] = name;
    }
    s.op_and.resize(std::size_t(s.n) * s.n);
    s.op_or.resize(std::size_t(s.n) * s.n);
    s.op_imp.resize(std::size_t(s.n) * s.n);
    s.op_not.resize(s.n);
    for (Elem a = 0; a < s.n; ++a) {
        s.op_not[a] = ~a & mask;
        for (Elem b = 0; b < s.n; ++b) {
            s.op_and[a * s.n + b] = a & b;
            s.op_or[a * s.n + b] = a | b;
            s.op_imp[a * s.n + b] = (~a | b) & mask;
        }
    }
    s.bot = 0;
    s.top = mask;
    return s;
}

FiniteStructure with_lattice_preorder(FiniteStructure s) {
    s.preorder.assign(std::size_t(s.n) * s.n, false);
    for (Elem a = 0; a < s.n; ++a)
        for (Elem b = 0; b < s.n; ++b)
            s.preorder[a * s.n + b] = (s.fand(a, b) == a);
    return s;
}

namespace {

using nlohmann::json;

Elem element_ref(const FiniteStructure& s, const json& j, const std::string& path) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v < 0 || v >= static_cast<long long>(s.n))
            throw ModelFormatError(path, "element index out of range");
        return static_cast<Elem>(v);
    }
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        auto it = std::find(s.names.begin(), s.names.end(), name);
        if (it == s.names.end()) throw ModelFormatError(path, "unknown element name \"" + name + "\"");
        return static_cast<Elem>(it - s.names.begin());
    }
    throw ModelFormatError(path, "expected an element index or name");
}

std::vector<Elem> read_table2(const FiniteStructure& s, const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != s.n) throw ModelFormatError(path, "expected an n x n table");
    std::vector<Elem> t(std::size_t(s.n) * s.n);
    for (unsigned a = 0; a < s.n; ++a) {
        const json& row = j[a];
        const std::string rpath = path + "/" + std::to_string(a);
        if (!row.is_array() || row.size() != s.n) throw ModelFormatError(rpath, "expected a row of n cells");
        for (unsigned b = 0; b < s.n; ++b)
            t[a * s.n + b] = element_ref(s, row[b], rpath + "/" + std::to_string(b));
    }
    return t;
}

std::vector<Elem> read_table1(const FiniteStructure& s, const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != s.n) throw ModelFormatError(path, "expected a table of n cells");
    std::vector<Elem> t(s.n);
    for (unsigned a = 0; a < s.n; ++a) t[a] = element_ref(s, j[a], path + "/" + std::to_string(a));
    return t;
}

}  // namespace

FiniteStructure model_from_json(const nlohmann::json& j) {
    FiniteStructure s;
    if (!j.is_object()) throw ModelFormatError("/", "expected a JSON object");
    if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty())
        throw ModelFormatError("/elements", "expected a non-empty array of element names");
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw ModelFormatError("/elements", "element names must be strings");
        s.names.push_back(e.get<std::string>());
    }
    s.n = static_cast<unsigned>(s.names.size());
    for (unsigned a = 0; a < s.n; ++a)
        for (unsigned b = a + 1; b < s.n; ++b)
            if (s.names[a] == s.names[b])
                throw ModelFormatError("/elements/" + std::to_string(b), "duplicate element name");

    if (!j.contains("ops") || !j["ops"].is_object()) throw ModelFormatError("/ops", "missing operation tables");
    const json& ops = j["ops"];
    for (const char* key : {"and", "or", "imp", "not", "bot", "top"})
        if (!ops.contains(key)) throw ModelFormatError(std::string("/ops/") + key, "missing required table");
    s.op_and = read_table2(s, ops["and"], "/ops/and");
    s.op_or = read_table2(s, ops["or"], "/ops/or");
    s.op_imp = read_table2(s, ops["imp"], "/ops/imp");
    s.op_not = read_table1(s, ops["not"], "/ops/not");
    s.bot = element_ref(s, ops["bot"], "/ops/bot");
    s.top = element_ref(s, ops["top"], "/ops/top");

    if (j.contains("equiv") && j.contains("box"))
        throw ModelFormatError("/box", "a structure carries an identity table or a box table, not both");
    if (j.contains("equiv")) s.op_equiv = read_table2(s, j["equiv"], "/equiv");
    if (j.contains("box")) s.op_box = read_table1(s, j["box"], "/box");
    if (j.contains("true_set")) {
        const json& ts = j["true_set"];
        if (!ts.is_array()) throw ModelFormatError("/true_set", "expected an array");
        s.true_set.assign(s.n, false);
        for (std::size_t i = 0; i < ts.size(); ++i)
            s.true_set[element_ref(s, ts[i], "/true_set/" + std::to_string(i))] = true;
    }
    if (j.contains("preorder")) {
        const json& pre = j["preorder"];
        if (!pre.is_array() || pre.size() != s.n) throw ModelFormatError("/preorder", "expected an n x n matrix");
        s.preorder.assign(std::size_t(s.n) * s.n, false);
        for (unsigned a = 0; a < s.n; ++a) {
            const std::string rpath = "/preorder/" + std::to_string(a);
            if (!pre[a].is_array() || pre[a].size() != s.n)
                throw ModelFormatError(rpath, "expected a row of n booleans");
            for (unsigned b = 0; b < s.n; ++b) {
                if (!pre[a][b].is_boolean())
                    throw ModelFormatError(rpath + "/" + std::to_string(b), "expected a boolean");
                s.preorder[a * s.n + b] = pre[a][b].get<bool>();
            }
        }
    }
    return s;
}

nlohmann::ordered_json model_to_json(const FiniteStructure& s) {
    nlohmann::ordered_json j;
    j["elements"] = s.names;
    auto table2 = [&](const std::vector<Elem>& t) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (unsigned a = 0; a < s.n; ++a) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (unsigned b = 0; b < s.n; ++b) row.push_back(t[a * s.n + b]);
            rows.push_back(row);
        }
        return rows;
    };
    nlohmann::ordered_json ops;
    ops["and"] = table2(s.op_and);
    ops["or"] = table2(s.op_or);
    ops["not"] = s.op_not;
    ops["imp"] = table2(s.op_imp);
    ops["bot"] = s.names[s.bot];
    ops["top"] = s.names[s.top];
    j["ops"] = ops;
    if (s.has_equiv()) j["equiv"] = table2(s.op_equiv);
    if (s.has_box()) j["box"] = s.op_box;
    if (s.has_true_set()) {
        nlohmann::ordered_json ts = nlohmann::ordered_json::array();
        for (Elem e = 0; e < s.n; ++e)
            if (s.true_set[e]) ts.push_back(s.names[e]);
        j["true_set"] = ts;
    }
    if (s.has_preorder()) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (unsigned a = 0; a < s.n; ++a) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (unsigned b = 0; b < s.n; ++b) row.push_back(s.le(a, b));
            rows.push_back(row);
        }
        j["preorder"] = rows;
    }
    return j;
}

FiniteStructure load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
    }
    return model_from_json(j);
}

}  // namespace sci
