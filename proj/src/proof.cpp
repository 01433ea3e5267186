#include "sci/proof.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sci/cpc.hpp"
#include "sci/parse.hpp"

namespace sci {

const char* system_name(SystemId s) noexcept {
    switch (s) {
        case SystemId::SCI: return "sci";
        case SystemId::SCI_EXT: return "sci-ext";
        case SystemId::SCI_PLUS: return "sci-plus";
        case SystemId::SCI_3: return "sci3";
        case SystemId::S1SP_EQ: return "s1sp-eq";
        case SystemId::S3_EQ: return "s3-eq";
        case SystemId::S4_EQ: return "s4-eq";
        case SystemId::S5_EQ: return "s5-eq";
        case SystemId::S1: return "s1";
        case SystemId::S1SP: return "s1sp";
        case SystemId::S3: return "s3";
        case SystemId::S4: return "s4";
        case SystemId::S5: return "s5";
    }
    return "?";
}

std::optional<SystemId> parse_system(const std::string& name) noexcept {
    for (SystemId s : kAllSystems)
        if (name == system_name(s)) return s;
    return std::nullopt;
}

Language system_language(SystemId s) noexcept {
    switch (s) {
        case SystemId::S1:
        case SystemId::S1SP:
        case SystemId::S3:
        case SystemId::S4:
        case SystemId::S5:
            return Language::Modal;
        default:
            return Language::Sci;
    }
}

namespace {

std::vector<SystemInfo> build_registry() {
    std::vector<SystemInfo> reg;
    auto add = [&](SystemId id, std::vector<std::string> axioms, std::vector<std::string> thms,
                   bool an, bool spse) {
        reg.push_back({id, system_name(id), system_language(id), std::move(axioms), std::move(thms), an, spse});
    };
    const std::vector<std::string> ids = {"id1", "id2", "id3", "id4", "id5", "id6", "id7"};
    auto with_ids = [&](std::vector<std::string> v) {
        v.insert(v.end(), ids.begin(), ids.end());
        return v;
    };

    // identity-side systems
    add(SystemId::SCI, with_ids({"cpc"}), {"sp"}, false, false);
    add(SystemId::SCI_EXT, with_ids({"cpc", "fregean"}), {"sp"}, false, false);
    add(SystemId::SCI_PLUS, with_ids({"cpc", "taut-nec", "1"}), {"sp"}, false, false);
    add(SystemId::SCI_3, with_ids({"cpc", "taut-nec", "1"}), {"sp", "3"}, false, false);
    // extensions keep the derivable schemes of the systems below them so
    // that a script re-checks verbatim up the chain
    add(SystemId::S1SP_EQ, {"cpc", "1", "2", "3'"}, with_ids({"sp", "taut-nec"}), true, false);
    add(SystemId::S3_EQ, {"cpc", "1", "2", "3"}, with_ids({"sp", "taut-nec", "3'"}), true, false);
    add(SystemId::S4_EQ, {"cpc", "1", "2", "3", "4"}, with_ids({"sp", "taut-nec", "3'"}), true, false);
    add(SystemId::S5_EQ, {"cpc", "1", "2", "3", "4", "5"}, with_ids({"sp", "taut-nec", "3'"}), true, false);

    // modal-side systems
    add(SystemId::S1, {"cpc", "2", "3'"}, {}, true, true);
    add(SystemId::S1SP, {"cpc", "2", "3'"}, {"sp"}, true, false);
    add(SystemId::S3, {"cpc", "2", "3'", "3"}, {"sp"}, true, false);
    add(SystemId::S4, {"cpc", "2", "3'", "3", "4"}, {"sp"}, true, false);
    add(SystemId::S5, {"cpc", "2", "3'", "3", "4", "5"}, {"sp"}, true, false);
    return reg;
}

const std::vector<SystemInfo>& registry() {
    static const std::vector<SystemInfo> reg = build_registry();
    return reg;
}

// ── Scheme patterns ──────────────────────────────────────────────────────────
//
// Patterns are ordinary formula trees whose Var leaves are metavariables.

Formula pat_var(unsigned i) { return Formula::var(i); }

struct PatternTable {
    std::map<std::string, Formula> patterns;
};

PatternTable build_patterns(Language lang) {
    using F = Formula;
    PatternTable t;
    const F p = pat_var(0), q = pat_var(1), r = pat_var(2), s = pat_var(3);
    auto bx = [&](F a) { return F::box_in(lang, a); };
    auto eq = [&](F a, F b) { return F::equiv_in(lang, a, b); };

    if (lang == Language::Sci) {
        t.patterns["id1"] = eq(p, p);
        t.patterns["id2"] = F::imp(eq(p, q), F::imp(p, q));
        t.patterns["id3"] = F::imp(eq(p, q), eq(F::neg(p), F::neg(q)));
        t.patterns["id4"] = F::imp(F::conj(eq(p, q), eq(r, s)), eq(F::disj(p, r), F::disj(q, s)));
        t.patterns["id5"] = F::imp(F::conj(eq(p, q), eq(r, s)), eq(F::conj(p, r), F::conj(q, s)));
        t.patterns["id6"] = F::imp(F::conj(eq(p, q), eq(r, s)), eq(F::imp(p, r), F::imp(q, s)));
        t.patterns["id7"] = F::imp(F::conj(eq(p, q), eq(r, s)), eq(eq(p, r), eq(q, s)));
        t.patterns["fregean"] = F::imp(F::iff(p, q), eq(p, q));
    }
    t.patterns["1"] = F::iff(eq(p, q), bx(F::iff(p, q)));
    t.patterns["2"] = F::imp(bx(p), p);
    t.patterns["3'"] = F::imp(F::conj(bx(F::imp(p, q)), bx(F::imp(q, r))), bx(F::imp(p, r)));
    t.patterns["3"] = F::imp(bx(F::imp(p, q)), bx(F::imp(bx(p), bx(q))));
    t.patterns["4"] = F::imp(bx(p), bx(bx(p)));
    t.patterns["5"] = F::imp(F::neg(bx(p)), bx(F::neg(bx(p))));
    return t;
}

const PatternTable& patterns(Language lang) {
    static const PatternTable sci_t = build_patterns(Language::Sci);
    static const PatternTable modal_t = build_patterns(Language::Modal);
    return lang == Language::Sci ? sci_t : modal_t;
}

bool unify(const Formula& pattern, const Formula& f, std::vector<std::optional<Formula>>& binding) {
    if (pattern.kind() == Kind::Var) {
        const unsigned i = pattern.var_index();
        if (binding.size() <= i) binding.resize(i + 1);
        if (!binding[i]) {
            binding[i] = f;
            return true;
        }
        return *binding[i] == f;
    }
    if (pattern.kind() != f.kind()) return false;
    if (pattern.lhs() && !unify(pattern.lhs(), f.lhs(), binding)) return false;
    if (pattern.rhs() && !unify(pattern.rhs(), f.rhs(), binding)) return false;
    return true;
}

}  // namespace

const SystemInfo& system_info(SystemId s) {
    for (const auto& info : registry())
        if (info.id == s) return info;
    throw std::logic_error("unknown system");
}

bool matches_scheme(Language lang, const std::string& scheme, const Formula& f) {
    if (scheme == "cpc") return cpc_tautology(f);
    if (scheme == "taut-nec") {
        // [] t with t of classical-tautology form; on the identity side the
        // necessitation of t is the tree (t == T)
        if (lang == Language::Sci) {
            if (f.kind() != Kind::Equiv || f.rhs().kind() != Kind::Top) return false;
            return cpc_tautology(f.lhs());
        }
        if (f.kind() != Kind::Box) return false;
        return cpc_tautology(f.lhs());
    }
    if (scheme == "sp") return match_sp(f, lang).has_value();
    const auto& table = patterns(lang).patterns;
    auto it = table.find(scheme);
    if (it == table.end()) return false;
    std::vector<std::optional<Formula>> binding;
    return unify(it->second, f, binding);
}

std::optional<std::string> match_axiom(SystemId sys, const Formula& f) {
    const SystemInfo& info = system_info(sys);
    for (const std::string& name : info.axioms)
        if (matches_scheme(info.lang, name, f)) return name;
    return std::nullopt;
}

std::optional<std::pair<Formula, Formula>> as_equivalence(Language lang, const Formula& f) {
    if (lang == Language::Sci) {
        if (f.kind() != Kind::Equiv) return std::nullopt;
        return std::make_pair(f.lhs(), f.rhs());
    }
    // ([](a -> b) & [](b -> a))
    if (f.kind() != Kind::And) return std::nullopt;
    const Formula l = f.lhs(), r = f.rhs();
    if (l.kind() != Kind::Box || r.kind() != Kind::Box) return std::nullopt;
    if (l.lhs().kind() != Kind::Imp || r.lhs().kind() != Kind::Imp) return std::nullopt;
    const Formula a = l.lhs().lhs(), b = l.lhs().rhs();
    if (r.lhs().lhs() != b || r.lhs().rhs() != a) return std::nullopt;
    return std::make_pair(a, b);
}

namespace {

// Rebuilds chi from the two substitution results; x marks the positions
// where (l, r) is exactly (phi, psi), outermost occurrences first.
std::optional<Formula> reconstruct_context(const Formula& l, const Formula& r, const Formula& phi,
                                           const Formula& psi, unsigned x) {
    if (l == phi && r == psi) return Formula::var(x);
    if (l == r) return l;
    if (l.kind() != r.kind()) return std::nullopt;
    switch (l.kind()) {
        case Kind::Var:
        case Kind::Bot:
        case Kind::Top:
            return std::nullopt;  // distinct leaves that are not the (phi, psi) pair
        case Kind::Neg:
        case Kind::Box: {
            auto c = reconstruct_context(l.lhs(), r.lhs(), phi, psi, x);
            if (!c) return std::nullopt;
            return l.kind() == Kind::Neg ? Formula::neg(*c) : Formula::box(*c);
        }
        default: {
            auto cl = reconstruct_context(l.lhs(), r.lhs(), phi, psi, x);
            if (!cl) return std::nullopt;
            auto cr = reconstruct_context(l.rhs(), r.rhs(), phi, psi, x);
            if (!cr) return std::nullopt;
            switch (l.kind()) {
                case Kind::And: return Formula::conj(*cl, *cr);
                case Kind::Or: return Formula::disj(*cl, *cr);
                case Kind::Imp: return Formula::imp(*cl, *cr);
                case Kind::Equiv: return Formula::equiv(*cl, *cr);
                default: return std::nullopt;
            }
        }
    }
}

}  // namespace

std::optional<SpMatch> match_sp(const Formula& f, Language lang) {
    if (f.kind() != Kind::Imp) return std::nullopt;
    auto ante = as_equivalence(lang, f.lhs());
    if (!ante) return std::nullopt;
    auto cons = as_equivalence(lang, f.rhs());
    if (!cons) return std::nullopt;
    const auto [phi, psi] = *ante;
    const auto [l, r] = *cons;
    const unsigned x = fresh_var_base(f);
    if (phi == psi) {
        if (l != r) return std::nullopt;
        return SpMatch{l, x, phi, psi};  // x does not occur in chi
    }
    auto chi = reconstruct_context(l, r, phi, psi, x);
    if (!chi) return std::nullopt;
    if (substitute(*chi, x, phi) != l || substitute(*chi, x, psi) != r) return std::nullopt;
    return SpMatch{*chi, x, phi, psi};
}

// ── Derivation checking ──────────────────────────────────────────────────────

namespace {

CheckOutcome step_fail(std::size_t k, std::string msg) { return {false, k, std::move(msg)}; }

bool scheme_available(const SystemInfo& info, const std::string& scheme) {
    return std::find(info.axioms.begin(), info.axioms.end(), scheme) != info.axioms.end() ||
           std::find(info.theorem_schemes.begin(), info.theorem_schemes.end(), scheme) !=
               info.theorem_schemes.end();
}

bool scheme_is_axiom(const SystemInfo& info, const std::string& scheme) {
    return std::find(info.axioms.begin(), info.axioms.end(), scheme) != info.axioms.end();
}

}  // namespace

CheckOutcome check_derivation(SystemId sys, const std::vector<Formula>& hyps,
                              const DerivationScript& script, const Formula* conclusion) {
    const SystemInfo& info = system_info(sys);
    if (script.steps.empty()) return {false, 0, "empty derivation"};
    std::vector<bool> uses_hyp(script.steps.size(), false);

    for (std::size_t k = 0; k < script.steps.size(); ++k) {
        const Step& st = script.steps[k];
        const std::size_t num = k + 1;
        if (!in_language(st.formula, info.lang))
            return step_fail(num, "formula is not in the system's language");
        for (std::size_t ref : st.just.from)
            if (ref == 0 || ref > k)
                return step_fail(num, "justification references step " + std::to_string(ref) +
                                          " which does not precede this step");

        switch (st.just.rule) {
            case RuleKind::Hyp: {
                bool found = false;
                for (const Formula& h : hyps)
                    if (h == st.formula) found = true;
                if (!found) return step_fail(num, "formula is not among the hypotheses");
                uses_hyp[k] = true;
                break;
            }
            case RuleKind::Axiom:
            case RuleKind::TheoremScheme: {
                const std::string& scheme = st.just.scheme;
                if (!scheme_available(info, scheme))
                    return step_fail(num, "scheme \"" + scheme + "\" is not available in " + info.name);
                if (!matches_scheme(info.lang, scheme, st.formula))
                    return step_fail(num, "formula is not an instance of scheme \"" + scheme + "\"");
                break;
            }
            case RuleKind::MP: {
                if (st.just.from.size() != 2) return step_fail(num, "mp needs two premises");
                const Formula& minor = script.steps[st.just.from[0] - 1].formula;
                const Formula& major = script.steps[st.just.from[1] - 1].formula;
                if (major.kind() != Kind::Imp || major.lhs() != minor || major.rhs() != st.formula)
                    return step_fail(num, "mp shape mismatch: second premise must be (first premise -> this)");
                uses_hyp[k] = uses_hyp[st.just.from[0] - 1] || uses_hyp[st.just.from[1] - 1];
                break;
            }
            case RuleKind::AN: {
                if (!info.has_an) return step_fail(num, "rule an is not available in " + info.name);
                if (st.just.from.size() != 1) return step_fail(num, "an needs one premise");
                const Step& src = script.steps[st.just.from[0] - 1];
                if (src.just.rule != RuleKind::Axiom)
                    return step_fail(num, "an may only necessitate a step justified as an axiom");
                if (!scheme_is_axiom(info, src.just.scheme))
                    return step_fail(num, "an premise scheme \"" + src.just.scheme +
                                              "\" is not an axiom of " + info.name);
                if (st.formula != Formula::box_in(info.lang, src.formula))
                    return step_fail(num, "formula is not the necessitation of the premise");
                break;
            }
            case RuleKind::SPSE: {
                if (!info.has_spse) return step_fail(num, "rule spse is not available in " + info.name);
                if (st.just.from.size() != 1) return step_fail(num, "spse needs one premise");
                const std::size_t src = st.just.from[0] - 1;
                if (uses_hyp[src]) return step_fail(num, "spse premise must be hypothesis-free");
                auto eq = as_equivalence(info.lang, script.steps[src].formula);
                if (!eq) return step_fail(num, "spse premise is not a strict equivalence");
                if (!st.just.context) return step_fail(num, "spse needs a context formula");
                const Formula expect = Formula::equiv_in(
                    info.lang, substitute(st.just.context, st.just.context_var, eq->first),
                    substitute(st.just.context, st.just.context_var, eq->second));
                if (st.formula != expect)
                    return step_fail(num, "formula does not match the context substitution");
                break;
            }
        }
    }
    if (conclusion && script.steps.back().formula != *conclusion)
        return step_fail(script.steps.size(), "last step differs from the stated conclusion");
    return {true, 0, {}};
}

// ── Script files ─────────────────────────────────────────────────────────────

namespace {

const char* rule_string(RuleKind r) {
    switch (r) {
        case RuleKind::Hyp: return "hyp";
        case RuleKind::Axiom: return "axiom";
        case RuleKind::TheoremScheme: return "ts";
        case RuleKind::MP: return "mp";
        case RuleKind::AN: return "an";
        case RuleKind::SPSE: return "spse";
    }
    return "?";
}

}  // namespace

DerivationScript script_from_jsonl(std::istream& in, Language lang) {
    DerivationScript script;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": invalid JSON: " + e.what());
        }
        auto fail = [&](const std::string& msg) {
            return std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
        };
        if (!j.contains("formula") || !j["formula"].is_string()) throw fail("missing \"formula\"");
        if (!j.contains("just") || !j["just"].is_object()) throw fail("missing \"just\"");
        Step st;
        st.formula = parse(j["formula"].get<std::string>(), lang);
        const nlohmann::json& just = j["just"];
        const std::string rule = just.value("rule", "");
        if (rule == "hyp") st.just.rule = RuleKind::Hyp;
        else if (rule == "axiom") st.just.rule = RuleKind::Axiom;
        else if (rule == "ts") st.just.rule = RuleKind::TheoremScheme;
        else if (rule == "sp") { st.just.rule = RuleKind::TheoremScheme; st.just.scheme = "sp"; }
        else if (rule == "mp") st.just.rule = RuleKind::MP;
        else if (rule == "an") st.just.rule = RuleKind::AN;
        else if (rule == "spse") st.just.rule = RuleKind::SPSE;
        else throw fail("unknown rule \"" + rule + "\"");
        if (just.contains("scheme")) st.just.scheme = just["scheme"].get<std::string>();
        if (just.contains("from")) {
            for (const auto& x : just["from"]) st.just.from.push_back(x.get<std::size_t>());
        }
        if (just.contains("context")) st.just.context = parse(just["context"].get<std::string>(), lang);
        if (just.contains("var")) st.just.context_var = just["var"].get<unsigned>();
        script.steps.push_back(std::move(st));
    }
    return script;
}

void script_to_jsonl(const DerivationScript& script, std::ostream& out) {
    for (std::size_t k = 0; k < script.steps.size(); ++k) {
        const Step& st = script.steps[k];
        nlohmann::ordered_json j;
        j["n"] = k + 1;
        j["formula"] = print(st.formula);
        nlohmann::ordered_json just;
        just["rule"] = rule_string(st.just.rule);
        if (!st.just.scheme.empty()) just["scheme"] = st.just.scheme;
        if (!st.just.from.empty()) just["from"] = st.just.from;
        if (st.just.context) {
            just["context"] = print(st.just.context);
            just["var"] = st.just.context_var;
        }
        j["just"] = just;
        out << j.dump() << "\n";
    }
}

}  // namespace sci
