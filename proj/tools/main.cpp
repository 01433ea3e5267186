// Command-line front end: parsing, translations, finite-model evaluation,
// countermodel search, derivation checking, classification and census.
//
// Exit codes: 0 success / positive result, 1 negative result (invalid
// formula, countermodel found, proof error, unsatisfied check), 2 usage or
// format error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sci/algebra.hpp"
#include "sci/canonical.hpp"
#include "sci/parse.hpp"
#include "sci/proof.hpp"
#include "sci/semantics.hpp"
#include "sci/structure.hpp"
#include "sci/translate.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

sci::Language parse_lang_flag(const std::string& s) {
    if (s == "sci") return sci::Language::Sci;
    if (s == "modal") return sci::Language::Modal;
    throw CLI::ValidationError("--lang must be sci or modal");
}

std::string read_formula_arg(const std::string& positional, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open formula file: " + file);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return positional;
}

sci::Language model_language(const sci::FiniteStructure& s) {
    return s.has_box() && !s.has_equiv() ? sci::Language::Modal : sci::Language::Sci;
}

ordered_json assignment_json(const sci::FiniteStructure& s, const sci::Assignment& g) {
    ordered_json j = ordered_json::object();
    for (const auto& [var, elem] : g.values) j["x" + std::to_string(var)] = s.names[elem];
    return j;
}

sci::Assignment assignment_from_flags(const sci::FiniteStructure& s,
                                      const std::vector<std::string>& bindings) {
    sci::Assignment g;
    for (const std::string& b : bindings) {
        const auto eq = b.find('=');
        if (eq == std::string::npos || b.size() < 4 || b[0] != 'x')
            throw std::runtime_error("binding must look like x0=<element name>: " + b);
        const unsigned var = static_cast<unsigned>(std::stoul(b.substr(1, eq - 1)));
        const std::string name = b.substr(eq + 1);
        auto it = std::find(s.names.begin(), s.names.end(), name);
        if (it == s.names.end()) throw std::runtime_error("unknown element name: " + name);
        g.values[var] = static_cast<sci::Elem>(it - s.names.begin());
    }
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sentential calculus with identity: translations, finite models, derivations"};
    app.require_subcommand(1);

    std::string formula_text, file_arg, lang_flag = "sci", dir_flag, model_path, system_flag, class_flag;
    std::vector<std::string> assign_flags, hyp_flags;
    unsigned max_size = 4, jobs = 1, depth = 3;
    std::uint64_t budget = 4'000'000;
    std::string sizes_flag = "2,4", classes_flag;

    auto* cmd_parse = app.add_subcommand("parse", "parse a formula and print its canonical form");
    cmd_parse->add_option("formula", formula_text);
    cmd_parse->add_option("--file", file_arg, "read the formula from a file");
    cmd_parse->add_option("--lang", lang_flag, "sci (default) or modal");

    auto* cmd_translate = app.add_subcommand("translate", "translate between the two languages");
    cmd_translate->add_option("--dir", dir_flag, "box | id | star")->required();
    cmd_translate->add_option("formula", formula_text);
    cmd_translate->add_option("--file", file_arg);

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula in a model under an assignment");
    cmd_eval->add_option("--model", model_path)->required();
    cmd_eval->add_option("--set", assign_flags, "variable binding x0=<element name> (repeatable)")
        ->type_size(1)
        ->allow_extra_args(false);
    cmd_eval->add_option("formula", formula_text);
    cmd_eval->add_option("--file", file_arg);

    auto* cmd_valid = app.add_subcommand("valid", "check validity in one model");
    cmd_valid->add_option("--model", model_path)->required();
    cmd_valid->add_option("formula", formula_text);
    cmd_valid->add_option("--file", file_arg);

    auto* cmd_counter = app.add_subcommand("countermodel", "search for a falsifying structure");
    cmd_counter->add_option("--class", class_flag, "prealgebra|sci|sci3|s1sp|s3|s4|interior|s5")->required();
    cmd_counter->add_option("--max-size", max_size, "largest carrier size (2, 4 or 8)");
    cmd_counter->add_option("--budget", budget, "candidate tables scanned per space");
    cmd_counter->add_option("--jobs", jobs, "worker threads (affects speed only)");
    cmd_counter->add_option("--lang", lang_flag, "formula language, sci (default) or modal");
    cmd_counter->add_option("formula", formula_text);
    cmd_counter->add_option("--file", file_arg);

    auto* cmd_check = app.add_subcommand("check-proof", "check a derivation script (JSON lines)");
    cmd_check->add_option("--system", system_flag)->required();
    cmd_check->add_option("--hyp", hyp_flags, "hypothesis formula (repeatable)")
        ->type_size(1)
        ->allow_extra_args(false);
    cmd_check->add_option("file", file_arg)->required();

    auto* cmd_classify = app.add_subcommand("classify", "list the model classes a structure satisfies");
    cmd_classify->add_option("file", file_arg)->required();

    auto* cmd_intensional = app.add_subcommand("intensional", "the syntactic model");
    auto* cmd_int_check = cmd_intensional->add_subcommand("check", "decide truth in the syntactic model");
    cmd_int_check->add_option("formula", formula_text);
    cmd_int_check->add_option("--file", file_arg);

    auto* cmd_extensional = app.add_subcommand("extensional", "the two-valued model");
    auto* cmd_ext_check = cmd_extensional->add_subcommand("check", "decide validity in the two-valued model");
    cmd_ext_check->add_option("formula", formula_text);
    cmd_ext_check->add_option("--file", file_arg);

    auto* cmd_census = app.add_subcommand("census", "count structures per class per size");
    cmd_census->add_option("--sizes", sizes_flag, "comma-separated sizes out of 2,4,8");
    cmd_census->add_option("--classes", classes_flag, "comma-separated class names (default: all)");
    cmd_census->add_option("--budget", budget, "candidate tables scanned per space");

    auto* cmd_discern = app.add_subcommand("discern", "count distinct denotations up to a depth");
    cmd_discern->add_option("--model", model_path)->required();
    cmd_discern->add_option("--depth", depth);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_parse->parsed()) {
            sci::Formula f = sci::parse(read_formula_arg(formula_text, file_arg), parse_lang_flag(lang_flag));
            std::cout << sci::print(f) << "\n";
            return kOk;
        }

        if (cmd_translate->parsed()) {
            const std::string text = read_formula_arg(formula_text, file_arg);
            sci::Formula out;
            if (dir_flag == "box") out = sci::box(sci::parse(text, sci::Language::Sci));
            else if (dir_flag == "id") out = sci::id(sci::parse(text, sci::Language::Modal));
            else if (dir_flag == "star") out = sci::star(sci::parse(text, sci::Language::Sci));
            else throw CLI::ValidationError("--dir must be box, id or star");
            std::cout << sci::print(out) << "\n";
            return kOk;
        }

        if (cmd_eval->parsed()) {
            sci::FiniteStructure s = sci::load_model_file(model_path);
            sci::Formula f = sci::parse(read_formula_arg(formula_text, file_arg), model_language(s));
            sci::Assignment g = assignment_from_flags(s, assign_flags);
            sci::Elem e = sci::evaluate(s, g, f);
            ordered_json j;
            j["element"] = s.names[e];
            if (s.has_true_set()) j["designated"] = s.in_true(e);
            std::cout << j.dump() << "\n";
            return (s.has_true_set() && !s.in_true(e)) ? kNegative : kOk;
        }

        if (cmd_valid->parsed()) {
            sci::FiniteStructure s = sci::load_model_file(model_path);
            sci::Formula f = sci::parse(read_formula_arg(formula_text, file_arg), model_language(s));
            sci::ValidityReport r = sci::valid_in_model(s, f);
            ordered_json j;
            j["valid"] = r.valid;
            if (!r.valid) j["countervaluation"] = assignment_json(s, r.countervaluation);
            std::cout << j.dump() << "\n";
            return r.valid ? kOk : kNegative;
        }

        if (cmd_counter->parsed()) {
            auto cls = sci::parse_class(class_flag);
            if (!cls) throw CLI::ValidationError("unknown class: " + class_flag);
            sci::Formula f = sci::parse(read_formula_arg(formula_text, file_arg), parse_lang_flag(lang_flag));
            sci::SearchOptions opts;
            opts.max_size = max_size;
            opts.budget.max_candidates = budget;
            opts.jobs = jobs;
            sci::CountermodelResult r = sci::find_countermodel(f, *cls, opts);
            if (r.status == sci::SearchStatus::Found) {
                ordered_json j;
                j["formula"] = sci::print(f);
                j["size"] = r.size;
                j["model"] = sci::model_to_json(r.model);
                j["assignment"] = assignment_json(r.model, r.assignment);
                std::cout << j.dump(2) << "\n";
                return kNegative;
            }
            if (r.status == sci::SearchStatus::BudgetExhausted)
                std::cout << "no countermodel found within the search budget (inconclusive up to size "
                          << max_size << ")\n";
            else
                std::cout << "no countermodel up to size " << max_size << "\n";
            return kOk;
        }

        if (cmd_check->parsed()) {
            auto sys = sci::parse_system(system_flag);
            if (!sys) throw CLI::ValidationError("unknown system: " + system_flag);
            std::ifstream in(file_arg);
            if (!in) throw std::runtime_error("cannot open script file: " + file_arg);
            sci::DerivationScript script = sci::script_from_jsonl(in, sci::system_language(*sys));
            std::vector<sci::Formula> hyps;
            for (const std::string& h : hyp_flags) hyps.push_back(sci::parse(h, sci::system_language(*sys)));
            sci::CheckOutcome out = sci::check_derivation(*sys, hyps, script);
            if (out.ok) {
                std::cout << "ok (" << script.steps.size() << " steps)\n";
                return kOk;
            }
            std::cout << "error at step " << out.failed_step << ": " << out.message << "\n";
            return kNegative;
        }

        if (cmd_classify->parsed()) {
            sci::FiniteStructure s = sci::load_model_file(file_arg);
            ordered_json j = ordered_json::array();
            for (sci::ClassId c : sci::classify(s)) j.push_back(sci::class_name(c));
            std::cout << j.dump() << "\n";
            return kOk;
        }

        if (cmd_int_check->parsed()) {
            sci::Formula f = sci::parse(read_formula_arg(formula_text, file_arg), sci::Language::Sci);
            const bool t = sci::intensional_satisfies(f);
            std::cout << (t ? "true" : "false") << "\n";
            return t ? kOk : kNegative;
        }

        if (cmd_ext_check->parsed()) {
            sci::Formula f = sci::parse(read_formula_arg(formula_text, file_arg), sci::Language::Sci);
            sci::FiniteStructure m = sci::extensional_model();
            sci::ValidityReport r = sci::valid_in_model(m, f);
            ordered_json j;
            j["valid"] = r.valid;
            if (!r.valid) j["countervaluation"] = assignment_json(m, r.countervaluation);
            std::cout << j.dump() << "\n";
            return r.valid ? kOk : kNegative;
        }

        if (cmd_census->parsed()) {
            std::vector<unsigned> sizes;
            {
                std::stringstream ss(sizes_flag);
                std::string tok;
                while (std::getline(ss, tok, ',')) sizes.push_back(static_cast<unsigned>(std::stoul(tok)));
            }
            std::vector<sci::ClassId> classes;
            if (classes_flag.empty()) {
                classes.assign(std::begin(sci::kAllClasses), std::end(sci::kAllClasses));
            } else {
                std::stringstream ss(classes_flag);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    auto c = sci::parse_class(tok);
                    if (!c) throw CLI::ValidationError("unknown class: " + tok);
                    classes.push_back(*c);
                }
            }
            sci::EnumBudget eb{budget};
            for (const sci::CensusRow& row : sci::census(sizes, classes, eb)) {
                std::cout << "size=" << row.size << " class=" << sci::class_name(row.cls)
                          << " count=" << row.count << (row.complete ? "" : " (budget exhausted)") << "\n";
            }
            return kOk;
        }

        if (cmd_discern->parsed()) {
            sci::FiniteStructure s = sci::load_model_file(model_path);
            std::cout << sci::discernibility_count(s, depth) << "\n";
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const sci::ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kUsage;
    } catch (const sci::ModelFormatError& e) {
        std::cerr << "model format error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
