#ifndef SCI_PROOF_HPP
#define SCI_PROOF_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sci/formula.hpp"

namespace sci {

// ── Deductive systems ────────────────────────────────────────────────────────
//
// Thirteen Hilbert systems over the two object languages.  Identity-side
// systems read [] as the defined symbol (p == T); modal-side systems read ==
// as the defined strict equivalence.  Each registry entry carries, by scheme
// name:
//
//   axioms           instanced by the "axiom" justification; the only steps
//                    the necessitation rule may point at
//   theorem schemes  instanced like axioms but never necessitation-eligible
//                    (system extensions keep their base systems' derivable
//                    schemes here so that scripts re-check verbatim)
//
// plus the rule set: modus ponens is always available, `an` (axiom
// necessitation) and `spse` (substitution of proved strict equivalents) per
// system.

enum class SystemId : std::uint8_t {
    SCI, SCI_EXT, SCI_PLUS, SCI_3, S1SP_EQ, S3_EQ, S4_EQ, S5_EQ,
    S1, S1SP, S3, S4, S5,
};

inline constexpr SystemId kAllSystems[] = {
    SystemId::SCI, SystemId::SCI_EXT, SystemId::SCI_PLUS, SystemId::SCI_3,
    SystemId::S1SP_EQ, SystemId::S3_EQ, SystemId::S4_EQ, SystemId::S5_EQ,
    SystemId::S1, SystemId::S1SP, SystemId::S3, SystemId::S4, SystemId::S5,
};

const char* system_name(SystemId s) noexcept;
std::optional<SystemId> parse_system(const std::string& name) noexcept;
Language system_language(SystemId s) noexcept;

struct SystemInfo {
    SystemId id;
    std::string name;
    Language lang;
    std::vector<std::string> axioms;           // scheme names, necessitation-eligible
    std::vector<std::string> theorem_schemes;  // scheme names
    bool has_an = false;
    bool has_spse = false;
};
const SystemInfo& system_info(SystemId s);

// Scheme names (identity side unless noted):
//   cpc               any formula whose Boolean skeleton is a tautology
//   id1..id7          identity axioms
//   fregean           (p <-> q) -> (p == q)
//   taut-nec          [] t for t of classical-tautology form
//   1                 (p == q) <-> [](p <-> q)
//   2                 [] p -> p                       (also modal side)
//   3'                ([](p->q) & [](q->r)) -> [](p->r)   (also modal)
//   3                 [](p->q) -> []([]p -> []q)          (also modal)
//   4                 [] p -> [][] p                      (also modal)
//   5                 ~[] p -> [] ~[] p                   (also modal)
//   sp                (p == q) -> (chi[x:=p] == chi[x:=q])
// Returns true when f is an instance of the scheme in the given language.
bool matches_scheme(Language lang, const std::string& scheme, const Formula& f);

// The first axiom scheme of the system that f instantiates.
std::optional<std::string> match_axiom(SystemId sys, const Formula& f);

// Substitution-principle matcher: f = (p == q) -> (chi[x:=p] == chi[x:=q]).
// The context chi is reconstructed deterministically: positions where the
// two consequent sides differ as (p, q) become the substitution variable
// (outermost first); agreeing positions keep the common subtree.  When
// p == q the consequent sides must agree and chi is that common tree with a
// fresh variable.
struct SpMatch {
    Formula chi;
    unsigned var;
    Formula lhs, rhs;
};
std::optional<SpMatch> match_sp(const Formula& f, Language lang);

// Reads a strict-equivalence shape: Equiv(a, b) on the identity side,
// ([](a->b) & [](b->a)) on the modal side.
std::optional<std::pair<Formula, Formula>> as_equivalence(Language lang, const Formula& f);

// ── Derivations ──────────────────────────────────────────────────────────────

enum class RuleKind : std::uint8_t { Hyp, Axiom, TheoremScheme, MP, AN, SPSE };

struct Justification {
    RuleKind rule;
    std::string scheme;              // Axiom / TheoremScheme
    std::vector<std::size_t> from;   // 1-based earlier step numbers
    Formula context;                 // SPSE
    unsigned context_var = 0;        // SPSE
};

struct Step {
    Formula formula;
    Justification just;
};

struct DerivationScript {
    std::vector<Step> steps;
};

struct CheckOutcome {
    bool ok = true;
    std::size_t failed_step = 0;  // 1-based; 0 when ok
    std::string message;
    explicit operator bool() const noexcept { return ok; }
};

// Verifies every step; when `conclusion` is non-null the last step must be
// that formula.  MP(i,j) expects step j to be (step_i -> current).  AN(i)
// expects step i to be justified as an axiom of this system and the current
// formula to be its necessitation.  SPSE(i) expects a hypothesis-free
// strict-equivalence theorem at step i.
CheckOutcome check_derivation(SystemId sys, const std::vector<Formula>& hyps,
                              const DerivationScript& script, const Formula* conclusion = nullptr);

// ── Script files ─────────────────────────────────────────────────────────────
//
// JSON lines, one step per line:
//   {"n":1,"formula":"(x0 -> x0)","just":{"rule":"axiom","scheme":"cpc"}}
// Rules: hyp | axiom | ts | sp | mp | an | spse.  "sp" is shorthand for a
// theorem-scheme step with scheme "sp".  mp/an/spse take "from":[...];
// spse additionally takes "context" (a formula with the substitution
// variable) and "var".

DerivationScript script_from_jsonl(std::istream& in, Language lang);
void script_to_jsonl(const DerivationScript& script, std::ostream& out);

// ── Programmatic script construction ─────────────────────────────────────────

// Appends one step per call (composites a few) and returns its 1-based step
// number.  Shapes are validated on the spot, so a malformed construction
// throws std::logic_error immediately instead of failing later in the
// checker.
class DerivationBuilder {
public:
    explicit DerivationBuilder(SystemId sys);

    std::size_t hyp(const Formula& f);
    std::size_t cpc(const Formula& f);
    std::size_t ax(const std::string& scheme, const Formula& f);
    std::size_t ts(const std::string& scheme, const Formula& f);
    std::size_t sp(const Formula& f);
    std::size_t mp(std::size_t minor, std::size_t major);
    std::size_t an(std::size_t axiom_step);
    std::size_t spse(std::size_t eq_step, const Formula& context, unsigned var);

    // conveniences: each emits the gluing tautology plus modus ponens
    std::size_t chain(std::size_t ab, std::size_t bc);     // a->b, b->c  =>  a->c
    std::size_t conj_intro(std::size_t a, std::size_t b);  // a, b  =>  (a & b)
    std::size_t conj_elim1(std::size_t ab);                // (a & b)  =>  a
    std::size_t conj_elim2(std::size_t ab);                // (a & b)  =>  b

    const Formula& formula(std::size_t step) const;
    std::size_t size() const noexcept;
    SystemId system() const noexcept { return sys_; }
    DerivationScript take();

private:
    std::size_t push(Formula f, Justification just);
    SystemId sys_;
    DerivationScript script_;
};

// ── Shipped derivations ──────────────────────────────────────────────────────

struct Fixture {
    std::string name;
    SystemId system;
    Formula conclusion;
    DerivationScript script;
};

// Derivations of the classic principles these systems are built around;
// every fixture checks ok in its declared system (covered by tests).
const std::vector<Fixture>& fixture_derivations();

}  // namespace sci

#endif  // SCI_PROOF_HPP
