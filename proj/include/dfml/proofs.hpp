#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfml/formula.hpp"

namespace dfml {

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rules and axiom schemas of the minimal sequent system, specialized to the
/// signature {→, □, ◇} with distribution types δ(→)=(1,∂;∂), δ(□)=(∂;∂),
/// δ(◇)=(1;1).
enum class RuleId {
  Identity,       // φ ⊢ φ
  Cut,            // φ⊢ψ, ψ⊢θ / φ⊢θ
  AndLeft1,       // φ⊢θ / φ∧ψ ⊢ θ
  AndLeft2,       // ψ⊢θ / φ∧ψ ⊢ θ
  AndRight,       // φ⊢ψ, φ⊢θ / φ ⊢ ψ∧θ
  OrLeft,         // φ⊢θ, ψ⊢θ / φ∨ψ ⊢ θ
  OrRight1,       // θ⊢φ / θ ⊢ φ∨ψ
  OrRight2,       // θ⊢ψ / θ ⊢ φ∨ψ
  BotLeft,        // ⊥ ⊢ φ
  TopRight,       // φ ⊢ ⊤
  Substitution,   // φ⊢ψ / φσ ⊢ ψσ (uniform variable substitution)
  MonoBox,        // ψ⊢θ / □ψ ⊢ □θ
  MonoDia,        // ψ⊢θ / ◇ψ ⊢ ◇θ
  AntiImpLeft,    // ψ⊢θ / θ→χ ⊢ ψ→χ
  MonoImpRight,   // ψ⊢θ / χ→ψ ⊢ χ→θ
  DistDia,        // ◇(φ∨ψ) ⊢ ◇φ∨◇ψ
  DistBox,        // □φ∧□ψ ⊢ □(φ∧ψ)
  CodistImpLeft,  // (φ∨ψ)→χ ⊢ (φ→χ)∧(ψ→χ)
  DistImpRight,   // (φ→ψ)∧(φ→χ) ⊢ φ→(ψ∧χ)
  NormDia,        // ◇⊥ ⊢ ⊥
  NormBox,        // ⊤ ⊢ □⊤
  NormImpLeft,    // ⊤ ⊢ ⊥→φ
  NormImpRight,   // ⊤ ⊢ φ→⊤
  AxiomInstance,  // substitution instance of a named logic axiom
};

std::string rule_name(RuleId id);
/// Inverse of rule_name; "axiom-instance(<id>)" is handled by parse_prf, not
/// here. Throws ProofError on an unknown name.
RuleId rule_from_name(std::string_view name);
int rule_arity(RuleId id);

/// Proof tree. For RuleId::AxiomInstance, `axiom` names the logic axiom
/// (one of K, D, T, S4, B, S5).
struct Derivation {
  Sequent sequent;
  RuleId rule = RuleId::Identity;
  std::string axiom;
  std::vector<Derivation> premises;
};

int derivation_height(const Derivation& d);
int derivation_size(const Derivation& d);

/// Axiom schemas of the named logic axiom, as sequents over schema variables.
/// Ids: K, D, T, S4, B, S5 (T, S4, B, S5 carry two schemas each).
const std::vector<Sequent>& axiom_schemas(const std::string& axiom_id);
std::vector<std::string> logic_axiom_ids();

/// Axiom-id set of a named logic: min→{}, K→{K}, D→{K,D}, T→{K,T},
/// S4→{K,S4}, B→{K,B}, S5→{K,S5}.
std::set<std::string> axioms_for_logic(const std::string& logic);

struct ProofCheck {
  bool ok = true;
  std::string witness;  // first failing node: path, rule and reason
};

/// Local-correctness check of the whole tree: every node's sequent must match
/// its rule's schema against its premises; AxiomInstance nodes must
/// instantiate an axiom in `logic` under substitution. The witness pinpoints
/// the first failing node (root path "root", children ".0", ".1", ...).
ProofCheck check_derivation(const Derivation& d,
                            const std::set<std::string>& logic);

/// Bounded backward proof search; `depth` bounds the proof-tree height.
/// Returns a derivation that passes check_derivation, or nullopt (which is
/// inconclusive: the calculus has no cut-elimination result, and search
/// restricts cut formulas to subformulas of the goal plus instantiated logic
/// axioms). Deterministic for fixed inputs.
std::optional<Derivation> search_proof(const Sequent& goal,
                                       const std::set<std::string>& logic,
                                       int depth);

/// .prf text: one node per line, two spaces of indentation per tree level,
/// each line "<rule-id>: <sequent>" (axiom instances as
/// "axiom-instance(<id>): <sequent>"). '#' starts a comment line.
std::string emit_prf(const Derivation& d);
Derivation parse_prf(std::string_view text);

}  // namespace dfml
