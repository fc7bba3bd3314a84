#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dfml {

// Connectives of the modal language: variables, lattice constants and
// operations, implication and the two modalities.
enum class Conn { Var, Top, Bot, And, Or, Imp, Box, Dia };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula tree. Shared subtrees are permitted; all operations
/// treat formulas structurally.
class Formula {
 public:
  Conn kind;
  int index = -1;  // variable index, Conn::Var only
  FormulaPtr left, right;

  static FormulaPtr var(int i);
  static FormulaPtr top();
  static FormulaPtr bot();
  static FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
  static FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
  static FormulaPtr imp(FormulaPtr a, FormulaPtr b);
  static FormulaPtr box(FormulaPtr a);
  static FormulaPtr dia(FormulaPtr a);

 private:
  Formula(Conn k, int idx, FormulaPtr l, FormulaPtr r)
      : kind(k), index(idx), left(std::move(l)), right(std::move(r)) {}
  friend FormulaPtr make(Conn, int, FormulaPtr, FormulaPtr);
};

int compare(const FormulaPtr& a, const FormulaPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return compare(a, b) < 0;
  }
};

std::string to_string(const FormulaPtr& f);
int node_count(const FormulaPtr& f);

/// All distinct subtrees of f, including f itself, in a deterministic order.
std::vector<FormulaPtr> subformulas(const FormulaPtr& f);

std::vector<int> variables_of(const FormulaPtr& f);

struct Sequent {
  FormulaPtr left, right;
};

bool equal(const Sequent& a, const Sequent& b);
std::string to_string(const Sequent& s);

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": " + what),
        position(pos) {}
  std::size_t position;
};

// Grammar (tightest first): [] and <> bind tightest, then /\ (left), then
// \/ (left), then -> (right). Tokens: top bot /\ \/ -> [] <> p<digits> |-
FormulaPtr parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

// Variable substitution, used by the proof system's schema matching.
using Subst = std::map<int, FormulaPtr>;
FormulaPtr substitute(const FormulaPtr& f, const Subst& s);

/// Matches `pattern` (whose variables are schema variables) against `target`,
/// extending `binding`. Returns false and leaves `binding` unspecified on
/// mismatch.
bool match(const FormulaPtr& pattern, const FormulaPtr& target, Subst& binding);

}  // namespace dfml
