#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfml/formula.hpp"

namespace dfml {

using Mask = std::uint64_t;

constexpr int kMaxElements = 64;

inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline bool bit(Mask m, int i) { return (m >> i) & 1u; }
int popcount(Mask m);

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite bounded lattice given by an order relation, with meet/join tables
/// computed and verified exhaustively at construction.
class FiniteLattice {
 public:
  /// `leq_pairs` is any generator set of the order; the reflexive-transitive
  /// closure is taken, then antisymmetry and the lattice laws are checked.
  /// Throws LatticeError with a witness pair when a meet or join is missing.
  FiniteLattice(std::vector<std::string> element_names,
                const std::vector<std::pair<int, int>>& leq_pairs);

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

  bool leq(int a, int b) const { return bit(up_[a], b); }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// Up-set of a as a mask.
  Mask up_set(int a) const { return up_[a]; }
  Mask down_set(int a) const { return down_[a]; }

 private:
  int n_;
  std::vector<std::string> names_;
  std::vector<Mask> up_, down_;
  std::vector<int> meet_, join_;
  int bottom_, top_;
};

/// Distribution type of a normal lattice operator: one token per argument
/// place plus the output, each 1 or ∂ (printed as "1"/"d").
struct DistributionType {
  std::vector<bool> arg_dual;  // true = ∂
  bool out_dual = false;

  int arity() const { return static_cast<int>(arg_dual.size()); }
  std::string to_string() const;
  static DistributionType parse(const std::string& text);  // e.g. "(1,d;d)"
};

struct LatticeOp {
  std::string name;
  DistributionType dtype;
  // arity 1: table[a]; arity 2: table[a*n+b]
  std::vector<int> table;

  int apply(int a) const { return table[a]; }
  int apply(int a, int b, int n) const { return table[a * n + b]; }
};

struct FiniteNLE {
  FiniteLattice lattice;
  std::vector<LatticeOp> ops;

  const LatticeOp* find_op(const std::string& name) const;
  const LatticeOp& op(const std::string& name) const;  // throws if absent
};

/// Constructs and fully validates the lattice part; op tables are checked for
/// totality and arity <= 2 (distribution laws are reported by validate_nle,
/// not enforced here).
FiniteNLE build_nle(std::vector<std::string> element_names,
                    const std::vector<std::pair<int, int>>& leq_pairs,
                    std::vector<LatticeOp> ops);

struct CheckResult {
  bool ok = true;
  std::string detail;  // first failing witness, lexicographically least tuple
};

struct ValidationReport {
  // axiom id -> result, e.g. "A1", "Mbox", "dist(box,1)"
  std::vector<std::pair<std::string, CheckResult>> checks;
  bool all_ok() const;
  std::string to_string() const;
};

/// Checks the implication axioms (A1, A2, N) when an op named "imp" is
/// present, the modal axioms (Mbox, Nbox, Mdia, Ndia) for "box"/"dia", and
/// generic (co)distribution plus normality per declared distribution type for
/// every op.
ValidationReport validate_nle(const FiniteNLE& nle);

/// Equational axiom check over all element tuples. Ids: K, D, Tbox, Tdia,
/// S4box, S4dia, B, S5, A3, H1H2, INT.
CheckResult check_equation(const FiniteNLE& nle, const std::string& axiom_id);

std::vector<std::string> equation_ids();

struct FilterOrIdeal {
  bool is_filter;
  Mask members;
};

/// All nonempty filters and ideals, each sorted by member bitmask.
std::pair<std::vector<FilterOrIdeal>, std::vector<FilterOrIdeal>>
filters_ideals(const FiniteLattice& lat);

Mask filter_generated(const FiniteLattice& lat, Mask seed);
Mask ideal_generated(const FiniteLattice& lat, Mask seed);

/// Bottom-up evaluation of a {/\,\/,->,[],<>}-term in the NLE.
/// Throws LatticeError on an unassigned variable or missing operator.
int evaluate_term(const FiniteNLE& nle, const FormulaPtr& f,
                  const std::map<int, int>& assignment);

}  // namespace dfml
