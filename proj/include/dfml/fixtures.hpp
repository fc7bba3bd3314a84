#pragma once

#include <string>
#include <vector>

#include "dfml/frame.hpp"
#include "dfml/lattice.hpp"

namespace dfml::fixtures {

/// All ten bounded lattices with at most five elements, up to isomorphism:
/// chains of length 1–5, the four-element diamond, and the five-element
/// lattices M3, N5, and the two "diamond with an extra chain point" shapes.
/// Element 0 is always the bottom; the last element is always the top.
FiniteLattice lattice(const std::string& name);
std::vector<std::string> lattice_names();
bool is_distributive_name(const std::string& name);

/// Standard operator tables on a given lattice.
LatticeOp op_box_id(const FiniteLattice& lat);
LatticeOp op_dia_id(const FiniteLattice& lat);
LatticeOp op_box_bot(const FiniteLattice& lat);   // []a = top iff a = top
LatticeOp op_dia_top(const FiniteLattice& lat);   // <>a = bot iff a = bot
LatticeOp op_imp_zero(const FiniteLattice& lat);  // a->b = top iff a=bot or b=top
LatticeOp op_imp_heyting(const FiniteLattice& lat);  // distributive lattices only

struct NamedNLE {
  std::string name;
  FiniteNLE nle;
};

/// The test corpus: every lattice above with the (id, id, imp_zero) and
/// (box_bot, dia_top, imp_zero) operator assignments, plus Heyting-implication
/// variants on the distributive ones and one D-failing modal chain.
std::vector<NamedNLE> nle_corpus();

/// FIX-K2: Z1 = Zd = {a, b}, I the identity — a classical 2-world frame.
SortedFrame frame_k2();
/// FIX-P2: Z1 = {x1, x2}, Zd = {y1, y2}, I = {(x1,y2), (x2,y1)}.
SortedFrame frame_p2();

/// Total T relation making every section empty (so T' sections are all of
/// Z1): convenience for frames that need a T present.
TernaryRel empty_t(const SortedFrame& f);
UnaryRel empty_unary(int arity_points);

}  // namespace dfml::fixtures
