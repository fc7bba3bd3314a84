#pragma once

#include <map>
#include <string>

#include "dfml/formula.hpp"
#include "dfml/frame.hpp"

namespace dfml {

/// A model: a frame with a sorted valuation. V^1(p) is a Galois stable
/// subset of Z1; the co-valuation V^∂(p) = V^1(p)' is derived by priming.
struct Model {
  SortedFrame frame;
  std::map<int, Mask> valuation;  // variable index → stable subset of Z1
};

/// Builds a model, rejecting non-stable valuation sets. With
/// `close_valuations` every set is replaced by its closure instead.
Model build_model(SortedFrame f, std::map<int, Mask> valuation,
                  bool close_valuations = false);

/// ⟦φ⟧ ⊆ Z1 per Table 2; always a stable set.
Mask interpret(const Model& m, const FormulaPtr& phi);
/// ⦅φ⦆ = ⟦φ⟧' ⊆ Z∂ (refutation set).
Mask co_interpret(const Model& m, const FormulaPtr& phi);

/// The refutation clause for ◇ evaluated directly:
/// ⦅◇φ⦆ = { y : ∀v (yR″◇v → v ∈ ⦅φ⦆) }, from the co-satisfaction set of φ.
/// Exposed so tests can compare it with (◇-image ⟦φ⟧)″ under priming.
Mask dia_cosatisfaction(const SortedFrame& f, Mask co_phi);

struct SequentCheck {
  bool holds = false;
  std::string witness;  // point in ⟦left⟧ ∖ ⟦right⟧ when the sequent fails
};

/// left ⊢ right holds in m iff ⟦left⟧ ⊆ ⟦right⟧.
SequentCheck check_sequent_model(const Model& m, const Sequent& s);

struct FrameCheck {
  bool holds = false;
  std::map<int, Mask> valuation;  // first failing valuation, canonical order
  std::string witness;            // failing point under that valuation
};

/// Frame validity: the sequent holds under every assignment of StableLattice
/// elements to its variables, enumerated in canonical (ascending-mask,
/// lexicographic by variable) order.
FrameCheck check_sequent_frame(const SortedFrame& f, const Sequent& s,
                               int size_guard = 4096);

}  // namespace dfml
