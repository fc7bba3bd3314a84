#pragma once

#include "dfml/frame.hpp"
#include "dfml/lattice.hpp"

namespace dfml {

/// Raw sorted image operator of a frame relation (Eq. of sorted image ops):
/// the union of sections over all argument tuples drawn from the args.
/// Rbox: args {V ⊆ Z∂} → Z∂; Rdia: {U ⊆ Z1} → Z1; T: {U ⊆ Z1, V ⊆ Z∂} → Z∂.
Mask image_op(const SortedFrame& f, RelId id, const std::vector<Mask>& args);

enum class StableOpId {
  Implies,    // A ⇒ C = (A ▷ C')',            G(Z1)×G(Z1) → G(Z1)
  Box,        // □A = (⟐A')' = box_upper,       G(Z1) → G(Z1)
  BoxUpper,   // alias of Box
  BoxLower,   // □^ℓA = (⋃_{x∈A} S11box x)'',   G(Z1) → G(Z1)
  Dia,        // ◇A = (◇-image A)'',            G(Z1) → G(Z1)
  Overt,      // A ⊚ F = (A ⊙ F)'',             G(Z1)×G(Z1) → G(Z1)
  Odot,       // raw image op of R111 (not closed)
  Da,         // A Δ D = {y : A ▷ Γy ⊆ D},      G(Z1)×G(Z∂) → G(Z∂)
  TrightBar,  // A ▷̄ B = (A ▷ B)'',             G(Z1)×G(Z∂) → G(Z∂)
};

/// Evaluates a concrete stable-set operator. Arguments must be Galois sets of
/// the operator's input sorts (not checked beyond sizes); the output is a
/// Galois set except for Odot, which returns the raw image.
Mask stable_op(const SortedFrame& f, StableOpId id, const std::vector<Mask>& args);

/// Right residual of the closed image operator of `id` at argument place `k`
/// (0-based): { u : image_op(args with Γu at place k) ⊆ Q }.
Mask residual(const SortedFrame& f, RelId id, int k, std::vector<Mask> args,
              Mask q);

struct ComplexAlgebra {
  StableLattice carrier;          // G(Z1), elements in ascending mask order
  FiniteNLE nle;                  // same elements as a finite NLE
  std::vector<Mask> elements;     // nle index -> stable-set mask
};

/// Full complex algebra 𝔉⁺ = (G(Z1), ⊆, ⋂, ⋁, ∅″, Z1, ⇒, □, ◇); operator
/// tables are included for exactly the relations present in the frame.
ComplexAlgebra full_complex_algebra(const SortedFrame& f, int size_guard = 4096);

/// Canonical display name of a stable set: "{a,b}" using point names.
std::string set_name(const SortedFrame& f, Sort s, Mask m);

}  // namespace dfml
