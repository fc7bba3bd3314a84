#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfml/axioms.hpp"
#include "dfml/frame.hpp"
#include "dfml/lattice.hpp"

namespace dfml {

/// One canonical relation, built generically from a lattice operator f by
/// w R_f u⃗ iff ∀a⃗ (⋀ a_k ∈ u_k → f(a⃗) ∈ w). Sorts follow the distribution
/// type: type 1 places range over filters, type ∂ places over ideals.
struct CanonicalRelation {
  std::string op;
  Sort out;
  std::vector<Sort> args;
  std::vector<Mask> unary_sec;                // sec[u], arity 1
  std::vector<std::vector<Mask>> binary_sec;  // sec[u1][u2], arity 2
};

/// Canonical frame of a finite NLE: Z1 = nonempty filters, Z∂ = nonempty
/// ideals, xIy iff x∩y = ∅. Ops of distribution type (∂;∂), (1;1) and
/// (1,∂;∂) are installed as Rbox, Rdia and T respectively; every op also
/// keeps its generic relation.
struct CanonicalFrame {
  SortedFrame frame;
  std::vector<FilterOrIdeal> filters, ideals;  // point index → element set
  std::vector<int> x_of_elem, y_of_elem;  // a → index of ↑a (resp. ↓a)
  std::vector<Mask> x_set, y_set;         // a → X_a ⊆ Z1, a → Y^a ⊆ Z∂
  PointOps point_ops;  // canonical point operators of Eq. (21)
  std::vector<CanonicalRelation> relations;
  FiniteNLE nle;
};

CanonicalFrame canonical_frame(const FiniteNLE& nle);

struct RepresentationReport {
  bool ok = true;
  std::string witness;  // first failing identity
  int lattice_size = 0;
  int stable_size = 0;
};

/// Verifies that a ↦ X_a is a bijection L → G(Z1) preserving ≤, ∧, ∨, 0, 1
/// and commuting with box, dia and imp (via the frame's stable operators).
RepresentationReport verify_representation(const FiniteNLE& nle,
                                           int size_guard = 4096);

/// σ- and π-extension tables of one declared operator over the StableLattice
/// of the canonical frame, computed literally from the closed/open elements
/// of the embedding, with argument and output places read in the order twist
/// dictated by the distribution type.
struct Extension {
  std::string op;
  int arity = 1;
  std::vector<int> sigma, pi;  // arity 1: [a]; arity 2: [a*n + b]
};

Extension sigma_pi_extension(const CanonicalFrame& cf,
                             const std::string& op_name,
                             int size_guard = 4096);

/// Frame-axiom verdicts on the canonical frame for equational axiom ids
/// (K, D, Tbox, Tdia, S4box, S4dia, B, S5, A3, H1H2).
struct CanonicityEntry {
  std::string equation_id;
  std::string frame_axiom;
  CheckResult algebra;  // check_equation on the NLE
  AxiomResult frame;    // check_frame_axiom on the canonical frame
};

std::vector<CanonicityEntry> canonicity_report(
    const FiniteNLE& nle, const std::vector<std::string>& equation_ids,
    int size_guard = 4096);

/// Frame axiom corresponding to an equational axiom id; throws LatticeError
/// for ids with no frame counterpart.
std::string frame_axiom_for_equation(const std::string& equation_id);

}  // namespace dfml
