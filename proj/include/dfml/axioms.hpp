#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfml/frame.hpp"

namespace dfml {

enum class Verdict { Pass, Fail, NotApplicable };

struct AxiomResult {
  Verdict verdict = Verdict::Pass;
  std::string witness;  // failure witness or reason for inapplicability

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Point operators extracted from the closed-section axioms: ⊟ on Z∂ (F3 for
/// R□), ◆ on Z1 (F3 for R◇), ▷ : Z1×Z∂ → Z∂ (F3 for T) and the sorted ⊟ on
/// Z1 (F5: S11box x = Γ(⊟x)). Each is absent when its relation is missing or
/// some section is not a closed element.
struct PointOps {
  std::optional<std::vector<int>> boxminus;   // Z∂ → Z∂
  std::optional<std::vector<int>> diamond;    // Z1 → Z1
  std::optional<std::vector<int>> boxminus1;  // Z1 → Z1
  std::optional<std::vector<std::vector<int>>> tright;  // [x][y] → Z∂
};

PointOps point_operators(const SortedFrame& f);

/// Axiom ids: F1 F2 F3 F4 F5 F6 FK FD FTbox FTdia FS4box FS4dia FB FS5 FDIST
/// FHEYT.
std::vector<std::string> axiom_ids();

/// Evaluates one frame axiom exactly by its defining condition.
AxiomResult check_frame_axiom(const SortedFrame& f, const std::string& axiom_id,
                              int size_guard = 4096);

struct FrameClassReport {
  std::vector<std::pair<std::string, AxiomResult>> axioms;  // in axiom_ids order
  bool refined = false;  // F1 ∧ … ∧ F6

  const AxiomResult& result(const std::string& id) const;
  std::string to_string() const;
};

FrameClassReport classify_frame(const SortedFrame& f, int size_guard = 4096);

/// Frame class of a named logic: min, K, D, T, S4, B, S5.
/// min → {F1..F4}; K → {F1..F6, FK}; D adds FD; T adds FTbox, FTdia;
/// S4 adds FS4box, FS4dia; B adds FB; S5 adds FS5.
std::vector<std::string> frame_class_for_logic(const std::string& logic);
std::vector<std::string> logic_names();

}  // namespace dfml
