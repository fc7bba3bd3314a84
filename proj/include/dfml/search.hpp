#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfml/formula.hpp"
#include "dfml/frame.hpp"

namespace dfml {

/// Bounds of one enumeration run. `frame_class` is a set of frame-axiom ids
/// (F1..F6, FK, FD, FTbox, FTdia, FS4box, FS4dia, FB, FS5, FDIST, FHEYT);
/// only frames passing every listed axiom are emitted. `budget` caps the
/// number of candidates examined (-1 = unlimited).
///
/// Relations are installed only when the class mentions a relation-dependent
/// axiom (anything besides F1 and FDIST) or a force flag is set. With F3 in
/// the class, relations are enumerated as point-operator tables ⊟: Z∂→Z∂,
/// ◆: Z1→Z1, ▷: Z1×Z∂→Z∂ whose sections are the closed elements Γ(·);
/// otherwise raw section tables are enumerated (kept for tiny bounds only).
struct SearchBounds {
  int max_z1 = 3;
  int max_zd = 3;
  std::vector<std::string> frame_class;
  long long budget = -1;
  bool force_rbox = false, force_rdia = false, force_t = false;
};

/// Resumable position in the canonical candidate order: ascending (|Z1|,|Z∂|),
/// then I bitmask (bit x*|Z∂|+y for x I y), then the mixed-radix table index
/// of (⊟, ◆, ▷) with ▷ varying fastest.
struct Cursor {
  int n1 = 1, nd = 1;
  std::uint64_t i_mask = 0;
  std::uint64_t table = 0;
};

struct EnumStats {
  long long examined = 0;  // candidates considered (including skipped stages)
  long long emitted = 0;   // frames passing the class and handed to the visitor
};

enum class EnumOutcome {
  Exhausted,        // all candidates within the bounds were examined
  BudgetExhausted,  // budget ran out; cursor points at the next candidate
  Stopped,          // the visitor returned false
};

/// Streams every frame within the bounds that passes the class axioms, in
/// canonical order, starting from `cursor`. The visitor returns false to stop.
/// On return the cursor marks the next unexamined candidate (or the end).
EnumOutcome enumerate_frames(const SearchBounds& bounds, Cursor& cursor,
                             EnumStats& stats,
                             const std::function<bool(const SortedFrame&)>& visit);

struct Countermodel {
  SortedFrame frame;
  std::map<int, Mask> valuation;  // first falsifying valuation
  std::string witness;            // point in ⟦left⟧ ∖ ⟦right⟧
};

struct CountermodelResult {
  std::optional<Countermodel> found;
  EnumOutcome outcome = EnumOutcome::Exhausted;  // of the underlying stream
  Cursor cursor;
  EnumStats stats;
};

/// First frame + valuation in canonical order falsifying the sequent, within
/// the bounds. Relations required by the sequent's connectives are forced on.
/// An empty result is inconclusive when the outcome is BudgetExhausted.
CountermodelResult find_countermodel(const Sequent& s,
                                     const SearchBounds& bounds);

}  // namespace dfml
