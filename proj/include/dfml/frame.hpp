#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfml/lattice.hpp"

namespace dfml {

enum class Sort { One, Del };  // sort 1 and sort ∂

inline Sort co(Sort s) { return s == Sort::One ? Sort::Del : Sort::One; }

struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unary frame relation stored by sections: sec[u] = { w : w R u }.
/// The sorts of w and u depend on the relation (Rbox: both ∂; Rdia: both 1).
struct UnaryRel {
  std::vector<Mask> sec;
};

/// Ternary relation T ⊆ Z∂ × (Z1 × Z∂), sections sec[x][y] = { v : v T x y }.
struct TernaryRel {
  std::vector<std::vector<Mask>> sec;
};

enum class RelId { Rbox, Rdia, T };

/// A finite two-sorted frame (Z1, Z∂, I) with the modal-signature relations.
/// Point sets are bitmasks; the rows of the Galois relation ⊥ (complement of
/// I) are precomputed so that priming is a fold of row intersections.
class SortedFrame {
 public:
  SortedFrame(int n1, int nd, const std::vector<std::pair<int, int>>& i_pairs,
              std::vector<std::string> names1 = {},
              std::vector<std::string> namesd = {});

  int size(Sort s) const { return s == Sort::One ? n1_ : nd_; }
  Mask full(Sort s) const { return full_mask(size(s)); }
  const std::vector<std::string>& names(Sort s) const {
    return s == Sort::One ? names1_ : namesd_;
  }
  bool in_i(int x, int y) const { return bit(irow_[x], y); }

  /// Priming: U' = { w in the co-sort | ∀u ∈ U, u ⊥ w }.
  Mask prime(Mask u, Sort sort_of_u) const;
  /// Double priming (the closure operator of the Galois connection).
  Mask close(Mask u, Sort s) const { return prime(prime(u, s), co(s)); }
  bool is_stable(Mask u, Sort s) const { return close(u, s) == u; }

  /// Open element {w}' of the co-sort of w.
  Mask open_of(int w, Sort sort_of_w) const;
  /// Closed element Γu = {u}''.
  Mask gamma(int u, Sort s) const { return close(Mask{1} << u, s); }

  /// Specialization preorder: u ⪯ w iff {u}' ⊆ {w}'.
  bool preceq(int u, int w, Sort s) const;
  bool is_separated() const;

  std::optional<UnaryRel> rbox, rdia;
  std::optional<TernaryRel> t;

  const UnaryRel& rel(RelId id) const;
  bool has(RelId id) const;

 private:
  int n1_, nd_;
  std::vector<std::string> names1_, namesd_;
  std::vector<Mask> irow_;   // irow_[x] ⊆ Z∂, y with x I y
  std::vector<Mask> grow1_;  // grow1_[x] = {x}' ⊆ Z∂
  std::vector<Mask> growd_;  // growd_[y] = {y}' ⊆ Z1
};

struct GaloisSet {
  Sort sort;
  Mask members;
};

/// The complete lattice of Galois (co)stable sets of one sort, enumerated in
/// ascending bitmask order. Meet is intersection; join is closure of union.
class StableLattice {
 public:
  StableLattice(const SortedFrame& f, Sort s, int size_guard = 4096);

  int size() const { return static_cast<int>(elems_.size()); }
  Mask element(int i) const { return elems_[i]; }
  int index_of(Mask m) const;  // -1 if not stable
  Sort sort() const { return sort_; }
  Mask bottom() const { return elems_.front(); }
  Mask top() const { return elems_.back(); }
  const std::vector<Mask>& elements() const { return elems_; }

  Mask join(Mask a, Mask b) const;

 private:
  const SortedFrame* frame_;
  Sort sort_;
  std::vector<Mask> elems_;
};

struct GuardExceeded : FrameError {
  using FrameError::FrameError;
};

// --- Galois dual and derived relations -------------------------------------

/// Sections of the Galois dual R' of a unary relation: R'u = (Ru)'.
std::vector<Mask> galois_dual(const SortedFrame& f, RelId id);

/// T' x y = (T x y)' ⊆ Z1.
std::vector<std::vector<Mask>> t_prime(const SortedFrame& f);

/// R″□ ⊆ Z1×Z1 as rows: row[x] = xR″□ = (xR'□)'.
std::vector<Mask> rbox_dd(const SortedFrame& f);
/// R″◇ ⊆ Z∂×Z∂ as rows: row[y] = yR″◇ = (yR'◇)'.
std::vector<Mask> rdia_dd(const SortedFrame& f);

/// R^{∂11} v z x iff x ∈ T' z v; sections sec[z][x] ⊆ Z∂.
std::vector<std::vector<Mask>> rd11(const SortedFrame& f);
/// R^{111} u z x: sections sec[z][x] = (R^{∂11} z x)' ⊆ Z1.
std::vector<std::vector<Mask>> r111(const SortedFrame& f);

/// S^{11}□ x = { z : zR″□ ⊆ Γx }.
std::vector<Mask> s11box(const SortedFrame& f);

/// Upper bound relation R≤: sections sec[x][z] = Γx ∩ Γz ⊆ Z1.
std::vector<std::vector<Mask>> r_leq(const SortedFrame& f);

enum class DerivedRel { Tprime, T11d, Rd11, R111, RboxDD, RdiaDD, Rleq, S11box };

struct SmoothnessReport {
  bool smooth = true;
  std::string witness;  // description of a non-Galois section
};

/// A relation is smooth when every section of its Galois dual (both the
/// output sections R'u⃗ and the argument sections wR'[..]) is a Galois set.
SmoothnessReport is_smooth(const SortedFrame& f, RelId id);

}  // namespace dfml
