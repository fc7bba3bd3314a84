#include "dfml/frame.hpp"

#include <algorithm>

namespace dfml {

SortedFrame::SortedFrame(int n1, int nd,
                         const std::vector<std::pair<int, int>>& i_pairs,
                         std::vector<std::string> names1,
                         std::vector<std::string> namesd)
    : n1_(n1), nd_(nd), names1_(std::move(names1)), namesd_(std::move(namesd)) {
  if (n1 <= 0 || nd <= 0) throw FrameError("sorts must be nonempty");
  if (n1 > kMaxElements || nd > kMaxElements)
    throw FrameError("sort exceeds " + std::to_string(kMaxElements) +
                     " points");
  auto default_names = [](int n, const char* prefix) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
    return v;
  };
  if (names1_.empty()) names1_ = default_names(n1, "x");
  if (namesd_.empty()) namesd_ = default_names(nd, "y");
  if (static_cast<int>(names1_.size()) != n1 ||
      static_cast<int>(namesd_.size()) != nd)
    throw FrameError("name list does not match sort size");

  irow_.assign(n1, 0);
  for (auto [x, y] : i_pairs) {
    if (x < 0 || x >= n1 || y < 0 || y >= nd)
      throw FrameError("I pair out of range");
    irow_[x] |= Mask{1} << y;
  }
  // ⊥ is the complement of I; {x}' = { y : not x I y } and dually.
  grow1_.resize(n1);
  for (int x = 0; x < n1; ++x) grow1_[x] = ~irow_[x] & full_mask(nd);
  growd_.assign(nd, 0);
  for (int y = 0; y < nd; ++y)
    for (int x = 0; x < n1; ++x)
      if (!bit(irow_[x], y)) growd_[y] |= Mask{1} << x;
}

Mask SortedFrame::prime(Mask u, Sort s) const {
  const auto& rows = s == Sort::One ? grow1_ : growd_;
  Mask out = full(co(s));
  for (int i = 0; i < size(s); ++i)
    if (bit(u, i)) out &= rows[i];
  return out;
}

Mask SortedFrame::open_of(int w, Sort s) const {
  return s == Sort::One ? grow1_[w] : growd_[w];
}

bool SortedFrame::preceq(int u, int w, Sort s) const {
  Mask pu = open_of(u, s), pw = open_of(w, s);
  return (pu & ~pw) == 0;
}

bool SortedFrame::is_separated() const {
  for (Sort s : {Sort::One, Sort::Del})
    for (int u = 0; u < size(s); ++u)
      for (int w = u + 1; w < size(s); ++w)
        if (open_of(u, s) == open_of(w, s)) return false;
  return true;
}

const UnaryRel& SortedFrame::rel(RelId id) const {
  const std::optional<UnaryRel>* r =
      id == RelId::Rbox ? &rbox : id == RelId::Rdia ? &rdia : nullptr;
  if (!r || !r->has_value()) throw FrameError("relation not present");
  return **r;
}

bool SortedFrame::has(RelId id) const {
  switch (id) {
    case RelId::Rbox: return rbox.has_value();
    case RelId::Rdia: return rdia.has_value();
    case RelId::T: return t.has_value();
  }
  return false;
}

// --- Stable lattice --------------------------------------------------------

StableLattice::StableLattice(const SortedFrame& f, Sort s, int size_guard)
    : frame_(&f), sort_(s) {
  // Every stable set is an intersection of opens {w}' (Lemma 3.2), so close
  // the set of co-sort open rows, plus the whole sort, under intersection.
  std::vector<Mask> found{f.full(s)};
  std::vector<Mask> frontier{f.full(s)};
  std::vector<Mask> opens;
  for (int w = 0; w < f.size(co(s)); ++w) opens.push_back(f.open_of(w, co(s)));
  auto known = [&](Mask m) {
    return std::find(found.begin(), found.end(), m) != found.end();
  };
  while (!frontier.empty()) {
    Mask cur = frontier.back();
    frontier.pop_back();
    for (Mask o : opens) {
      Mask m = cur & o;
      if (!known(m)) {
        if (static_cast<int>(found.size()) >= size_guard)
          throw GuardExceeded("stable lattice exceeds size guard of " +
                              std::to_string(size_guard));
        found.push_back(m);
        frontier.push_back(m);
      }
    }
  }
  std::sort(found.begin(), found.end());
  elems_ = std::move(found);
}

int StableLattice::index_of(Mask m) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), m);
  if (it == elems_.end() || *it != m) return -1;
  return static_cast<int>(it - elems_.begin());
}

Mask StableLattice::join(Mask a, Mask b) const {
  return frame_->close(a | b, sort_);
}

// --- Galois dual and derived relations -------------------------------------

std::vector<Mask> galois_dual(const SortedFrame& f, RelId id) {
  const UnaryRel& r = f.rel(id);
  // Rbox sections live in Z∂, Rdia sections in Z1; priming flips the sort.
  Sort sec_sort = id == RelId::Rbox ? Sort::Del : Sort::One;
  std::vector<Mask> out(r.sec.size());
  for (std::size_t u = 0; u < r.sec.size(); ++u)
    out[u] = f.prime(r.sec[u], sec_sort);
  return out;
}

std::vector<std::vector<Mask>> t_prime(const SortedFrame& f) {
  if (!f.t) throw FrameError("relation T not present");
  int n1 = f.size(Sort::One), nd = f.size(Sort::Del);
  std::vector<std::vector<Mask>> out(n1, std::vector<Mask>(nd));
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < nd; ++y)
      out[x][y] = f.prime(f.t->sec[x][y], Sort::Del);
  return out;
}

std::vector<Mask> rbox_dd(const SortedFrame& f) {
  // xR'□ = { v ∈ Z∂ : x ∈ (R□v)' }, then xR″□ = (xR'□)'.
  auto dual = galois_dual(f, RelId::Rbox);  // dual[v] = (R□v)' ⊆ Z1
  int n1 = f.size(Sort::One), nd = f.size(Sort::Del);
  std::vector<Mask> out(n1);
  for (int x = 0; x < n1; ++x) {
    Mask xrp = 0;
    for (int v = 0; v < nd; ++v)
      if (bit(dual[v], x)) xrp |= Mask{1} << v;
    out[x] = f.prime(xrp, Sort::Del);
  }
  return out;
}

std::vector<Mask> rdia_dd(const SortedFrame& f) {
  // yR'◇ = { u ∈ Z1 : y ∈ (R◇u)' }, then yR″◇ = (yR'◇)'.
  auto dual = galois_dual(f, RelId::Rdia);  // dual[u] = (R◇u)' ⊆ Z∂
  int n1 = f.size(Sort::One), nd = f.size(Sort::Del);
  std::vector<Mask> out(nd);
  for (int y = 0; y < nd; ++y) {
    Mask yrp = 0;
    for (int u = 0; u < n1; ++u)
      if (bit(dual[u], y)) yrp |= Mask{1} << u;
    out[y] = f.prime(yrp, Sort::One);
  }
  return out;
}

std::vector<std::vector<Mask>> rd11(const SortedFrame& f) {
  // v R^{∂11} z x iff x T^{11∂} z v iff x ∈ (T z v)'.
  auto tp = t_prime(f);
  int n1 = f.size(Sort::One), nd = f.size(Sort::Del);
  std::vector<std::vector<Mask>> out(n1, std::vector<Mask>(n1, 0));
  for (int z = 0; z < n1; ++z)
    for (int x = 0; x < n1; ++x)
      for (int v = 0; v < nd; ++v)
        if (bit(tp[z][v], x)) out[z][x] |= Mask{1} << v;
  return out;
}

std::vector<std::vector<Mask>> r111(const SortedFrame& f) {
  auto perm = rd11(f);
  int n1 = f.size(Sort::One);
  std::vector<std::vector<Mask>> out(n1, std::vector<Mask>(n1));
  for (int z = 0; z < n1; ++z)
    for (int x = 0; x < n1; ++x)
      out[z][x] = f.prime(perm[z][x], Sort::Del);
  return out;
}

std::vector<Mask> s11box(const SortedFrame& f) {
  auto rdd = rbox_dd(f);
  int n1 = f.size(Sort::One);
  std::vector<Mask> out(n1, 0);
  for (int x = 0; x < n1; ++x) {
    Mask gx = f.gamma(x, Sort::One);
    for (int z = 0; z < n1; ++z)
      if ((rdd[z] & ~gx) == 0) out[x] |= Mask{1} << z;
  }
  return out;
}

std::vector<std::vector<Mask>> r_leq(const SortedFrame& f) {
  int n1 = f.size(Sort::One);
  std::vector<std::vector<Mask>> out(n1, std::vector<Mask>(n1));
  std::vector<Mask> gammas(n1);
  for (int x = 0; x < n1; ++x) gammas[x] = f.gamma(x, Sort::One);
  for (int x = 0; x < n1; ++x)
    for (int z = 0; z < n1; ++z)
      out[x][z] = gammas[x] & gammas[z];
  return out;
}

// --- Smoothness ------------------------------------------------------------

namespace {

std::string point_name(const SortedFrame& f, Sort s, int i) {
  return f.names(s)[i];
}

bool check_section(const SortedFrame& f, Mask sec, Sort sec_sort,
                   const std::string& desc, SmoothnessReport& rep) {
  if (f.is_stable(sec, sec_sort)) return true;
  rep.smooth = false;
  rep.witness = desc + " is not a Galois set";
  return false;
}

}  // namespace

SmoothnessReport is_smooth(const SortedFrame& f, RelId id) {
  SmoothnessReport rep;
  if (id != RelId::T) {
    const UnaryRel& r = f.rel(id);
    // R ⊆ S×S with sections Ru ⊆ S; R' has output sections R'u = (Ru)' of the
    // co-sort and first-place sections wR' = { u : w ∈ (Ru)' } of sort S.
    Sort s = id == RelId::Rbox ? Sort::Del : Sort::One;
    Sort cs = co(s);
    auto dual = galois_dual(f, id);
    const char* nm = id == RelId::Rbox ? "R'box" : "R'dia";
    for (int u = 0; u < f.size(s); ++u)
      if (!check_section(f, dual[u], cs,
                         std::string(nm) + " section at " + point_name(f, s, u),
                         rep))
        return rep;
    for (int w = 0; w < f.size(cs); ++w) {
      Mask sec = 0;
      for (int u = 0; u < f.size(s); ++u)
        if (bit(dual[u], w)) sec |= Mask{1} << u;
      if (!check_section(f, sec, s,
                         std::string(nm) + " first-place section at " +
                             point_name(f, cs, w),
                         rep))
        return rep;
    }
    return rep;
  }
  // T ⊆ Z∂×(Z1×Z∂); T' has output sections T'xy ⊆ Z1, first-place sections
  // uT'[ ]y ⊆ Z1, and second-place sections uT'x[ ] ⊆ Z∂.
  auto tp = t_prime(f);
  int n1 = f.size(Sort::One), nd = f.size(Sort::Del);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < nd; ++y)
      if (!check_section(f, tp[x][y], Sort::One,
                         "T' section at (" + point_name(f, Sort::One, x) +
                             ", " + point_name(f, Sort::Del, y) + ")",
                         rep))
        return rep;
  for (int u = 0; u < n1; ++u) {
    for (int y = 0; y < nd; ++y) {
      Mask sec = 0;
      for (int x = 0; x < n1; ++x)
        if (bit(tp[x][y], u)) sec |= Mask{1} << x;
      if (!check_section(f, sec, Sort::One,
                         "T' place-1 section at (" + point_name(f, Sort::One, u) +
                             ", _, " + point_name(f, Sort::Del, y) + ")",
                         rep))
        return rep;
    }
    for (int x = 0; x < n1; ++x) {
      Mask sec = 0;
      for (int y = 0; y < nd; ++y)
        if (bit(tp[x][y], u)) sec |= Mask{1} << y;
      if (!check_section(f, sec, Sort::Del,
                         "T' place-2 section at (" + point_name(f, Sort::One, u) +
                             ", " + point_name(f, Sort::One, x) + ", _)",
                         rep))
        return rep;
    }
  }
  return rep;
}

}  // namespace dfml
