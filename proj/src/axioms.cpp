#include "dfml/axioms.hpp"

#include <algorithm>
#include <sstream>

#include "dfml/complex.hpp"

namespace dfml {

namespace {

std::string pname(const SortedFrame& f, Sort s, int i) { return f.names(s)[i]; }

AxiomResult pass() { return {Verdict::Pass, ""}; }
AxiomResult fail(std::string w) { return {Verdict::Fail, std::move(w)}; }
AxiomResult na(std::string w) { return {Verdict::NotApplicable, std::move(w)}; }

// The closed-section witness of one section, or -1.
int closed_witness(const SortedFrame& f, Mask sec, Sort s) {
  for (int w = 0; w < f.size(s); ++w)
    if (f.gamma(w, s) == sec) return w;
  return -1;
}

struct RelView {
  RelId id;
  const char* name;
  Sort out;                       // sort of the related point w in w R u⃗
  std::vector<Sort> args;         // sorts of the argument places
};

std::vector<RelView> present_relations(const SortedFrame& f) {
  std::vector<RelView> out;
  if (f.rbox) out.push_back({RelId::Rbox, "Rbox", Sort::Del, {Sort::Del}});
  if (f.rdia) out.push_back({RelId::Rdia, "Rdia", Sort::One, {Sort::One}});
  if (f.t) out.push_back({RelId::T, "T", Sort::Del, {Sort::One, Sort::Del}});
  return out;
}

Mask section(const SortedFrame& f, const RelView& r, const std::vector<int>& a) {
  if (r.id == RelId::T) return f.t->sec[a[0]][a[1]];
  return f.rel(r.id).sec[a[0]];
}

// Iterate all argument tuples of a relation view.
template <typename Fn>
bool for_tuples(const SortedFrame& f, const RelView& r, Fn fn) {
  if (r.id == RelId::T) {
    for (int x = 0; x < f.size(Sort::One); ++x)
      for (int y = 0; y < f.size(Sort::Del); ++y)
        if (!fn(std::vector<int>{x, y})) return false;
    return true;
  }
  for (int u = 0; u < f.size(r.args[0]); ++u)
    if (!fn(std::vector<int>{u})) return false;
  return true;
}

AxiomResult check_f2(const SortedFrame& f) {
  for (const RelView& r : present_relations(f)) {
    AxiomResult res = pass();
    bool ok = for_tuples(f, r, [&](const std::vector<int>& a) {
      Mask sec = section(f, r, a);
      // increasing in the first (output) place
      for (int w = 0; w < f.size(r.out); ++w)
        if (bit(sec, w))
          for (int w2 = 0; w2 < f.size(r.out); ++w2)
            if (f.preceq(w, w2, r.out) && !bit(sec, w2)) {
              res = fail(std::string(r.name) + " not increasing at output: " +
                         pname(f, r.out, w) + " related but not " +
                         pname(f, r.out, w2));
              return false;
            }
      // decreasing in each argument place
      for (std::size_t k = 0; k < a.size(); ++k) {
        Sort s = r.args[k];
        for (int v = 0; v < f.size(s); ++v)
          if (f.preceq(v, a[k], s)) {
            std::vector<int> a2 = a;
            a2[k] = v;
            Mask sec2 = section(f, r, a2);
            if ((sec & ~sec2) != 0) {
              res = fail(std::string(r.name) + " not decreasing at place " +
                         std::to_string(k + 1) + ": argument " +
                         pname(f, s, a[k]) + " vs " + pname(f, s, v));
              return false;
            }
          }
      }
      return true;
    });
    if (!ok) return res;
  }
  return pass();
}

AxiomResult check_f3(const SortedFrame& f) {
  for (const RelView& r : present_relations(f)) {
    AxiomResult res = pass();
    bool ok = for_tuples(f, r, [&](const std::vector<int>& a) {
      if (closed_witness(f, section(f, r, a), r.out) < 0) {
        std::string tup;
        for (std::size_t k = 0; k < a.size(); ++k)
          tup += (k ? "," : "") + pname(f, r.args[k], a[k]);
        res = fail(std::string(r.name) + " section at (" + tup +
                   ") is not a closed element");
        return false;
      }
      return true;
    });
    if (!ok) return res;
  }
  return pass();
}

AxiomResult check_f4(const SortedFrame& f) {
  for (const RelView& r : present_relations(f)) {
    SmoothnessReport rep = is_smooth(f, r.id);
    if (!rep.smooth) return fail(rep.witness);
  }
  return pass();
}

AxiomResult check_f5(const SortedFrame& f) {
  if (!f.rbox) return na("Rbox absent");
  auto s = s11box(f);
  for (int x = 0; x < f.size(Sort::One); ++x)
    if (closed_witness(f, s[x], Sort::One) < 0)
      return fail("S11box " + pname(f, Sort::One, x) + " is not closed");
  return pass();
}

AxiomResult check_f6(const SortedFrame& f, int size_guard) {
  if (!f.rbox) return na("Rbox absent");
  StableLattice sl(f, Sort::One, size_guard);
  for (Mask a : sl.elements()) {
    Mask upper = stable_op(f, StableOpId::Box, {a});
    Mask lower = stable_op(f, StableOpId::BoxLower, {a});
    if ((upper & ~lower) != 0)
      return fail("box " + set_name(f, Sort::One, a) + " = " +
                  set_name(f, Sort::One, upper) + " not within lower box " +
                  set_name(f, Sort::One, lower));
  }
  return pass();
}

AxiomResult check_fk(const SortedFrame& f) {
  if (!f.rbox || !f.t) return na("needs Rbox and T");
  PointOps ops = point_operators(f);
  if (!ops.boxminus || !ops.boxminus1 || !ops.tright)
    return fail("point operators undefined (F3/F5 sections not closed)");
  int nd = f.size(Sort::Del);
  for (int x = 0; x < f.size(Sort::One); ++x)
    for (int y = 0; y < nd; ++y) {
      Mask tsec = f.t->sec[(*ops.boxminus1)[x]][(*ops.boxminus)[y]];
      int xy = (*ops.tright)[x][y];
      for (int v = 0; v < nd; ++v)
        if (bit(tsec, v))
          for (int w = 0; w < nd; ++w)
            if (f.preceq(w, xy, Sort::Del) && !bit(f.rbox->sec[w], v))
              return fail("x=" + pname(f, Sort::One, x) + " y=" +
                          pname(f, Sort::Del, y) + " v=" +
                          pname(f, Sort::Del, v) + " w=" +
                          pname(f, Sort::Del, w));
    }
  return pass();
}

AxiomResult check_fd(const SortedFrame& f) {
  if (!f.rbox || !f.rdia) return na("needs Rbox and Rdia");
  auto s = s11box(f);
  for (int x = 0; x < f.size(Sort::One); ++x)
    if ((s[x] & ~f.rdia->sec[x]) != 0)
      return fail("S11box " + pname(f, Sort::One, x) + " = " +
                  set_name(f, Sort::One, s[x]) + " not within Rdia section " +
                  set_name(f, Sort::One, f.rdia->sec[x]));
  return pass();
}

AxiomResult check_reflexive(const SortedFrame& f, RelId id) {
  if (!f.has(id)) return na("relation absent");
  const UnaryRel& r = f.rel(id);
  Sort s = id == RelId::Rbox ? Sort::Del : Sort::One;
  for (std::size_t u = 0; u < r.sec.size(); ++u)
    if (!bit(r.sec[u], static_cast<int>(u)))
      return fail("not reflexive at " + pname(f, s, static_cast<int>(u)));
  return pass();
}

AxiomResult check_transitive(const SortedFrame& f, RelId id) {
  if (!f.has(id)) return na("relation absent");
  const UnaryRel& r = f.rel(id);
  Sort s = id == RelId::Rbox ? Sort::Del : Sort::One;
  int n = static_cast<int>(r.sec.size());
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y)
      if (bit(r.sec[z], y) && (r.sec[y] & ~r.sec[z]) != 0)
        return fail("fails through " + pname(f, s, y) + " over " +
                    pname(f, s, z));
  return pass();
}

AxiomResult check_fb(const SortedFrame& f) {
  if (!f.rbox || !f.rdia) return na("needs Rbox and Rdia");
  auto dualb = galois_dual(f, RelId::Rbox);  // dualb[y] = (Rbox y)' ⊆ Z1
  auto duald = galois_dual(f, RelId::Rdia);  // duald[x] = (Rdia x)' ⊆ Z∂
  for (int x = 0; x < f.size(Sort::One); ++x)
    for (int y = 0; y < f.size(Sort::Del); ++y)
      if (bit(dualb[y], x) != bit(duald[x], y))
        return fail("x=" + pname(f, Sort::One, x) + " y=" +
                    pname(f, Sort::Del, y));
  return pass();
}

AxiomResult check_fs5(const SortedFrame& f) {
  if (!f.rbox || !f.rdia) return na("needs Rbox and Rdia");
  PointOps ops = point_operators(f);
  if (!ops.diamond || !ops.boxminus1)
    return fail("point operators undefined (F3/F5 sections not closed)");
  auto rdd = rbox_dd(f);
  auto s = s11box(f);
  for (int x = 0; x < f.size(Sort::One); ++x) {
    int dx = (*ops.diamond)[x];
    if ((rdd[dx] & ~f.rdia->sec[x]) != 0)
      return fail("(dia " + pname(f, Sort::One, x) +
                  ")R''box not within Rdia section");
    int bx = (*ops.boxminus1)[x];
    if ((f.rdia->sec[bx] & ~s[x]) != 0)
      return fail("Rdia(boxminus " + pname(f, Sort::One, x) +
                  ") not within S11box section");
  }
  return pass();
}

AxiomResult check_fdist(const SortedFrame& f) {
  // All sections of the Galois dual R'≤ of the upper bound relation Galois.
  auto leq = r_leq(f);
  int n1 = f.size(Sort::One);
  std::vector<std::vector<Mask>> dual(n1, std::vector<Mask>(n1));
  for (int x = 0; x < n1; ++x)
    for (int z = 0; z < n1; ++z)
      dual[x][z] = f.prime(leq[x][z], Sort::One);  // ⊆ Z∂
  for (int x = 0; x < n1; ++x)
    for (int z = 0; z < n1; ++z)
      if (!f.is_stable(dual[x][z], Sort::Del))
        return fail("R'leq section at (" + pname(f, Sort::One, x) + "," +
                    pname(f, Sort::One, z) + ") not Galois");
  // argument-place sections w R'≤ [.] z and w R'≤ x [.]
  for (int w = 0; w < f.size(Sort::Del); ++w)
    for (int z = 0; z < n1; ++z) {
      Mask sec1 = 0, sec2 = 0;
      for (int x = 0; x < n1; ++x) {
        if (bit(dual[x][z], w)) sec1 |= Mask{1} << x;
        if (bit(dual[z][x], w)) sec2 |= Mask{1} << x;
      }
      if (!f.is_stable(sec1, Sort::One) || !f.is_stable(sec2, Sort::One))
        return fail("R'leq argument section at " + pname(f, Sort::Del, w) +
                    "," + pname(f, Sort::One, z) + " not Galois");
    }
  return pass();
}

AxiomResult check_fheyt(const SortedFrame& f) {
  if (!f.t) return na("T absent");
  auto r = r111(f);
  int n1 = f.size(Sort::One);
  std::vector<Mask> gam(n1);
  for (int x = 0; x < n1; ++x) gam[x] = f.gamma(x, Sort::One);
  for (int z = 0; z < n1; ++z)
    for (int x = 0; x < n1; ++x)
      if (r[z][x] != (gam[z] & gam[x]))
        return fail("R111 and Rleq differ at (" + pname(f, Sort::One, z) +
                    "," + pname(f, Sort::One, x) + ")");
  return pass();
}

}  // namespace

PointOps point_operators(const SortedFrame& f) {
  PointOps ops;
  if (f.rbox) {
    std::vector<int> t(f.size(Sort::Del));
    bool ok = true;
    for (int y = 0; y < f.size(Sort::Del) && ok; ++y) {
      t[y] = closed_witness(f, f.rbox->sec[y], Sort::Del);
      ok = t[y] >= 0;
    }
    if (ok) ops.boxminus = std::move(t);
  }
  if (f.rdia) {
    std::vector<int> t(f.size(Sort::One));
    bool ok = true;
    for (int x = 0; x < f.size(Sort::One) && ok; ++x) {
      t[x] = closed_witness(f, f.rdia->sec[x], Sort::One);
      ok = t[x] >= 0;
    }
    if (ok) ops.diamond = std::move(t);
  }
  if (f.rbox) {
    auto s = s11box(f);
    std::vector<int> t(f.size(Sort::One));
    bool ok = true;
    for (int x = 0; x < f.size(Sort::One) && ok; ++x) {
      t[x] = closed_witness(f, s[x], Sort::One);
      ok = t[x] >= 0;
    }
    if (ok) ops.boxminus1 = std::move(t);
  }
  if (f.t) {
    std::vector<std::vector<int>> t(f.size(Sort::One),
                                    std::vector<int>(f.size(Sort::Del)));
    bool ok = true;
    for (int x = 0; x < f.size(Sort::One) && ok; ++x)
      for (int y = 0; y < f.size(Sort::Del) && ok; ++y) {
        t[x][y] = closed_witness(f, f.t->sec[x][y], Sort::Del);
        ok = t[x][y] >= 0;
      }
    if (ok) ops.tright = std::move(t);
  }
  return ops;
}

std::vector<std::string> axiom_ids() {
  return {"F1", "F2", "F3", "F4", "F5", "F6", "FK", "FD", "FTbox", "FTdia",
          "FS4box", "FS4dia", "FB", "FS5", "FDIST", "FHEYT"};
}

AxiomResult check_frame_axiom(const SortedFrame& f, const std::string& id,
                              int size_guard) {
  if (id == "F1")
    return f.is_separated() ? pass() : fail("two points share a prime row");
  if (id == "F2") return check_f2(f);
  if (id == "F3") return check_f3(f);
  if (id == "F4") return check_f4(f);
  if (id == "F5") return check_f5(f);
  if (id == "F6") return check_f6(f, size_guard);
  if (id == "FK") return check_fk(f);
  if (id == "FD") return check_fd(f);
  if (id == "FTbox") return check_reflexive(f, RelId::Rbox);
  if (id == "FTdia") return check_reflexive(f, RelId::Rdia);
  if (id == "FS4box") return check_transitive(f, RelId::Rbox);
  if (id == "FS4dia") return check_transitive(f, RelId::Rdia);
  if (id == "FB") return check_fb(f);
  if (id == "FS5") return check_fs5(f);
  if (id == "FDIST") return check_fdist(f);
  if (id == "FHEYT") return check_fheyt(f);
  throw FrameError("unknown frame axiom id: " + id);
}

const AxiomResult& FrameClassReport::result(const std::string& id) const {
  for (const auto& [aid, r] : axioms)
    if (aid == id) return r;
  throw FrameError("axiom not in report: " + id);
}

std::string FrameClassReport::to_string() const {
  std::ostringstream os;
  for (const auto& [id, r] : axioms) {
    os << id << ": "
       << (r.verdict == Verdict::Pass ? "pass"
           : r.verdict == Verdict::Fail ? "fail"
                                        : "n/a");
    if (!r.witness.empty()) os << " (" << r.witness << ")";
    os << '\n';
  }
  os << "refined: " << (refined ? "yes" : "no") << '\n';
  return os.str();
}

FrameClassReport classify_frame(const SortedFrame& f, int size_guard) {
  FrameClassReport rep;
  for (const std::string& id : axiom_ids())
    rep.axioms.emplace_back(id, check_frame_axiom(f, id, size_guard));
  rep.refined = true;
  for (const char* id : {"F1", "F2", "F3", "F4", "F5", "F6"})
    if (!rep.result(id).passed()) rep.refined = false;
  return rep;
}

std::vector<std::string> logic_names() {
  return {"min", "K", "D", "T", "S4", "B", "S5"};
}

std::vector<std::string> frame_class_for_logic(const std::string& logic) {
  std::vector<std::string> base{"F1", "F2", "F3", "F4"};
  if (logic == "min") return base;
  std::vector<std::string> k{"F1", "F2", "F3", "F4", "F5", "F6", "FK"};
  if (logic == "K") return k;
  if (logic == "D") { k.push_back("FD"); return k; }
  if (logic == "T") { k.push_back("FTbox"); k.push_back("FTdia"); return k; }
  if (logic == "S4") { k.push_back("FS4box"); k.push_back("FS4dia"); return k; }
  if (logic == "B") { k.push_back("FB"); return k; }
  if (logic == "S5") { k.push_back("FS5"); return k; }
  throw FrameError("unknown logic: " + logic);
}

}  // namespace dfml
