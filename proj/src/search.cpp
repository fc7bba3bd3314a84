#include "dfml/search.hpp"

#include <algorithm>

#include "dfml/axioms.hpp"
#include "dfml/semantics.hpp"

namespace dfml {

namespace {

/// Class axioms bucketed by which relations they constrain, so candidates can
/// be filtered stage by stage instead of per full frame.
struct Stages {
  std::vector<std::string> bare;    // F1, FDIST: depend on I only
  std::vector<std::string> box;     // F2-F4 on Rbox, F5, F6, FTbox, FS4box
  std::vector<std::string> dia;     // F2-F4 on Rdia, FTdia, FS4dia
  std::vector<std::string> tern;    // F2-F4 on T, FHEYT
  std::vector<std::string> boxdia;  // FD, FB, FS5
  std::vector<std::string> boxt;    // FK
};

Stages assign_stages(const std::vector<std::string>& cls) {
  Stages st;
  for (const std::string& id : cls) {
    if (id == "F1" || id == "FDIST") {
      st.bare.push_back(id);
    } else if (id == "F2" || id == "F3" || id == "F4") {
      st.box.push_back(id);
      st.dia.push_back(id);
      st.tern.push_back(id);
    } else if (id == "F5" || id == "F6" || id == "FTbox" || id == "FS4box") {
      st.box.push_back(id);
    } else if (id == "FTdia" || id == "FS4dia") {
      st.dia.push_back(id);
    } else if (id == "FHEYT") {
      st.tern.push_back(id);
    } else if (id == "FD" || id == "FB" || id == "FS5") {
      st.boxdia.push_back(id);
    } else if (id == "FK") {
      st.boxt.push_back(id);
    } else {
      throw FrameError("unknown frame axiom id: " + id);
    }
  }
  return st;
}

bool passes(const SortedFrame& f, const std::vector<std::string>& ids) {
  for (const std::string& id : ids)
    if (!check_frame_axiom(f, id).passed()) return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::uint64_t{1} << 56) / std::max<std::uint64_t>(base, 1))
      throw FrameError("enumeration bounds too large");
    r *= base;
  }
  return r;
}

constexpr std::uint64_t kMaxCache = std::uint64_t{1} << 22;

void scan_connectives(const FormulaPtr& f, SearchBounds& b) {
  if (!f) return;
  if (f->kind == Conn::Box) b.force_rbox = true;
  if (f->kind == Conn::Dia) b.force_rdia = true;
  if (f->kind == Conn::Imp) b.force_t = true;
  scan_connectives(f->left, b);
  scan_connectives(f->right, b);
}

}  // namespace

EnumOutcome enumerate_frames(
    const SearchBounds& bounds, Cursor& cursor, EnumStats& stats,
    const std::function<bool(const SortedFrame&)>& visit) {
  if (bounds.max_z1 < 1 || bounds.max_zd < 1)
    throw FrameError("search bounds must be at least 1 point per sort");
  Stages st = assign_stages(bounds.frame_class);
  bool need_box = !st.box.empty() || !st.boxdia.empty() || !st.boxt.empty() ||
                  bounds.force_rbox;
  bool need_dia = !st.dia.empty() || !st.boxdia.empty() || bounds.force_rdia;
  bool need_t = !st.tern.empty() || !st.boxt.empty() || bounds.force_t;
  bool pointop =
      std::find(bounds.frame_class.begin(), bounds.frame_class.end(), "F3") !=
      bounds.frame_class.end();

  long long spent = 0;
  // Spends k candidates; true when the budget is now exhausted.
  auto spend = [&](long long k) {
    stats.examined += k;
    spent += k;
    return bounds.budget >= 0 && spent >= bounds.budget;
  };

  for (int n1 = cursor.n1; n1 <= bounds.max_z1; ++n1) {
    for (int nd = (n1 == cursor.n1 ? cursor.nd : 1); nd <= bounds.max_zd;
         ++nd) {
      if (n1 * nd > 62) throw FrameError("enumeration bounds too large");
      // Per-relation table radices (1 when the relation is absent).
      std::uint64_t rb = 1, rd = 1, rt = 1;
      if (pointop) {
        if (need_box) rb = checked_pow(nd, nd);
        if (need_dia) rd = checked_pow(n1, n1);
        if (need_t) rt = checked_pow(nd, n1 * nd);
      } else {
        if (need_box) rb = checked_pow(2, nd * nd);
        if (need_dia) rd = checked_pow(2, n1 * n1);
        if (need_t) rt = checked_pow(2, n1 * nd * nd);
      }
      if (rb > kMaxCache || rd > kMaxCache || rt > kMaxCache)
        throw FrameError("enumeration bounds too large for relation tables");
      std::uint64_t total = rb * rd * rt;
      std::uint64_t i_end = std::uint64_t{1} << (n1 * nd);
      bool resume_size = n1 == cursor.n1 && nd == cursor.nd;
      for (std::uint64_t im = resume_size ? cursor.i_mask : 0; im < i_end;
           ++im) {
        std::uint64_t t0 =
            (resume_size && im == cursor.i_mask) ? cursor.table : 0;
        // A helper that records the resume point right after linear table
        // position `next` within this I (advancing to the next I at the end).
        auto set_cursor = [&](std::uint64_t next) {
          cursor.n1 = n1;
          cursor.nd = nd;
          cursor.i_mask = im;
          cursor.table = next;
          if (next >= total) {
            cursor.table = 0;
            cursor.i_mask = im + 1;
            if (cursor.i_mask >= i_end) {
              cursor.i_mask = 0;
              cursor.nd = nd + 1;
              if (cursor.nd > bounds.max_zd) {
                cursor.nd = 1;
                cursor.n1 = n1 + 1;
              }
            }
          }
        };

        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < n1; ++x)
          for (int y = 0; y < nd; ++y)
            if (im & (std::uint64_t{1} << (x * nd + y))) pairs.push_back({x, y});
        SortedFrame bare(n1, nd, pairs);
        if (!passes(bare, st.bare)) {
          if (spend(static_cast<long long>(total - t0))) {
            set_cursor(total);
            return EnumOutcome::BudgetExhausted;
          }
          continue;
        }

        // Relation builders from table indices.
        auto make_box = [&](std::uint64_t bi) {
          UnaryRel r;
          for (int u = 0; u < nd; ++u)
            if (pointop) {
              r.sec.push_back(bare.gamma(static_cast<int>(bi % nd), Sort::Del));
              bi /= nd;
            } else {
              r.sec.push_back((bi >> (u * nd)) & full_mask(nd));
            }
          return r;
        };
        auto make_dia = [&](std::uint64_t di) {
          UnaryRel r;
          for (int x = 0; x < n1; ++x)
            if (pointop) {
              r.sec.push_back(bare.gamma(static_cast<int>(di % n1), Sort::One));
              di /= n1;
            } else {
              r.sec.push_back((di >> (x * n1)) & full_mask(n1));
            }
          return r;
        };
        auto make_t = [&](std::uint64_t ti) {
          TernaryRel r;
          r.sec.resize(n1);
          for (int x = 0; x < n1; ++x)
            for (int y = 0; y < nd; ++y)
              if (pointop) {
                r.sec[x].push_back(
                    bare.gamma(static_cast<int>(ti % nd), Sort::Del));
                ti /= nd;
              } else {
                int p = x * nd + y;
                r.sec[x].push_back((ti >> (p * nd)) & full_mask(nd));
              }
          return r;
        };

        // Per-relation stage filters, cached over this I.
        std::vector<char> bok(rb, 1), dok(rd, 1), tok(rt, 1);
        if (need_box)
          for (std::uint64_t bi = 0; bi < rb; ++bi) {
            SortedFrame f = bare;
            f.rbox = make_box(bi);
            bok[bi] = passes(f, st.box);
          }
        if (need_dia)
          for (std::uint64_t di = 0; di < rd; ++di) {
            SortedFrame f = bare;
            f.rdia = make_dia(di);
            dok[di] = passes(f, st.dia);
          }
        if (need_t)
          for (std::uint64_t ti = 0; ti < rt; ++ti) {
            SortedFrame f = bare;
            f.t = make_t(ti);
            tok[ti] = passes(f, st.tern);
          }

        std::uint64_t bi = t0 / (rd * rt);
        std::uint64_t di0 = (t0 % (rd * rt)) / rt;
        std::uint64_t ti0 = t0 % rt;
        for (; bi < rb; ++bi, di0 = 0, ti0 = 0) {
          std::uint64_t done_before = bi * rd * rt + di0 * rt + ti0;
          if (!bok[bi]) {
            if (spend(static_cast<long long>((bi + 1) * rd * rt -
                                             done_before))) {
              set_cursor((bi + 1) * rd * rt);
              return EnumOutcome::BudgetExhausted;
            }
            continue;
          }
          SortedFrame fbox = bare;
          if (need_box) fbox.rbox = make_box(bi);
          std::vector<char> fk_ok(rt, 1);
          if (!st.boxt.empty())
            for (std::uint64_t ti = 0; ti < rt; ++ti) {
              if (!tok[ti]) continue;
              SortedFrame f = fbox;
              f.t = make_t(ti);
              fk_ok[ti] = passes(f, st.boxt);
            }
          for (std::uint64_t di = di0; di < rd; ++di, ti0 = 0) {
            std::uint64_t row = bi * rd * rt + di * rt;
            bool pair_ok = dok[di] != 0;
            SortedFrame fbd = fbox;
            if (pair_ok && need_dia) {
              fbd.rdia = make_dia(di);
              pair_ok = passes(fbd, st.boxdia);
            }
            if (!pair_ok) {
              if (spend(static_cast<long long>(rt - ti0))) {
                set_cursor(row + rt);
                return EnumOutcome::BudgetExhausted;
              }
              continue;
            }
            for (std::uint64_t ti = ti0; ti < rt; ++ti) {
              bool hit = tok[ti] && fk_ok[ti];
              if (hit) {
                SortedFrame f = fbd;
                if (need_t) f.t = make_t(ti);
                ++stats.emitted;
                if (!visit(f)) {
                  set_cursor(row + ti + 1);
                  spend(1);
                  return EnumOutcome::Stopped;
                }
              }
              if (spend(1)) {
                set_cursor(row + ti + 1);
                return EnumOutcome::BudgetExhausted;
              }
            }
          }
        }
      }
    }
  }
  cursor.n1 = bounds.max_z1 + 1;
  cursor.nd = 1;
  cursor.i_mask = 0;
  cursor.table = 0;
  return EnumOutcome::Exhausted;
}

CountermodelResult find_countermodel(const Sequent& s,
                                     const SearchBounds& bounds) {
  SearchBounds b = bounds;
  scan_connectives(s.left, b);
  scan_connectives(s.right, b);
  CountermodelResult res;
  res.outcome = enumerate_frames(
      b, res.cursor, res.stats, [&](const SortedFrame& f) {
        FrameCheck fc = check_sequent_frame(f, s);
        if (fc.holds) return true;
        res.found = Countermodel{f, fc.valuation, fc.witness};
        return false;
      });
  return res;
}

}  // namespace dfml
