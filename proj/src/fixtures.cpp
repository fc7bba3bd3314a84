#include "dfml/fixtures.hpp"

#include <algorithm>

namespace dfml::fixtures {

namespace {

FiniteLattice chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> leq;
  for (int i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i + 1 < n) leq.emplace_back(i, i + 1);
  }
  return FiniteLattice(std::move(names), leq);
}

}  // namespace

std::vector<std::string> lattice_names() {
  return {"chain1", "chain2", "chain3", "chain4", "chain5",
          "diamond", "M3", "N5", "pyramid", "kite"};
}

bool is_distributive_name(const std::string& name) {
  return name != "M3" && name != "N5";
}

FiniteLattice lattice(const std::string& name) {
  if (name == "chain1") return chain(1);
  if (name == "chain2") return chain(2);
  if (name == "chain3") return chain(3);
  if (name == "chain4") return chain(4);
  if (name == "chain5") return chain(5);
  if (name == "diamond")  // 0 < a, b < 1
    return FiniteLattice({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  if (name == "M3")  // 0 < a, b, c < 1, pairwise incomparable
    return FiniteLattice({"0", "a", "b", "c", "1"},
                         {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  if (name == "N5")  // 0 < a < c < 1, 0 < b < 1, b incomparable to a, c
    return FiniteLattice({"0", "a", "b", "c", "1"},
                         {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 4}});
  if (name == "pyramid")  // 0 < a, b < c < 1
    return FiniteLattice({"0", "a", "b", "c", "1"},
                         {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
  if (name == "kite")  // 0 < c < a, b < 1
    return FiniteLattice({"0", "c", "a", "b", "1"},
                         {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  throw LatticeError("unknown fixture lattice: " + name);
}

LatticeOp op_box_id(const FiniteLattice& lat) {
  std::vector<int> t(lat.size());
  for (int i = 0; i < lat.size(); ++i) t[i] = i;
  return {"box", DistributionType::parse("(d;d)"), std::move(t)};
}

LatticeOp op_dia_id(const FiniteLattice& lat) {
  std::vector<int> t(lat.size());
  for (int i = 0; i < lat.size(); ++i) t[i] = i;
  return {"dia", DistributionType::parse("(1;1)"), std::move(t)};
}

LatticeOp op_box_bot(const FiniteLattice& lat) {
  std::vector<int> t(lat.size(), lat.bottom());
  t[lat.top()] = lat.top();
  return {"box", DistributionType::parse("(d;d)"), std::move(t)};
}

LatticeOp op_dia_top(const FiniteLattice& lat) {
  std::vector<int> t(lat.size(), lat.top());
  t[lat.bottom()] = lat.bottom();
  return {"dia", DistributionType::parse("(1;1)"), std::move(t)};
}

LatticeOp op_imp_zero(const FiniteLattice& lat) {
  int n = lat.size();
  std::vector<int> t(n * n, lat.bottom());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a == lat.bottom() || b == lat.top()) t[a * n + b] = lat.top();
  return {"imp", DistributionType::parse("(1,d;d)"), std::move(t)};
}

LatticeOp op_imp_heyting(const FiniteLattice& lat) {
  int n = lat.size();
  std::vector<int> t(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // a -> b is the greatest c with a /\ c <= b; exists iff distributive
      int best = -1;
      for (int c = 0; c < n; ++c)
        if (lat.leq(lat.meet(a, c), b) && (best < 0 || lat.leq(best, c)))
          best = c;
      for (int c = 0; c < n; ++c)
        if (lat.leq(lat.meet(a, c), b) && !lat.leq(c, best))
          throw LatticeError("lattice has no relative pseudocomplement of " +
                             lat.names()[a] + ", " + lat.names()[b]);
      t[a * n + b] = best;
    }
  return {"imp", DistributionType::parse("(1,d;d)"), std::move(t)};
}

std::vector<NamedNLE> nle_corpus() {
  std::vector<NamedNLE> out;
  for (const std::string& name : lattice_names()) {
    FiniteLattice lat = lattice(name);
    out.push_back({name + "/identity",
                   FiniteNLE{lat, {op_box_id(lat), op_dia_id(lat),
                                   op_imp_zero(lat)}}});
    out.push_back({name + "/extremal",
                   FiniteNLE{lat, {op_box_bot(lat), op_dia_top(lat),
                                   op_imp_zero(lat)}}});
    if (is_distributive_name(name))
      out.push_back({name + "/heyting",
                     FiniteNLE{lat, {op_box_id(lat), op_dia_id(lat),
                                     op_imp_heyting(lat)}}});
  }
  {
    // Identity box with a diamond collapsing the middle of the 3-chain:
    // [] c1 = c1 but <> c1 = c0, so seriality ([]a <= <>a) fails.
    FiniteLattice lat = lattice("chain3");
    LatticeOp dia = op_dia_id(lat);
    dia.table[1] = 0;
    out.push_back({"chain3/dfail",
                   FiniteNLE{lat, {op_box_id(lat), dia, op_imp_zero(lat)}}});
  }
  return out;
}

SortedFrame frame_k2() {
  return SortedFrame(2, 2, {{0, 0}, {1, 1}}, {"a", "b"}, {"a", "b"});
}

SortedFrame frame_p2() {
  return SortedFrame(2, 2, {{0, 1}, {1, 0}}, {"x1", "x2"}, {"y1", "y2"});
}

TernaryRel empty_t(const SortedFrame& f) {
  TernaryRel t;
  t.sec.assign(f.size(Sort::One), std::vector<Mask>(f.size(Sort::Del), 0));
  return t;
}

UnaryRel empty_unary(int arity_points) {
  return UnaryRel{std::vector<Mask>(arity_points, 0)};
}

}  // namespace dfml::fixtures
