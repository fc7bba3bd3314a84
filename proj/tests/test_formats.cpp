#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "dfml/canonical.hpp"
#include "dfml/fixtures.hpp"
#include "dfml/formats.hpp"
#include "dfml/semantics.hpp"
#include "doctest.h"

using namespace dfml;
namespace fx = dfml::fixtures;

namespace {

bool same_lattice(const FiniteNLE& a, const FiniteNLE& b) {
  if (a.lattice.size() != b.lattice.size()) return false;
  int n = a.lattice.size();
  for (int i = 0; i < n; ++i) {
    if (a.lattice.names()[i] != b.lattice.names()[i]) return false;
    for (int j = 0; j < n; ++j)
      if (a.lattice.leq(i, j) != b.lattice.leq(i, j)) return false;
  }
  if (a.ops.size() != b.ops.size()) return false;
  for (std::size_t k = 0; k < a.ops.size(); ++k) {
    if (a.ops[k].name != b.ops[k].name) return false;
    if (a.ops[k].dtype.to_string() != b.ops[k].dtype.to_string()) return false;
    if (a.ops[k].table != b.ops[k].table) return false;
  }
  return true;
}

bool same_frame(const SortedFrame& a, const SortedFrame& b) {
  if (a.size(Sort::One) != b.size(Sort::One) ||
      a.size(Sort::Del) != b.size(Sort::Del))
    return false;
  for (int x = 0; x < a.size(Sort::One); ++x)
    for (int y = 0; y < a.size(Sort::Del); ++y)
      if (a.in_i(x, y) != b.in_i(x, y)) return false;
  if (a.rbox.has_value() != b.rbox.has_value()) return false;
  if (a.rbox && a.rbox->sec != b.rbox->sec) return false;
  if (a.rdia.has_value() != b.rdia.has_value()) return false;
  if (a.rdia && a.rdia->sec != b.rdia->sec) return false;
  if (a.t.has_value() != b.t.has_value()) return false;
  if (a.t && a.t->sec != b.t->sec) return false;
  return true;
}

}  // namespace

TEST_CASE(".lat round trip over the corpus") {
  for (const auto& [name, nle] : fx::nle_corpus()) {
    std::string text = emit_lat(nle);
    FiniteNLE back = parse_lat(text);
    CHECK_MESSAGE(same_lattice(nle, back), name);
    CHECK(emit_lat(back) == text);  // emission is canonical
  }
}

TEST_CASE(".lat hand-written input") {
  const char* text =
      "# two-element chain with an identity box\n"
      "elements: 0 1\n"
      "leq: 0<=1\n"
      "op box 1 (d;d)\n"
      "box 0 = 0\n"
      "box 1 = 1\n"
      "op imp 2 (1,d;d)\n"
      "imp 0 0 = 1\n"
      "imp 0 1 = 1\n"
      "imp 1 0 = 0\n"
      "imp 1 1 = 1\n";
  FiniteNLE nle = parse_lat(text);
  CHECK(nle.lattice.size() == 2);
  CHECK(nle.lattice.leq(0, 1));
  CHECK(nle.lattice.bottom() == 0);
  CHECK(nle.op("box").apply(1) == 1);
  CHECK(nle.op("imp").apply(1, 0, 2) == 0);
  CHECK(nle.op("imp").dtype.to_string() == "(1,d;d)");

  CHECK_THROWS_AS(parse_lat(""), ParseError);
  CHECK_THROWS_AS(parse_lat("leq: a<=b\n"), ParseError);  // before elements
  CHECK_THROWS_AS(parse_lat("elements: a b\nleq: a<b\n"), ParseError);
  CHECK_THROWS_AS(parse_lat("elements: a b\nleq: a<=c\n"), ParseError);
  CHECK_THROWS_AS(parse_lat("elements: a a\n"), ParseError);
  CHECK_THROWS_AS(parse_lat("elements: a b\nop box 2 (d;d)\n"), ParseError);
  CHECK_THROWS_AS(parse_lat("elements: a b\nop box 1 (q;d)\n"), ParseError);
  CHECK_THROWS_AS(parse_lat("elements: a b\nbox a = b\n"), ParseError);
  // Incomplete and duplicate op tables.
  CHECK_THROWS_AS(
      parse_lat("elements: 0 1\nleq: 0<=1\nop box 1 (d;d)\nbox 0 = 0\n"),
      ParseError);
  CHECK_THROWS_AS(parse_lat("elements: 0 1\nleq: 0<=1\nop box 1 (d;d)\n"
                            "box 0 = 0\nbox 0 = 1\nbox 1 = 1\n"),
                  ParseError);
  // Semantic failure: not a lattice (two maximal elements, no join).
  CHECK_THROWS_AS(parse_lat("elements: 0 a b\nleq: 0<=a 0<=b\n"),
                  LatticeError);
}

TEST_CASE(".frm round trip on fixtures, canonical and enumerated frames") {
  for (SortedFrame f : {fx::frame_k2(), fx::frame_p2()}) {
    std::string text = emit_frm(f);
    SortedFrame back = parse_frm(text);
    CHECK(same_frame(f, back));
    CHECK(emit_frm(back) == text);
  }
  // A frame with relations installed.
  SortedFrame k2 = fx::frame_k2();
  k2.rbox = UnaryRel{{0b01, 0b10}};
  k2.rdia = UnaryRel{{0b01, 0b10}};
  TernaryRel t;
  t.sec = {{0b01, 0b10}, {0b01, 0b10}};
  k2.t = t;
  SortedFrame back = parse_frm(emit_frm(k2));
  CHECK(same_frame(k2, back));
  // Canonical frames carry their filter/ideal names through.
  CanonicalFrame cf = canonical_frame(
      FiniteNLE{fx::lattice("M3"), {}});
  SortedFrame mback = parse_frm(emit_frm(cf.frame));
  CHECK(same_frame(cf.frame, mback));
  CHECK(mback.names(Sort::One) == cf.frame.names(Sort::One));
}

TEST_CASE(".frm hand-written input and errors") {
  const char* text =
      "sort1: a b   # two worlds\n"
      "sortd: u v\n"
      "I: a u | b v\n"
      "Rbox: u u | v v\n"
      "Rdia:\n"
      "T: u a u | v a v | u b u | v b v\n";
  SortedFrame f = parse_frm(text);
  CHECK(f.size(Sort::One) == 2);
  CHECK(f.in_i(0, 0));
  CHECK(f.in_i(1, 1));
  CHECK_FALSE(f.in_i(0, 1));
  REQUIRE(f.rbox);
  CHECK(f.rbox->sec == std::vector<Mask>{0b01, 0b10});
  REQUIRE(f.rdia);  // present but empty sections
  CHECK(f.rdia->sec == std::vector<Mask>{0, 0});
  REQUIRE(f.t);
  CHECK(f.t->sec[0][1] == 0b10);
  // Omitted relation lines stay absent.
  SortedFrame bare = parse_frm("sort1: a\nsortd: u\nI: a u\n");
  CHECK_FALSE(bare.rbox);
  CHECK_FALSE(bare.rdia);
  CHECK_FALSE(bare.t);

  CHECK_THROWS_AS(parse_frm(""), ParseError);
  CHECK_THROWS_AS(parse_frm("sort1: a\n"), ParseError);       // no sortd
  CHECK_THROWS_AS(parse_frm("sort1:\nsortd: u\n"), ParseError);  // empty sort
  CHECK_THROWS_AS(parse_frm("sort1: a\nsortd: u\nI: a w\n"), ParseError);
  CHECK_THROWS_AS(parse_frm("sort1: a\nsortd: u\nI: a\n"), ParseError);
  CHECK_THROWS_AS(parse_frm("sort1: a\nsortd: u\nT: u a\n"), ParseError);
  CHECK_THROWS_AS(parse_frm("sort1: a\nsortd: u\nfoo: a\n"), ParseError);
  CHECK_THROWS_AS(parse_frm("sort1: a a\nsortd: u\n"), ParseError);
}

TEST_CASE(".val parse, emit and model plumbing") {
  SortedFrame f = parse_frm(
      "sort1: a b\nsortd: u v\nI: a u | b v\n"
      "Rbox: u u | v v\nRdia: a a | b b\n"
      "T: u a u | v a v | u b u | v b v\n");
  std::vector<std::string> names = point_names(f, Sort::One);
  CHECK(names == std::vector<std::string>{"a", "b"});

  std::map<int, Mask> val = parse_val("p1: a\np2: a b\np3:\n", names);
  CHECK(val[1] == 0b01);
  CHECK(val[2] == 0b11);
  CHECK(val[3] == 0);
  CHECK(emit_val(val, names) == "p1: a\np2: a b\np3:\n");
  CHECK(parse_val(emit_val(val, names), names) == val);

  // Parsed artifacts drive the semantics layer directly.
  Model m = build_model(f, val);
  CHECK(check_sequent_model(m, parse_sequent("p1 |- p2")).holds);
  CHECK_FALSE(check_sequent_model(m, parse_sequent("p2 |- p1")).holds);

  CHECK_THROWS_AS(parse_val("q1: a\n", names), ParseError);
  CHECK_THROWS_AS(parse_val("p1: c\n", names), ParseError);
  CHECK_THROWS_AS(parse_val("p1: a\np1: b\n", names), ParseError);
  CHECK_THROWS_AS(parse_val("px: a\n", names), ParseError);

  // Synthesized names for anonymous frames.
  SortedFrame anon(2, 1, {{0, 0}});
  CHECK(point_names(anon, Sort::One) ==
        std::vector<std::string>{"x0", "x1"});
  CHECK(point_names(anon, Sort::Del) == std::vector<std::string>{"y0"});
}
