#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dfml/frame.hpp"
#include "dfml/lattice.hpp"

namespace dfml {

// Text formats. Lines are UTF-8; '#' starts a comment; tokens are separated
// by whitespace. Parse errors throw ParseError whose position is the line
// number. Semantic errors (non-lattice order, bad op tables) propagate as
// LatticeError from the lattice module.
//
// .lat:  elements: e1 e2 …
//        leq: a<=b c<=d …
//        op <name> <arity> <dtype>      dtype e.g. (d;d), (1;1), (1,d;d)
//        <name> a = c / <name> a b = c  one value line per argument tuple
// .frm:  sort1: x1 … / sortd: y1 …
//        I: x y | …                     x I y pairs
//        Rbox: w u | …                  w R□ u, i.e. w ∈ sec[u] (both Z∂)
//        Rdia: w u | …                  w R◇ u (both Z1)
//        T: v x y | …                   v T x y, i.e. v ∈ sec[x][y]
//        A relation line may list no tuples (empty sections); omitting the
//        line leaves the relation absent.
// .val:  p<i>: x1 x2 …                  one variable per line, sort-1 points

FiniteNLE parse_lat(std::string_view text);
std::string emit_lat(const FiniteNLE& nle);

SortedFrame parse_frm(std::string_view text);
std::string emit_frm(const SortedFrame& f);

/// Stored point names, or synthesized ones (x0 x1 … / y0 y1 …) when the frame
/// carries none. emit_frm and the CLI use these.
std::vector<std::string> point_names(const SortedFrame& f, Sort s);

std::map<int, Mask> parse_val(std::string_view text,
                              const std::vector<std::string>& names1);
std::string emit_val(const std::map<int, Mask>& valuation,
                     const std::vector<std::string>& names1);

}  // namespace dfml
