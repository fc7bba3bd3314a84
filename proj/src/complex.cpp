#include "dfml/complex.hpp"

#include <algorithm>

namespace dfml {

Mask image_op(const SortedFrame& f, RelId id, const std::vector<Mask>& args) {
  if (id == RelId::T) {
    if (args.size() != 2) throw FrameError("T image takes two arguments");
    if (!f.t) throw FrameError("relation T not present");
    Mask out = 0;
    for (int x = 0; x < f.size(Sort::One); ++x)
      if (bit(args[0], x))
        for (int y = 0; y < f.size(Sort::Del); ++y)
          if (bit(args[1], y)) out |= f.t->sec[x][y];
    return out;
  }
  if (args.size() != 1) throw FrameError("unary image takes one argument");
  const UnaryRel& r = f.rel(id);
  Mask out = 0;
  for (std::size_t u = 0; u < r.sec.size(); ++u)
    if (bit(args[0], static_cast<int>(u))) out |= r.sec[u];
  return out;
}

Mask stable_op(const SortedFrame& f, StableOpId id, const std::vector<Mask>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw FrameError("wrong stable-op arity");
  };
  switch (id) {
    case StableOpId::Implies: {
      need(2);
      Mask cprime = f.prime(args[1], Sort::One);
      return f.prime(image_op(f, RelId::T, {args[0], cprime}), Sort::Del);
    }
    case StableOpId::Box:
    case StableOpId::BoxUpper: {
      need(1);
      Mask aprime = f.prime(args[0], Sort::One);
      return f.prime(image_op(f, RelId::Rbox, {aprime}), Sort::Del);
    }
    case StableOpId::BoxLower: {
      need(1);
      auto s = s11box(f);
      Mask u = 0;
      for (int x = 0; x < f.size(Sort::One); ++x)
        if (bit(args[0], x)) u |= s[x];
      return f.close(u, Sort::One);
    }
    case StableOpId::Dia:
      need(1);
      return f.close(image_op(f, RelId::Rdia, {args[0]}), Sort::One);
    case StableOpId::Overt:
      need(2);
      return f.close(stable_op(f, StableOpId::Odot, args), Sort::One);
    case StableOpId::Odot: {
      need(2);
      auto r = r111(f);
      Mask out = 0;
      for (int u = 0; u < f.size(Sort::One); ++u)
        if (bit(args[0], u))
          for (int z = 0; z < f.size(Sort::One); ++z)
            if (bit(args[1], z)) out |= r[u][z];
      return out;
    }
    case StableOpId::Da: {
      need(2);
      Mask out = 0;
      for (int y = 0; y < f.size(Sort::Del); ++y) {
        Mask img = image_op(f, RelId::T, {args[0], f.gamma(y, Sort::Del)});
        if ((img & ~args[1]) == 0) out |= Mask{1} << y;
      }
      return out;
    }
    case StableOpId::TrightBar:
      need(2);
      return f.close(image_op(f, RelId::T, args), Sort::Del);
  }
  throw FrameError("bad stable-op id");
}

Mask residual(const SortedFrame& f, RelId id, int k, std::vector<Mask> args,
              Mask q) {
  // The residuated place of a unary image is its only argument; for T, place
  // 0 has sort 1 and place 1 has sort ∂.
  Sort place_sort =
      id == RelId::Rbox ? Sort::Del
      : id == RelId::Rdia ? Sort::One
                          : (k == 0 ? Sort::One : Sort::Del);
  if (k < 0 || k >= (id == RelId::T ? 2 : 1))
    throw FrameError("residual place out of range");
  Mask out = 0;
  for (int u = 0; u < f.size(place_sort); ++u) {
    args[k] = f.gamma(u, place_sort);
    if ((image_op(f, id, args) & ~q) == 0) out |= Mask{1} << u;
  }
  return out;
}

std::string set_name(const SortedFrame& f, Sort s, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < f.size(s); ++i)
    if (bit(m, i)) {
      if (!first) out += ',';
      out += f.names(s)[i];
      first = false;
    }
  return out + "}";
}

ComplexAlgebra full_complex_algebra(const SortedFrame& f, int size_guard) {
  StableLattice sl(f, Sort::One, size_guard);
  int n = sl.size();
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> leq;
  for (int i = 0; i < n; ++i) {
    names.push_back(set_name(f, Sort::One, sl.element(i)));
    for (int j = 0; j < n; ++j)
      if (i != j && (sl.element(i) & ~sl.element(j)) == 0) leq.emplace_back(i, j);
  }
  std::vector<LatticeOp> ops;
  auto table1 = [&](StableOpId id) {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i)
      t[i] = sl.index_of(stable_op(f, id, {sl.element(i)}));
    return t;
  };
  if (f.rbox)
    ops.push_back({"box", DistributionType::parse("(d;d)"), table1(StableOpId::Box)});
  if (f.rdia)
    ops.push_back({"dia", DistributionType::parse("(1;1)"), table1(StableOpId::Dia)});
  if (f.t) {
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        t[a * n + c] = sl.index_of(
            stable_op(f, StableOpId::Implies, {sl.element(a), sl.element(c)}));
    ops.push_back({"imp", DistributionType::parse("(1,d;d)"), std::move(t)});
  }
  for (const auto& o : ops)
    for (int v : o.table)
      if (v < 0) throw FrameError("stable op left the stable lattice");
  FiniteNLE nle = build_nle(std::move(names), leq, std::move(ops));
  std::vector<Mask> elems = sl.elements();
  return ComplexAlgebra{std::move(sl), std::move(nle), std::move(elems)};
}

}  // namespace dfml
