#include "dfml/semantics.hpp"

#include <algorithm>

#include "dfml/complex.hpp"

namespace dfml {

Model build_model(SortedFrame f, std::map<int, Mask> valuation,
                  bool close_valuations) {
  for (auto& [var, set] : valuation) {
    if ((set & ~f.full(Sort::One)) != 0)
      throw FrameError("valuation of p" + std::to_string(var) +
                       " is not within Z1");
    Mask closed = f.close(set, Sort::One);
    if (closed != set) {
      if (!close_valuations)
        throw FrameError("valuation of p" + std::to_string(var) +
                         " is not stable: " + set_name(f, Sort::One, set) +
                         ", closure " + set_name(f, Sort::One, closed));
      set = closed;
    }
  }
  return Model{std::move(f), std::move(valuation)};
}

Mask dia_cosatisfaction(const SortedFrame& f, Mask co_phi) {
  auto rdd = rdia_dd(f);
  Mask out = 0;
  for (int y = 0; y < f.size(Sort::Del); ++y)
    if ((rdd[y] & ~co_phi) == 0) out |= Mask{1} << y;
  return out;
}

Mask interpret(const Model& m, const FormulaPtr& phi) {
  const SortedFrame& f = m.frame;
  switch (phi->kind) {
    case Conn::Var: {
      auto it = m.valuation.find(phi->index);
      if (it == m.valuation.end())
        throw FrameError("no valuation for p" + std::to_string(phi->index));
      return it->second;
    }
    case Conn::Top:
      return f.full(Sort::One);
    case Conn::Bot:
      return f.close(0, Sort::One);  // ⦅⊥⦆ = Z∂, so ⟦⊥⟧ = Z∂' = ∅″
    case Conn::And:
      return interpret(m, phi->left) & interpret(m, phi->right);
    case Conn::Or:
      // ⦅φ∨ψ⦆ = ⦅φ⦆ ∩ ⦅ψ⦆, i.e. the join of the interpretations.
      return f.prime(co_interpret(m, phi->left) & co_interpret(m, phi->right),
                     Sort::Del);
    case Conn::Imp:
      return stable_op(f, StableOpId::Implies,
                       {interpret(m, phi->left), interpret(m, phi->right)});
    case Conn::Box:
      return stable_op(f, StableOpId::Box, {interpret(m, phi->left)});
    case Conn::Dia:
      // ⟦◇φ⟧ = ⦅◇φ⦆' with the refutation clause over R″◇.
      return f.prime(dia_cosatisfaction(f, co_interpret(m, phi->left)),
                     Sort::Del);
  }
  throw FrameError("bad formula node");
}

Mask co_interpret(const Model& m, const FormulaPtr& phi) {
  return m.frame.prime(interpret(m, phi), Sort::One);
}

SequentCheck check_sequent_model(const Model& m, const Sequent& s) {
  Mask l = interpret(m, s.left), r = interpret(m, s.right);
  if ((l & ~r) == 0) return {true, ""};
  for (int x = 0;; ++x)
    if (bit(l, x) && !bit(r, x)) return {false, m.frame.names(Sort::One)[x]};
}

FrameCheck check_sequent_frame(const SortedFrame& f, const Sequent& s,
                               int size_guard) {
  StableLattice sl(f, Sort::One, size_guard);
  std::vector<int> vars = variables_of(s.left);
  for (int v : variables_of(s.right))
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      vars.push_back(v);
  std::sort(vars.begin(), vars.end());

  std::vector<int> idx(vars.size(), 0);
  while (true) {
    std::map<int, Mask> val;
    for (std::size_t i = 0; i < vars.size(); ++i)
      val[vars[i]] = sl.element(idx[i]);
    Model m{f, val};
    SequentCheck c = check_sequent_model(m, s);
    if (!c.holds) return {false, std::move(val), c.witness};
    // advance the odometer: last variable varies fastest
    std::size_t k = vars.size();
    while (k > 0 && ++idx[k - 1] == sl.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return {true, {}, ""};
}

}  // namespace dfml
