#include "dfml/canonical.hpp"

#include <algorithm>

#include "dfml/complex.hpp"

namespace dfml {

namespace {

// Index of the filter (or ideal) whose member set is `members`.
int point_of(const std::vector<FilterOrIdeal>& pts, Mask members) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].members == members) return static_cast<int>(i);
  throw LatticeError("no point with the requested member set");
}

// Canonical join of generated ideals/filters used by Eq. (21): the ideal
// (filter) generated by applying `f` to every element of the point.
Mask generated_image(const FiniteLattice& lat, Mask point,
                     const LatticeOp& f, bool as_ideal) {
  Mask seed = 0;
  for (int a = 0; a < lat.size(); ++a)
    if (bit(point, a)) seed |= Mask{1} << f.apply(a);
  return as_ideal ? ideal_generated(lat, seed) : filter_generated(lat, seed);
}

}  // namespace

CanonicalFrame canonical_frame(const FiniteNLE& nle) {
  const FiniteLattice& lat = nle.lattice;
  auto [filts, idls] = filters_ideals(lat);
  int n1 = static_cast<int>(filts.size());
  int nd = static_cast<int>(idls.size());

  std::vector<std::pair<int, int>> ipairs;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < nd; ++j)
      if ((filts[i].members & idls[j].members) == 0) ipairs.emplace_back(i, j);

  // Finite filters/ideals are principal; name each point by its generator.
  std::vector<int> x_of(lat.size()), y_of(lat.size());
  std::vector<std::string> names1(n1), namesd(nd);
  for (int a = 0; a < lat.size(); ++a) {
    x_of[a] = point_of(filts, lat.up_set(a));
    y_of[a] = point_of(idls, lat.down_set(a));
    names1[x_of[a]] = "^" + lat.names()[a];
    namesd[y_of[a]] = "v" + lat.names()[a];
  }

  CanonicalFrame cf{SortedFrame(n1, nd, ipairs, names1, namesd),
                    std::move(filts),
                    std::move(idls),
                    std::move(x_of),
                    std::move(y_of),
                    {},
                    {},
                    {},
                    {},
                    nle};

  for (int a = 0; a < lat.size(); ++a) {
    Mask xa = 0, ya = 0;
    for (int i = 0; i < n1; ++i)
      if (bit(cf.filters[i].members, a)) xa |= Mask{1} << i;
    for (int j = 0; j < nd; ++j)
      if (bit(cf.ideals[j].members, a)) ya |= Mask{1} << j;
    cf.x_set.push_back(xa);
    cf.y_set.push_back(ya);
  }

  // Generic canonical relations: w R_f u⃗ iff ∀a⃗ (⋀ a_k∈u_k → f(a⃗)∈w).
  for (const LatticeOp& f : nle.ops) {
    CanonicalRelation rel;
    rel.op = f.name;
    rel.out = f.dtype.out_dual ? Sort::Del : Sort::One;
    const auto& outs = f.dtype.out_dual ? cf.ideals : cf.filters;
    auto holds = [&](Mask w, const std::vector<const FilterOrIdeal*>& us) {
      if (f.dtype.arity() == 1) {
        for (int a = 0; a < lat.size(); ++a)
          if (bit(us[0]->members, a) && !bit(w, f.apply(a))) return false;
        return true;
      }
      for (int a = 0; a < lat.size(); ++a)
        if (bit(us[0]->members, a))
          for (int b = 0; b < lat.size(); ++b)
            if (bit(us[1]->members, b) && !bit(w, f.apply(a, b, lat.size())))
              return false;
      return true;
    };
    for (bool dual : f.dtype.arg_dual)
      rel.args.push_back(dual ? Sort::Del : Sort::One);
    auto points_of = [&](Sort s) -> const std::vector<FilterOrIdeal>& {
      return s == Sort::One ? cf.filters : cf.ideals;
    };
    if (f.dtype.arity() == 1) {
      const auto& arg = points_of(rel.args[0]);
      rel.unary_sec.assign(arg.size(), 0);
      for (std::size_t u = 0; u < arg.size(); ++u)
        for (std::size_t w = 0; w < outs.size(); ++w)
          if (holds(outs[w].members, {&arg[u]}))
            rel.unary_sec[u] |= Mask{1} << w;
    } else {
      const auto& a1 = points_of(rel.args[0]);
      const auto& a2 = points_of(rel.args[1]);
      rel.binary_sec.assign(a1.size(), std::vector<Mask>(a2.size(), 0));
      for (std::size_t u = 0; u < a1.size(); ++u)
        for (std::size_t v = 0; v < a2.size(); ++v)
          for (std::size_t w = 0; w < outs.size(); ++w)
            if (holds(outs[w].members, {&a1[u], &a2[v]}))
              rel.binary_sec[u][v] |= Mask{1} << w;
    }
    // Install the modal-signature instances.
    std::string dt = f.dtype.to_string();
    if (dt == "(d;d)" && !cf.frame.rbox) cf.frame.rbox = UnaryRel{rel.unary_sec};
    if (dt == "(1;1)" && !cf.frame.rdia) cf.frame.rdia = UnaryRel{rel.unary_sec};
    if (dt == "(1,d;d)" && !cf.frame.t) cf.frame.t = TernaryRel{rel.binary_sec};
    cf.relations.push_back(std::move(rel));
  }

  // Point operators of Eq. (21).
  if (const LatticeOp* box = nle.find_op("box")) {
    std::vector<int> bm(nd), bm1(n1);
    for (int y = 0; y < nd; ++y)
      bm[y] = point_of(cf.ideals,
                       generated_image(lat, cf.ideals[y].members, *box, true));
    for (int x = 0; x < n1; ++x)
      bm1[x] = point_of(
          cf.filters, generated_image(lat, cf.filters[x].members, *box, false));
    cf.point_ops.boxminus = std::move(bm);
    cf.point_ops.boxminus1 = std::move(bm1);
  }
  if (const LatticeOp* dia = nle.find_op("dia")) {
    std::vector<int> dm(n1);
    for (int x = 0; x < n1; ++x)
      dm[x] = point_of(
          cf.filters, generated_image(lat, cf.filters[x].members, *dia, false));
    cf.point_ops.diamond = std::move(dm);
  }
  if (const LatticeOp* imp = nle.find_op("imp")) {
    std::vector<std::vector<int>> tr(n1, std::vector<int>(nd));
    for (int x = 0; x < n1; ++x)
      for (int y = 0; y < nd; ++y) {
        Mask seed = 0;
        for (int a = 0; a < lat.size(); ++a)
          if (bit(cf.filters[x].members, a))
            for (int b = 0; b < lat.size(); ++b)
              if (bit(cf.ideals[y].members, b))
                seed |= Mask{1} << imp->apply(a, b, lat.size());
        tr[x][y] = point_of(cf.ideals, ideal_generated(lat, seed));
      }
    cf.point_ops.tright = std::move(tr);
  }
  return cf;
}

RepresentationReport verify_representation(const FiniteNLE& nle,
                                           int size_guard) {
  CanonicalFrame cf = canonical_frame(nle);
  const FiniteLattice& lat = nle.lattice;
  StableLattice sl(cf.frame, Sort::One, size_guard);
  RepresentationReport rep;
  rep.lattice_size = lat.size();
  rep.stable_size = sl.size();
  auto fail = [&](std::string w) {
    rep.ok = false;
    rep.witness = std::move(w);
    return rep;
  };

  if (sl.size() != lat.size())
    return fail("|G(Z1)| = " + std::to_string(sl.size()) + " but |L| = " +
                std::to_string(lat.size()));
  for (int a = 0; a < lat.size(); ++a) {
    if (sl.index_of(cf.x_set[a]) < 0)
      return fail("X_" + lat.names()[a] + " is not stable");
    if (cf.x_set[a] != cf.frame.gamma(cf.x_of_elem[a], Sort::One))
      return fail("X_" + lat.names()[a] + " differs from Γ(^" +
                  lat.names()[a] + ")");
    if (cf.x_set[a] !=
        cf.frame.prime(Mask{1} << cf.y_of_elem[a], Sort::Del))
      return fail("X_" + lat.names()[a] + " is not the polar of {v" +
                  lat.names()[a] + "}");
    for (int b = 0; b < a; ++b)
      if (cf.x_set[a] == cf.x_set[b])
        return fail("X_" + lat.names()[a] + " = X_" + lat.names()[b]);
  }
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b) {
      if (lat.leq(a, b) != ((cf.x_set[a] & ~cf.x_set[b]) == 0))
        return fail("order mismatch at (" + lat.names()[a] + "," +
                    lat.names()[b] + ")");
      if (cf.x_set[lat.meet(a, b)] != (cf.x_set[a] & cf.x_set[b]))
        return fail("meet mismatch at (" + lat.names()[a] + "," +
                    lat.names()[b] + ")");
      if (cf.x_set[lat.join(a, b)] != sl.join(cf.x_set[a], cf.x_set[b]))
        return fail("join mismatch at (" + lat.names()[a] + "," +
                    lat.names()[b] + ")");
    }
  if (cf.x_set[lat.bottom()] != sl.bottom()) return fail("bottom mismatch");
  if (cf.x_set[lat.top()] != sl.top()) return fail("top mismatch");

  if (const LatticeOp* box = nle.find_op("box"))
    for (int a = 0; a < lat.size(); ++a)
      if (cf.x_set[box->apply(a)] !=
          stable_op(cf.frame, StableOpId::Box, {cf.x_set[a]}))
        return fail("X_box(" + lat.names()[a] + ") differs from box X_" +
                    lat.names()[a]);
  if (const LatticeOp* dia = nle.find_op("dia"))
    for (int a = 0; a < lat.size(); ++a)
      if (cf.x_set[dia->apply(a)] !=
          stable_op(cf.frame, StableOpId::Dia, {cf.x_set[a]}))
        return fail("X_dia(" + lat.names()[a] + ") differs from dia X_" +
                    lat.names()[a]);
  if (const LatticeOp* imp = nle.find_op("imp"))
    for (int a = 0; a < lat.size(); ++a)
      for (int b = 0; b < lat.size(); ++b)
        if (cf.x_set[imp->apply(a, b, lat.size())] !=
            stable_op(cf.frame, StableOpId::Implies,
                      {cf.x_set[a], cf.x_set[b]}))
          return fail("X_imp(" + lat.names()[a] + "," + lat.names()[b] +
                      ") differs from X_" + lat.names()[a] + " => X_" +
                      lat.names()[b]);
  return rep;
}

Extension sigma_pi_extension(const CanonicalFrame& cf,
                             const std::string& op_name, int size_guard) {
  const FiniteLattice& lat = cf.nle.lattice;
  const LatticeOp& f = cf.nle.op(op_name);
  StableLattice sl(cf.frame, Sort::One, size_guard);
  int n = sl.size();

  // In the finite case the closed and the open elements of the canonical
  // extension both coincide with the embedded image {X_a}, so σ and π are
  // computed directly over lattice elements. A place of type ∂ twists the
  // comparison direction and swaps the roles of meet and join.
  auto leq_t = [&](int a, int b, bool dual) {
    return dual ? lat.leq(b, a) : lat.leq(a, b);
  };
  auto fold = [&](const std::vector<int>& elems, bool want_join) {
    int acc = want_join ? lat.bottom() : lat.top();
    for (int e : elems) acc = want_join ? lat.join(acc, e) : lat.meet(acc, e);
    return acc;
  };
  // σ: meet (in the output twist) of f over upper bounds (per-place twist);
  // π: join over lower bounds. ⋀^∂ is a join, ≤^∂ is ≥.
  auto bound_ok = [&](bool sigma, int arg, int a, bool dual) {
    return sigma ? leq_t(arg, a, dual) : leq_t(a, arg, dual);
  };
  auto extend = [&](bool sigma, const std::vector<int>& args) {
    std::vector<int> vals;
    if (f.dtype.arity() == 1) {
      for (int a = 0; a < lat.size(); ++a)
        if (bound_ok(sigma, args[0], a, f.dtype.arg_dual[0]))
          vals.push_back(f.apply(a));
    } else {
      for (int a = 0; a < lat.size(); ++a)
        for (int b = 0; b < lat.size(); ++b)
          if (bound_ok(sigma, args[0], a, f.dtype.arg_dual[0]) &&
              bound_ok(sigma, args[1], b, f.dtype.arg_dual[1]))
            vals.push_back(f.apply(a, b, lat.size()));
    }
    // σ takes ⋀^{out}, π takes ⋁^{out}; the ∂ output twist swaps them.
    bool want_join = sigma == f.dtype.out_dual;
    return fold(vals, want_join);
  };

  // Translate StableLattice indices to lattice elements via the embedding.
  std::vector<int> elem_of(n, -1);
  for (int a = 0; a < lat.size(); ++a) {
    int i = sl.index_of(cf.x_set[a]);
    if (i < 0) throw LatticeError("embedding image is not stable");
    elem_of[i] = a;
  }
  for (int i = 0; i < n; ++i)
    if (elem_of[i] < 0)
      throw LatticeError("stable set outside the embedding image");

  Extension ext;
  ext.op = op_name;
  ext.arity = f.dtype.arity();
  if (ext.arity == 1) {
    ext.sigma.resize(n);
    ext.pi.resize(n);
    for (int i = 0; i < n; ++i) {
      ext.sigma[i] = sl.index_of(cf.x_set[extend(true, {elem_of[i]})]);
      ext.pi[i] = sl.index_of(cf.x_set[extend(false, {elem_of[i]})]);
    }
  } else {
    ext.sigma.resize(n * n);
    ext.pi.resize(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ext.sigma[i * n + j] =
            sl.index_of(cf.x_set[extend(true, {elem_of[i], elem_of[j]})]);
        ext.pi[i * n + j] =
            sl.index_of(cf.x_set[extend(false, {elem_of[i], elem_of[j]})]);
      }
  }
  return ext;
}

std::string frame_axiom_for_equation(const std::string& id) {
  if (id == "K") return "FK";
  if (id == "D") return "FD";
  if (id == "Tbox") return "FTbox";
  if (id == "Tdia") return "FTdia";
  if (id == "S4box") return "FS4box";
  if (id == "S4dia") return "FS4dia";
  if (id == "B") return "FB";
  if (id == "S5") return "FS5";
  if (id == "A3") return "FDIST";
  if (id == "H1H2") return "FHEYT";
  throw LatticeError("no frame axiom for equation id: " + id);
}

std::vector<CanonicityEntry> canonicity_report(
    const FiniteNLE& nle, const std::vector<std::string>& equation_ids,
    int size_guard) {
  CanonicalFrame cf = canonical_frame(nle);
  std::vector<CanonicityEntry> out;
  for (const std::string& id : equation_ids) {
    CanonicityEntry e;
    e.equation_id = id;
    e.frame_axiom = frame_axiom_for_equation(id);
    e.algebra = check_equation(nle, id);
    e.frame = check_frame_axiom(cf.frame, e.frame_axiom, size_guard);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace dfml
