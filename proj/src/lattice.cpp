#include "dfml/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace dfml {

int popcount(Mask m) { return std::popcount(m); }

FiniteLattice::FiniteLattice(std::vector<std::string> element_names,
                             const std::vector<std::pair<int, int>>& leq_pairs)
    : n_(static_cast<int>(element_names.size())), names_(std::move(element_names)) {
  if (n_ == 0) throw LatticeError("lattice must be nonempty");
  if (n_ > kMaxElements) throw LatticeError("lattice exceeds 64 elements");

  up_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) up_[a] |= Mask{1} << a;
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw LatticeError("leq pair out of range");
    up_[a] |= Mask{1} << b;
  }
  // reflexive-transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n_; ++a) {
      Mask reach = up_[a];
      for (int b = 0; b < n_; ++b)
        if (bit(reach, b)) reach |= up_[b];
      if (reach != up_[a]) {
        up_[a] = reach;
        changed = true;
      }
    }
  }
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (bit(up_[a], b) && bit(up_[b], a))
        throw LatticeError("order not antisymmetric: " + names_[a] + " and " +
                           names_[b]);

  down_.assign(n_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (bit(up_[b], a)) down_[a] |= Mask{1} << b;

  meet_.assign(n_ * n_, -1);
  join_.assign(n_ * n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      Mask lower = down_[a] & down_[b];
      int m = -1;
      for (int c = 0; c < n_; ++c)
        if (bit(lower, c) && (lower & up_[c]) == (Mask{1} << c)) m = c;
      // m is a maximal lower bound dominating all others iff lower ⊆ down(m)
      if (m < 0 || (lower & ~down_[m]) != 0)
        throw LatticeError("not a lattice: no meet of " + names_[a] + ", " +
                           names_[b]);
      meet_[a * n_ + b] = m;

      Mask upper = up_[a] & up_[b];
      int j = -1;
      for (int c = 0; c < n_; ++c)
        if (bit(upper, c) && (upper & down_[c]) == (Mask{1} << c)) j = c;
      if (j < 0 || (upper & ~up_[j]) != 0)
        throw LatticeError("not a lattice: no join of " + names_[a] + ", " +
                           names_[b]);
      join_[a * n_ + b] = j;
    }

  bottom_ = top_ = -1;
  for (int a = 0; a < n_; ++a) {
    if (up_[a] == full_mask(n_)) bottom_ = a;
    if (down_[a] == full_mask(n_)) top_ = a;
  }
  if (bottom_ < 0 || top_ < 0)
    throw LatticeError("lattice lacks a global bottom or top");
}

int FiniteLattice::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  throw LatticeError("unknown element name: " + name);
}

std::string DistributionType::to_string() const {
  std::string s = "(";
  for (int i = 0; i < arity(); ++i) {
    if (i) s += ',';
    s += arg_dual[i] ? "d" : "1";
  }
  s += ';';
  s += out_dual ? "d" : "1";
  s += ')';
  return s;
}

DistributionType DistributionType::parse(const std::string& text) {
  DistributionType dt;
  std::string body = text;
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw LatticeError("bad distribution type: " + text);
  body = body.substr(1, body.size() - 2);
  auto semi = body.find(';');
  if (semi == std::string::npos)
    throw LatticeError("bad distribution type: " + text);
  std::string args = body.substr(0, semi), out = body.substr(semi + 1);
  auto tok = [&](const std::string& t) -> bool {
    if (t == "1") return false;
    if (t == "d") return true;
    throw LatticeError("bad distribution type token: " + t);
  };
  std::size_t start = 0;
  while (start < args.size()) {
    auto comma = args.find(',', start);
    std::string piece = args.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    dt.arg_dual.push_back(tok(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (dt.arg_dual.empty())
    throw LatticeError("distribution type needs at least one argument");
  dt.out_dual = tok(out);
  return dt;
}

const LatticeOp* FiniteNLE::find_op(const std::string& name) const {
  for (const auto& o : ops)
    if (o.name == name) return &o;
  return nullptr;
}

const LatticeOp& FiniteNLE::op(const std::string& name) const {
  if (const LatticeOp* o = find_op(name)) return *o;
  throw LatticeError("missing operator: " + name);
}

FiniteNLE build_nle(std::vector<std::string> element_names,
                    const std::vector<std::pair<int, int>>& leq_pairs,
                    std::vector<LatticeOp> ops) {
  FiniteLattice lat(std::move(element_names), leq_pairs);
  int n = lat.size();
  for (const auto& o : ops) {
    int arity = o.dtype.arity();
    if (arity < 1 || arity > 2)
      throw LatticeError("operator " + o.name + ": arity must be 1 or 2");
    std::size_t expected = arity == 1 ? n : n * n;
    if (o.table.size() != expected)
      throw LatticeError("operator " + o.name + ": table not total");
    for (int v : o.table)
      if (v < 0 || v >= n)
        throw LatticeError("operator " + o.name + ": value out of range");
  }
  return FiniteNLE{std::move(lat), std::move(ops)};
}

bool ValidationReport::all_ok() const {
  for (const auto& [id, r] : checks)
    if (!r.ok) return false;
  return true;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& [id, r] : checks) {
    os << id << ": " << (r.ok ? "pass" : "FAIL") ;
    if (!r.ok) os << " (" << r.detail << ")";
    os << '\n';
  }
  return os.str();
}

namespace {

// Applies op at argument place k filled with x, other place (binary) with c.
int apply_at(const FiniteLattice& lat, const LatticeOp& o, int k, int x, int c) {
  int n = lat.size();
  if (o.dtype.arity() == 1) return o.table[x];
  return k == 0 ? o.table[x * n + c] : o.table[c * n + x];
}

std::string tuple_name(const FiniteLattice& lat, std::initializer_list<int> t) {
  std::string s;
  for (int e : t) {
    if (!s.empty()) s += ',';
    s += lat.names()[e];
  }
  return s;
}

// Distribution + normality of op o in argument place k, as equations.
void check_place(const FiniteLattice& lat, const LatticeOp& o, int k,
                 ValidationReport& rep) {
  int n = lat.size();
  bool ad = o.dtype.arg_dual[k], od = o.dtype.out_dual;
  // A 1-typed place turns joins of inputs into the output-side combination,
  // a ∂-typed place turns meets; a ∂-typed output combines by meet.
  auto in_comb = [&](int a, int b) { return ad ? lat.meet(a, b) : lat.join(a, b); };
  auto out_for = [&](int fa, int fb) { return od ? lat.meet(fa, fb) : lat.join(fa, fb); };

  std::string id = o.name + "/place" + std::to_string(k + 1);
  CheckResult dist;
  int others = o.dtype.arity() == 2 ? n : 1;
  for (int c = 0; c < others && dist.ok; ++c)
    for (int a = 0; a < n && dist.ok; ++a)
      for (int b = 0; b < n; ++b) {
        int lhs = apply_at(lat, o, k, in_comb(a, b), c);
        int rhs = out_for(apply_at(lat, o, k, a, c), apply_at(lat, o, k, b, c));
        if (lhs != rhs) {
          dist.ok = false;
          dist.detail = "witness (" + tuple_name(lat, {a, b, c}) + ")";
          break;
        }
      }
  rep.checks.emplace_back("dist " + id, dist);

  CheckResult norm;
  int unit = ad ? lat.top() : lat.bottom();
  int want = od ? lat.top() : lat.bottom();
  for (int c = 0; c < others; ++c) {
    if (apply_at(lat, o, k, unit, c) != want) {
      norm.ok = false;
      norm.detail = "witness (" + lat.names()[c] + ")";
      break;
    }
  }
  rep.checks.emplace_back("norm " + id, norm);
}

}  // namespace

ValidationReport validate_nle(const FiniteNLE& nle) {
  ValidationReport rep;
  const FiniteLattice& lat = nle.lattice;
  int n = lat.size();

  if (const LatticeOp* imp = nle.find_op("imp")) {
    CheckResult a1, a2, nn;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (a1.ok && imp->apply(lat.join(a, b), c, n) !=
                           lat.meet(imp->apply(a, c, n), imp->apply(b, c, n))) {
            a1.ok = false;
            a1.detail = "witness (" + tuple_name(lat, {a, b, c}) + ")";
          }
          if (a2.ok && imp->apply(a, lat.meet(b, c), n) !=
                           lat.meet(imp->apply(a, b, n), imp->apply(a, c, n))) {
            a2.ok = false;
            a2.detail = "witness (" + tuple_name(lat, {a, b, c}) + ")";
          }
        }
    for (int a = 0; a < n; ++a) {
      if (imp->apply(lat.bottom(), a, n) != lat.top() ||
          imp->apply(a, lat.top(), n) != lat.top()) {
        nn.ok = false;
        nn.detail = "witness (" + lat.names()[a] + ")";
        break;
      }
    }
    rep.checks.emplace_back("A1", a1);
    rep.checks.emplace_back("A2", a2);
    rep.checks.emplace_back("N", nn);
  }
  if (const LatticeOp* box = nle.find_op("box")) {
    CheckResult m, nb;
    for (int a = 0; a < n && m.ok; ++a)
      for (int b = 0; b < n; ++b)
        if (box->apply(lat.meet(a, b)) != lat.meet(box->apply(a), box->apply(b))) {
          m.ok = false;
          m.detail = "witness (" + tuple_name(lat, {a, b}) + ")";
          break;
        }
    if (box->apply(lat.top()) != lat.top()) {
      nb.ok = false;
      nb.detail = "witness (" + lat.names()[lat.top()] + ")";
    }
    rep.checks.emplace_back("Mbox", m);
    rep.checks.emplace_back("Nbox", nb);
  }
  if (const LatticeOp* dia = nle.find_op("dia")) {
    CheckResult m, nd;
    for (int a = 0; a < n && m.ok; ++a)
      for (int b = 0; b < n; ++b)
        if (dia->apply(lat.join(a, b)) != lat.join(dia->apply(a), dia->apply(b))) {
          m.ok = false;
          m.detail = "witness (" + tuple_name(lat, {a, b}) + ")";
          break;
        }
    if (dia->apply(lat.bottom()) != lat.bottom()) {
      nd.ok = false;
      nd.detail = "witness (" + lat.names()[lat.bottom()] + ")";
    }
    rep.checks.emplace_back("Mdia", m);
    rep.checks.emplace_back("Ndia", nd);
  }

  for (const auto& o : nle.ops)
    for (int k = 0; k < o.dtype.arity(); ++k)
      check_place(lat, o, k, rep);
  return rep;
}

std::vector<std::string> equation_ids() {
  return {"K", "D", "Tbox", "Tdia", "S4box", "S4dia", "B", "S5", "A3", "H1H2",
          "INT"};
}

CheckResult check_equation(const FiniteNLE& nle, const std::string& id) {
  const FiniteLattice& lat = nle.lattice;
  int n = lat.size();
  CheckResult r;
  auto fail = [&](std::initializer_list<int> w) {
    r.ok = false;
    r.detail = "witness (" + tuple_name(lat, w) + ")";
  };
  auto leq_all1 = [&](auto f) {  // unary inequality over all elements
    for (int a = 0; a < n; ++a) {
      auto [l, rr] = f(a);
      if (!lat.leq(l, rr)) {
        fail({a});
        return;
      }
    }
  };

  if (id == "K") {
    const auto& box = nle.op("box");
    const auto& imp = nle.op("imp");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!lat.leq(box.apply(imp.apply(a, b, n)),
                     imp.apply(box.apply(a), box.apply(b), n))) {
          fail({a, b});
          return r;
        }
  } else if (id == "D") {
    const auto& box = nle.op("box");
    const auto& dia = nle.op("dia");
    leq_all1([&](int a) { return std::pair{box.apply(a), dia.apply(a)}; });
  } else if (id == "Tbox") {
    const auto& box = nle.op("box");
    leq_all1([&](int a) { return std::pair{box.apply(a), a}; });
  } else if (id == "Tdia") {
    const auto& dia = nle.op("dia");
    leq_all1([&](int a) { return std::pair{a, dia.apply(a)}; });
  } else if (id == "S4box") {
    const auto& box = nle.op("box");
    leq_all1([&](int a) {
      return std::pair{box.apply(a), box.apply(box.apply(a))};
    });
  } else if (id == "S4dia") {
    const auto& dia = nle.op("dia");
    leq_all1([&](int a) {
      return std::pair{dia.apply(dia.apply(a)), dia.apply(a)};
    });
  } else if (id == "B") {
    const auto& box = nle.op("box");
    const auto& dia = nle.op("dia");
    for (int a = 0; a < n; ++a)
      if (!lat.leq(a, box.apply(dia.apply(a))) ||
          !lat.leq(dia.apply(box.apply(a)), a)) {
        fail({a});
        return r;
      }
  } else if (id == "S5") {
    const auto& box = nle.op("box");
    const auto& dia = nle.op("dia");
    for (int a = 0; a < n; ++a)
      if (!lat.leq(dia.apply(a), box.apply(dia.apply(a))) ||
          !lat.leq(dia.apply(box.apply(a)), box.apply(a))) {
        fail({a});
        return r;
      }
  } else if (id == "A3") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (lat.meet(a, lat.join(b, c)) !=
              lat.join(lat.meet(a, b), lat.meet(a, c))) {
            fail({a, b, c});
            return r;
          }
  } else if (id == "H1H2") {
    const auto& imp = nle.op("imp");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!lat.leq(lat.meet(a, imp.apply(a, b, n)), b) ||
            !lat.leq(b, imp.apply(a, lat.meet(a, b), n))) {
          fail({a, b});
          return r;
        }
  } else if (id == "INT") {
    const auto& imp = nle.op("imp");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (lat.leq(a, b) != lat.leq(lat.top(), imp.apply(a, b, n))) {
          fail({a, b});
          return r;
        }
  } else {
    throw LatticeError("unknown axiom id: " + id);
  }
  return r;
}

Mask filter_generated(const FiniteLattice& lat, Mask seed) {
  int n = lat.size();
  // upward closure of the meet-closure of seed
  Mask closed = seed;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a)
      if (bit(closed, a))
        for (int b = 0; b < n; ++b)
          if (bit(closed, b)) {
            int m = lat.meet(a, b);
            if (!bit(closed, m)) {
              closed |= Mask{1} << m;
              changed = true;
            }
          }
    for (int a = 0; a < n; ++a)
      if (bit(closed, a)) {
        Mask up = lat.up_set(a);
        if ((up & ~closed) != 0) {
          closed |= up;
          changed = true;
        }
      }
  }
  return closed;
}

Mask ideal_generated(const FiniteLattice& lat, Mask seed) {
  int n = lat.size();
  Mask closed = seed;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a)
      if (bit(closed, a))
        for (int b = 0; b < n; ++b)
          if (bit(closed, b)) {
            int j = lat.join(a, b);
            if (!bit(closed, j)) {
              closed |= Mask{1} << j;
              changed = true;
            }
          }
    for (int a = 0; a < n; ++a)
      if (bit(closed, a)) {
        Mask down = lat.down_set(a);
        if ((down & ~closed) != 0) {
          closed |= down;
          changed = true;
        }
      }
  }
  return closed;
}

std::pair<std::vector<FilterOrIdeal>, std::vector<FilterOrIdeal>>
filters_ideals(const FiniteLattice& lat) {
  int n = lat.size();
  std::vector<FilterOrIdeal> filters, ideals;
  // every filter of a finite lattice is principal; same for ideals
  std::vector<Mask> fs, is;
  for (int a = 0; a < n; ++a) {
    fs.push_back(lat.up_set(a));
    is.push_back(lat.down_set(a));
  }
  std::sort(fs.begin(), fs.end());
  std::sort(is.begin(), is.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  is.erase(std::unique(is.begin(), is.end()), is.end());
  for (Mask m : fs) filters.push_back({true, m});
  for (Mask m : is) ideals.push_back({false, m});
  return {filters, ideals};
}

int evaluate_term(const FiniteNLE& nle, const FormulaPtr& f,
                  const std::map<int, int>& assignment) {
  const FiniteLattice& lat = nle.lattice;
  int n = lat.size();
  switch (f->kind) {
    case Conn::Var: {
      auto it = assignment.find(f->index);
      if (it == assignment.end())
        throw LatticeError("unassigned variable p" + std::to_string(f->index));
      return it->second;
    }
    case Conn::Top: return lat.top();
    case Conn::Bot: return lat.bottom();
    case Conn::And:
      return lat.meet(evaluate_term(nle, f->left, assignment),
                      evaluate_term(nle, f->right, assignment));
    case Conn::Or:
      return lat.join(evaluate_term(nle, f->left, assignment),
                      evaluate_term(nle, f->right, assignment));
    case Conn::Imp:
      return nle.op("imp").apply(evaluate_term(nle, f->left, assignment),
                                 evaluate_term(nle, f->right, assignment), n);
    case Conn::Box:
      return nle.op("box").apply(evaluate_term(nle, f->left, assignment));
    case Conn::Dia:
      return nle.op("dia").apply(evaluate_term(nle, f->left, assignment));
  }
  throw LatticeError("bad formula");
}

}  // namespace dfml
