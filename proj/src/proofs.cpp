#include "dfml/proofs.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace dfml {

namespace {

const std::pair<RuleId, const char*> kRuleNames[] = {
    {RuleId::Identity, "identity"},
    {RuleId::Cut, "cut"},
    {RuleId::AndLeft1, "and-left-1"},
    {RuleId::AndLeft2, "and-left-2"},
    {RuleId::AndRight, "and-right"},
    {RuleId::OrLeft, "or-left"},
    {RuleId::OrRight1, "or-right-1"},
    {RuleId::OrRight2, "or-right-2"},
    {RuleId::BotLeft, "bot-left"},
    {RuleId::TopRight, "top-right"},
    {RuleId::Substitution, "substitution"},
    {RuleId::MonoBox, "mono-box"},
    {RuleId::MonoDia, "mono-dia"},
    {RuleId::AntiImpLeft, "anti-imp-left"},
    {RuleId::MonoImpRight, "mono-imp-right"},
    {RuleId::DistDia, "dist-dia"},
    {RuleId::DistBox, "dist-box"},
    {RuleId::CodistImpLeft, "codist-imp-left"},
    {RuleId::DistImpRight, "dist-imp-right"},
    {RuleId::NormDia, "norm-dia"},
    {RuleId::NormBox, "norm-box"},
    {RuleId::NormImpLeft, "norm-imp-left"},
    {RuleId::NormImpRight, "norm-imp-right"},
    {RuleId::AxiomInstance, "axiom-instance"},
};

/// Match both sides of `target` against `schema` under one shared binding,
/// i.e. `target` is a substitution instance of `schema`.
bool matches_schema(const Sequent& schema, const Sequent& target) {
  Subst binding;
  return match(schema.left, target.left, binding) &&
         match(schema.right, target.right, binding);
}

/// Zero-premise rules whose schema is a fixed pattern sequent.
const Sequent* leaf_schema(RuleId id) {
  static const std::map<RuleId, Sequent> schemas = [] {
    std::map<RuleId, Sequent> m;
    m[RuleId::Identity] = parse_sequent("p0 |- p0");
    m[RuleId::BotLeft] = parse_sequent("bot |- p0");
    m[RuleId::TopRight] = parse_sequent("p0 |- top");
    m[RuleId::DistDia] = parse_sequent("<>(p0 \\/ p1) |- <>p0 \\/ <>p1");
    m[RuleId::DistBox] = parse_sequent("[]p0 /\\ []p1 |- [](p0 /\\ p1)");
    m[RuleId::CodistImpLeft] =
        parse_sequent("(p0 \\/ p1) -> p2 |- (p0 -> p2) /\\ (p1 -> p2)");
    m[RuleId::DistImpRight] =
        parse_sequent("(p0 -> p1) /\\ (p0 -> p2) |- p0 -> (p1 /\\ p2)");
    m[RuleId::NormDia] = parse_sequent("<>bot |- bot");
    m[RuleId::NormBox] = parse_sequent("top |- []top");
    m[RuleId::NormImpLeft] = parse_sequent("top |- bot -> p0");
    m[RuleId::NormImpRight] = parse_sequent("top |- p0 -> top");
    return m;
  }();
  auto it = schemas.find(id);
  return it == schemas.end() ? nullptr : &it->second;
}

bool binds_all(const FormulaPtr& f, const Subst& binding) {
  for (int v : variables_of(f))
    if (!binding.count(v)) return false;
  return true;
}

/// Reason the node is locally incorrect, or nullopt if it is fine.
/// Premise arities are assumed already checked.
std::optional<std::string> node_reason(const Derivation& d,
                                       const std::set<std::string>& logic) {
  const Sequent& c = d.sequent;
  auto prem = [&](int i) -> const Sequent& { return d.premises[i].sequent; };
  switch (d.rule) {
    case RuleId::Cut:
      if (equal(c.left, prem(0).left) && equal(prem(0).right, prem(1).left) &&
          equal(prem(1).right, c.right))
        return std::nullopt;
      return "cut requires premises phi|-psi and psi|-theta with conclusion "
             "phi|-theta";
    case RuleId::AndLeft1:
      if (c.left->kind == Conn::And && equal(c.left->left, prem(0).left) &&
          equal(c.right, prem(0).right))
        return std::nullopt;
      return "conclusion left must be a conjunction whose first conjunct is "
             "the premise left";
    case RuleId::AndLeft2:
      if (c.left->kind == Conn::And && equal(c.left->right, prem(0).left) &&
          equal(c.right, prem(0).right))
        return std::nullopt;
      return "conclusion left must be a conjunction whose second conjunct is "
             "the premise left";
    case RuleId::AndRight:
      if (c.right->kind == Conn::And && equal(c.left, prem(0).left) &&
          equal(c.left, prem(1).left) && equal(c.right->left, prem(0).right) &&
          equal(c.right->right, prem(1).right))
        return std::nullopt;
      return "conclusion right must be the conjunction of the premise rights "
             "over a shared left side";
    case RuleId::OrLeft:
      if (c.left->kind == Conn::Or && equal(c.right, prem(0).right) &&
          equal(c.right, prem(1).right) && equal(c.left->left, prem(0).left) &&
          equal(c.left->right, prem(1).left))
        return std::nullopt;
      return "conclusion left must be the disjunction of the premise lefts "
             "over a shared right side";
    case RuleId::OrRight1:
      if (c.right->kind == Conn::Or && equal(c.left, prem(0).left) &&
          equal(c.right->left, prem(0).right))
        return std::nullopt;
      return "conclusion right must be a disjunction whose first disjunct is "
             "the premise right";
    case RuleId::OrRight2:
      if (c.right->kind == Conn::Or && equal(c.left, prem(0).left) &&
          equal(c.right->right, prem(0).right))
        return std::nullopt;
      return "conclusion right must be a disjunction whose second disjunct is "
             "the premise right";
    case RuleId::Substitution: {
      Subst binding;
      if (match(prem(0).left, c.left, binding) &&
          match(prem(0).right, c.right, binding))
        return std::nullopt;
      return "conclusion is not a uniform substitution instance of the "
             "premise";
    }
    case RuleId::MonoBox:
      if (c.left->kind == Conn::Box && c.right->kind == Conn::Box &&
          equal(c.left->left, prem(0).left) &&
          equal(c.right->left, prem(0).right))
        return std::nullopt;
      return "schema requires boxing both sides of the premise";
    case RuleId::MonoDia:
      if (c.left->kind == Conn::Dia && c.right->kind == Conn::Dia &&
          equal(c.left->left, prem(0).left) &&
          equal(c.right->left, prem(0).right))
        return std::nullopt;
      return "schema requires diamonding both sides of the premise";
    case RuleId::AntiImpLeft:
      if (c.left->kind == Conn::Imp && c.right->kind == Conn::Imp &&
          equal(c.left->right, c.right->right) &&
          equal(prem(0).left, c.right->left) &&
          equal(prem(0).right, c.left->left))
        return std::nullopt;
      return "schema requires psi|-theta with conclusion theta->chi |- "
             "psi->chi";
    case RuleId::MonoImpRight:
      if (c.left->kind == Conn::Imp && c.right->kind == Conn::Imp &&
          equal(c.left->left, c.right->left) &&
          equal(prem(0).left, c.left->right) &&
          equal(prem(0).right, c.right->right))
        return std::nullopt;
      return "schema requires psi|-theta with conclusion chi->psi |- "
             "chi->theta";
    case RuleId::AxiomInstance: {
      if (!logic.count(d.axiom))
        return "axiom " + d.axiom + " is not in the logic";
      for (const Sequent& schema : axiom_schemas(d.axiom))
        if (matches_schema(schema, c)) return std::nullopt;
      return "sequent is not a substitution instance of axiom " + d.axiom;
    }
    default: {
      const Sequent* schema = leaf_schema(d.rule);
      if (schema && matches_schema(*schema, c)) return std::nullopt;
      return "sequent does not match the " + rule_name(d.rule) + " schema " +
             (schema ? to_string(*schema) : std::string("<none>"));
    }
  }
}

std::optional<std::string> check_node(const Derivation& d,
                                      const std::set<std::string>& logic,
                                      const std::string& path) {
  auto fail = [&](const std::string& reason) {
    return path + " [" + rule_name(d.rule) + "] " + to_string(d.sequent) +
           ": " + reason;
  };
  int want = rule_arity(d.rule);
  if (static_cast<int>(d.premises.size()) != want)
    return fail("expected " + std::to_string(want) + " premise(s), got " +
                std::to_string(d.premises.size()));
  if (auto reason = node_reason(d, logic)) return fail(*reason);
  for (std::size_t i = 0; i < d.premises.size(); ++i)
    if (auto err = check_node(d.premises[i], logic,
                              path + "." + std::to_string(i)))
      return err;
  return std::nullopt;
}

}  // namespace

std::string rule_name(RuleId id) {
  for (const auto& [r, n] : kRuleNames)
    if (r == id) return n;
  throw ProofError("unknown rule id");
}

RuleId rule_from_name(std::string_view name) {
  for (const auto& [r, n] : kRuleNames)
    if (name == n) return r;
  throw ProofError("unknown rule name: " + std::string(name));
}

int rule_arity(RuleId id) {
  switch (id) {
    case RuleId::Cut:
    case RuleId::AndRight:
    case RuleId::OrLeft:
      return 2;
    case RuleId::AndLeft1:
    case RuleId::AndLeft2:
    case RuleId::OrRight1:
    case RuleId::OrRight2:
    case RuleId::Substitution:
    case RuleId::MonoBox:
    case RuleId::MonoDia:
    case RuleId::AntiImpLeft:
    case RuleId::MonoImpRight:
      return 1;
    default:
      return 0;
  }
}

int derivation_height(const Derivation& d) {
  int h = 0;
  for (const Derivation& p : d.premises)
    h = std::max(h, derivation_height(p));
  return h + 1;
}

int derivation_size(const Derivation& d) {
  int n = 1;
  for (const Derivation& p : d.premises) n += derivation_size(p);
  return n;
}

const std::vector<Sequent>& axiom_schemas(const std::string& axiom_id) {
  static const std::map<std::string, std::vector<Sequent>> schemas = [] {
    std::map<std::string, std::vector<Sequent>> m;
    m["K"] = {parse_sequent("[](p0 -> p1) |- []p0 -> []p1")};
    m["D"] = {parse_sequent("[]p0 |- <>p0")};
    m["T"] = {parse_sequent("[]p0 |- p0"), parse_sequent("p0 |- <>p0")};
    m["S4"] = {parse_sequent("[]p0 |- [][]p0"),
               parse_sequent("<><>p0 |- <>p0")};
    m["B"] = {parse_sequent("p0 |- []<>p0"), parse_sequent("<>[]p0 |- p0")};
    m["S5"] = {parse_sequent("<>p0 |- []<>p0"),
               parse_sequent("<>[]p0 |- []p0")};
    return m;
  }();
  auto it = schemas.find(axiom_id);
  if (it == schemas.end())
    throw ProofError("unknown axiom id: " + axiom_id);
  return it->second;
}

std::vector<std::string> logic_axiom_ids() {
  return {"K", "D", "T", "S4", "B", "S5"};
}

std::set<std::string> axioms_for_logic(const std::string& logic) {
  if (logic == "min") return {};
  if (logic == "K") return {"K"};
  if (logic == "D") return {"K", "D"};
  if (logic == "T") return {"K", "T"};
  if (logic == "S4") return {"K", "S4"};
  if (logic == "B") return {"K", "B"};
  if (logic == "S5") return {"K", "S5"};
  throw ProofError("unknown logic: " + logic);
}

ProofCheck check_derivation(const Derivation& d,
                            const std::set<std::string>& logic) {
  if (auto err = check_node(d, logic, "root")) return {false, *err};
  return {};
}

namespace {

/// Backward prover with failure memoization. Cut formulas are fixed up front
/// from the top-level goal; alternatives are tried in a fixed order, so the
/// result is deterministic.
class Searcher {
 public:
  Searcher(const Sequent& goal, const std::set<std::string>& logic)
      : logic_(logic) {
    std::set<FormulaPtr, FormulaLess> pool;
    std::vector<FormulaPtr> subs = subformulas(goal.left);
    for (const FormulaPtr& f : subformulas(goal.right)) subs.push_back(f);
    for (const FormulaPtr& f : subs) pool.insert(f);
    // Instantiated logic axioms: when a goal subformula matches one side of
    // an axiom schema and determines the other, that other side is a useful
    // cut formula (e.g. cutting with □p→◇p through D).
    for (const std::string& id : logic_)
      for (const Sequent& schema : axiom_schemas(id))
        for (const FormulaPtr& g : subs) {
          Subst b;
          if (match(schema.left, g, b) && binds_all(schema.right, b))
            pool.insert(substitute(schema.right, b));
          b.clear();
          if (match(schema.right, g, b) && binds_all(schema.left, b))
            pool.insert(substitute(schema.left, b));
        }
    cuts_.assign(pool.begin(), pool.end());
  }

  std::optional<Derivation> prove(const Sequent& s, int depth) {
    if (depth < 1) return std::nullopt;
    std::string key = to_string(s);
    if (auto it = proven_.find(key);
        it != proven_.end() && derivation_height(it->second) <= depth)
      return it->second;
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= depth)
      return std::nullopt;

    std::optional<Derivation> result = attempt(s, depth);
    if (result)
      proven_[key] = *result;
    else if (int& f = failed_[key]; f < depth)
      f = depth;
    return result;
  }

 private:
  std::optional<Derivation> attempt(const Sequent& s, int depth) {
    // Zero-premise rules.
    for (RuleId leaf :
         {RuleId::Identity, RuleId::BotLeft, RuleId::TopRight, RuleId::DistDia,
          RuleId::DistBox, RuleId::CodistImpLeft, RuleId::DistImpRight,
          RuleId::NormDia, RuleId::NormBox, RuleId::NormImpLeft,
          RuleId::NormImpRight})
      if (matches_schema(*leaf_schema(leaf), s))
        return Derivation{s, leaf, "", {}};
    for (const std::string& id : logic_)
      for (const Sequent& schema : axiom_schemas(id))
        if (matches_schema(schema, s))
          return Derivation{s, RuleId::AxiomInstance, id, {}};
    if (depth < 2) return std::nullopt;

    const FormulaPtr& l = s.left;
    const FormulaPtr& r = s.right;
    auto unary = [&](RuleId rule, Sequent premise) -> std::optional<Derivation> {
      if (auto p = prove(premise, depth - 1))
        return Derivation{s, rule, "", {*p}};
      return std::nullopt;
    };
    if (l->kind == Conn::Box && r->kind == Conn::Box)
      if (auto d = unary(RuleId::MonoBox, {l->left, r->left})) return d;
    if (l->kind == Conn::Dia && r->kind == Conn::Dia)
      if (auto d = unary(RuleId::MonoDia, {l->left, r->left})) return d;
    if (l->kind == Conn::Imp && r->kind == Conn::Imp &&
        equal(l->right, r->right))
      if (auto d = unary(RuleId::AntiImpLeft, {r->left, l->left})) return d;
    if (l->kind == Conn::Imp && r->kind == Conn::Imp && equal(l->left, r->left))
      if (auto d = unary(RuleId::MonoImpRight, {l->right, r->right})) return d;
    if (r->kind == Conn::And) {
      auto p0 = prove({l, r->left}, depth - 1);
      if (p0)
        if (auto p1 = prove({l, r->right}, depth - 1))
          return Derivation{s, RuleId::AndRight, "", {*p0, *p1}};
    }
    if (l->kind == Conn::Or) {
      auto p0 = prove({l->left, r}, depth - 1);
      if (p0)
        if (auto p1 = prove({l->right, r}, depth - 1))
          return Derivation{s, RuleId::OrLeft, "", {*p0, *p1}};
    }
    if (l->kind == Conn::And) {
      if (auto d = unary(RuleId::AndLeft1, {l->left, r})) return d;
      if (auto d = unary(RuleId::AndLeft2, {l->right, r})) return d;
    }
    if (r->kind == Conn::Or) {
      if (auto d = unary(RuleId::OrRight1, {l, r->left})) return d;
      if (auto d = unary(RuleId::OrRight2, {l, r->right})) return d;
    }
    for (const FormulaPtr& mid : cuts_) {
      if (equal(mid, l) || equal(mid, r)) continue;
      auto p0 = prove({l, mid}, depth - 1);
      if (p0)
        if (auto p1 = prove({mid, r}, depth - 1))
          return Derivation{s, RuleId::Cut, "", {*p0, *p1}};
    }
    return std::nullopt;
  }

  std::set<std::string> logic_;
  std::vector<FormulaPtr> cuts_;
  std::map<std::string, Derivation> proven_;
  std::map<std::string, int> failed_;
};

}  // namespace

std::optional<Derivation> search_proof(const Sequent& goal,
                                       const std::set<std::string>& logic,
                                       int depth) {
  return Searcher(goal, logic).prove(goal, depth);
}

namespace {

void emit_node(const Derivation& d, int depth, std::string& out) {
  out.append(2 * depth, ' ');
  if (d.rule == RuleId::AxiomInstance)
    out += "axiom-instance(" + d.axiom + ")";
  else
    out += rule_name(d.rule);
  out += ": " + to_string(d.sequent) + "\n";
  for (const Derivation& p : d.premises) emit_node(p, depth + 1, out);
}

}  // namespace

std::string emit_prf(const Derivation& d) {
  std::string out;
  emit_node(d, 0, out);
  return out;
}

Derivation parse_prf(std::string_view text) {
  std::optional<Derivation> root;
  std::vector<Derivation*> stack;  // stack[k] = open node at depth k
  std::size_t lineno = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t indent = line.find_first_not_of(' ');
    if (indent == std::string_view::npos || line[indent] == '#') continue;
    if (indent % 2 != 0)
      throw ParseError(lineno, "indentation must be a multiple of two spaces");
    int depth = static_cast<int>(indent / 2);
    std::string_view body = line.substr(indent);
    std::size_t colon = body.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(lineno, "expected '<rule-id>: <sequent>'");
    std::string_view name = body.substr(0, colon);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    Derivation node;
    if (name.starts_with("axiom-instance(") && name.ends_with(")")) {
      node.rule = RuleId::AxiomInstance;
      node.axiom = std::string(name.substr(15, name.size() - 16));
      if (node.axiom.empty())
        throw ParseError(lineno, "empty axiom id in axiom-instance");
    } else {
      try {
        node.rule = rule_from_name(name);
      } catch (const ProofError& e) {
        throw ParseError(lineno, e.what());
      }
      if (node.rule == RuleId::AxiomInstance)
        throw ParseError(lineno, "axiom-instance requires an axiom id");
    }
    node.sequent = parse_sequent(body.substr(colon + 1));
    if (depth == 0) {
      if (root) throw ParseError(lineno, "more than one root node");
      root = std::move(node);
      stack = {&*root};
    } else {
      if (depth > static_cast<int>(stack.size()))
        throw ParseError(lineno, "indentation jumps more than one level");
      stack.resize(depth);
      Derivation* parent = stack.back();
      parent->premises.push_back(std::move(node));
      stack.push_back(&parent->premises.back());
    }
  }
  if (!root) throw ParseError(lineno, "empty derivation");
  return *root;
}

}  // namespace dfml
