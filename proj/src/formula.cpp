#include "dfml/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dfml {

FormulaPtr make(Conn k, int idx, FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(k, idx, std::move(l), std::move(r)));
}

FormulaPtr Formula::var(int i) {
  if (i < 0) throw std::invalid_argument("variable index must be non-negative");
  return make(Conn::Var, i, nullptr, nullptr);
}
FormulaPtr Formula::top() { return make(Conn::Top, -1, nullptr, nullptr); }
FormulaPtr Formula::bot() { return make(Conn::Bot, -1, nullptr, nullptr); }
FormulaPtr Formula::mk_and(FormulaPtr a, FormulaPtr b) {
  return make(Conn::And, -1, std::move(a), std::move(b));
}
FormulaPtr Formula::mk_or(FormulaPtr a, FormulaPtr b) {
  return make(Conn::Or, -1, std::move(a), std::move(b));
}
FormulaPtr Formula::imp(FormulaPtr a, FormulaPtr b) {
  return make(Conn::Imp, -1, std::move(a), std::move(b));
}
FormulaPtr Formula::box(FormulaPtr a) {
  return make(Conn::Box, -1, std::move(a), nullptr);
}
FormulaPtr Formula::dia(FormulaPtr a) {
  return make(Conn::Dia, -1, std::move(a), nullptr);
}

int compare(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return 0;
  if (!a) return b ? -1 : 0;
  if (!b) return 1;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->kind == Conn::Var) {
    if (a->index != b->index) return a->index < b->index ? -1 : 1;
    return 0;
  }
  if (int c = compare(a->left, b->left)) return c;
  return compare(a->right, b->right);
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  return compare(a, b) == 0;
}

bool equal(const Sequent& a, const Sequent& b) {
  return equal(a.left, b.left) && equal(a.right, b.right);
}

namespace {

// Precedence levels for printing: 0 -> (right), 1 \/ (left), 2 /\ (left),
// 3 unary/atom.
int level(Conn k) {
  switch (k) {
    case Conn::Imp: return 0;
    case Conn::Or: return 1;
    case Conn::And: return 2;
    default: return 3;
  }
}

void print(std::ostream& os, const FormulaPtr& f, int min_level) {
  bool paren = level(f->kind) < min_level;
  if (paren) os << '(';
  switch (f->kind) {
    case Conn::Var: os << 'p' << f->index; break;
    case Conn::Top: os << "top"; break;
    case Conn::Bot: os << "bot"; break;
    case Conn::And:
      print(os, f->left, 2);
      os << " /\\ ";
      print(os, f->right, 3);
      break;
    case Conn::Or:
      print(os, f->left, 1);
      os << " \\/ ";
      print(os, f->right, 2);
      break;
    case Conn::Imp:
      print(os, f->left, 1);
      os << " -> ";
      print(os, f->right, 0);
      break;
    case Conn::Box:
      os << "[]";
      print(os, f->left, 3);
      break;
    case Conn::Dia:
      os << "<>";
      print(os, f->left, 3);
      break;
  }
  if (paren) os << ')';
}

}  // namespace

std::string to_string(const FormulaPtr& f) {
  std::ostringstream os;
  print(os, f, 0);
  return os.str();
}

std::string to_string(const Sequent& s) {
  return to_string(s.left) + " |- " + to_string(s.right);
}

int node_count(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + node_count(f->left) + node_count(f->right);
}

namespace {
void collect(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (!f) return;
  out.push_back(f);
  collect(f->left, out);
  collect(f->right, out);
}
}  // namespace

std::vector<FormulaPtr> subformulas(const FormulaPtr& f) {
  std::vector<FormulaPtr> all;
  collect(f, all);
  std::sort(all.begin(), all.end(), FormulaLess{});
  all.erase(std::unique(all.begin(), all.end(),
                        [](const FormulaPtr& a, const FormulaPtr& b) {
                          return equal(a, b);
                        }),
            all.end());
  return all;
}

std::vector<int> variables_of(const FormulaPtr& f) {
  std::vector<int> vars;
  for (const auto& g : subformulas(f))
    if (g->kind == Conn::Var) vars.push_back(g->index);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Var, Top, Bot, And, Or, Arrow, Box, Dia, LParen, RParen,
                 Turnstile, End };

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  int var_index = -1;
  std::size_t tok_pos = 0;

  explicit Lexer(std::string_view t) : text(t) { next(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_pos, msg);
  }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    auto take2 = [&](char a, char b) {
      return pos + 1 < text.size() && text[pos] == a && text[pos + 1] == b;
    };
    if (c == '(') { tok = Tok::LParen; ++pos; return; }
    if (c == ')') { tok = Tok::RParen; ++pos; return; }
    if (take2('/', '\\')) { tok = Tok::And; pos += 2; return; }
    if (take2('\\', '/')) { tok = Tok::Or; pos += 2; return; }
    if (take2('-', '>')) { tok = Tok::Arrow; pos += 2; return; }
    if (take2('[', ']')) { tok = Tok::Box; pos += 2; return; }
    if (take2('<', '>')) { tok = Tok::Dia; pos += 2; return; }
    if (take2('|', '-')) { tok = Tok::Turnstile; pos += 2; return; }
    if (c == 'p' && pos + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      std::size_t start = ++pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      var_index = std::stoi(std::string(text.substr(start, pos - start)));
      tok = Tok::Var;
      return;
    }
    if (text.substr(pos, 3) == "top") { tok = Tok::Top; pos += 3; return; }
    if (text.substr(pos, 3) == "bot") { tok = Tok::Bot; pos += 3; return; }
    throw ParseError(pos, "unknown token starting with '" +
                              std::string(1, c) + "'");
  }
};

FormulaPtr parse_imp(Lexer& lx);

FormulaPtr parse_atom(Lexer& lx) {
  switch (lx.tok) {
    case Tok::Var: {
      int i = lx.var_index;
      lx.next();
      return Formula::var(i);
    }
    case Tok::Top: lx.next(); return Formula::top();
    case Tok::Bot: lx.next(); return Formula::bot();
    case Tok::Box: lx.next(); return Formula::box(parse_atom(lx));
    case Tok::Dia: lx.next(); return Formula::dia(parse_atom(lx));
    case Tok::LParen: {
      lx.next();
      FormulaPtr f = parse_imp(lx);
      if (lx.tok != Tok::RParen) lx.fail("expected ')'");
      lx.next();
      return f;
    }
    default: lx.fail("expected a formula");
  }
}

FormulaPtr parse_and(Lexer& lx) {
  FormulaPtr f = parse_atom(lx);
  while (lx.tok == Tok::And) {
    lx.next();
    f = Formula::mk_and(f, parse_atom(lx));
  }
  return f;
}

FormulaPtr parse_or(Lexer& lx) {
  FormulaPtr f = parse_and(lx);
  while (lx.tok == Tok::Or) {
    lx.next();
    f = Formula::mk_or(f, parse_and(lx));
  }
  return f;
}

FormulaPtr parse_imp(Lexer& lx) {
  FormulaPtr f = parse_or(lx);
  if (lx.tok == Tok::Arrow) {
    lx.next();
    return Formula::imp(f, parse_imp(lx));  // right associative
  }
  return f;
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  Lexer lx(text);
  FormulaPtr f = parse_imp(lx);
  if (lx.tok != Tok::End) lx.fail("trailing input after formula");
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Lexer lx(text);
  FormulaPtr l = parse_imp(lx);
  if (lx.tok != Tok::Turnstile) lx.fail("expected '|-'");
  lx.next();
  FormulaPtr r = parse_imp(lx);
  if (lx.tok != Tok::End) lx.fail("trailing input after sequent");
  return Sequent{l, r};
}

FormulaPtr substitute(const FormulaPtr& f, const Subst& s) {
  switch (f->kind) {
    case Conn::Var: {
      auto it = s.find(f->index);
      return it != s.end() ? it->second : f;
    }
    case Conn::Top:
    case Conn::Bot:
      return f;
    case Conn::Box: return Formula::box(substitute(f->left, s));
    case Conn::Dia: return Formula::dia(substitute(f->left, s));
    case Conn::And:
      return Formula::mk_and(substitute(f->left, s), substitute(f->right, s));
    case Conn::Or:
      return Formula::mk_or(substitute(f->left, s), substitute(f->right, s));
    case Conn::Imp:
      return Formula::imp(substitute(f->left, s), substitute(f->right, s));
  }
  return f;
}

bool match(const FormulaPtr& pattern, const FormulaPtr& target,
           Subst& binding) {
  if (pattern->kind == Conn::Var) {
    auto [it, inserted] = binding.emplace(pattern->index, target);
    return inserted || equal(it->second, target);
  }
  if (pattern->kind != target->kind) return false;
  if (pattern->left && !match(pattern->left, target->left, binding))
    return false;
  if (pattern->right && !match(pattern->right, target->right, binding))
    return false;
  return true;
}

}  // namespace dfml
