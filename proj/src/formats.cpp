#include "dfml/formats.hpp"

#include <array>
#include <optional>
#include <sstream>

#include "dfml/formula.hpp"

namespace dfml {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Comment-stripped, tokenized nonempty lines.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t lineno = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{lineno, {}};
    std::string token;
    for (char c : raw) {
      if (c == ' ' || c == '\t' || c == '\r') {
        if (!token.empty()) line.tokens.push_back(std::move(token));
        token.clear();
      } else {
        token += c;
      }
    }
    if (!token.empty()) line.tokens.push_back(std::move(token));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int name_index(const std::vector<std::string>& names, const std::string& name,
               std::size_t lineno, const std::string& what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw ParseError(lineno, "unknown " + what + ": " + name);
}

void require_unique(const std::vector<std::string>& names, std::size_t lineno,
                    const std::string& what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw ParseError(lineno, "duplicate " + what + ": " + names[i]);
}

}  // namespace

FiniteNLE parse_lat(std::string_view text) {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> leq_pairs;
  std::vector<LatticeOp> ops;
  std::vector<char> assigned_any;  // parallel to ops: any value line seen
  bool have_elements = false;

  auto find_op = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < ops.size(); ++i)
      if (ops[i].name == name) return static_cast<int>(i);
    return -1;
  };

  for (const Line& line : tokenize(text)) {
    const std::vector<std::string>& t = line.tokens;
    if (t[0] == "elements:") {
      if (have_elements)
        throw ParseError(line.number, "repeated elements: line");
      elements.assign(t.begin() + 1, t.end());
      if (elements.empty())
        throw ParseError(line.number, "elements: line lists no elements");
      require_unique(elements, line.number, "element");
      have_elements = true;
    } else if (t[0] == "leq:") {
      if (!have_elements)
        throw ParseError(line.number, "leq: before elements:");
      for (std::size_t i = 1; i < t.size(); ++i) {
        std::size_t sep = t[i].find("<=");
        if (sep == std::string::npos)
          throw ParseError(line.number, "expected a<=b, got " + t[i]);
        int a = name_index(elements, t[i].substr(0, sep), line.number,
                           "element");
        int b = name_index(elements, t[i].substr(sep + 2), line.number,
                           "element");
        leq_pairs.push_back({a, b});
      }
    } else if (t[0] == "op") {
      if (!have_elements)
        throw ParseError(line.number, "op before elements:");
      if (t.size() != 4)
        throw ParseError(line.number, "expected: op <name> <arity> <dtype>");
      if (find_op(t[1]) >= 0)
        throw ParseError(line.number, "duplicate op: " + t[1]);
      int arity;
      try {
        arity = std::stoi(t[2]);
      } catch (...) {
        throw ParseError(line.number, "bad arity: " + t[2]);
      }
      DistributionType dt;
      try {
        dt = DistributionType::parse(t[3]);
      } catch (const LatticeError& e) {
        throw ParseError(line.number, e.what());
      }
      if (dt.arity() != arity)
        throw ParseError(line.number, "arity " + t[2] +
                                          " does not match dtype " + t[3]);
      if (arity < 1 || arity > 2)
        throw ParseError(line.number, "only arity 1 and 2 are supported");
      int n = static_cast<int>(elements.size());
      LatticeOp op{t[1], dt, std::vector<int>(arity == 1 ? n : n * n, -1)};
      ops.push_back(std::move(op));
      assigned_any.push_back(0);
    } else {
      int oi = find_op(t[0]);
      if (oi < 0)
        throw ParseError(line.number, "unknown directive or op: " + t[0]);
      LatticeOp& op = ops[oi];
      int arity = op.dtype.arity();
      if (static_cast<int>(t.size()) != arity + 3 ||
          t[arity + 1] != "=")
        throw ParseError(line.number,
                         "expected: " + op.name +
                             (arity == 1 ? " a = c" : " a b = c"));
      int n = static_cast<int>(elements.size());
      int a = name_index(elements, t[1], line.number, "element");
      int b = arity == 2 ? name_index(elements, t[2], line.number, "element")
                         : 0;
      int c = name_index(elements, t[arity + 2], line.number, "element");
      int slot = arity == 1 ? a : a * n + b;
      if (op.table[slot] != -1)
        throw ParseError(line.number, "duplicate value line for " + op.name);
      op.table[slot] = c;
      assigned_any[oi] = 1;
    }
  }
  if (!have_elements) throw ParseError(0, "missing elements: line");
  for (const LatticeOp& op : ops)
    for (std::size_t i = 0; i < op.table.size(); ++i)
      if (op.table[i] == -1)
        throw ParseError(0, "incomplete table for op " + op.name);
  return build_nle(std::move(elements), leq_pairs, std::move(ops));
}

std::string emit_lat(const FiniteNLE& nle) {
  const FiniteLattice& lat = nle.lattice;
  int n = lat.size();
  std::ostringstream os;
  os << "elements:";
  for (int i = 0; i < n; ++i) os << " " << lat.names()[i];
  os << "\nleq:";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && lat.leq(a, b))
        os << " " << lat.names()[a] << "<=" << lat.names()[b];
  os << "\n";
  for (const LatticeOp& op : nle.ops) {
    os << "op " << op.name << " " << op.dtype.arity() << " "
       << op.dtype.to_string() << "\n";
    if (op.dtype.arity() == 1) {
      for (int a = 0; a < n; ++a)
        os << op.name << " " << lat.names()[a] << " = "
           << lat.names()[op.apply(a)] << "\n";
    } else {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          os << op.name << " " << lat.names()[a] << " " << lat.names()[b]
             << " = " << lat.names()[op.apply(a, b, n)] << "\n";
    }
  }
  return os.str();
}

std::vector<std::string> point_names(const SortedFrame& f, Sort s) {
  std::vector<std::string> names = f.names(s);
  if (names.empty())
    for (int i = 0; i < f.size(s); ++i)
      names.push_back((s == Sort::One ? "x" : "y") + std::to_string(i));
  return names;
}

namespace {

/// Splits the post-key tokens of a relation line into '|'-separated tuples.
std::vector<std::vector<std::string>> split_tuples(
    const std::vector<std::string>& t, std::size_t lineno) {
  std::vector<std::vector<std::string>> tuples;
  std::vector<std::string> cur;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] == "|") {
      if (cur.empty()) throw ParseError(lineno, "empty tuple before '|'");
      tuples.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(t[i]);
    }
  }
  if (!cur.empty()) tuples.push_back(std::move(cur));
  return tuples;
}

}  // namespace

SortedFrame parse_frm(std::string_view text) {
  std::vector<std::string> names1, namesd;
  bool have1 = false, haved = false;
  std::vector<std::pair<int, int>> i_pairs;
  std::optional<std::vector<std::pair<int, int>>> box_pairs, dia_pairs;
  std::optional<std::vector<std::array<int, 3>>> t_triples;
  std::vector<Line> pending;  // relation lines, resolved after the sorts

  for (const Line& line : tokenize(text)) {
    const std::vector<std::string>& t = line.tokens;
    if (t[0] == "sort1:") {
      if (have1) throw ParseError(line.number, "repeated sort1: line");
      names1.assign(t.begin() + 1, t.end());
      require_unique(names1, line.number, "sort-1 point");
      have1 = true;
    } else if (t[0] == "sortd:") {
      if (haved) throw ParseError(line.number, "repeated sortd: line");
      namesd.assign(t.begin() + 1, t.end());
      require_unique(namesd, line.number, "sort-d point");
      haved = true;
    } else if (t[0] == "I:" || t[0] == "Rbox:" || t[0] == "Rdia:" ||
               t[0] == "T:") {
      pending.push_back(line);
    } else {
      throw ParseError(line.number, "unknown directive: " + t[0]);
    }
  }
  if (!have1 || names1.empty())
    throw ParseError(0, "missing or empty sort1: line");
  if (!haved || namesd.empty())
    throw ParseError(0, "missing or empty sortd: line");

  for (const Line& line : pending) {
    const std::string& key = line.tokens[0];
    auto tuples = split_tuples(line.tokens, line.number);
    if (key == "I:") {
      for (const auto& tp : tuples) {
        if (tp.size() != 2)
          throw ParseError(line.number, "I tuples have two points");
        i_pairs.push_back(
            {name_index(names1, tp[0], line.number, "sort-1 point"),
             name_index(namesd, tp[1], line.number, "sort-d point")});
      }
    } else if (key == "Rbox:" || key == "Rdia:") {
      const std::vector<std::string>& names =
          key == "Rbox:" ? namesd : names1;
      auto& dst = key == "Rbox:" ? box_pairs : dia_pairs;
      if (!dst) dst.emplace();
      for (const auto& tp : tuples) {
        if (tp.size() != 2)
          throw ParseError(line.number, key + " tuples have two points");
        dst->push_back({name_index(names, tp[0], line.number, "point"),
                        name_index(names, tp[1], line.number, "point")});
      }
    } else {  // T:
      if (!t_triples) t_triples.emplace();
      for (const auto& tp : tuples) {
        if (tp.size() != 3)
          throw ParseError(line.number, "T tuples have three points");
        t_triples->push_back(
            {name_index(namesd, tp[0], line.number, "sort-d point"),
             name_index(names1, tp[1], line.number, "sort-1 point"),
             name_index(namesd, tp[2], line.number, "sort-d point")});
      }
    }
  }

  int n1 = static_cast<int>(names1.size());
  int nd = static_cast<int>(namesd.size());
  SortedFrame f(n1, nd, i_pairs, names1, namesd);
  if (box_pairs) {
    UnaryRel r;
    r.sec.assign(nd, 0);
    for (auto [w, u] : *box_pairs) r.sec[u] |= Mask{1} << w;
    f.rbox = std::move(r);
  }
  if (dia_pairs) {
    UnaryRel r;
    r.sec.assign(n1, 0);
    for (auto [w, u] : *dia_pairs) r.sec[u] |= Mask{1} << w;
    f.rdia = std::move(r);
  }
  if (t_triples) {
    TernaryRel r;
    r.sec.assign(n1, std::vector<Mask>(nd, 0));
    for (auto [v, x, y] : *t_triples) r.sec[x][y] |= Mask{1} << v;
    f.t = std::move(r);
  }
  return f;
}

std::string emit_frm(const SortedFrame& f) {
  std::vector<std::string> n1 = point_names(f, Sort::One);
  std::vector<std::string> nd = point_names(f, Sort::Del);
  std::ostringstream os;
  os << "sort1:";
  for (const std::string& s : n1) os << " " << s;
  os << "\nsortd:";
  for (const std::string& s : nd) os << " " << s;
  os << "\nI:";
  bool first = true;
  for (int x = 0; x < f.size(Sort::One); ++x)
    for (int y = 0; y < f.size(Sort::Del); ++y)
      if (f.in_i(x, y)) {
        os << (first ? " " : " | ") << n1[x] << " " << nd[y];
        first = false;
      }
  os << "\n";
  auto dump_unary = [&](const char* key, const UnaryRel& r,
                        const std::vector<std::string>& names) {
    os << key;
    bool fst = true;
    for (std::size_t u = 0; u < r.sec.size(); ++u)
      for (std::size_t w = 0; w < names.size(); ++w)
        if (bit(r.sec[u], static_cast<int>(w))) {
          os << (fst ? " " : " | ") << names[w] << " " << names[u];
          fst = false;
        }
    os << "\n";
  };
  if (f.rbox) dump_unary("Rbox:", *f.rbox, nd);
  if (f.rdia) dump_unary("Rdia:", *f.rdia, n1);
  if (f.t) {
    os << "T:";
    bool fst = true;
    for (int x = 0; x < f.size(Sort::One); ++x)
      for (int y = 0; y < f.size(Sort::Del); ++y)
        for (int v = 0; v < f.size(Sort::Del); ++v)
          if (bit(f.t->sec[x][y], v)) {
            os << (fst ? " " : " | ") << nd[v] << " " << n1[x] << " " << nd[y];
            fst = false;
          }
    os << "\n";
  }
  return os.str();
}

std::map<int, Mask> parse_val(std::string_view text,
                              const std::vector<std::string>& names1) {
  std::map<int, Mask> val;
  for (const Line& line : tokenize(text)) {
    const std::string& head = line.tokens[0];
    if (head.size() < 3 || head[0] != 'p' || head.back() != ':')
      throw ParseError(line.number, "expected p<i>: x1 x2 …");
    int var;
    try {
      var = std::stoi(head.substr(1, head.size() - 2));
    } catch (...) {
      throw ParseError(line.number, "bad variable: " + head);
    }
    if (val.count(var))
      throw ParseError(line.number, "duplicate valuation for p" +
                                        std::to_string(var));
    Mask m = 0;
    for (std::size_t i = 1; i < line.tokens.size(); ++i)
      m |= Mask{1} << name_index(names1, line.tokens[i], line.number,
                                 "sort-1 point");
    val[var] = m;
  }
  return val;
}

std::string emit_val(const std::map<int, Mask>& valuation,
                     const std::vector<std::string>& names1) {
  std::ostringstream os;
  for (const auto& [var, mask] : valuation) {
    os << "p" << var << ":";
    for (std::size_t i = 0; i < names1.size(); ++i)
      if (bit(mask, static_cast<int>(i))) os << " " << names1[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace dfml
