#include "gforge/cli.hpp"

#include "gforge/errors.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace gforge::cli {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
  std::string rest_after_first;  // raw text after the keyword
  int rest_column = 0;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
      if (line.tokens.size() == 1) {
        line.rest_after_first = raw.substr(i);
        line.rest_column = static_cast<int>(i) + 1;
      }
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

const std::regex& rational_pattern() {
  static const std::regex re(R"([+-]?[0-9]+(/[0-9]+)?)");
  return re;
}

bool looks_rational(const std::string& s) { return std::regex_match(s, rational_pattern()); }

Rational parse_rational(const Token& t, int line) {
  if (!looks_rational(t.text)) throw ParseError(line, t.column, "expected a rational number, got '" + t.text + "'");
  std::string s = t.text;
  if (s[0] == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  if (slash != std::string::npos && std::stoll(s.substr(slash + 1)) == 0)
    throw ParseError(line, t.column, "zero denominator in '" + t.text + "'");
  Rational q(s);
  q.canonicalize();
  return q;
}

int parse_int(const Token& t, int line) {
  if (!std::regex_match(t.text, std::regex("[0-9]+")))
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + t.text + "'");
  return std::stoi(t.text);
}

Relation parse_relation(const Quiver& q, const std::string& expr, int line, int column) {
  // Terms split on '+' and on binary '-'; spaces are insignificant.
  std::vector<std::pair<std::string, int>> terms;
  std::string cur;
  int cur_col = column;
  char prev = '+';
  for (std::size_t i = 0; i < expr.size(); ++i) {
    const char c = expr[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const bool split = c == '+' || (c == '-' && prev != '+' && prev != '*' && !cur.empty());
    if (split) {
      if (cur.empty() && c == '+' && !terms.empty()) throw ParseError(line, column + static_cast<int>(i), "empty term");
      if (!cur.empty()) terms.push_back({cur, cur_col});
      cur.clear();
      cur_col = column + static_cast<int>(i) + 1;
      if (c == '-') cur = "-";
    } else {
      if (cur.empty()) cur_col = column + static_cast<int>(i);
      cur += c;
    }
    prev = c;
  }
  if (!cur.empty()) terms.push_back({cur, cur_col});
  if (terms.empty()) throw ParseError(line, column, "relation has no terms");

  Relation r;
  for (auto& [text, col] : terms) {
    RelationTerm term{Rational(1), {}};
    std::string body = text;
    if (body[0] == '-') {
      term.coeff = -1;
      body.erase(0, 1);
    }
    std::vector<std::string> factors;
    std::stringstream ss(body);
    std::string f;
    while (std::getline(ss, f, '*')) factors.push_back(f);
    std::size_t k = 0;
    if (!factors.empty() && looks_rational(factors[0]) && !q.find_arrow(factors[0])) {
      term.coeff *= parse_rational({factors[0], col}, line);
      k = 1;
    }
    for (; k < factors.size(); ++k) {
      if (factors[k].empty()) throw ParseError(line, col, "empty factor in term '" + text + "'");
      const auto a = q.find_arrow(factors[k]);
      if (!a) throw ParseError(line, col, "unknown arrow '" + factors[k] + "' in term '" + text + "'");
      term.arrows.push_back(*a);
    }
    if (term.arrows.empty()) throw ParseError(line, col, "term '" + text + "' has no path");
    r.terms.push_back(std::move(term));
  }
  return r;
}

std::string coeff_prefix(const Rational& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return c.get_str() + "*";
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& msg)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

AlgebraPtr parse_algebra(const std::string& text, std::optional<int> max_path_len) {
  std::string name = "algebra";
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::pair<std::string, std::pair<int, int>>> rel_text;
  int maxlen = kDefaultMaxPathLen;
  bool have_vertices = false;

  auto vertex_index = [&](const Token& t, int line) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == t.text) return static_cast<int>(i);
    throw ParseError(line, t.column, "undeclared vertex '" + t.text + "'");
  };

  for (const auto& l : split_lines(text)) {
    const auto& kw = l.tokens[0];
    const auto& tk = l.tokens;
    if (kw.text == "name") {
      if (tk.size() != 2) throw ParseError(l.number, kw.column, "expected 'name <label>'");
      name = tk[1].text;
    } else if (kw.text == "vertices") {
      if (have_vertices) throw ParseError(l.number, kw.column, "vertices declared twice");
      if (tk.size() < 2) throw ParseError(l.number, kw.column, "expected at least one vertex");
      for (std::size_t i = 1; i < tk.size(); ++i) {
        for (const auto& v : vertices)
          if (v == tk[i].text) throw ParseError(l.number, tk[i].column, "duplicate vertex '" + v + "'");
        vertices.push_back(tk[i].text);
      }
      have_vertices = true;
    } else if (kw.text == "arrow") {
      if (tk.size() != 6 || tk[2].text != ":" || tk[4].text != "->")
        throw ParseError(l.number, kw.column, "expected 'arrow <label> : <source> -> <target>'");
      for (const auto& a : arrows)
        if (a.label == tk[1].text) throw ParseError(l.number, tk[1].column, "duplicate arrow '" + a.label + "'");
      if (tk[1].text.find_first_of("*+-/") != std::string::npos)
        throw ParseError(l.number, tk[1].column, "arrow labels may not contain '*', '+', '-' or '/'");
      arrows.push_back({tk[1].text, vertex_index(tk[3], l.number), vertex_index(tk[5], l.number)});
    } else if (kw.text == "rel") {
      if (tk.size() < 2) throw ParseError(l.number, kw.column, "empty relation");
      rel_text.push_back({l.rest_after_first, {l.number, l.rest_column}});
    } else if (kw.text == "maxlen") {
      if (tk.size() != 2) throw ParseError(l.number, kw.column, "expected 'maxlen <n>'");
      maxlen = parse_int(tk[1], l.number);
    } else {
      throw ParseError(l.number, kw.column, "unknown directive '" + kw.text + "'");
    }
  }
  if (!have_vertices) throw ParseError(1, 1, "missing 'vertices' line");
  Quiver q(vertices, arrows);
  std::vector<Relation> rels;
  for (const auto& [expr, pos] : rel_text) {
    Relation r = parse_relation(q, expr, pos.first, pos.second);
    check_relation(q, r, "line " + std::to_string(pos.first));
    rels.push_back(std::move(r));
  }
  return BoundQuiverAlgebra::build(name, q, rels, max_path_len.value_or(maxlen));
}

Representation parse_module(const std::string& text, const AlgebraPtr& alg) {
  const Quiver& q = alg->quiver();
  std::optional<std::vector<int>> dims;
  std::vector<std::optional<MatrixQ>> maps(static_cast<std::size_t>(q.num_arrows()));
  std::vector<int> map_line(static_cast<std::size_t>(q.num_arrows()), 0);
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size()) {
    const auto& l = lines[i];
    const auto& kw = l.tokens[0];
    if (kw.text == "algebra") {
      if (l.tokens.size() != 2) throw ParseError(l.number, kw.column, "expected 'algebra <name>'");
      if (l.tokens[1].text != alg->name())
        throw ParseError(l.number, l.tokens[1].column,
                         "module is over '" + l.tokens[1].text + "', not '" + alg->name() + "'");
      ++i;
    } else if (kw.text == "dims") {
      if (static_cast<int>(l.tokens.size()) != q.num_vertices() + 1)
        throw ParseError(l.number, kw.column,
                         "expected " + std::to_string(q.num_vertices()) + " vertex dimensions");
      dims.emplace();
      for (std::size_t k = 1; k < l.tokens.size(); ++k) dims->push_back(parse_int(l.tokens[k], l.number));
      ++i;
    } else if (kw.text == "arrow") {
      if (!dims) throw ParseError(l.number, kw.column, "'dims' must precede the arrow matrices");
      if (l.tokens.size() != 2) throw ParseError(l.number, kw.column, "expected 'arrow <label>'");
      const auto a = q.find_arrow(l.tokens[1].text);
      if (!a) throw ParseError(l.number, l.tokens[1].column, "unknown arrow '" + l.tokens[1].text + "'");
      if (maps[static_cast<std::size_t>(*a)])
        throw ParseError(l.number, l.tokens[1].column, "arrow '" + l.tokens[1].text + "' given twice");
      const int rows = (*dims)[static_cast<std::size_t>(q.arrow(*a).target)];
      const int cols = (*dims)[static_cast<std::size_t>(q.arrow(*a).source)];
      const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
      MatrixQ m(rows, cols);
      ++i;
      int r = 0;
      while (i < lines.size() && looks_rational(lines[i].tokens[0].text)) {
        const auto& row = lines[i];
        if (r >= rows)
          throw ParseError(row.number, 1, "arrow '" + q.arrow(*a).label + "' expects a " + shape +
                                              " matrix but has more than " + std::to_string(rows) + " rows");
        if (static_cast<int>(row.tokens.size()) != cols)
          throw ParseError(row.number, 1, "arrow '" + q.arrow(*a).label + "' expects a " + shape +
                                              " matrix; row has " + std::to_string(row.tokens.size()) +
                                              " entries");
        for (int c = 0; c < cols; ++c) m(r, c) = parse_rational(row.tokens[static_cast<std::size_t>(c)], row.number);
        ++r;
        ++i;
      }
      if (r != rows)
        throw ParseError(l.number, kw.column, "arrow '" + q.arrow(*a).label + "' expects a " + shape +
                                                  " matrix, got " + std::to_string(r) + " rows");
      maps[static_cast<std::size_t>(*a)] = std::move(m);
      map_line[static_cast<std::size_t>(*a)] = l.number;
    } else {
      throw ParseError(l.number, kw.column, "unknown directive '" + kw.text + "'");
    }
  }
  if (!dims) throw ParseError(1, 1, "missing 'dims' line");
  std::vector<MatrixQ> out;
  for (int a = 0; a < q.num_arrows(); ++a) {
    auto& m = maps[static_cast<std::size_t>(a)];
    out.push_back(m ? *m
                    : MatrixQ::Zero((*dims)[static_cast<std::size_t>(q.arrow(a).target)],
                                    (*dims)[static_cast<std::size_t>(q.arrow(a).source)]));
  }
  return Representation(alg, *dims, std::move(out));
}

std::string serialize_algebra(const BoundQuiverAlgebra& alg) {
  const Quiver& q = alg.quiver();
  std::ostringstream out;
  out << "name " << alg.name() << "\n";
  out << "vertices";
  for (const auto& v : q.vertex_labels()) out << ' ' << v;
  out << "\n";
  for (const auto& a : q.arrows())
    out << "arrow " << a.label << " : " << q.vertex_label(a.source) << " -> " << q.vertex_label(a.target) << "\n";
  for (const auto& r : alg.relations()) {
    out << "rel ";
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      if (i) out << " + ";
      out << coeff_prefix(r.terms[i].coeff);
      for (std::size_t k = 0; k < r.terms[i].arrows.size(); ++k) {
        if (k) out << '*';
        out << q.arrow(r.terms[i].arrows[k]).label;
      }
    }
    out << "\n";
  }
  if (alg.max_path_len() != kDefaultMaxPathLen) out << "maxlen " << alg.max_path_len() << "\n";
  return out.str();
}

std::string serialize_module(const Representation& x) {
  const Quiver& q = x.algebra().quiver();
  std::ostringstream out;
  out << "algebra " << x.algebra().name() << "\n";
  out << "dims";
  for (int d : x.dims()) out << ' ' << d;
  out << "\n";
  for (int a = 0; a < q.num_arrows(); ++a) {
    const MatrixQ& m = x.map(a);
    if (is_zero_matrix(m)) continue;
    out << "arrow " << q.arrow(a).label << "\n";
    for (Index r = 0; r < m.rows(); ++r) {
      for (Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).get_str();
      out << "\n";
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

Representation resolve_module(const std::string& spec, const AlgebraPtr& alg) {
  if (spec == "regular") return regular_module(alg);
  if (spec == "dual") return dual_regular_module(alg);
  if (spec == "regular+dual") {
    const Representation parts[] = {regular_module(alg), dual_regular_module(alg)};
    return block_sum(alg, parts);
  }
  return parse_module(read_file(spec), alg);
}

}  // namespace gforge::cli
