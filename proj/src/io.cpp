#include "slat/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace slat {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

// comment-stripped tokens grouped by physical line
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> current;
  int line = 1, col = 1;
  size_t i = 0;
  auto flush = [&]() {
    if (!current.empty()) lines.push_back(std::move(current));
    current.clear();
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      flush();
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i, ++col;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i, ++col;
      continue;
    }
    Token t{"", line, col};
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      t.text.push_back(text[i]);
      ++i, ++col;
    }
    current.push_back(std::move(t));
  }
  flush();
  return lines;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  size_t start = s[0] == '-' ? 1 : 0;
  if (start == s.size()) return false;
  for (size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

int parse_int(const Token& t, const std::string& what) {
  if (!all_digits(t.text))
    throw SyntaxError(t.line, t.col, "expected " + what + ", got '" + t.text + "'");
  try {
    return std::stoi(t.text);
  } catch (const std::exception&) {
    throw SyntaxError(t.line, t.col, what + " '" + t.text + "' does not fit an int");
  }
}

Semilattice from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                        std::vector<std::string> names) {
  // up[x] = closure of the cover relation above x, including x
  std::vector<std::vector<char>> up(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x) up[x][x] = 1;
  std::vector<std::vector<int>> above(n);
  for (auto& [lo, hi] : covers) above[lo].push_back(hi);
  for (int x = 0; x < n; ++x) {
    std::vector<int> stack = {x};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : above[u])
        if (!up[x][v]) {
          up[x][v] = 1;
          stack.push_back(v);
        }
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (up[x][y] && up[y][x])
        throw ValidationError("cover relation contains a cycle through " +
                                  std::to_string(x) + " and " + std::to_string(y),
                              {x, y});
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      std::vector<int> ubs;
      for (int u = 0; u < n; ++u)
        if (up[x][u] && up[y][u]) ubs.push_back(u);
      int least = -1;
      for (int u : ubs) {
        bool minimal = true;
        for (int v : ubs)
          if (v != u && up[v][u]) {
            minimal = false;
            break;
          }
        if (minimal) {
          if (least >= 0) {
            least = -1;  // two minimal upper bounds: no least one
            break;
          }
          least = u;
        }
      }
      if (least < 0) throw NoJoinExists(x, y);
      table[x * n + y] = least;
      table[y * n + x] = least;
    }
  return Semilattice::from_flat_table(n, std::move(table), std::move(names));
}

}  // namespace

Semilattice parse_slat(const std::string& text) {
  std::vector<std::vector<Token>> lines = tokenize(text);
  if (lines.empty()) throw SyntaxError(1, 1, "empty input, expected 'n <count>'");
  size_t li = 0;

  const std::vector<Token>& header = lines[li];
  if (header[0].text != "n")
    throw SyntaxError(header[0].line, header[0].col,
                      "expected 'n', got '" + header[0].text + "'");
  if (header.size() != 2)
    throw SyntaxError(header[0].line, header[0].col,
                      "expected 'n <count>' and nothing else on the line");
  int n = parse_int(header[1], "element count");
  if (n <= 0)
    throw SyntaxError(header[1].line, header[1].col,
                      "element count must be positive");
  ++li;

  std::vector<std::string> names;
  if (li < lines.size() && lines[li][0].text == "elements") {
    const std::vector<Token>& el = lines[li];
    if (static_cast<int>(el.size()) != n + 1)
      throw SyntaxError(el[0].line, el[0].col,
                        "expected " + std::to_string(n) + " names, got " +
                            std::to_string(el.size() - 1));
    for (int i = 1; i <= n; ++i) {
      if (std::find(names.begin(), names.end(), el[i].text) != names.end())
        throw SyntaxError(el[i].line, el[i].col,
                          "name '" + el[i].text + "' appears twice");
      names.push_back(el[i].text);
    }
    ++li;
  }

  if (li < lines.size() && lines[li][0].text == "join") {
    if (lines[li].size() != 1)
      throw SyntaxError(lines[li][0].line, lines[li][0].col,
                        "expected 'join' alone on its line");
    ++li;
    std::vector<int> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int row = 0; row < n; ++row, ++li) {
      if (li >= lines.size()) {
        const Token& last = lines.back().back();
        throw SyntaxError(last.line, last.col,
                          "table ends after " + std::to_string(row) + " of " +
                              std::to_string(n) + " rows");
      }
      const std::vector<Token>& r = lines[li];
      if (static_cast<int>(r.size()) != n)
        throw SyntaxError(r[0].line, r[0].col,
                          "row " + std::to_string(row) + " has " +
                              std::to_string(r.size()) + " entries, expected " +
                              std::to_string(n));
      for (const Token& t : r) table.push_back(parse_int(t, "table entry"));
    }
    if (li != lines.size())
      throw SyntaxError(lines[li][0].line, lines[li][0].col,
                        "unexpected content after the join table");
    return Semilattice::from_flat_table(n, std::move(table), std::move(names));
  }

  std::vector<std::pair<int, int>> covers;
  for (; li < lines.size(); ++li) {
    const std::vector<Token>& r = lines[li];
    if (r[0].text != "cover")
      throw SyntaxError(r[0].line, r[0].col,
                        "expected 'join', 'cover' or end of input, got '" +
                            r[0].text + "'");
    if (r.size() != 3)
      throw SyntaxError(r[0].line, r[0].col, "expected 'cover <low> <high>'");
    int lo = parse_int(r[1], "element index");
    int hi = parse_int(r[2], "element index");
    for (int v : {lo, hi})
      if (v < 0 || v >= n)
        throw SyntaxError(r[1].line, r[1].col,
                          "element index " + std::to_string(v) +
                              " out of range 0.." + std::to_string(n - 1));
    covers.emplace_back(lo, hi);
  }
  return from_covers(n, covers, std::move(names));
}

std::string emit_slat(const Semilattice& a) {
  std::ostringstream out;
  out << "n " << a.size() << "\n";
  if (a.has_names()) {
    out << "elements";
    for (const std::string& name : a.names()) out << " " << name;
    out << "\n";
  }
  out << "join\n";
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (j > 0) out << " ";
      out << a.join(i, j);
    }
    out << "\n";
  }
  return out.str();
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string emit_dot(const Semilattice& a,
                     const std::vector<std::vector<int>>& groups) {
  std::ostringstream out;
  out << "digraph semilattice {\n";
  out << "  rankdir=BT;\n";
  for (int x = 0; x < a.size(); ++x)
    out << "  " << x << " [label=" << quote(a.element_name(x)) << "];\n";
  for (size_t g = 0; g < groups.size(); ++g) {
    std::vector<int> members = groups[g];
    std::sort(members.begin(), members.end());
    out << "  subgraph cluster_" << g << " {\n";
    for (int x : members) out << "    " << x << ";\n";
    out << "  }\n";
  }
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.covers(x, y)) out << "  " << x << " -> " << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace slat
