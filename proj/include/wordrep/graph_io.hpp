#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"

namespace wordrep {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::size_t parse_count(const Token& t, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  return value;
}

/// Non-comment, non-blank lines with their 1-based line numbers.
struct Line {
  std::size_t number;
  std::string text;
};

inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    out.push_back({number, text});
  }
  return out;
}

struct OwnedToken {
  std::string text;
  std::size_t column;
};

/// Header "n m" followed by m lines whose first two tokens are 1-based
/// endpoints. `extra` receives any trailing tokens per edge line.
struct EdgeListText {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<OwnedToken>> extra;
  std::vector<std::size_t> line_numbers;
};

inline EdgeListText read_edge_list_text(std::istream& in, std::size_t max_extra) {
  EdgeListText out;
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, 1, "missing 'n m' header");
  auto header = split_tokens(lines[0].text);
  if (header.size() != 2) throw ParseError(lines[0].number, 1, "header must be 'n m'");
  out.n = parse_count(header[0], lines[0].number);
  std::size_t m = parse_count(header[1], lines[0].number);
  if (out.n < 1) throw ParseError(lines[0].number, header[0].column, "vertex count must be at least 1");
  if (out.n > kMaxVertices)
    throw ParseError(lines[0].number, header[0].column,
                     "vertex count exceeds " + std::to_string(kMaxVertices));
  if (lines.size() - 1 != m)
    throw ParseError(lines.back().number, 1,
                     "header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));

  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_tokens(lines[i].text);
    auto ln = lines[i].number;
    if (toks.size() < 2 || toks.size() > 2 + max_extra)
      throw ParseError(ln, 1, "malformed edge line");
    auto u = parse_count(toks[0], ln);
    auto v = parse_count(toks[1], ln);
    if (u < 1 || u > out.n) throw ParseError(ln, toks[0].column, "endpoint out of range");
    if (v < 1 || v > out.n) throw ParseError(ln, toks[1].column, "endpoint out of range");
    if (u == v) throw ParseError(ln, toks[0].column, "self-loop");
    out.pairs.emplace_back(u, v);
    auto& extra = out.extra.emplace_back();
    for (std::size_t t = 2; t < toks.size(); ++t)
      extra.push_back({std::string(toks[t].text), toks[t].column});
    out.line_numbers.push_back(ln);
  }
  return out;
}

}  // namespace detail

/// Reads the edge-list format: first content line "n m", then m lines
/// "u v" (1-based). Lines starting with '#' are comments.
inline Graph read_edge_list(std::istream& in) {
  auto text = detail::read_edge_list_text(in, 0);
  return graph_from_edge_list(text.n, text.pairs);
}

inline Graph parse_edge_list(std::string_view s) {
  std::istringstream in{std::string(s)};
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace wordrep
