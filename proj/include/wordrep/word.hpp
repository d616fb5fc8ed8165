#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"

namespace wordrep {

using Letter = std::uint32_t;  // 1-based; letter l names vertex l-1

/// Nonempty sequence of positive letters.
class Word {
 public:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw Error(ErrorKind::OutOfRange, "empty word");
    for (auto l : letters_)
      if (l < 1) throw Error(ErrorKind::OutOfRange, "letters must be positive");
  }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::set<Letter> alphabet() const { return {letters_.begin(), letters_.end()}; }

  std::size_t occurrences(Letter x) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
  }

  bool contains(Letter x) const {
    return std::find(letters_.begin(), letters_.end(), x) != letters_.end();
  }

  /// Largest letter if the alphabet is exactly {1..max}.
  std::optional<std::size_t> contiguous_size() const {
    auto a = alphabet();
    if (*a.rbegin() != a.size()) return std::nullopt;
    return a.size();
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Accepts whitespace- or comma-separated decimal tokens ("1 3 10 2"),
/// compact digit strings ("1213423"), and compact strings with
/// parenthesised multi-digit letters ("1387296(10)749").
inline Word parse_word(std::string_view text) {
  std::vector<Letter> out;
  const bool tokenised = text.find_first_of(" \t,\n\r") != std::string_view::npos;

  auto fail = [](std::size_t i, const std::string& why) -> ParseError {
    return ParseError(1, i + 1, why);
  };
  auto read_number = [&](std::size_t& i, char close) {
    std::size_t start = i;
    std::uint64_t value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (value > 1'000'000) throw fail(start, "letter too large");
      ++i;
    }
    if (i == start) throw fail(i, "expected a digit");
    if (close) {
      if (i >= text.size() || text[i] != close) throw fail(i, "expected ')'");
      ++i;
    }
    if (value == 0) throw fail(start, "letters must be positive");
    out.push_back(static_cast<Letter>(value));
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '(') {
      ++i;
      read_number(i, ')');
    } else if (c >= '0' && c <= '9') {
      if (tokenised) {
        read_number(i, 0);
        if (i < text.size() && text.find_first_of(" \t,\n\r", i) != i)
          throw fail(i, "unexpected character '" + std::string(1, text[i]) + "'");
      } else {
        if (c == '0') throw fail(i, "letters must be positive");
        out.push_back(static_cast<Letter>(c - '0'));
        ++i;
      }
    } else {
      throw fail(i, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  if (out.empty()) throw fail(0, "empty word");
  return Word(std::move(out));
}

/// Whitespace-separated decimal letters, the only form this library emits.
inline std::string format_word(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(w[i]);
  }
  return s;
}

inline bool alternates(const Word& w, Letter x, Letter y) {
  if (x == y) throw Error(ErrorKind::SameLetter, "letter " + std::to_string(x));
  if (!w.contains(x)) throw Error(ErrorKind::NotInAlphabet, "letter " + std::to_string(x));
  if (!w.contains(y)) throw Error(ErrorKind::NotInAlphabet, "letter " + std::to_string(y));
  Letter last = 0;
  for (auto l : w.letters()) {
    if (l != x && l != y) continue;
    if (l == last) return false;
    last = l;
  }
  return true;
}

/// Graph on 1..n whose edges are the alternating pairs of w.
inline Graph graph_of_word(const Word& w) {
  auto n = w.contiguous_size();
  if (!n) throw Error(ErrorKind::NonContiguousAlphabet, "alphabet must be 1..n");
  if (*n > kMaxVertices) throw Error(ErrorKind::TooLarge, "alphabet larger than " + std::to_string(kMaxVertices));
  const auto size = *n;
  // last[a] has bit b set when, among {a, b}, a is the most recent letter.
  std::vector<VertexSet> last(size, 0);
  std::vector<VertexSet> broken(size, 0);
  for (auto l : w.letters()) {
    Vertex a = l - 1;
    broken[a] |= last[a];
    for (VertexSet s = last[a]; s; s &= s - 1) broken[std::countr_zero(s)] |= bit(a);
    for (Vertex b = 0; b < size; ++b) last[b] &= ~bit(a);
    last[a] = (size == 32 ? ~VertexSet{0} : bit(static_cast<Vertex>(size)) - 1) & ~bit(a);
  }
  std::vector<VertexSet> adj(size);
  for (Vertex a = 0; a < size; ++a)
    adj[a] = ~broken[a] & (size == 32 ? ~VertexSet{0} : bit(static_cast<Vertex>(size)) - 1) & ~bit(a);
  return Graph::from_adjacency(std::move(adj));
}

inline bool represents(const Word& w, const Graph& g) {
  auto a = w.alphabet();
  if (*a.begin() != 1 || *a.rbegin() != g.order() || a.size() != g.order())
    throw Error(ErrorKind::AlphabetMismatch,
                "word alphabet is not {1.." + std::to_string(g.order()) + "}");
  return graph_of_word(w) == g;
}

/// k when every letter occurs exactly k times.
inline std::optional<std::size_t> uniformity(const Word& w) {
  std::map<Letter, std::size_t> counts;
  for (auto l : w.letters()) ++counts[l];
  std::size_t k = counts.begin()->second;
  for (auto& [l, c] : counts)
    if (c != k) return std::nullopt;
  return k;
}

inline Word reversed(const Word& w) {
  std::vector<Letter> v(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(v));
}

/// Deletes every occurrence of x and shifts larger letters down by one, so
/// the result names the same vertices as Graph::without_vertex(x - 1).
inline Word remove_letter(const Word& w, Letter x) {
  std::vector<Letter> v;
  for (auto l : w.letters())
    if (l != x) v.push_back(l > x ? l - 1 : l);
  return Word(std::move(v));
}

}  // namespace wordrep
