#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"

namespace wordrep {

inline constexpr std::size_t kMaxCanonicalVertices = 10;
inline constexpr std::size_t kMaxEnumerationVertices = 7;

/// Upper-triangle adjacency bits under the lexicographically minimal
/// relabelling. Pairs are ordered column by column, (1,2), (1,3), (2,3),
/// (1,4), ... with the first pair as the most significant bit, so integer
/// order on `bits` is lexicographic order on the bit-string.
struct CanonicalForm {
  std::size_t n = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  std::size_t num_pairs() const { return n * (n - 1) / 2; }

  /// "n:bits", e.g. "4:011110". K1 is "1:".
  std::string to_string() const {
    std::string s = std::to_string(n) + ":";
    for (std::size_t i = num_pairs(); i-- > 0;) s.push_back((bits >> i) & 1 ? '1' : '0');
    return s;
  }

  static CanonicalForm from_string(std::string_view s) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos || colon == 0)
      throw Error(ErrorKind::ParseError, "canonical form '" + std::string(s) + "'");
    CanonicalForm f;
    for (char c : s.substr(0, colon)) {
      if (c < '0' || c > '9') throw Error(ErrorKind::ParseError, "canonical form '" + std::string(s) + "'");
      f.n = f.n * 10 + static_cast<std::size_t>(c - '0');
    }
    auto body = s.substr(colon + 1);
    if (f.n < 1 || f.n > kMaxCanonicalVertices || body.size() != f.num_pairs())
      throw Error(ErrorKind::ParseError, "canonical form '" + std::string(s) + "'");
    for (char c : body) {
      if (c != '0' && c != '1') throw Error(ErrorKind::ParseError, "canonical form '" + std::string(s) + "'");
      f.bits = (f.bits << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return f;
  }

  /// The graph whose identity labelling realises this code.
  Graph to_graph() const {
    std::vector<VertexSet> adj(n, 0);
    std::size_t pos = num_pairs();
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i)
        if ((bits >> --pos) & 1) {
          adj[i] |= bit(j);
          adj[j] |= bit(i);
        }
    return Graph::from_adjacency(std::move(adj));
  }
};

/// Canonical form together with the relabelling that produces it and the
/// size of the automorphism group.
struct CanonicalLabelling {
  CanonicalForm form;
  std::vector<Vertex> perm;  // position p holds original vertex perm[p]
  std::uint64_t automorphisms = 0;
};

namespace detail {

// Depth-first over all relabellings, filling position p with each unused
// vertex. Only prefixes strictly larger than the best code so far are cut;
// every minimiser is visited, so the count of minimisers is |Aut|.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), perm_(n_) {}

  CanonicalLabelling run() {
    extend(0, 0, 0);
    CanonicalLabelling out;
    out.form = {n_, best_};
    out.perm = best_perm_;
    out.automorphisms = ties_;
    return out;
  }

 private:
  void extend(std::size_t p, std::uint64_t code, VertexSet used) {
    if (p == n_) {
      if (!have_best_ || code < best_) {
        best_ = code;
        best_perm_ = perm_;
        have_best_ = true;
        ties_ = 1;
      } else if (code == best_) {
        ++ties_;
      }
      return;
    }
    const std::size_t total = n_ * (n_ - 1) / 2;
    const std::size_t after = total - (p + 1) * p / 2;  // bits still to come after this column
    for (Vertex v = 0; v < n_; ++v) {
      if (used & bit(v)) continue;
      std::uint64_t next = code;
      for (std::size_t q = 0; q < p; ++q) next = (next << 1) | (g_.adjacent(perm_[q], v) ? 1u : 0u);
      if (have_best_ && next > (best_ >> after)) continue;
      perm_[p] = v;
      extend(p + 1, next, used | bit(v));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> perm_;
  std::vector<Vertex> best_perm_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
  std::uint64_t ties_ = 0;
};

}  // namespace detail

inline CanonicalLabelling canonical_labelling(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices)
    throw Error(ErrorKind::TooLarge,
                "canonical form supports at most " + std::to_string(kMaxCanonicalVertices) + " vertices");
  return detail::CanonicalSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labelling(g).form; }

inline std::uint64_t automorphism_count(const Graph& g) { return canonical_labelling(g).automorphisms; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// One isomorphism class: its canonical representative and how many
/// labelled graphs on {1..n} belong to it (n!/|Aut|).
struct GraphClass {
  Graph graph;
  CanonicalForm form;
  std::uint64_t labelled_count = 0;
};

/// All isomorphism classes on n vertices, sorted by canonical form.
///
/// Classes on n vertices are grown from the classes on n-1 vertices by
/// adding a vertex with every possible neighbourhood, then deduplicated by
/// canonical form.
inline std::vector<GraphClass> enumerate_graphs(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "vertex count must be at least 1");
  if (n > kMaxEnumerationVertices)
    throw Error(ErrorKind::TooLarge,
                "enumeration supports at most " + std::to_string(kMaxEnumerationVertices) + " vertices");

  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<CanonicalForm, Graph> seen;
    for (const auto& base : level) {
      auto adj = std::vector<VertexSet>(base.adjacency().begin(), base.adjacency().end());
      adj.push_back(0);
      const auto newcomer = static_cast<Vertex>(k - 1);
      for (VertexSet nb = 0; nb < bit(newcomer); ++nb) {
        auto grown = adj;
        grown[newcomer] = nb;
        for (VertexSet s = nb; s; s &= s - 1) grown[std::countr_zero(s)] |= bit(newcomer);
        auto g = Graph::from_adjacency(std::move(grown));
        auto form = canonical_form(g);
        if (!seen.contains(form)) seen.emplace(form, form.to_graph());
      }
    }
    level.clear();
    for (auto& [form, g] : seen) level.push_back(g);
  }

  std::vector<GraphClass> out;
  out.reserve(level.size());
  const auto nfact = factorial(n);
  for (auto& g : level) {
    auto lab = canonical_labelling(g);
    out.push_back({g, lab.form, nfact / lab.automorphisms});
  }
  return out;
}

}  // namespace wordrep
