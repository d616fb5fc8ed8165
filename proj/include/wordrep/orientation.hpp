#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/graph_io.hpp"

namespace wordrep {

/// Direction of a stored edge {u, v} with u < v.
enum class Direction : std::int8_t {
  Backward = -1,  // v -> u
  Unassigned = 0,
  Forward = 1,  // u -> v
};

inline Direction opposite(Direction d) { return static_cast<Direction>(-static_cast<int>(d)); }

/// Total or partial assignment of directions to the edges of a graph,
/// indexed by the graph's sorted edge list.
class Orientation {
 public:
  explicit Orientation(Graph base)
      : base_(std::move(base)), dir_(base_.size(), Direction::Unassigned) {}

  Orientation(Graph base, std::vector<Direction> dir) : base_(std::move(base)), dir_(std::move(dir)) {
    if (dir_.size() != base_.size())
      throw Error(ErrorKind::OutOfRange, "direction vector does not match edge count");
  }

  /// Every edge oriented from the smaller to the larger label.
  static Orientation increasing(Graph base) {
    auto m = base.size();
    return Orientation(std::move(base), std::vector<Direction>(m, Direction::Forward));
  }

  const Graph& base() const noexcept { return base_; }
  std::span<const Direction> directions() const noexcept { return dir_; }
  Direction direction(std::size_t edge) const { return dir_[edge]; }

  void set(std::size_t edge, Direction d) { dir_[edge] = d; }

  /// Orients the edge between a and b as a -> b.
  void orient(Vertex a, Vertex b) {
    auto idx = base_.edge_index(a, b);
    if (!idx) throw Error(ErrorKind::OutOfRange, "no edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
    dir_[*idx] = a < b ? Direction::Forward : Direction::Backward;
  }

  /// Direction of a -> b: Forward if assigned that way, Backward if
  /// assigned b -> a, Unassigned otherwise.
  Direction between(Vertex a, Vertex b) const {
    auto idx = base_.edge_index(a, b);
    if (!idx) throw Error(ErrorKind::OutOfRange, "no edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
    auto d = dir_[*idx];
    return a < b ? d : opposite(d);
  }

  bool is_total() const {
    for (auto d : dir_)
      if (d == Direction::Unassigned) return false;
    return true;
  }

  Vertex tail(std::size_t edge) const {
    auto e = base_.edges()[edge];
    return dir_[edge] == Direction::Backward ? e.v : e.u;
  }
  Vertex head(std::size_t edge) const {
    auto e = base_.edges()[edge];
    return dir_[edge] == Direction::Backward ? e.u : e.v;
  }

  /// Out-neighbourhoods over assigned edges only.
  std::vector<VertexSet> successors() const {
    std::vector<VertexSet> out(base_.order(), 0);
    for (std::size_t i = 0; i < dir_.size(); ++i)
      if (dir_[i] != Direction::Unassigned) out[tail(i)] |= bit(head(i));
    return out;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  Graph base_;
  std::vector<Direction> dir_;
};

enum class ConflictKind { DirectedCycle, Shortcut, Lemma1Cycle };

inline std::string_view to_string(ConflictKind k) {
  switch (k) {
    case ConflictKind::DirectedCycle: return "DirectedCycle";
    case ConflictKind::Shortcut: return "Shortcut";
    case ConflictKind::Lemma1Cycle: return "Lemma1Cycle";
  }
  return "?";
}

/// A violation together with the vertex sequence exhibiting it (0-based).
/// Shortcut witnesses are the path v1..vk whose end points form the
/// shortcut edge v1 -> vk; Lemma1Cycle witnesses are the four vertices
/// along the three consecutively oriented edges.
struct Conflict {
  ConflictKind kind;
  std::vector<Vertex> witness;

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

namespace detail {

inline void require_total(const Orientation& o) {
  if (!o.is_total()) throw Error(ErrorKind::PartialOrientation, "orientation has unassigned edges");
}

/// Topological order of a digraph given by out-masks, or nullopt if cyclic.
inline std::optional<std::vector<Vertex>> topological_order(std::span<const VertexSet> out) {
  const auto n = out.size();
  std::vector<int> indeg(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (VertexSet s = out[v]; s; s &= s - 1) ++indeg[std::countr_zero(s)];
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexSet s = out[order[i]]; s; s &= s - 1) {
      Vertex w = std::countr_zero(s);
      if (--indeg[w] == 0) order.push_back(w);
    }
  if (order.size() != n) return std::nullopt;
  return order;
}

/// Vertices reachable from each vertex by a nonempty directed path, for an
/// acyclic digraph.
inline std::vector<VertexSet> reachability(std::span<const VertexSet> out,
                                           std::span<const Vertex> topo) {
  std::vector<VertexSet> reach(out.size(), 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    VertexSet r = out[*it];
    for (VertexSet s = out[*it]; s; s &= s - 1) r |= reach[std::countr_zero(s)];
    reach[*it] = r;
  }
  return reach;
}

/// Finds a shortcut in an acyclic digraph over base graph `g`.
///
/// For each edge u -> v, walks directed paths from u whose vertex sets are
/// cliques of g and that can still reach v. The first extension that
/// breaks the clique property while still reaching v proves a shortcut;
/// paths that stay cliques all the way to v are transitive and harmless.
/// This is exact: any shortcut path has a first vertex at which its
/// prefix stops being a clique.
class ShortcutFinder {
 public:
  ShortcutFinder(const Graph& g, std::span<const VertexSet> out, std::span<const VertexSet> reach)
      : g_(g), out_(out), reach_(reach) {}

  std::optional<Conflict> find() {
    for (Vertex u = 0; u < g_.order(); ++u)
      for (VertexSet s = out_[u]; s; s &= s - 1) {
        target_ = std::countr_zero(s);
        path_.assign(1, u);
        if (walk(u, g_.neighbors(u) | bit(u))) return conflict_;
      }
    return std::nullopt;
  }

 private:
  // `clique` is the set of vertices adjacent to every vertex on the path
  // (path vertices included, each being "adjacent" to itself).
  bool walk(Vertex at, VertexSet clique) {
    for (VertexSet s = out_[at]; s; s &= s - 1) {
      Vertex y = std::countr_zero(s);
      if (at == path_.front() && y == target_) continue;  // the edge itself
      bool reaches = y == target_ || (reach_[y] & bit(target_));
      if (!reaches) continue;
      if (!(clique & bit(y))) {
        conflict_ = Conflict{ConflictKind::Shortcut, path_};
        if (y == target_) {
          conflict_.witness.push_back(y);
        } else {
          auto tailpath = path_to(y, target_);
          conflict_.witness.insert(conflict_.witness.end(), tailpath.begin(), tailpath.end());
        }
        return true;
      }
      if (y == target_) continue;
      path_.push_back(y);
      if (walk(y, clique & (g_.neighbors(y) | bit(y)))) return true;
      path_.pop_back();
    }
    return false;
  }

  std::vector<Vertex> path_to(Vertex from, Vertex to) const {
    std::vector<Vertex> path{from};
    Vertex at = from;
    while (at != to) {
      for (VertexSet s = out_[at]; s; s &= s - 1) {
        Vertex w = std::countr_zero(s);
        if (w == to || (reach_[w] & bit(to))) {
          at = w;
          break;
        }
      }
      path.push_back(at);
    }
    return path;
  }

  const Graph& g_;
  std::span<const VertexSet> out_;
  std::span<const VertexSet> reach_;
  Vertex target_ = 0;
  std::vector<Vertex> path_;
  Conflict conflict_{ConflictKind::Shortcut, {}};
};

/// Shortcut check on a total acyclic orientation given by out-masks.
inline std::optional<Conflict> shortcut_in(const Graph& g, std::span<const VertexSet> out,
                                           std::span<const Vertex> topo) {
  auto reach = reachability(out, topo);
  return ShortcutFinder(g, out, reach).find();
}

}  // namespace detail

inline bool is_acyclic(const Orientation& o) {
  detail::require_total(o);
  auto out = o.successors();
  return detail::topological_order(out).has_value();
}

/// Shortcut in a total acyclic orientation, or nullopt if there is none.
inline std::optional<Conflict> find_shortcut(const Orientation& o) {
  detail::require_total(o);
  auto out = o.successors();
  auto topo = detail::topological_order(out);
  if (!topo) throw Error(ErrorKind::CyclicInput, "orientation has a directed cycle");
  return detail::shortcut_in(o.base(), out, *topo);
}

inline bool is_semi_transitive(const Orientation& o) {
  detail::require_total(o);
  auto out = o.successors();
  auto topo = detail::topological_order(out);
  if (!topo) return false;
  return !detail::shortcut_in(o.base(), out, *topo).has_value();
}

inline Orientation reverse(const Orientation& o) {
  detail::require_total(o);
  std::vector<Direction> dir(o.directions().begin(), o.directions().end());
  for (auto& d : dir) d = opposite(d);
  return Orientation(o.base(), std::move(dir));
}

/// Orients every edge from the lower colour class to the higher one.
/// With at most three classes the result is semi-transitive.
inline Orientation orient_by_coloring(const Graph& g, const VertexColoring& c) {
  if (c.color.size() != g.order())
    throw Error(ErrorKind::ImproperColoring, "colouring must cover every vertex");
  for (auto col : c.color) {
    if (col < 1) throw Error(ErrorKind::ImproperColoring, "colours are numbered from 1");
    if (col > 3) throw Error(ErrorKind::TooManyColors, "at most three colours");
  }
  if (!c.is_proper(g)) throw Error(ErrorKind::ImproperColoring, "an edge is monochromatic");
  Orientation o(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto [u, v] = g.edges()[i];
    o.set(i, c.color[u] < c.color[v] ? Direction::Forward : Direction::Backward);
  }
  return o;
}

// ---------------------------------------------------------------------------
// Lemma-1 rule: in a K4-free graph, no 4-cycle of a semi-transitive
// orientation has three consecutively oriented edges.

namespace detail {

/// 4-cycles of a K4-free graph as edge indices, with the per-edge index of
/// the cycles each edge lies on.
class FourCycleRule {
 public:
  struct Cycle {
    FourCycle vertices;
    std::array<std::size_t, 4> edge;  // edge[i] joins vertices[i] and vertices[i+1]
    std::array<int, 4> sign;          // +1 when a Forward edge[i] runs vertices[i] -> vertices[i+1]
  };

  explicit FourCycleRule(const Graph& g) : by_edge_(g.size()) {
    for (const auto& c : four_cycles(g)) {
      Cycle cyc{c, {}, {}};
      for (int i = 0; i < 4; ++i) {
        Vertex a = c[i], b = c[(i + 1) % 4];
        cyc.edge[i] = *g.edge_index(a, b);
        cyc.sign[i] = a < b ? 1 : -1;
      }
      for (int i = 0; i < 4; ++i) by_edge_[cyc.edge[i]].push_back(cycles_.size());
      cycles_.push_back(cyc);
    }
  }

  std::span<const Cycle> cycles() const { return cycles_; }

  /// Runs the rule to a fixpoint. Edges in `pending` are the freshly
  /// assigned ones whose cycles need rechecking. `assign(edge, dir)` must
  /// record a forced direction (including pushing the edge onto `pending`)
  /// and may veto it by returning a conflict.
  template <class Assign>
  std::optional<Conflict> propagate(const std::vector<Direction>& dir, std::vector<std::size_t>& pending,
                                    Assign&& assign, std::uint64_t& fired) const {
    while (!pending.empty()) {
      auto e = pending.back();
      pending.pop_back();
      for (auto ci : by_edge_[e]) {
        const auto& c = cycles_[ci];
        for (int w = 0; w < 4; ++w) {
          std::array<int, 3> pos{w, (w + 1) % 4, (w + 2) % 4};
          std::array<int, 3> sense{};
          int unassigned = -1, plus = 0, minus = 0;
          for (int k = 0; k < 3; ++k) {
            sense[k] = static_cast<int>(dir[c.edge[pos[k]]]) * c.sign[pos[k]];
            if (sense[k] == 0) unassigned = k;
            plus += sense[k] > 0;
            minus += sense[k] < 0;
          }
          if (plus == 3 || minus == 3) {
            // Walk the three edges in their common direction.
            std::vector<Vertex> witness;
            if (plus == 3) {
              for (int k = 0; k < 4; ++k) witness.push_back(c.vertices[(w + k) % 4]);
            } else {
              for (int k = 3; k >= 0; --k) witness.push_back(c.vertices[(w + k) % 4]);
            }
            return Conflict{ConflictKind::Lemma1Cycle, std::move(witness)};
          }
          if (unassigned >= 0 && (plus == 2 || minus == 2)) {
            int want = plus == 2 ? -1 : 1;
            auto edge = c.edge[pos[unassigned]];
            auto d = static_cast<Direction>(want * c.sign[pos[unassigned]]);
            ++fired;
            if (auto bad = assign(edge, d)) return bad;
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<Cycle> cycles_;
  std::vector<std::vector<std::size_t>> by_edge_;
};

}  // namespace detail

struct Lemma1Result {
  Orientation orientation;
  std::vector<std::size_t> forced;  // edge indices, in the order they were forced
  std::optional<Conflict> conflict;
};

/// Applies the Lemma-1 forcing rule to a partial orientation until nothing
/// changes. Only valid on K4-free graphs.
inline Lemma1Result lemma1_propagate(const Graph& g, const Orientation& partial) {
  if (!is_k4_free(g)) throw Error(ErrorKind::NotK4Free, "Lemma-1 forcing needs a K4-free graph");
  if (!(partial.base() == g)) throw Error(ErrorKind::OutOfRange, "orientation belongs to another graph");
  detail::FourCycleRule rule(g);
  std::vector<Direction> dir(partial.directions().begin(), partial.directions().end());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < dir.size(); ++i)
    if (dir[i] != Direction::Unassigned) pending.push_back(i);
  std::reverse(pending.begin(), pending.end());
  Lemma1Result result{partial, {}, std::nullopt};
  std::uint64_t fired = 0;
  result.conflict = rule.propagate(
      dir, pending,
      [&](std::size_t e, Direction d) -> std::optional<Conflict> {
        dir[e] = d;
        pending.push_back(e);
        result.forced.push_back(e);
        return std::nullopt;
      },
      fired);
  result.orientation = Orientation(g, std::move(dir));
  return result;
}

// ---------------------------------------------------------------------------
// Text format: the edge-list header, then one line "a b >" per edge in
// stored edge order, meaning a -> b. "a b <" (a <- b) is also accepted.

inline void write_orientation(std::ostream& out, const Orientation& o) {
  detail::require_total(o);
  out << o.base().order() << ' ' << o.base().size() << '\n';
  for (std::size_t i = 0; i < o.base().size(); ++i) out << (o.tail(i) + 1) << ' ' << (o.head(i) + 1) << " >\n";
}

inline std::string format_orientation(const Orientation& o) {
  std::ostringstream out;
  write_orientation(out, o);
  return out.str();
}

inline Orientation read_orientation(std::istream& in) {
  auto text = detail::read_edge_list_text(in, 1);
  auto g = graph_from_edge_list(text.n, text.pairs);
  if (g.size() != text.pairs.size())
    throw ParseError(text.line_numbers.empty() ? 1 : text.line_numbers.back(), 1, "duplicate edge");
  Orientation o(g);
  for (std::size_t i = 0; i < text.pairs.size(); ++i) {
    auto ln = text.line_numbers[i];
    if (text.extra[i].size() != 1 || (text.extra[i][0].text != ">" && text.extra[i][0].text != "<"))
      throw ParseError(ln, text.extra[i].empty() ? 1 : text.extra[i][0].column, "expected '>' or '<'");
    auto a = static_cast<Vertex>(text.pairs[i].first - 1);
    auto b = static_cast<Vertex>(text.pairs[i].second - 1);
    if (text.extra[i][0].text == ">")
      o.orient(a, b);
    else
      o.orient(b, a);
  }
  return o;
}

inline Orientation parse_orientation(std::string_view s) {
  std::istringstream in{std::string(s)};
  return read_orientation(in);
}

}  // namespace wordrep
