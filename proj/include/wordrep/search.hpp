#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/parallel.hpp"

namespace wordrep {

inline constexpr std::size_t kMaxCountEdges = 24;

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t propagations = 0;     // Lemma-1 forcings
  std::uint64_t lemma1_conflicts = 0;
  std::uint64_t cycle_conflicts = 0;  // incremental acyclicity rejections
  std::uint64_t shortcut_checks = 0;  // leaves reaching the shortcut test
  std::uint64_t leaf_shortcut_rejections = 0;
  bool used_propagation = false;
  bool used_symmetry = false;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    propagations += o.propagations;
    lemma1_conflicts += o.lemma1_conflicts;
    cycle_conflicts += o.cycle_conflicts;
    shortcut_checks += o.shortcut_checks;
    leaf_shortcut_rejections += o.leaf_shortcut_rejections;
    used_propagation = used_propagation || o.used_propagation;
    used_symmetry = used_symmetry || o.used_symmetry;
    return *this;
  }
};

struct SearchOptions {
  /// Lemma-1 forcing. Only takes effect on K4-free graphs.
  bool propagate = true;
  /// Fix the first branched edge Forward when looking for a witness.
  /// Never applied when counting.
  bool use_symmetry = true;
  std::size_t workers = 1;
};

namespace detail {

/// Backtracking over edge directions in sorted edge order, Forward first.
/// Keeps out-masks of the assigned edges to reject directed cycles as soon
/// as they close, and optionally applies the 4-cycle rule after every
/// decision. Total assignments are checked for shortcuts.
class OrientationSearch {
 public:
  using Decision = std::pair<std::size_t, Direction>;

  OrientationSearch(const Graph& g, bool propagate)
      : g_(g),
        dir_(g.size(), Direction::Unassigned),
        out_(g.order(), 0) {
    if (propagate && is_k4_free(g)) {
      rule_.emplace(g);
      stats_.used_propagation = true;
    }
  }

  const SearchStats& stats() const { return stats_; }
  SearchStats& stats() { return stats_; }
  const std::vector<Direction>& directions() const { return dir_; }

  /// Applies a decision and its consequences. Returns false on conflict;
  /// the caller undoes to its own mark either way.
  bool apply(std::size_t e, Direction d) {
    pending_.clear();
    if (assign(e, d)) return false;
    if (rule_) {
      auto bad = rule_->propagate(
          dir_, pending_,
          [this](std::size_t edge, Direction dd) { return assign(edge, dd); },
          stats_.propagations);
      if (bad) {
        if (bad->kind == ConflictKind::Lemma1Cycle) ++stats_.lemma1_conflicts;
        return false;
      }
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t to) {
    while (trail_.size() > to) {
      auto e = trail_.back();
      trail_.pop_back();
      auto t = tail_of(e);
      auto h = head_of(e);
      out_[t] &= ~bit(h);
      dir_[e] = Direction::Unassigned;
    }
  }

  /// Depth-first enumeration of the completions of the current state.
  /// `on_solution` returns true to stop. `first_edge_fixed` restricts the
  /// first branched edge to Forward.
  template <class OnSolution>
  bool search(OnSolution&& on_solution, bool first_edge_fixed) {
    return node(0, on_solution, first_edge_fixed);
  }

  /// Decision prefixes of the branch tree down to `depth` branchings, in
  /// depth-first order. Dead prefixes are dropped.
  std::vector<std::vector<Decision>> split(std::size_t depth, bool first_edge_fixed) {
    std::vector<std::vector<Decision>> out;
    std::vector<Decision> prefix;
    collect(0, depth, first_edge_fixed, prefix, out);
    return out;
  }

 private:
  template <class OnSolution>
  bool node(std::size_t from, OnSolution& on_solution, bool first_edge_fixed) {
    ++stats_.nodes;
    std::size_t e = from;
    while (e < dir_.size() && dir_[e] != Direction::Unassigned) ++e;
    if (e == dir_.size()) return leaf(on_solution);
    for (auto d : {Direction::Forward, Direction::Backward}) {
      if (d == Direction::Backward && first_edge_fixed) break;
      auto m = mark();
      if (apply(e, d) && node(e + 1, on_solution, false)) {
        undo(m);
        return true;
      }
      undo(m);
    }
    return false;
  }

  template <class OnSolution>
  bool leaf(OnSolution& on_solution) {
    ++stats_.shortcut_checks;
    auto topo = topological_order(out_);
    if (!topo) {
      ++stats_.cycle_conflicts;  // unreachable: cycles are caught on assignment
      return false;
    }
    if (shortcut_in(g_, out_, *topo)) {
      ++stats_.leaf_shortcut_rejections;
      return false;
    }
    return on_solution(dir_);
  }

  void collect(std::size_t from, std::size_t depth, bool first_edge_fixed, std::vector<Decision>& prefix,
               std::vector<std::vector<Decision>>& out) {
    std::size_t e = from;
    while (e < dir_.size() && dir_[e] != Direction::Unassigned) ++e;
    if (depth == 0 || e == dir_.size()) {
      out.push_back(prefix);
      return;
    }
    ++stats_.nodes;
    for (auto d : {Direction::Forward, Direction::Backward}) {
      if (d == Direction::Backward && first_edge_fixed) break;
      auto m = mark();
      if (apply(e, d)) {
        prefix.emplace_back(e, d);
        collect(e + 1, depth - 1, false, prefix, out);
        prefix.pop_back();
      }
      undo(m);
    }
  }

  Vertex tail_of(std::size_t e) const {
    auto ed = g_.edges()[e];
    return dir_[e] == Direction::Backward ? ed.v : ed.u;
  }
  Vertex head_of(std::size_t e) const {
    auto ed = g_.edges()[e];
    return dir_[e] == Direction::Backward ? ed.u : ed.v;
  }

  // Records e with direction d unless that closes a directed cycle.
  std::optional<Conflict> assign(std::size_t e, Direction d) {
    auto ed = g_.edges()[e];
    Vertex t = d == Direction::Backward ? ed.v : ed.u;
    Vertex h = d == Direction::Backward ? ed.u : ed.v;
    if (reaches(h, t)) {
      ++stats_.cycle_conflicts;
      return Conflict{ConflictKind::DirectedCycle, {h, t}};
    }
    dir_[e] = d;
    out_[t] |= bit(h);
    trail_.push_back(e);
    pending_.push_back(e);
    return std::nullopt;
  }

  bool reaches(Vertex from, Vertex to) const {
    VertexSet seen = bit(from);
    VertexSet frontier = bit(from);
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= out_[std::countr_zero(f)];
      if (next & bit(to)) return true;
      frontier = next & ~seen;
      seen |= next;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Direction> dir_;
  std::vector<VertexSet> out_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> pending_;
  std::optional<FourCycleRule> rule_;
  SearchStats stats_;
};

inline std::size_t split_depth(std::size_t workers, std::size_t edges) {
  std::size_t depth = 3;
  while ((std::size_t{1} << (depth - 3)) < workers) ++depth;
  return std::min(depth, edges);
}

}  // namespace detail

struct OrientationSearchResult {
  std::optional<Orientation> orientation;
  SearchStats stats;
};

/// Semi-transitive orientation of g, or none. The witness is the
/// lexicographically first solution in edge order with Forward < Backward,
/// independent of the worker count.
inline OrientationSearchResult find_semi_transitive(const Graph& g, const SearchOptions& opts = {}) {
  OrientationSearchResult result;
  const bool fixed = opts.use_symmetry && g.size() > 0;
  detail::OrientationSearch root(g, opts.propagate);
  root.stats().used_symmetry = fixed;

  if (opts.workers <= 1 || g.size() < 4) {
    root.search(
        [&](const std::vector<Direction>& dir) {
          result.orientation = Orientation(g, dir);
          return true;
        },
        fixed);
    result.stats = root.stats();
    return result;
  }

  auto tasks = root.split(detail::split_depth(opts.workers, g.size()), fixed);
  result.stats = root.stats();
  std::vector<std::optional<std::vector<Direction>>> found(tasks.size());
  std::vector<SearchStats> stats(tasks.size());
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  detail::run_pool(tasks.size(), opts.workers, [&](std::size_t i) {
    if (i > best.load()) return;
    detail::OrientationSearch s(g, opts.propagate);
    for (auto [e, d] : tasks[i]) s.apply(e, d);
    s.stats() = {};
    s.search(
        [&](const std::vector<Direction>& dir) {
          found[i] = dir;
          return true;
        },
        false);
    stats[i] = s.stats();
    if (found[i]) {
      auto cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  });
  for (auto& s : stats) result.stats += s;
  for (auto& f : found)
    if (f) {
      result.orientation = Orientation(g, *f);
      break;
    }
  return result;
}

struct CountResult {
  std::uint64_t count = 0;
  SearchStats stats;
};

/// Exact number of semi-transitive orientations (no symmetry reduction).
inline CountResult count_semi_transitive_with_stats(const Graph& g, const SearchOptions& opts = {}) {
  if (g.size() > kMaxCountEdges)
    throw Error(ErrorKind::TooManyEdges, "counting supports at most " + std::to_string(kMaxCountEdges) + " edges");
  CountResult result;
  detail::OrientationSearch root(g, opts.propagate);
  if (opts.workers <= 1 || g.size() < 4) {
    root.search(
        [&](const std::vector<Direction>&) {
          ++result.count;
          return false;
        },
        false);
    result.stats = root.stats();
    return result;
  }
  auto tasks = root.split(detail::split_depth(opts.workers, g.size()), false);
  result.stats = root.stats();
  std::vector<std::uint64_t> counts(tasks.size(), 0);
  std::vector<SearchStats> stats(tasks.size());
  detail::run_pool(tasks.size(), opts.workers, [&](std::size_t i) {
    detail::OrientationSearch s(g, opts.propagate);
    for (auto [e, d] : tasks[i]) s.apply(e, d);
    s.stats() = {};
    s.search(
        [&](const std::vector<Direction>&) {
          ++counts[i];
          return false;
        },
        false);
    stats[i] = s.stats();
  });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    result.count += counts[i];
    result.stats += stats[i];
  }
  return result;
}

inline std::uint64_t count_semi_transitive(const Graph& g, const SearchOptions& opts = {}) {
  return count_semi_transitive_with_stats(g, opts).count;
}

}  // namespace wordrep
