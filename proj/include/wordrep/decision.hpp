#pragma once

#include <chrono>
#include <optional>
#include <string_view>

#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/naive.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/search.hpp"

namespace wordrep {

inline constexpr std::size_t kMaxVerifyEdges = 14;

enum class Verdict { Representable, NonRepresentable };

inline std::string_view to_string(Verdict v) {
  return v == Verdict::Representable ? "Representable" : "NonRepresentable";
}

/// Outcome of decide(): a semi-transitive witness, or the statistics of a
/// search that covered the whole (symmetry-reduced) orientation space.
struct Decision {
  Verdict verdict = Verdict::NonRepresentable;
  std::optional<Orientation> witness;
  SearchStats stats;
  bool complete_graph_shortcut = false;
  double wall_ms = 0.0;
};

/// Word-representable iff the graph has a semi-transitive orientation.
/// Complete graphs are answered directly with the increasing tournament.
inline Decision decide(const Graph& g, const SearchOptions& opts = {}) {
  auto start = std::chrono::steady_clock::now();
  Decision d;
  if (g.is_complete()) {
    d.verdict = Verdict::Representable;
    d.witness = Orientation::increasing(g);
    d.complete_graph_shortcut = true;
  } else {
    auto r = find_semi_transitive(g, opts);
    d.stats = r.stats;
    d.witness = std::move(r.orientation);
    d.verdict = d.witness ? Verdict::Representable : Verdict::NonRepresentable;
  }
  d.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return d;
}

/// Re-checks a decision independently of the search that produced it.
/// Witnesses go through the shortcut check; refutations are redone by
/// enumerating all 2^m orientations with the literal definition.
inline bool verify_certificate(const Graph& g, const Decision& d) {
  if (d.verdict == Verdict::Representable) {
    if (!d.witness || !(d.witness->base() == g) || !d.witness->is_total()) return false;
    return is_semi_transitive(*d.witness) && naive::is_semi_transitive(*d.witness);
  }
  if (g.size() > kMaxVerifyEdges)
    throw Error(ErrorKind::TooLargeToVerify,
                "refutations are re-checked only up to " + std::to_string(kMaxVerifyEdges) + " edges");
  return naive::count_semi_transitive(g) == 0;
}

}  // namespace wordrep
