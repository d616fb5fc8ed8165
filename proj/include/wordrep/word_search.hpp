#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/parallel.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

inline constexpr std::size_t kMaxWordLength = 30;

struct WordSearchResult {
  std::optional<Word> word;
  std::size_t k_tried = 0;
  std::uint64_t nodes = 0;
};

namespace detail {

// Builds k-uniform words left to right, trying letters in increasing order.
//
// recent[a] has bit b set when a occurred after the last b (or b has not
// occurred yet and a has). Appending a when recent[a] has b set puts "aa"
// into the {a,b} subsequence, which kills an edge pair and satisfies a
// non-edge pair. A non-edge pair whose subsequence is still alternating
// must keep a way to repeat a letter: with a most recent that means one
// more a, or two more b.
class UniformWordSearch {
 public:
  UniformWordSearch(const Graph& g, std::size_t k)
      : g_(g), n_(g.order()), k_(k), count_(n_, 0), recent_(n_, 0), split_(n_, 0) {
    all_ = g.all_vertices();
  }

  std::optional<Word> run() {
    word_.reserve(n_ * k_);
    if (extend()) {
      std::vector<Letter> letters;
      for (auto v : word_) letters.push_back(v + 1);
      return Word(std::move(letters));
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool extend() {
    ++nodes_;
    if (word_.size() == n_ * k_) return true;
    for (Vertex a = 0; a < n_; ++a) {
      if (count_[a] == k_) continue;
      VertexSet repeats = recent_[a];
      if (repeats & g_.neighbors(a)) continue;
      if (!non_edges_viable(a, repeats)) continue;

      auto saved_recent = recent_;
      auto saved_split = split_;
      split_[a] |= repeats;
      for (VertexSet s = repeats; s; s &= s - 1) split_[std::countr_zero(s)] |= bit(a);
      for (Vertex b = 0; b < n_; ++b) recent_[b] &= ~bit(a);
      recent_[a] = all_ & ~bit(a);
      ++count_[a];
      word_.push_back(a);

      if (extend()) return true;

      word_.pop_back();
      --count_[a];
      recent_ = std::move(saved_recent);
      split_ = std::move(saved_split);
    }
    return false;
  }

  // After appending a, every still-alternating non-edge {a, b} has a as its
  // most recent letter.
  bool non_edges_viable(Vertex a, VertexSet repeats) const {
    const std::size_t left_a = k_ - count_[a] - 1;
    if (left_a >= 1) return true;
    VertexSet open = all_ & ~g_.neighbors(a) & ~bit(a) & ~split_[a] & ~repeats;
    for (VertexSet s = open; s; s &= s - 1) {
      Vertex b = std::countr_zero(s);
      if (k_ - count_[b] < 2) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t k_;
  VertexSet all_ = 0;
  std::vector<std::size_t> count_;
  std::vector<VertexSet> recent_;
  std::vector<VertexSet> split_;  // pairs whose subsequence no longer alternates
  std::vector<Vertex> word_;
  std::uint64_t nodes_ = 0;
};

inline void check_word_search(const Graph& g, std::size_t k) {
  if (k < 1) throw Error(ErrorKind::OutOfRange, "multiplicity must be at least 1");
  if (g.order() * k > kMaxWordLength)
    throw Error(ErrorKind::TooLarge,
                "word length n*k = " + std::to_string(g.order() * k) + " exceeds " + std::to_string(kMaxWordLength));
}

}  // namespace detail

/// A word with every letter exactly k times that represents g, if any.
inline WordSearchResult find_k_uniform_word_with_stats(const Graph& g, std::size_t k) {
  detail::check_word_search(g, k);
  detail::UniformWordSearch s(g, k);
  WordSearchResult r;
  r.word = s.run();
  r.k_tried = k;
  r.nodes = s.nodes();
  return r;
}

inline std::optional<Word> find_k_uniform_word(const Graph& g, std::size_t k) {
  return find_k_uniform_word_with_stats(g, k).word;
}

/// Tries k = 1..k_max and returns the first success. With several
/// workers the multiplicities are searched concurrently; the smallest
/// successful k still wins, so the word does not depend on the worker
/// count (the node total does).
inline WordSearchResult find_word(const Graph& g, std::size_t k_max, std::size_t workers = 1) {
  if (k_max < 1) throw Error(ErrorKind::OutOfRange, "k_max must be at least 1");
  detail::check_word_search(g, k_max);
  WordSearchResult total;
  if (workers <= 1) {
    for (std::size_t k = 1; k <= k_max; ++k) {
      auto r = find_k_uniform_word_with_stats(g, k);
      total.nodes += r.nodes;
      total.k_tried = k;
      if (r.word) {
        total.word = std::move(r.word);
        return total;
      }
    }
    return total;
  }
  std::vector<WordSearchResult> per_k(k_max);
  std::atomic<std::size_t> best{k_max + 1};
  detail::run_pool(k_max, workers, [&](std::size_t i) {
    if (i + 1 > best.load()) return;
    per_k[i] = find_k_uniform_word_with_stats(g, i + 1);
    if (per_k[i].word) {
      auto cur = best.load();
      while (i + 1 < cur && !best.compare_exchange_weak(cur, i + 1)) {
      }
    }
  });
  for (std::size_t i = 0; i < k_max; ++i) {
    total.nodes += per_k[i].nodes;
    total.k_tried = i + 1;
    if (per_k[i].word) {
      total.word = std::move(per_k[i].word);
      break;
    }
  }
  return total;
}

}  // namespace wordrep
