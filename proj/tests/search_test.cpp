#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wordrep/wordrep.hpp"

using namespace wordrep;

namespace {

// Lexicographically first semi-transitive orientation with Forward before
// Backward, scanning all 2^m assignments. Edge 0 is the most significant
// position, so counting the mask upwards with bit (m-1-i) for edge i gives
// that order.
std::optional<Orientation> first_by_exhaustion(const Graph& g, bool first_forward) {
  const auto m = g.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Direction> dir(m);
    for (std::size_t i = 0; i < m; ++i) dir[i] = (mask >> (m - 1 - i)) & 1 ? Direction::Backward : Direction::Forward;
    if (first_forward && m && dir[0] == Direction::Backward) continue;
    Orientation o(g, dir);
    if (naive::is_semi_transitive(o)) return o;
  }
  return std::nullopt;
}

}  // namespace

TEST(FindSemiTransitive, Examples) {
  EXPECT_FALSE(find_semi_transitive(catalog::graph_a()).orientation);
  auto k4 = find_semi_transitive(catalog::k4());
  ASSERT_TRUE(k4.orientation);
  EXPECT_EQ(*k4.orientation, Orientation::increasing(catalog::k4()));
  auto c5 = find_semi_transitive(catalog::c5());
  ASSERT_TRUE(c5.orientation);
  EXPECT_TRUE(naive::is_semi_transitive(*c5.orientation));
}

TEST(FindSemiTransitive, WitnessIsLexicographicallyFirst) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& c : enumerate_graphs(n)) {
      for (bool sym : {true, false}) {
        SearchOptions o;
        o.use_symmetry = sym;
        auto r = find_semi_transitive(c.graph, o);
        auto want = first_by_exhaustion(c.graph, sym);
        ASSERT_EQ(r.orientation.has_value(), want.has_value()) << c.form.to_string();
        if (want) ASSERT_EQ(*r.orientation, *want) << c.form.to_string();
      }
    }
}

TEST(FindSemiTransitive, PropagationDoesNotChangeWitness) {
  for (std::size_t n = 4; n <= 6; ++n)
    for (auto& c : enumerate_graphs(n)) {
      SearchOptions off;
      off.propagate = false;
      auto a = find_semi_transitive(c.graph);
      auto b = find_semi_transitive(c.graph, off);
      ASSERT_EQ(a.orientation, b.orientation) << c.form.to_string();
      EXPECT_LE(a.stats.nodes, b.stats.nodes);
    }
}

TEST(FindSemiTransitive, GraphAStatsAreStable) {
  auto r = find_semi_transitive(catalog::graph_a());
  EXPECT_TRUE(r.stats.used_propagation);
  EXPECT_TRUE(r.stats.used_symmetry);
  EXPECT_EQ(r.stats.nodes, 17u);
  EXPECT_EQ(r.stats.propagations, 68u);
  EXPECT_EQ(r.stats.lemma1_conflicts, 17u);
  EXPECT_EQ(r.stats.shortcut_checks, 0u);
}

TEST(CountSemiTransitive, Examples) {
  EXPECT_EQ(count_semi_transitive(catalog::graph_a()), 0u);
  EXPECT_EQ(count_semi_transitive(catalog::k4()), 24u);
  EXPECT_EQ(count_semi_transitive(catalog::c4()), 6u);
  EXPECT_EQ(naive::count_semi_transitive(catalog::graph_a()), 0u);
  EXPECT_EQ(naive::count_semi_transitive(catalog::k4()), 24u);
  EXPECT_EQ(naive::count_semi_transitive(catalog::c4()), 6u);
  try {
    count_semi_transitive(complete_graph(8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooManyEdges);
  }
}

TEST(CountSemiTransitive, CompleteGraphsCountLinearOrders) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(count_semi_transitive(complete_graph(n)), factorial(n));
}

TEST(CountSemiTransitive, MatchesNaiveWithAndWithoutPropagation) {
  SearchOptions off;
  off.propagate = false;
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& c : enumerate_graphs(n)) {
      auto naive_count = naive::count_semi_transitive(c.graph);
      ASSERT_EQ(count_semi_transitive(c.graph), naive_count) << c.form.to_string();
      ASSERT_EQ(count_semi_transitive(c.graph, off), naive_count) << c.form.to_string();
    }
}

TEST(CountSemiTransitive, ConsistentWithFind) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto& c : enumerate_graphs(n))
      ASSERT_EQ(count_semi_transitive(c.graph) > 0, find_semi_transitive(c.graph).orientation.has_value());
}

TEST(Parallel, SameWitnessCountAndStats) {
  for (std::size_t n = 4; n <= 6; ++n)
    for (auto& c : enumerate_graphs(n)) {
      SearchOptions par;
      par.workers = 4;
      auto a = find_semi_transitive(c.graph);
      auto b = find_semi_transitive(c.graph, par);
      ASSERT_EQ(a.orientation, b.orientation) << c.form.to_string();
      if (!a.orientation) EXPECT_EQ(a.stats.nodes, b.stats.nodes) << c.form.to_string();
      auto ca = count_semi_transitive_with_stats(c.graph);
      auto cb = count_semi_transitive_with_stats(c.graph, par);
      ASSERT_EQ(ca.count, cb.count);
      EXPECT_EQ(ca.stats.nodes, cb.stats.nodes);
      EXPECT_EQ(ca.stats.propagations, cb.stats.propagations);
    }
  SearchOptions par;
  par.workers = 3;
  auto a = find_semi_transitive(catalog::graph_a(), par);
  EXPECT_FALSE(a.orientation);
  EXPECT_EQ(a.stats.nodes, 17u);
}
