#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "wordrep/wordrep.hpp"

using namespace wordrep;

namespace {

// Pair mask in oracle::labelled_graph order, computed from the definition.
std::uint64_t alternation_mask(const std::vector<Letter>& w, std::size_t n) {
  std::uint64_t mask = 0;
  std::size_t pos = 0;
  for (Letter x = 1; x <= n; ++x)
    for (Letter y = x + 1; y <= n; ++y, ++pos)
      if (oracle::alternates(w, x, y)) mask |= std::uint64_t{1} << pos;
  return mask;
}

std::uint64_t labelled_mask(const Graph& g) {
  std::uint64_t mask = 0;
  std::size_t pos = 0;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y, ++pos)
      if (g.adjacent(x, y)) mask |= std::uint64_t{1} << pos;
  return mask;
}

// First k-uniform word (lexicographically) for every labelled graph that
// has one, by generating all of them.
std::map<std::uint64_t, std::vector<Letter>> first_words(std::size_t n, std::size_t k) {
  std::map<std::uint64_t, std::vector<Letter>> out;
  oracle::for_each_uniform_word(n, k, [&](const std::vector<Letter>& w) { out.try_emplace(alternation_mask(w, n), w); });
  return out;
}

}  // namespace

TEST(FindKUniformWord, Examples) {
  EXPECT_EQ(format_word(*find_k_uniform_word(catalog::k4(), 1)), "1 2 3 4");
  EXPECT_EQ(format_word(*find_k_uniform_word(catalog::k4(), 2)), "1 2 3 4 1 2 3 4");
  EXPECT_FALSE(find_k_uniform_word(catalog::graph_m(), 1));
  EXPECT_EQ(format_word(*find_k_uniform_word(Graph(1), 1)), "1");
  EXPECT_EQ(format_word(*find_k_uniform_word(Graph(1), 3)), "1 1 1");
}

TEST(FindKUniformWord, Errors) {
  auto kind_of = [](const Graph& g, std::size_t k) {
    try {
      find_k_uniform_word(g, k);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  EXPECT_EQ(kind_of(catalog::petersen(), 4), ErrorKind::TooLarge);
  EXPECT_EQ(kind_of(catalog::k4(), 0), ErrorKind::OutOfRange);
  EXPECT_THROW(find_word(catalog::graph_a(), 5), Error);
}

TEST(FindWord, Examples) {
  auto m = find_word(catalog::graph_m(), 2);
  ASSERT_TRUE(m.word);
  EXPECT_TRUE(represents(*m.word, catalog::graph_m()));
  EXPECT_EQ(uniformity(*m.word), 2u);
  EXPECT_EQ(m.k_tried, 2u);

  auto a = find_word(catalog::graph_a(), 2);
  EXPECT_FALSE(a.word);
  EXPECT_EQ(a.k_tried, 2u);

  auto k1 = find_word(Graph(1), 1);
  ASSERT_TRUE(k1.word);
  EXPECT_EQ(format_word(*k1.word), "1");
}

TEST(FindWord, SoundOnAllClassesUpTo5) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& c : enumerate_graphs(n)) {
      auto r = find_word(c.graph, std::min<std::size_t>(3, kMaxWordLength / n));
      if (!r.word) continue;
      ASSERT_TRUE(represents(*r.word, c.graph)) << c.form.to_string();
      auto k = uniformity(*r.word);
      ASSERT_TRUE(k);
      ASSERT_LE(*k, r.k_tried);
    }
}

TEST(FindWord, MatchesExhaustiveGeneration) {
  // All (n, k) with n*k <= 12 and n >= 2, except n = 6.
  for (auto [n, kmax] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 6}, {3, 4}, {4, 3}, {5, 2}}) {
    std::vector<std::map<std::uint64_t, std::vector<Letter>>> by_k(kmax + 1);
    for (std::size_t k = 1; k <= kmax; ++k) by_k[k] = first_words(n, k);
    for (auto& c : enumerate_graphs(n)) {
      auto mask = labelled_mask(c.graph);
      for (std::size_t k = 1; k <= kmax; ++k) {
        auto it = by_k[k].find(mask);
        auto got = find_k_uniform_word(c.graph, k);
        ASSERT_EQ(got.has_value(), it != by_k[k].end()) << c.form.to_string() << " k=" << k;
        if (got) ASSERT_EQ(*got, Word(it->second)) << c.form.to_string() << " k=" << k;
        // Once k works, k + 1 works too.
        if (k > 1 && by_k[k - 1].contains(mask)) ASSERT_TRUE(got) << c.form.to_string() << " k=" << k;
      }
    }
  }
}

TEST(FindWord, ParallelAgrees) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& c : enumerate_graphs(n)) {
      std::size_t kmax = std::min<std::size_t>(3, kMaxWordLength / n);
      auto a = find_word(c.graph, kmax, 1);
      auto b = find_word(c.graph, kmax, 3);
      ASSERT_EQ(a.word, b.word) << c.form.to_string();
    }
}
