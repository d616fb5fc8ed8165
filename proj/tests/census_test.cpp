#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "wordrep/json_io.hpp"
#include "wordrep/wordrep.hpp"

using namespace wordrep;

namespace {

// b_n by deciding every labelled graph on {1..n}.
std::uint64_t labelled_b(std::size_t n) {
  std::uint64_t b = 0;
  for (std::uint64_t m = 0; m < oracle::num_labelled(n); ++m)
    b += naive::count_semi_transitive(oracle::labelled_graph(n, m)) > 0;
  return b;
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(Census, SmallRows) {
  auto r1 = census(1);
  EXPECT_EQ(r1.a_n, 1u);
  EXPECT_EQ(r1.b_n, 1u);
  EXPECT_FALSE(r1.entropy);
  auto r3 = census(3);
  EXPECT_EQ(r3.a_n, 4u);
  EXPECT_EQ(r3.b_n, 8u);
  EXPECT_TRUE(r3.nonrep_classes.empty());
  auto r4 = census(4);
  EXPECT_EQ(r4.a_n, 11u);
  EXPECT_EQ(r4.b_n, 64u);
}

TEST(Census, MatchesLabelledOracle) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(census(n).b_n, labelled_b(n)) << n;
}

TEST(Census, SixIsLocked) {
  auto r = census(6);
  EXPECT_EQ(r.classes, 156u);
  EXPECT_EQ(r.a_n, 155u);
  EXPECT_EQ(r.b_n, 32696u);
  ASSERT_EQ(r.nonrep_classes.size(), 1u);
  EXPECT_EQ(r.nonrep_classes[0].to_string(), "6:001101110011111");
  EXPECT_EQ(r.nonrep_classes[0], canonical_form(catalog::wheel(5)));
  // The locked value rests on this: every other class carries a verified
  // witness, and W5's 10 edges are few enough to refute by exhaustion.
  EXPECT_EQ(naive::count_semi_transitive(catalog::wheel(5)), 0u);
  EXPECT_EQ(r.b_n, (std::uint64_t{1} << 15) - factorial(6) / automorphism_count(catalog::wheel(5)));
}

TEST(Census, SevenNeedsTheLongFlag) {
  try {
    census(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
  CensusOptions opts;
  opts.allow_long = true;
  EXPECT_THROW(census(8, opts), Error);
  EXPECT_THROW(census(0), Error);
}

TEST(Census, SevenListsGraphA) {
  CensusOptions opts;
  opts.allow_long = true;
  auto r = census(7, opts);
  EXPECT_EQ(r.classes, 1044u);
  EXPECT_EQ(r.a_n, 1018u);
  EXPECT_EQ(r.b_n, 2054480u);
  EXPECT_EQ(r.nonrep_classes.size(), 26u);
  auto a = canonical_form(catalog::graph_a());
  EXPECT_NE(std::find(r.nonrep_classes.begin(), r.nonrep_classes.end(), a), r.nonrep_classes.end());
}

TEST(Census, RowInvariants) {
  CensusOptions opts;
  opts.allow_long = true;
  for (std::size_t n = 1; n <= 7; ++n) {
    auto r = census(n, opts);
    EXPECT_LE(r.a_n, r.b_n);
    EXPECT_LE(r.b_n, r.labelled_total);
    EXPECT_EQ(r.labelled_sum, r.labelled_total);
    EXPECT_EQ(r.a_n + r.nonrep_classes.size(), r.classes);
    std::uint64_t b = 0;
    for (auto& c : enumerate_graphs(n))
      if (std::find(r.nonrep_classes.begin(), r.nonrep_classes.end(), c.form) == r.nonrep_classes.end())
        b += factorial(n) / automorphism_count(c.graph);
    EXPECT_EQ(r.b_n, b);
  }
}

TEST(Census, NonRepresentableClassesAreMinimalOrInherited) {
  // Every vertex-deleted subgraph of a representable class is representable,
  // so the deficit can only grow with n.
  CensusOptions opts;
  opts.allow_long = true;
  std::uint64_t prev_deficit = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    auto r = census(n, opts);
    auto deficit = r.labelled_total - r.b_n;
    EXPECT_GE(deficit, prev_deficit);
    prev_deficit = deficit;
  }
}

TEST(EntropyTable, Rows) {
  auto rows = entropy_table(6);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].n, 2u);
  EXPECT_DOUBLE_EQ(*rows[0].entropy, 1.0);
  EXPECT_DOUBLE_EQ(*rows[2].entropy, 1.0);
  EXPECT_DOUBLE_EQ(*rows[3].entropy, std::log2(static_cast<double>(rows[3].b_n)) / 10.0);
  for (auto& r : rows) {
    ASSERT_TRUE(r.entropy);
    EXPECT_TRUE(std::isfinite(*r.entropy));
    EXPECT_LE(*r.entropy, 1.0);
  }
  EXPECT_EQ(format_entropy(rows[4].entropy), "0.999788");
  EXPECT_EQ(format_entropy(std::nullopt), "-");
  EXPECT_THROW(entropy_table(7), Error);
}

TEST(Census, WorkersDoNotChangeRows) {
  CensusOptions par;
  par.workers = 4;
  auto a = census(6), b = census(6, par);
  EXPECT_EQ(speed_row_to_json(a), speed_row_to_json(b));
}

TEST(ResultsStore, IncrementalRerun) {
  auto path = temp_file("wordrep_results_test.tsv");
  {
    ResultsStore store(path.string());
    CensusOptions opts;
    opts.store = &store;
    auto r = census(5, opts);
    EXPECT_EQ(store.size(), 34u);
    EXPECT_EQ(r.b_n, 1024u);
  }
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "5:0000000000\t1\tRepresentable");
  {
    // A planted entry is trusted on rerun, which shows the store is read.
    std::ofstream out(path, std::ios::trunc);
    out << "3:111\t1\tNonRepresentable\n";
  }
  ResultsStore store(path.string());
  CensusOptions opts;
  opts.store = &store;
  auto r = census(3, opts);
  EXPECT_EQ(r.a_n, 3u);
  EXPECT_EQ(store.size(), 4u);
  std::filesystem::remove(path);
}

TEST(ResultsStore, BadLinesReportPosition) {
  auto path = temp_file("wordrep_results_bad.tsv");
  {
    std::ofstream out(path);
    out << "3:111\t1\tRepresentable\n3:011\tx\tRepresentable\n";
  }
  try {
    ResultsStore s(path.string());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 7u);
  }
  std::filesystem::remove(path);
}

TEST(SpeedRowJson, FieldNames) {
  auto j = speed_row_to_json(census(6));
  for (auto key : {"n", "classes", "a_n", "b_n", "labelled_total", "entropy", "nonrep_classes"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["nonrep_classes"][0], "6:001101110011111");
  EXPECT_TRUE(speed_row_to_json(census(1))["entropy"].is_null());
}
