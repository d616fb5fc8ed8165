#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/canonical.hpp"
#include "wordrep/decision.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/parallel.hpp"
#include "wordrep/search.hpp"

namespace wordrep {

inline constexpr std::size_t kMaxCensusVertices = 6;
inline constexpr std::size_t kMaxLongCensusVertices = 7;

/// Append-only record of per-class verdicts, one line per class:
/// "code<TAB>b-contribution<TAB>verdict". The b-contribution is the
/// number of labelled graphs the class adds to b_n (0 when the class is
/// not representable).
class ResultsStore {
 public:
  struct Entry {
    std::uint64_t contribution = 0;
    Verdict verdict = Verdict::NonRepresentable;
  };

  explicit ResultsStore(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (line.empty()) continue;
      auto t1 = line.find('\t');
      auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
      if (t2 == std::string::npos) throw ParseError(number, 1, "expected three tab-separated fields");
      auto form = CanonicalForm::from_string(std::string_view(line).substr(0, t1));
      Entry e;
      auto count = line.substr(t1 + 1, t2 - t1 - 1);
      try {
        e.contribution = std::stoull(count);
      } catch (const std::exception&) {
        throw ParseError(number, t1 + 2, "bad b-contribution '" + count + "'");
      }
      auto verdict = line.substr(t2 + 1);
      if (verdict == "Representable")
        e.verdict = Verdict::Representable;
      else if (verdict == "NonRepresentable")
        e.verdict = Verdict::NonRepresentable;
      else
        throw ParseError(number, t2 + 2, "bad verdict '" + verdict + "'");
      entries_[form] = e;
    }
  }

  std::optional<Entry> lookup(const CanonicalForm& form) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(form);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void record(const CanonicalForm& form, Entry e) {
    std::lock_guard lock(mutex_);
    if (entries_.contains(form)) return;
    entries_[form] = e;
    std::ofstream out(path_, std::ios::app);
    out << form.to_string() << '\t' << e.contribution << '\t' << to_string(e.verdict) << '\n';
    if (!out) throw Error(ErrorKind::OutOfRange, "cannot append to " + path_);
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

 private:
  std::string path_;
  mutable std::mutex mutex_;
  std::map<CanonicalForm, Entry> entries_;
};

struct CensusOptions {
  bool allow_long = false;  // permits n = 7
  std::size_t workers = 1;
  ResultsStore* store = nullptr;
};

/// Per-n counts of the word-representable class.
struct SpeedRow {
  std::size_t n = 0;
  std::uint64_t classes = 0;          // all isomorphism classes on n vertices
  std::uint64_t a_n = 0;              // representable, unlabelled
  std::uint64_t b_n = 0;              // representable, labelled on {1..n}
  std::uint64_t labelled_total = 0;   // 2^C(n,2)
  std::uint64_t labelled_sum = 0;     // sum of n!/|Aut| over all classes
  std::optional<double> entropy;      // log2(b_n) / C(n,2), n >= 2
  std::vector<CanonicalForm> nonrep_classes;
};

namespace detail {

inline void check_census_size(std::size_t n, const CensusOptions& opts) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "vertex count must be at least 1");
  std::size_t cap = opts.allow_long ? kMaxLongCensusVertices : kMaxCensusVertices;
  if (n > cap)
    throw Error(ErrorKind::TooLarge, "census supports n <= " + std::to_string(kMaxCensusVertices) +
                                         (opts.allow_long ? "" : " (n = 7 needs the long-running flag)") +
                                         (opts.allow_long ? " and n = 7" : ""));
}

}  // namespace detail

inline SpeedRow census(std::size_t n, const CensusOptions& opts = {}) {
  detail::check_census_size(n, opts);
  auto classes = enumerate_graphs(n);
  std::vector<Verdict> verdicts(classes.size());

  detail::run_pool(classes.size(), std::max<std::size_t>(1, opts.workers), [&](std::size_t i) {
    const auto& c = classes[i];
    if (opts.store) {
      if (auto hit = opts.store->lookup(c.form)) {
        verdicts[i] = hit->verdict;
        return;
      }
    }
    auto d = decide(c.graph);
    verdicts[i] = d.verdict;
    if (opts.store)
      opts.store->record(c.form, {d.verdict == Verdict::Representable ? c.labelled_count : 0, d.verdict});
  });

  SpeedRow row;
  row.n = n;
  row.classes = classes.size();
  const auto pairs = n * (n - 1) / 2;
  row.labelled_total = std::uint64_t{1} << pairs;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    row.labelled_sum += classes[i].labelled_count;
    if (verdicts[i] == Verdict::Representable) {
      ++row.a_n;
      row.b_n += classes[i].labelled_count;
    } else {
      row.nonrep_classes.push_back(classes[i].form);
    }
  }
  if (n >= 2) row.entropy = std::log2(static_cast<double>(row.b_n)) / static_cast<double>(pairs);
  return row;
}

/// Rows for n = 2..n_max.
inline std::vector<SpeedRow> entropy_table(std::size_t n_max, const CensusOptions& opts = {}) {
  detail::check_census_size(n_max, opts);
  std::vector<SpeedRow> rows;
  for (std::size_t n = 2; n <= n_max; ++n) rows.push_back(census(n, opts));
  return rows;
}

/// Six digits after the decimal point; "-" when undefined.
inline std::string format_entropy(const std::optional<double>& e) {
  if (!e) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *e);
  return buf;
}

}  // namespace wordrep
