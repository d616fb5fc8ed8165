// wordrep: word-representability of small graphs from the command line.
//
// Exit status: 0 for success or a positive answer, 1 for a negative answer
// to a yes/no query, 2 for usage, parse and size errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "paper_checks.hpp"
#include "wordrep/json_io.hpp"
#include "wordrep/wordrep.hpp"

#ifndef WORDREP_DATA_DIR
#define WORDREP_DATA_DIR "data"
#endif

namespace {

using namespace wordrep;
using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Settings {
  bool json = false;
  std::size_t workers = 1;
  std::size_t k_max = 3;
  bool long_running = false;
  bool no_propagation = false;
  bool single = false;
  std::string graph_file;
  std::string word;
  std::string word_file;
  std::string results_file;
  std::string data_dir;
  std::size_t census_n = 0;
};

std::size_t default_workers() {
  if (const char* env = std::getenv("WORDREP_WORKERS")) {
    try {
      auto v = std::stoul(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

Graph load_graph_file(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::OutOfRange, "cannot open " + path);
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

Word load_word(const Settings& s) {
  if (!s.word.empty() && !s.word_file.empty()) throw Error(ErrorKind::ParseError, "give --word or --word-file, not both");
  if (!s.word_file.empty()) {
    auto lines = tools::load_lines(s.word_file);
    if (lines.empty()) throw Error(ErrorKind::ParseError, s.word_file + ": no word");
    return parse_word(lines.front());
  }
  if (s.word.empty()) throw Error(ErrorKind::ParseError, "a word is required (--word or --word-file)");
  return parse_word(s.word);
}

SearchOptions search_options(const Settings& s) {
  SearchOptions o;
  o.workers = s.workers;
  o.propagate = !s.no_propagation;
  return o;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string stats_line(const SearchStats& st) {
  std::ostringstream os;
  os << "# nodes=" << st.nodes << " propagations=" << st.propagations << " lemma1_conflicts=" << st.lemma1_conflicts
     << " cycle_conflicts=" << st.cycle_conflicts << " shortcut_checks=" << st.shortcut_checks
     << " leaf_shortcut_rejections=" << st.leaf_shortcut_rejections;
  return os.str();
}

int cmd_decide(const Settings& s) {
  auto g = load_graph_file(s.graph_file);
  auto d = decide(g, search_options(s));
  if (s.json) {
    print_json(decision_to_json(d));
  } else {
    std::cout << to_string(d.verdict) << '\n';
    if (d.witness) write_orientation(std::cout, *d.witness);
    std::cout << stats_line(d.stats) << '\n';
    std::cout << "# wall_ms=" << std::fixed << std::setprecision(3) << d.wall_ms << '\n';
  }
  return d.verdict == Verdict::Representable ? kYes : kNo;
}

int cmd_check_word(const Settings& s) {
  auto g = load_graph_file(s.graph_file);
  auto w = load_word(s);
  bool ok = represents(w, g);
  if (s.json) {
    auto k = uniformity(w);
    print_json({{"represents", ok}, {"word", word_to_json(w)}, {"uniformity", k ? json(*k) : json(nullptr)}});
  } else {
    std::cout << "represents: " << (ok ? "true" : "false") << '\n';
  }
  return ok ? kYes : kNo;
}

int cmd_graph_of_word(const Settings& s) {
  auto w = load_word(s);
  auto g = graph_of_word(w);
  if (s.json) {
    auto edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    print_json({{"n", g.order()}, {"edges", edges}});
  } else {
    write_edge_list(std::cout, g);
  }
  return kYes;
}

int cmd_find_orientation(const Settings& s) {
  auto g = load_graph_file(s.graph_file);
  auto r = find_semi_transitive(g, search_options(s));
  if (s.json) {
    print_json({{"found", r.orientation.has_value()},
                {"orientation", r.orientation ? orientation_to_json(*r.orientation) : json(nullptr)},
                {"stats", stats_to_json(r.stats)}});
  } else {
    if (r.orientation)
      write_orientation(std::cout, *r.orientation);
    else
      std::cout << "none\n";
    std::cout << stats_line(r.stats) << '\n';
  }
  return r.orientation ? kYes : kNo;
}

int cmd_count_orientations(const Settings& s) {
  auto g = load_graph_file(s.graph_file);
  auto r = count_semi_transitive_with_stats(g, search_options(s));
  if (s.json) {
    print_json({{"count", r.count}, {"stats", stats_to_json(r.stats)}});
  } else {
    std::cout << "count: " << r.count << '\n' << stats_line(r.stats) << '\n';
  }
  return kYes;
}

int cmd_find_word(const Settings& s) {
  auto g = load_graph_file(s.graph_file);
  auto r = find_word(g, s.k_max, s.workers);
  if (s.json) {
    print_json({{"word", r.word ? word_to_json(*r.word) : json(nullptr)},
                {"k", r.word ? json(*uniformity(*r.word)) : json(nullptr)},
                {"k_tried", r.k_tried},
                {"nodes", r.nodes}});
  } else {
    if (r.word)
      std::cout << format_word(*r.word) << "\n# k=" << *uniformity(*r.word) << '\n';
    else
      std::cout << "none\n# k_tried=" << r.k_tried << '\n';
  }
  return r.word ? kYes : kNo;
}

int cmd_census(const Settings& s) {
  CensusOptions opts;
  opts.allow_long = s.long_running;
  opts.workers = s.workers;
  std::optional<ResultsStore> store;
  if (!s.results_file.empty()) {
    store.emplace(s.results_file);
    opts.store = &*store;
  }
  std::vector<SpeedRow> rows;
  if (s.single || s.census_n == 1)
    rows.push_back(census(s.census_n, opts));
  else
    rows = entropy_table(s.census_n, opts);

  if (s.json) {
    auto arr = json::array();
    for (auto& r : rows) arr.push_back(speed_row_to_json(r));
    print_json({{"rows", arr}});
    return kYes;
  }
  std::cout << std::setw(3) << "n" << std::setw(9) << "classes" << std::setw(8) << "a_n" << std::setw(12) << "b_n"
            << std::setw(12) << "2^C(n,2)" << std::setw(11) << "entropy" << '\n';
  for (auto& r : rows)
    std::cout << std::setw(3) << r.n << std::setw(9) << r.classes << std::setw(8) << r.a_n << std::setw(12) << r.b_n
              << std::setw(12) << r.labelled_total << std::setw(11) << format_entropy(r.entropy) << '\n';
  for (auto& r : rows)
    for (auto& f : r.nonrep_classes) std::cout << "# non-representable n=" << r.n << ' ' << f.to_string() << '\n';
  return kYes;
}

int cmd_verify_paper(const Settings& s) {
  std::filesystem::path data = s.data_dir;
  if (data.empty()) {
    const char* env = std::getenv("WORDREP_DATA_DIR");
    data = env ? env : WORDREP_DATA_DIR;
  }
  auto results = tools::run_paper_checks(data, s.workers);
  bool all = true;
  for (auto& r : results) all = all && r.pass;
  if (s.json) {
    auto arr = json::array();
    for (auto& r : results) arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    print_json({{"checks", arr}, {"all_passed", all}});
  } else {
    for (auto& r : results) std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  [" << r.detail << "]\n";
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  s.workers = default_workers();

  CLI::App app{"Word-representability of small graphs via semi-transitive orientations"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", s.json, "JSON output");
  app.add_option("--workers", s.workers, "worker threads (default: $WORDREP_WORKERS or 1)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));

  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", s.graph_file, "edge-list file ('-' for stdin)")->required(); };
  auto word_opts = [&](CLI::App* sub) {
    sub->add_option("--word", s.word, "word, e.g. 1213423 or \"1 3 10 2\" or 1387296(10)7");
    sub->add_option("--word-file", s.word_file, "file whose first non-comment line is the word");
  };

  auto* decide_cmd = app.add_subcommand("decide", "word-representable or not, with a certificate");
  graph_arg(decide_cmd);
  decide_cmd->add_flag("--no-propagation", s.no_propagation, "disable Lemma-1 forcing");

  auto* check_cmd = app.add_subcommand("check-word", "does the word represent the graph?");
  graph_arg(check_cmd);
  word_opts(check_cmd);

  auto* gow_cmd = app.add_subcommand("graph-of-word", "graph of alternating pairs of a word");
  word_opts(gow_cmd);

  auto* find_o_cmd = app.add_subcommand("find-orientation", "first semi-transitive orientation");
  graph_arg(find_o_cmd);
  find_o_cmd->add_flag("--no-propagation", s.no_propagation, "disable Lemma-1 forcing");

  auto* count_cmd = app.add_subcommand("count-orientations", "number of semi-transitive orientations");
  graph_arg(count_cmd);
  count_cmd->add_flag("--no-propagation", s.no_propagation, "disable Lemma-1 forcing");

  auto* find_w_cmd = app.add_subcommand("find-word", "k-uniform representing word, k = 1..k-max");
  graph_arg(find_w_cmd);
  find_w_cmd->add_option("--k-max", s.k_max, "largest multiplicity to try")->check(CLI::PositiveNumber);

  auto* census_cmd = app.add_subcommand("census", "speed of the class: a_n, b_n, entropy for n = 2..N");
  census_cmd->add_option("n", s.census_n, "largest vertex count")->required()->check(CLI::PositiveNumber);
  census_cmd->add_flag("--long", s.long_running, "allow n = 7");
  census_cmd->add_flag("--single", s.single, "only the row for n");
  census_cmd->add_option("--results", s.results_file, "append-only per-class results file");

  auto* verify_cmd = app.add_subcommand("verify-paper", "reproduce the worked examples from the bundled data");
  verify_cmd->add_option("--data-dir", s.data_dir, "data directory (default: bundled)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*decide_cmd) return cmd_decide(s);
    if (*check_cmd) return cmd_check_word(s);
    if (*gow_cmd) return cmd_graph_of_word(s);
    if (*find_o_cmd) return cmd_find_orientation(s);
    if (*count_cmd) return cmd_count_orientations(s);
    if (*find_w_cmd) return cmd_find_word(s);
    if (*census_cmd) return cmd_census(s);
    if (*verify_cmd) return cmd_verify_paper(s);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
