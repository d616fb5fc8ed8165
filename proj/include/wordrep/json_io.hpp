#pragma once

#include <json.hpp>

#include "wordrep/census.hpp"
#include "wordrep/decision.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/word.hpp"

// JSON renderings used by the command-line tool. Field names are stable;
// see README.md for the schema.

namespace wordrep {

/// [[tail, head], ...] in stored edge order, 1-based.
inline nlohmann::json orientation_to_json(const Orientation& o) {
  auto arcs = nlohmann::json::array();
  for (std::size_t i = 0; i < o.base().size(); ++i) arcs.push_back({o.tail(i) + 1, o.head(i) + 1});
  return {{"n", o.base().order()}, {"arcs", arcs}};
}

inline nlohmann::json stats_to_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"propagations", s.propagations},
          {"lemma1_conflicts", s.lemma1_conflicts},
          {"cycle_conflicts", s.cycle_conflicts},
          {"shortcut_checks", s.shortcut_checks},
          {"leaf_shortcut_rejections", s.leaf_shortcut_rejections},
          {"used_propagation", s.used_propagation},
          {"used_symmetry", s.used_symmetry}};
}

inline nlohmann::json decision_to_json(const Decision& d) {
  nlohmann::json j;
  j["verdict"] = std::string(to_string(d.verdict));
  if (d.witness) j["witness"] = orientation_to_json(*d.witness);
  auto stats = stats_to_json(d.stats);
  stats["complete_graph_shortcut"] = d.complete_graph_shortcut;
  stats["wall_ms"] = d.wall_ms;
  j["stats"] = stats;
  return j;
}

inline nlohmann::json conflict_to_json(const Conflict& c) {
  auto w = nlohmann::json::array();
  for (auto v : c.witness) w.push_back(v + 1);
  return {{"kind", std::string(to_string(c.kind))}, {"witness", w}};
}

inline nlohmann::json word_to_json(const Word& w) {
  return nlohmann::json(std::vector<Letter>(w.letters().begin(), w.letters().end()));
}

inline nlohmann::json speed_row_to_json(const SpeedRow& r) {
  nlohmann::json j{{"n", r.n},
                   {"classes", r.classes},
                   {"a_n", r.a_n},
                   {"b_n", r.b_n},
                   {"labelled_total", r.labelled_total},
                   {"entropy", nullptr}};
  if (r.entropy) j["entropy"] = std::stod(format_entropy(r.entropy));
  auto non = nlohmann::json::array();
  for (auto& f : r.nonrep_classes) non.push_back(f.to_string());
  j["nonrep_classes"] = non;
  return j;
}

}  // namespace wordrep
