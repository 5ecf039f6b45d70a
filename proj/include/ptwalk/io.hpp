// Copyright 2026 The ptwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTWALK_IO_HPP_
#define PTWALK_IO_HPP_

#include <Eigen/Dense>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptwalk/centrality.hpp"
#include "ptwalk/errors.hpp"
#include "ptwalk/graph.hpp"
#include "ptwalk/randnet.hpp"
#include "ptwalk/spectral.hpp"
#include "ptwalk/stats.hpp"
#include "ptwalk/walk.hpp"

namespace ptwalk {
namespace io {

// 15 significant digits: enough that decimal -> double -> decimal is
// idempotent, so re-serializing a parsed file is byte-identical.
inline std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write file: " + path);
  out << content;
  if (!out) throw UsageError("write failed: " + path);
}

// One `source target` pair per line, 1-indexed; `#` starts a comment.
// The vertex count is the largest index mentioned.
inline DirectedGraph parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  int maxv = 0;
  int lineno = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\f\v") == std::string::npos) continue;
    std::istringstream ls(line);
    long long s = 0, t = 0;
    if (!(ls >> s >> t)) throw ParseError("expected `source target`", lineno);
    std::string extra;
    if (ls >> extra) throw ParseError("trailing token: " + extra, lineno);
    if (s < 1 || t < 1) throw ParseError("vertex indices are 1-based", lineno);
    if (s == t) throw ParseError("self-loop at vertex " + std::to_string(s), lineno);
    if (!seen.emplace(s, t).second)
      throw ParseError("duplicate edge (" + std::to_string(s) + "," +
                       std::to_string(t) + ")", lineno);
    edges.emplace_back(static_cast<int>(s), static_cast<int>(t));
    maxv = std::max(maxv, static_cast<int>(std::max(s, t)));
  }
  if (edges.empty()) throw ParseError("no edges found", 0);
  return from_edge_list(maxv, edges);
}

inline std::string serialize_edge_list(const DirectedGraph& g) {
  std::string out;
  for (const auto& [s, t] : g.edges)
    out += std::to_string(s + 1) + " " + std::to_string(t + 1) + "\n";
  return out;
}

inline DirectedGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph JSON needs fields `n` and `edges`", 0);
  if (!j["n"].is_number_integer()) throw ParseError("`n` must be an integer", 0);
  const int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("each edge must be a [source, target] pair", 0);
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return from_edge_list(n, edges);
}

inline std::string serialize_graph_json(const DirectedGraph& g) {
  std::string out = "{\"n\": " + std::to_string(g.n) + ", \"edges\": [";
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (e) out += ", ";
    out += "[" + std::to_string(g.edges[e].first + 1) + ", " +
           std::to_string(g.edges[e].second + 1) + "]";
  }
  out += "]}\n";
  return out;
}

// First non-whitespace byte `{` means JSON; anything else is edge-list text.
inline DirectedGraph parse_graph(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n\f\v");
  if (pos != std::string::npos && text[pos] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

inline DirectedGraph load_graph(const std::string& path) {
  return parse_graph(read_file(path));
}

inline std::string scores_csv(const std::vector<CentralityScores>& list) {
  std::string out = "vertex,score,rank,method\n";
  for (const CentralityScores& cs : list) {
    const int n = static_cast<int>(cs.scores.size());
    for (int v = 0; v < n; ++v)
      out += std::to_string(v + 1) + "," + fmt15(cs.scores(v)) + "," +
             std::to_string(cs.ranks[v]) + "," + method_name(cs.method) + "\n";
  }
  return out;
}

inline std::vector<CentralityScores> parse_scores_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty scores file", 0);
  ++lineno;
  if (line == "vertex,score,rank,method\r") line.pop_back();
  if (line != "vertex,score,rank,method")
    throw ParseError("expected header `vertex,score,rank,method`", lineno);
  std::vector<CentralityScores> out;
  std::string cur_method;
  std::vector<double> cur_scores;
  auto flush = [&]() {
    if (cur_scores.empty()) return;
    Eigen::VectorXd v(cur_scores.size());
    for (size_t i = 0; i < cur_scores.size(); ++i) v(static_cast<int>(i)) = cur_scores[i];
    out.push_back(detail::finalize(std::move(v), method_from_string(cur_method)));
    cur_scores.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string vertex, score, rank, method;
    if (!std::getline(ls, vertex, ',') || !std::getline(ls, score, ',') ||
        !std::getline(ls, rank, ',') || !std::getline(ls, method))
      throw ParseError("expected `vertex,score,rank,method`", lineno);
    if (method != cur_method) {
      flush();
      cur_method = method;
    }
    const int v = std::stoi(vertex);
    if (v != static_cast<int>(cur_scores.size()) + 1)
      throw ParseError("vertices must run 1..n per method block", lineno);
    cur_scores.push_back(std::strtod(score.c_str(), nullptr));
  }
  flush();
  if (out.empty()) throw ParseError("no score rows found", 0);
  return out;
}

namespace detail {

inline std::string json_vector(const Eigen::VectorXd& v) {
  std::string out = "[";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt15(v(i));
  }
  return out + "]";
}

inline std::string json_matrix(const Eigen::MatrixXd& m, const std::string& indent) {
  std::string out = "[\n";
  for (int i = 0; i < m.rows(); ++i) {
    out += indent + "  [";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += fmt15(m(i, j));
    }
    out += i + 1 < m.rows() ? "],\n" : "]\n";
  }
  return out + indent + "]";
}

}  // namespace detail

inline std::string scores_json(const std::vector<CentralityScores>& list) {
  std::string out = "{\n";
  for (size_t i = 0; i < list.size(); ++i) {
    out += "  \"" + std::string(method_name(list[i].method)) + "\": " +
           detail::json_vector(list[i].scores);
    out += i + 1 < list.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

inline std::string trajectory_csv(const Trajectory& tr) {
  const int n = static_cast<int>(tr.probabilities.cols());
  std::string out = "t";
  for (int j = 0; j < n; ++j) out += ",p" + std::to_string(j + 1);
  out += ",total\n";
  for (size_t s = 0; s < tr.times.size(); ++s) {
    out += fmt15(tr.times[s]);
    for (int j = 0; j < n; ++j)
      out += "," + fmt15(tr.probabilities(static_cast<int>(s), j));
    out += "," + fmt15(tr.totals[s]) + "\n";
  }
  return out;
}

// Classification report; the metric and its inverse are attached when the
// caller built them. Both are real for real pseudo-Hermitian input.
inline std::string classification_json(int n, const PHClassification& cls,
                                       const EtaDecomposition* ed = nullptr) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(n) + ",\n";
  out += "  \"classification\": \"" + std::string(ph_kind_name(cls.kind)) + "\",\n";
  out += "  \"max_imag\": " + fmt15(cls.max_imag) + ",\n";
  out += "  \"rcond\": " + fmt15(cls.rcond);
  if (ed != nullptr) {
    out += ",\n  \"eta\": " + detail::json_matrix(ed->eta.real(), "  ");
    out += ",\n  \"eta_inv\": " + detail::json_matrix(ed->eta_inv.real(), "  ");
  }
  return out + "\n}\n";
}

inline std::string weighted_graph_json(const WeightedGraph& wg, double residual) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(wg.n) + ",\n";
  out += "  \"weights\": " + detail::json_matrix(wg.weights, "  ") + ",\n";
  out += "  \"residual\": " + fmt15(residual) + "\n";
  return out + "}\n";
}

struct EnsembleConfig {
  std::string name;
  RandomGraphSpec spec;
  int count = 0;
  EnsembleOptions options;
};

inline const char* order_by_name(OrderBy o) {
  return o == OrderBy::own ? "own" : "pagerank";
}

inline OrderBy order_by_from_string(const std::string& s) {
  if (s == "own") return OrderBy::own;
  if (s == "pagerank") return OrderBy::pagerank;
  throw UsageError("unknown order_by (expected own | pagerank): " + s);
}

namespace detail {

inline EnsembleConfig parse_one_ensemble(const nlohmann::json& j, int index) {
  const std::string where = "ensemble " + std::to_string(index + 1) + ": ";
  if (!j.is_object()) throw UsageError(where + "expected an object");
  for (const char* key : {"family", "n", "count", "seed"})
    if (!j.contains(key)) throw UsageError(where + "missing field `" + key + "`");
  EnsembleConfig cfg;
  cfg.spec.family = family_from_string(j["family"].get<std::string>());
  cfg.spec.n = j["n"].get<int>();
  cfg.count = j["count"].get<int>();
  cfg.spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("p")) cfg.spec.p = j["p"].get<double>();
  if (j.contains("m")) cfg.spec.m = j["m"].get<int>();
  if (j.contains("max_attempts")) cfg.spec.max_attempts = j["max_attempts"].get<int>();
  cfg.name = j.contains("name") ? j["name"].get<std::string>()
                                : std::string(family_name(cfg.spec.family));
  if (j.contains("methods")) {
    cfg.options.methods.clear();
    for (const auto& m : j["methods"])
      cfg.options.methods.push_back(method_from_string(m.get<std::string>()));
  }
  if (j.contains("threads")) cfg.options.threads = j["threads"].get<int>();
  if (j.contains("order_by"))
    cfg.options.order_by = order_by_from_string(j["order_by"].get<std::string>());
  validate(cfg.spec);
  if (cfg.count < 1) throw UsageError(where + "count must be positive");
  return cfg;
}

}  // namespace detail

// Either a single ensemble object or {"ensembles": [ ... ]}.
inline std::vector<EnsembleConfig> parse_ensemble_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
  std::vector<EnsembleConfig> out;
  if (j.is_object() && j.contains("ensembles")) {
    int i = 0;
    for (const auto& e : j["ensembles"]) out.push_back(detail::parse_one_ensemble(e, i++));
  } else {
    out.push_back(detail::parse_one_ensemble(j, 0));
  }
  if (out.empty()) throw UsageError("config lists no ensembles");
  return out;
}

inline std::string ensemble_json(const EnsembleReport& rep) {
  std::string out = "{\n";
  out += "  \"family\": \"" + std::string(family_name(rep.spec.family)) + "\",\n";
  out += "  \"n\": " + std::to_string(rep.spec.n) + ",\n";
  out += "  \"p\": " + fmt15(rep.spec.p) + ",\n";
  out += "  \"m\": " + std::to_string(rep.spec.m) + ",\n";
  out += "  \"count\": " + std::to_string(rep.count) + ",\n";
  out += "  \"seed\": " + std::to_string(rep.spec.seed) + ",\n";
  out += "  \"max_attempts\": " + std::to_string(rep.spec.max_attempts) + ",\n";
  out += "  \"order_by\": \"" + std::string(order_by_name(rep.order_by)) + "\",\n";
  out += "  \"methods\": [";
  for (size_t i = 0; i < rep.methods.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + std::string(method_name(rep.methods[i])) + "\"";
  }
  out += "],\n";
  out += "  \"aggregates\": [\n";
  for (size_t i = 0; i < rep.aggregates.size(); ++i) {
    const MethodAggregate& a = rep.aggregates[i];
    out += "    {\"method\": \"" + std::string(method_name(a.method)) + "\",\n";
    out += "     \"position_mean\": " + detail::json_vector(a.position_mean) + ",\n";
    out += "     \"position_std\": " + detail::json_vector(a.position_std) + "}";
    out += i + 1 < rep.aggregates.size() ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"pairs\": [\n";
  for (size_t i = 0; i < rep.pairs.size(); ++i) {
    const PairStats& ps = rep.pairs[i];
    out += "    {\"a\": \"" + std::string(method_name(ps.a)) + "\", \"b\": \"" +
           std::string(method_name(ps.b)) + "\",\n";
    out += "     \"mean_vigna\": ";
    out += ps.mean_vigna ? fmt15(*ps.mean_vigna) : std::string("null");
    out += ",\n     \"agreement\": [\n";
    for (size_t k = 0; k < ps.agreement.size(); ++k) {
      const AgreementReport& ar = ps.agreement[k];
      out += "       {\"k\": " + std::to_string(ar.k) +
             ", \"successes\": " + std::to_string(ar.successes) +
             ", \"trials\": " + std::to_string(ar.trials) +
             ", \"mean\": " + fmt15(ar.mean) + ", \"low\": " + fmt15(ar.low) +
             ", \"high\": " + fmt15(ar.high) + "}";
      out += k + 1 < ps.agreement.size() ? ",\n" : "\n";
    }
    out += "     ]}";
    out += i + 1 < rep.pairs.size() ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"per_graph\": [\n";
  for (int g = 0; g < rep.count; ++g) {
    out += "    {";
    for (size_t m = 0; m < rep.methods.size(); ++m) {
      if (m) out += ", ";
      out += "\"" + std::string(method_name(rep.methods[m])) + "\": " +
             detail::json_vector(rep.per_graph[g][m].scores);
    }
    out += g + 1 < rep.count ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

// Rank-position summary: sorted-score means and population stds per method.
inline std::string ensemble_positions_csv(const EnsembleReport& rep) {
  std::string out = "method,position,mean,std\n";
  for (const MethodAggregate& a : rep.aggregates)
    for (int p = 0; p < a.position_mean.size(); ++p)
      out += std::string(method_name(a.method)) + "," + std::to_string(p + 1) + "," +
             fmt15(a.position_mean(p)) + "," + fmt15(a.position_std(p)) + "\n";
  return out;
}

// Top-k agreement table for one method pair.
inline std::string agreement_csv(const PairStats& ps) {
  std::string out = "k,mean,low,high\n";
  for (const AgreementReport& ar : ps.agreement)
    out += std::to_string(ar.k) + "," + fmt15(ar.mean) + "," + fmt15(ar.low) + "," +
           fmt15(ar.high) + "\n";
  return out;
}

}  // namespace io
}  // namespace ptwalk

#endif  // PTWALK_IO_HPP_
