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

#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ptwalk/ptwalk.hpp"

namespace {

using namespace ptwalk;

const char* kUsage = R"(usage: ptwalk <command> [flags]

commands:
  check       classify a graph Hamiltonian (hermitian | pseudo_hermitian | broken)
  centrality  rank vertices by one or more centrality measures
  walk        emit a walk trajectory as CSV
  ensemble    run seeded random-graph ensembles from a JSON config
  map         emit the weighted undirected graph equivalent to a directed one

flags:
  --input FILE     graph file (edge list `src dst` per line, or JSON {"n","edges"})
  --format FMT     output format: csv | json (centrality only; default csv)
  --methods LIST   comma-separated: eta_ctqw,ctqw,pagerank,eigenvector
  --mode MODE      walk mode: eta | nonunitary (default eta)
  --t-max T        trajectory end time (default 10)
  --dt DT          trajectory sample step (default 0.01)
  --seed S         override the master seed of every configured ensemble
  --config FILE    ensemble config JSON (single object or {"ensembles":[...]})
  --output PATH    output file, or file prefix for ensemble reports

exit codes: 0 success, 1 usage or parse error, 2 mathematical precondition failure
)";

using FlagMap = std::map<std::string, std::string>;

FlagMap parse_flags(int argc, char** argv, int start,
                    const std::set<std::string>& allowed) {
  FlagMap flags;
  for (int i = start; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--", 0) != 0) throw UsageError("unexpected argument: " + arg);
    const std::string name = arg.substr(2);
    if (!allowed.count(name)) throw UsageError("unknown flag: " + arg);
    if (i + 1 >= argc) throw UsageError("flag " + arg + " needs a value");
    flags[name] = argv[++i];
  }
  return flags;
}

const std::string& require_flag(const FlagMap& flags, const std::string& name) {
  auto it = flags.find(name);
  if (it == flags.end()) throw UsageError("missing required flag --" + name);
  return it->second;
}

std::string flag_or(const FlagMap& flags, const std::string& name,
                    const std::string& fallback) {
  auto it = flags.find(name);
  return it == flags.end() ? fallback : it->second;
}

double parse_double(const std::string& name, const std::string& text) {
  try {
    size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("flag --" + name + " needs a number, got: " + text);
  }
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    size_t pos = 0;
    const std::uint64_t v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("flag --seed needs an unsigned integer, got: " + text);
  }
}

void emit(const FlagMap& flags, const std::string& content) {
  auto it = flags.find("output");
  if (it == flags.end()) {
    std::cout << content;
  } else {
    io::write_file(it->second, content);
  }
}

int cmd_check(const FlagMap& flags) {
  const DirectedGraph g = io::load_graph(require_flag(flags, "input"));
  const Hamiltonian h = hamiltonian(g);
  const PHClassification cls = classify(h);
  std::cout << "classification: " << ph_kind_name(cls.kind) << "\n";
  std::cout << "max_imag: " << io::fmt15(cls.max_imag) << "\n";
  std::cout << "rcond: " << io::fmt15(cls.rcond) << "\n";
  if (cls.kind == PHKind::broken) return 2;
  if (flags.count("output")) {
    const EtaDecomposition ed = build_eta(eigen_biorthonormal(h));
    io::write_file(flags.at("output"), io::classification_json(g.n, cls, &ed));
  }
  return 0;
}

int cmd_centrality(const FlagMap& flags) {
  const DirectedGraph g = io::load_graph(require_flag(flags, "input"));
  const std::string format = flag_or(flags, "format", "csv");
  if (format != "csv" && format != "json")
    throw UsageError("unknown format (expected csv | json): " + format);

  std::vector<Method> methods;
  const std::string list = flag_or(flags, "methods", "eta_ctqw,ctqw,pagerank,eigenvector");
  size_t pos = 0;
  while (pos <= list.size()) {
    const size_t comma = list.find(',', pos);
    const std::string token =
        list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty()) throw UsageError("empty method name in --methods");
    methods.push_back(method_from_string(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }

  const Hamiltonian h = hamiltonian(g);
  std::vector<CentralityScores> results;
  for (Method m : methods) {
    switch (m) {
      case Method::pagerank: results.push_back(pagerank(g)); break;
      case Method::eigenvector: results.push_back(eigenvector_centrality(g)); break;
      case Method::ctqw: results.push_back(ctqw_centrality(h)); break;
      case Method::eta_ctqw: {
        const PHClassification cls = classify(h);
        if (cls.kind == PHKind::broken)
          throw MathError(cls.max_imag > 0.0
                              ? "spectrum is not real: max |Im| = " + io::fmt15(cls.max_imag)
                              : "Hamiltonian is not diagonalizable");
        const EtaDecomposition ed = build_eta(eigen_biorthonormal(h));
        results.push_back(eta_ctqw_centrality(h, ed));
        break;
      }
    }
  }
  emit(flags, format == "csv" ? io::scores_csv(results) : io::scores_json(results));
  return 0;
}

int cmd_walk(const FlagMap& flags) {
  const DirectedGraph g = io::load_graph(require_flag(flags, "input"));
  const std::string mode_name = flag_or(flags, "mode", "eta");
  WalkMode mode;
  if (mode_name == "eta") {
    mode = WalkMode::eta;
  } else if (mode_name == "nonunitary") {
    mode = WalkMode::nonunitary;
  } else {
    throw UsageError("unknown mode (expected eta | nonunitary): " + mode_name);
  }
  const double t_max = parse_double("t-max", flag_or(flags, "t-max", "10"));
  const double dt = parse_double("dt", flag_or(flags, "dt", "0.01"));
  const Hamiltonian h = hamiltonian(g);
  const Trajectory tr = trajectory(h, mode, detail::uniform_state(g.n), t_max, dt);
  emit(flags, io::trajectory_csv(tr));
  return 0;
}

int cmd_ensemble(const FlagMap& flags) {
  std::vector<io::EnsembleConfig> configs =
      io::parse_ensemble_config(io::read_file(require_flag(flags, "config")));
  if (flags.count("seed")) {
    const std::uint64_t seed = parse_seed(flags.at("seed"));
    for (auto& cfg : configs) cfg.spec.seed = seed;
  }
  const std::string prefix = flag_or(flags, "output", "ensemble");
  for (const io::EnsembleConfig& cfg : configs) {
    std::cout << "ensemble " << cfg.name << ": family=" << family_name(cfg.spec.family)
              << " n=" << cfg.spec.n << " count=" << cfg.count
              << " seed=" << cfg.spec.seed << "\n";
    const EnsembleReport rep = run_ensemble(cfg.spec, cfg.count, cfg.options);
    const std::string base = prefix + "_" + cfg.name;
    io::write_file(base + ".json", io::ensemble_json(rep));
    io::write_file(base + "_positions.csv", io::ensemble_positions_csv(rep));
    for (const PairStats& ps : rep.pairs)
      io::write_file(base + "_agreement_" + method_name(ps.a) + "_vs_" +
                         method_name(ps.b) + ".csv",
                     io::agreement_csv(ps));
    std::cout << "  wrote " << base << ".json\n";
  }
  return 0;
}

int cmd_map(const FlagMap& flags) {
  const DirectedGraph g = io::load_graph(require_flag(flags, "input"));
  const Hamiltonian h = hamiltonian(g);
  const PHClassification cls = classify(h);
  if (cls.kind == PHKind::broken)
    throw MathError(cls.max_imag > 0.0
                        ? "spectrum is not real: max |Im| = " + io::fmt15(cls.max_imag)
                        : "Hamiltonian is not diagonalizable");
  const EtaDecomposition ed = build_eta(eigen_biorthonormal(h));
  const Hamiltonian ht = hermitize(h, ed);
  const WeightedGraph wg = weights_from_hermitized(ht);
  const double residual =
      (complete_laplacian_direct(wg) - ht.matrix).cwiseAbs().maxCoeff();
  emit(flags, io::weighted_graph_json(wg, residual));
  return 0;
}

int run(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 1;
  }
  const std::string command = argv[1];
  if (command == "--help" || command == "-h" || command == "help") {
    std::cout << kUsage;
    return 0;
  }
  if (command == "check")
    return cmd_check(parse_flags(argc, argv, 2, {"input", "output"}));
  if (command == "centrality")
    return cmd_centrality(
        parse_flags(argc, argv, 2, {"input", "methods", "format", "output"}));
  if (command == "walk")
    return cmd_walk(
        parse_flags(argc, argv, 2, {"input", "mode", "t-max", "dt", "output"}));
  if (command == "ensemble")
    return cmd_ensemble(parse_flags(argc, argv, 2, {"config", "seed", "output"}));
  if (command == "map")
    return cmd_map(parse_flags(argc, argv, 2, {"input", "output"}));
  throw UsageError("unknown command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ptwalk::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ptwalk::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
