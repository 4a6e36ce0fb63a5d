#pragma once

#include <cstdint>
#include <string>

#include "congestsim/engine.hpp"
#include "congestsim/graph.hpp"

namespace congest {

// One simulation setup. Graph sources are generator expressions
// ("path(64)", "random(16,0.3,7)") or "file:PATH" edge lists.
struct Scenario {
    ExecutionMode mode = ExecutionMode::PlainCongest;
    std::string graph;      // the support topology (and the input, unless set)
    std::string input;      // optional input subgraph
    std::string algorithm;  // e.g. "bfs(0)", "size-upper-bound"
    int bandwidth = 0;      // 0 -> default
    std::uint64_t seed = 1;
    int max_rounds = -1;    // -1 -> 10n + 100
    std::string cut;        // optional designated cut, "u-v,u-v,..."; cut_bits counts it
};

// Flat key=value format under a [scenario] section header; '#' comments.
// Keys: mode, graph (alias support), input, algorithm, bandwidth, seed,
// max_rounds, cut.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

ExecutionMode parse_mode(const std::string& word);

Graph load_graph_source(const std::string& source);

// Resolves the scenario into a runnable instance + algorithm + config.
struct ResolvedScenario {
    SupportedInstance instance;
    AlgorithmSpec algorithm;
    RunConfig config;
};
ResolvedScenario resolve_scenario(const Scenario& s);

}  // namespace congest
