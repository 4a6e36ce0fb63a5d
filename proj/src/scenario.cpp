#include "congestsim/scenario.hpp"

#include <fstream>
#include <sstream>

#include "congestsim/algorithms.hpp"
#include "congestsim/generators.hpp"

namespace congest {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

ExecutionMode parse_mode(const std::string& word) {
    if (word == "plain") return ExecutionMode::PlainCongest;
    if (word == "active" || word == "supported-active") return ExecutionMode::SupportedActive;
    if (word == "passive" || word == "supported-passive") return ExecutionMode::SupportedPassive;
    throw ConfigError("unknown mode: " + word + " (expected plain|active|passive)");
}

Scenario parse_scenario(const std::string& text) {
    Scenario s;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool in_section = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t != "[scenario]") throw FormatError("unknown section " + t, lineno);
            in_section = true;
            continue;
        }
        if (!in_section) throw FormatError("expected [scenario] section header", lineno);
        auto eq = t.find('=');
        if (eq == std::string::npos) throw FormatError("expected key = value", lineno);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        try {
            if (key == "mode") s.mode = parse_mode(value);
            else if (key == "graph" || key == "support") s.graph = value;
            else if (key == "input") s.input = value;
            else if (key == "algorithm") s.algorithm = value;
            else if (key == "bandwidth") s.bandwidth = std::stoi(value);
            else if (key == "seed") s.seed = std::stoull(value);
            else if (key == "max_rounds") s.max_rounds = std::stoi(value);
            else if (key == "cut") s.cut = value;
            else throw FormatError("unknown key: " + key, lineno);
        } catch (const std::invalid_argument&) {
            throw FormatError("bad value for " + key + ": " + value, lineno);
        } catch (const std::out_of_range&) {
            throw FormatError("value out of range for " + key + ": " + value, lineno);
        }
    }
    if (s.graph.empty()) throw ConfigError("scenario needs a graph");
    if (s.algorithm.empty()) throw ConfigError("scenario needs an algorithm");
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

Graph load_graph_source(const std::string& source) {
    if (source.rfind("file:", 0) == 0) {
        const std::string path = source.substr(5);
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open graph file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_graph(buf.str());
    }
    return make_generated(source);
}

ResolvedScenario resolve_scenario(const Scenario& s) {
    Graph support = load_graph_source(s.graph);
    Graph input = s.input.empty() ? support : load_graph_source(s.input);
    const bool spanning = input.node_count() == support.node_count();

    ResolvedScenario r{SupportedInstance::make(std::move(support), std::move(input), spanning),
                       find_algorithm(s.algorithm, s.mode),
                       RunConfig{}};
    r.config.mode = s.mode;
    r.config.bandwidth = s.bandwidth;
    r.config.seed = s.seed;
    r.config.max_rounds = s.max_rounds;

    if (!s.cut.empty()) {
        std::vector<EdgeKey> cut;
        std::stringstream ss(s.cut);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto dash = tok.find('-');
            if (dash == std::string::npos) throw ConfigError("cut edges look like u-v: " + tok);
            try {
                cut.emplace_back(static_cast<NodeId>(std::stoull(tok.substr(0, dash))),
                                 static_cast<NodeId>(std::stoull(tok.substr(dash + 1))));
            } catch (const std::exception&) {
                throw ConfigError("cut edges look like u-v: " + tok);
            }
        }
        r.config.designated_cut = std::move(cut);
    }

    // BFS roots must resolve to a node of the input graph.
    if (s.algorithm.rfind("bfs", 0) == 0) {
        auto open = s.algorithm.find('(');
        std::string digits = s.algorithm.substr(open + 1, s.algorithm.size() - open - 2);
        auto eq = digits.find('=');
        if (eq != std::string::npos) digits = digits.substr(eq + 1);
        if (!r.instance.input.has_node(static_cast<NodeId>(std::stoull(digits))))
            throw ConfigError("bfs root is not a node of the input graph");
    }
    return r;
}

}  // namespace congest
