#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "congestsim/bits.hpp"
#include "congestsim/graph.hpp"

namespace congest {

// A message is a payload of at most b(n) bits; the length is part of the
// message and is what all accounting counts. Empty payloads are rejected at
// send time: "no message" and "empty message" must stay distinguishable.
using Message = BitString;

enum class ExecutionMode {
    PlainCongest,     // no preprocessing, communication over E(G)
    SupportedActive,  // preprocessing over H, communication over E(H)
    SupportedPassive  // preprocessing over H, communication over E(G)
};

const char* mode_name(ExecutionMode mode);

using Bytes = std::vector<std::uint8_t>;
using AdviceMap = std::map<NodeId, Bytes>;
using AdviceFn = std::function<Bytes(const Graph& h, NodeId v)>;

// Default per-edge, per-direction, per-round bandwidth: 2*ceil(log2 n) bits,
// each factor clamped to at least 1. Equals id_bits(n), so one identifier
// always fits in one message.
inline int default_bandwidth(std::uint64_t n) { return id_bits(n); }

// What a node knows when it starts. Ports index the node's communication
// neighbors in ascending NodeId order; neighbor identifiers are exposed only
// when the run is configured with know_neighbor_ids (the default).
struct NodeContext {
    NodeId id = 0;
    std::uint32_t n = 0;       // size parameter of the run (|V(H)| supported, |V(G)| plain)
    int bandwidth = 0;         // b(n)
    bool know_neighbor_ids = true;
    std::vector<NodeId> neighbor_ids;        // by port; empty unless know_neighbor_ids
    std::vector<std::uint8_t> port_in_input; // by port: 1 iff the edge is in E(G)
    std::size_t degree = 0;                  // number of ports
    bool in_input_graph = true;              // false only for H-only nodes in active mode
    Bytes advice;                            // empty outside supported modes
    std::uint64_t rng_seed = 0;              // private coins: mix(global seed, id)
};

// Inbox/outbox keyed by port. Inbox iteration order is ascending port, i.e.
// ascending sender NodeId.
using Inbox = std::map<int, Message>;
using Outbox = std::map<int, Message>;

// Per-node algorithm state; algorithms subclass this.
struct NodeState {
    virtual ~NodeState() = default;
};

// Node outputs are flat integer vectors; each algorithm documents its
// encoding. Comparisons in checks are exact.
using OutputValue = std::vector<std::int64_t>;

// A node-local state machine: init builds the state from the context,
// on_round maps (state, inbox) to (state, outbox), output reads the final
// value once available. on_round must not consult anything beyond its
// arguments; outputs, once set, must never change.
struct AlgorithmSpec {
    std::string name;
    AdviceFn advice;  // preprocessing; null for plain algorithms
    std::function<std::unique_ptr<NodeState>(const NodeContext&)> init;
    std::function<void(NodeState&, const NodeContext&, int round, const Inbox&, Outbox&)> on_round;
    std::function<std::optional<OutputValue>(const NodeState&)> output;
};

struct DirectedEdge {
    NodeId from = 0;
    NodeId to = 0;
    auto operator<=>(const DirectedEdge&) const = default;
};

struct RunMetrics {
    int rounds = 0;
    std::uint64_t bits_total = 0;
    std::map<DirectedEdge, std::uint64_t> bits_per_edge;  // per direction, whole run
    std::uint64_t cut_bits = 0;                           // over the designated cut, both directions
    std::map<NodeId, std::size_t> advice_bytes;
};

struct TraceEntry {
    int round = 0;
    NodeId from = 0;
    NodeId to = 0;
    BitString payload;
    auto operator<=>(const TraceEntry&) const = default;
};

struct RunResult {
    std::map<NodeId, OutputValue> outputs;
    RunMetrics metrics;
    std::vector<TraceEntry> trace;  // sorted by (round, from, to)
};

struct RunConfig {
    ExecutionMode mode = ExecutionMode::PlainCongest;
    int bandwidth = 0;        // 0 -> default_bandwidth(n)
    std::uint64_t seed = 0;
    int max_rounds = -1;      // -1 -> 10*n + 100
    std::optional<std::vector<EdgeKey>> designated_cut;
    bool know_neighbor_ids = true;
};

// Runs the preprocessing phase: advice for every node of h (or the given
// subset), each entry a function of h and the node identity only.
AdviceMap preprocess(const Graph& h, const AdviceFn& advice_fn);
AdviceMap preprocess(const Graph& h, const AdviceFn& advice_fn, const std::vector<NodeId>& nodes);

// Synchronous execution: round r outboxes are delivered as round r+1
// inboxes over the edges the mode permits. Stops once every participating
// node has produced an output (T = that round; T = 0 when init already
// outputs) and throws NonTermination when max_rounds is hit first.
RunResult run(const SupportedInstance& instance, const AlgorithmSpec& alg, const RunConfig& cfg);

namespace detail {

// Steps a subset of nodes through synchronous rounds: the shared core of
// the monolithic engine and the per-player half simulations. Messages to
// nodes outside the set are returned from step(); messages from outside
// are fed into it.
class RoundRunner {
public:
    struct NodeSetup {
        NodeContext ctx;
        std::vector<NodeId> port_targets;             // by port; routing stays intact
        std::vector<std::uint8_t> port_send_allowed;  // by port
    };

    struct ExternalMsg {
        NodeId from;
        NodeId to;
        BitString payload;
    };

    RoundRunner(const AlgorithmSpec& alg, std::vector<NodeSetup> setups);

    // Calls init on every node (ascending id) and records initial outputs.
    void init();

    // Runs one round. `inbound` are messages from outside the node set that
    // are delivered this round; returns messages leaving the set this round.
    std::vector<ExternalMsg> step(int round, const std::vector<ExternalMsg>& inbound);

    bool all_output() const;
    std::vector<NodeId> missing_outputs() const;
    const std::map<NodeId, OutputValue>& outputs() const { return outputs_; }
    const std::vector<TraceEntry>& trace() const { return trace_; }
    bool has_node(NodeId v) const { return index_.count(v) != 0; }

private:
    struct NodeSlot {
        NodeContext ctx;
        std::vector<NodeId> port_targets;
        std::vector<std::uint8_t> port_send_allowed;
        std::unique_ptr<NodeState> state;
        Inbox pending;  // next round's inbox
        std::map<NodeId, int> port_of;
    };

    void record_outputs();

    const AlgorithmSpec* alg_;
    std::vector<NodeSlot> slots_;          // ascending id
    std::map<NodeId, std::size_t> index_;  // id -> slot
    std::map<NodeId, OutputValue> outputs_;
    std::vector<TraceEntry> trace_;
};

}  // namespace detail

}  // namespace congest
