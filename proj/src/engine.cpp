#include "congestsim/engine.hpp"

#include <algorithm>
#include <set>

namespace congest {

const char* mode_name(ExecutionMode mode) {
    switch (mode) {
        case ExecutionMode::PlainCongest: return "plain";
        case ExecutionMode::SupportedActive: return "active";
        case ExecutionMode::SupportedPassive: return "passive";
    }
    return "?";
}

AdviceMap preprocess(const Graph& h, const AdviceFn& advice_fn) {
    return preprocess(h, advice_fn, h.nodes());
}

AdviceMap preprocess(const Graph& h, const AdviceFn& advice_fn, const std::vector<NodeId>& nodes) {
    AdviceMap out;
    for (NodeId v : nodes) out[v] = advice_fn(h, v);
    return out;
}

namespace detail {

RoundRunner::RoundRunner(const AlgorithmSpec& alg, std::vector<NodeSetup> setups) : alg_(&alg) {
    std::sort(setups.begin(), setups.end(),
              [](const NodeSetup& a, const NodeSetup& b) { return a.ctx.id < b.ctx.id; });
    slots_.reserve(setups.size());
    for (auto& s : setups) {
        NodeSlot slot;
        slot.ctx = std::move(s.ctx);
        slot.port_targets = std::move(s.port_targets);
        slot.port_send_allowed = std::move(s.port_send_allowed);
        for (std::size_t p = 0; p < slot.port_targets.size(); ++p)
            slot.port_of[slot.port_targets[p]] = static_cast<int>(p);
        index_[slot.ctx.id] = slots_.size();
        slots_.push_back(std::move(slot));
    }
}

void RoundRunner::init() {
    for (auto& slot : slots_) slot.state = alg_->init(slot.ctx);
    record_outputs();
}

void RoundRunner::record_outputs() {
    for (auto& slot : slots_) {
        std::optional<OutputValue> out = alg_->output(*slot.state);
        auto prev = outputs_.find(slot.ctx.id);
        if (prev != outputs_.end()) {
            if (!out || *out != prev->second)
                throw SimError("output stability violated at node " + std::to_string(slot.ctx.id));
        } else if (out) {
            outputs_[slot.ctx.id] = *out;
        }
    }
}

std::vector<RoundRunner::ExternalMsg> RoundRunner::step(int round,
                                                        const std::vector<ExternalMsg>& inbound) {
    for (const ExternalMsg& m : inbound) {
        auto it = index_.find(m.to);
        if (it == index_.end()) throw SimError("external message to unknown node");
        NodeSlot& slot = slots_[it->second];
        auto port = slot.port_of.find(m.from);
        if (port == slot.port_of.end())
            throw SimError("external message from non-neighbor " + std::to_string(m.from));
        slot.pending[port->second] = m.payload;
    }

    std::vector<ExternalMsg> outgoing;
    std::vector<std::pair<std::size_t, Outbox>> sent;  // slot index -> outbox
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        NodeSlot& slot = slots_[i];
        Inbox inbox = std::move(slot.pending);
        slot.pending.clear();
        Outbox outbox;
        alg_->on_round(*slot.state, slot.ctx, round, inbox, outbox);

        for (const auto& [port, payload] : outbox) {
            if (port < 0 || static_cast<std::size_t>(port) >= slot.ctx.degree)
                throw IllegalSend("node " + std::to_string(slot.ctx.id) + " sent to invalid port " +
                                  std::to_string(port));
            if (!slot.port_send_allowed[static_cast<std::size_t>(port)])
                throw IllegalSend("node " + std::to_string(slot.ctx.id) +
                                  " sent over an edge not permitted in this mode (round " +
                                  std::to_string(round) + ")");
            if (payload.empty())
                throw SimError("node " + std::to_string(slot.ctx.id) + " sent an empty message");
            if (payload.size() > static_cast<std::size_t>(slot.ctx.bandwidth))
                throw BandwidthExceeded("node " + std::to_string(slot.ctx.id) + " sent " +
                                        std::to_string(payload.size()) + " bits > b = " +
                                        std::to_string(slot.ctx.bandwidth) + " (round " +
                                        std::to_string(round) + ")");
        }
        sent.emplace_back(i, std::move(outbox));
    }

    // Simultaneous delivery: route after every node has produced its outbox.
    for (auto& [i, outbox] : sent) {
        NodeSlot& slot = slots_[i];
        for (auto& [port, payload] : outbox) {
            NodeId target = slot.port_targets[static_cast<std::size_t>(port)];
            trace_.push_back(TraceEntry{round, slot.ctx.id, target, payload});
            auto it = index_.find(target);
            if (it != index_.end()) {
                NodeSlot& dst = slots_[it->second];
                dst.pending[dst.port_of.at(slot.ctx.id)] = std::move(payload);
            } else {
                outgoing.push_back(ExternalMsg{slot.ctx.id, target, std::move(payload)});
            }
        }
    }

    record_outputs();
    return outgoing;
}

bool RoundRunner::all_output() const { return outputs_.size() == slots_.size(); }

std::vector<NodeId> RoundRunner::missing_outputs() const {
    std::vector<NodeId> missing;
    for (const auto& slot : slots_)
        if (!outputs_.count(slot.ctx.id)) missing.push_back(slot.ctx.id);
    return missing;
}

}  // namespace detail

namespace {

struct ModePlan {
    const Graph* comm = nullptr;        // communication topology
    std::vector<NodeId> participants;   // nodes that execute
    std::uint32_t n_param = 0;
    bool supported = false;
};

ModePlan plan_for(const SupportedInstance& inst, ExecutionMode mode) {
    ModePlan plan;
    switch (mode) {
        case ExecutionMode::PlainCongest:
            plan.comm = &inst.input;
            plan.participants = inst.input.nodes();
            plan.n_param = static_cast<std::uint32_t>(inst.input.node_count());
            plan.supported = false;
            break;
        case ExecutionMode::SupportedActive:
            plan.comm = &inst.support;
            plan.participants = inst.support.nodes();
            plan.n_param = static_cast<std::uint32_t>(inst.support.node_count());
            plan.supported = true;
            break;
        case ExecutionMode::SupportedPassive:
            // Ports still enumerate H-neighbors (the node knows H from the
            // preprocessing phase); only E(G) edges may carry messages, and
            // H-only nodes sit the run out.
            plan.comm = &inst.support;
            plan.participants = inst.input.nodes();
            plan.n_param = static_cast<std::uint32_t>(inst.support.node_count());
            plan.supported = true;
            break;
    }
    return plan;
}

}  // namespace

RunResult run(const SupportedInstance& instance, const AlgorithmSpec& alg, const RunConfig& cfg) {
    const ModePlan plan = plan_for(instance, cfg.mode);
    if (plan.n_param == 0) throw ConfigError("empty instance");

    const int bandwidth = cfg.bandwidth > 0 ? cfg.bandwidth : default_bandwidth(plan.n_param);
    if (bandwidth < 1) throw ConfigError("bandwidth must be >= 1");
    const int max_rounds = cfg.max_rounds >= 0 ? cfg.max_rounds : 10 * static_cast<int>(plan.n_param) + 100;

    const std::uint64_t id_limit = (id_bits(plan.n_param) >= 64)
                                       ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << id_bits(plan.n_param));
    for (NodeId v : plan.comm->nodes())
        if (v >= id_limit)
            throw ConfigError("node id " + std::to_string(v) + " does not fit in " +
                              std::to_string(id_bits(plan.n_param)) + " id bits");
    // Weights must fit in one message of the default width so algorithms can
    // ship them whole.
    if (plan.comm->weighted())
        for (Weight w : plan.comm->weights())
            if (w >= id_limit)
                throw ConfigError("edge weight " + std::to_string(w) + " does not fit in " +
                                  std::to_string(id_bits(plan.n_param)) + " bits");

    AdviceMap advice;
    if (plan.supported && alg.advice) advice = preprocess(instance.support, alg.advice);

    std::vector<detail::RoundRunner::NodeSetup> setups;
    setups.reserve(plan.participants.size());
    for (NodeId v : plan.participants) {
        detail::RoundRunner::NodeSetup s;
        s.ctx.id = v;
        s.ctx.n = plan.n_param;
        s.ctx.bandwidth = bandwidth;
        s.ctx.know_neighbor_ids = cfg.know_neighbor_ids;
        s.ctx.in_input_graph = instance.input.has_node(v);
        s.ctx.rng_seed = mix_seed(cfg.seed, v);
        if (plan.supported) {
            auto it = advice.find(v);
            if (it != advice.end()) s.ctx.advice = it->second;
        }
        const std::vector<NodeId>& nbrs = plan.comm->neighbors(v);
        s.ctx.degree = nbrs.size();
        s.port_targets = nbrs;
        if (cfg.know_neighbor_ids) s.ctx.neighbor_ids = nbrs;
        s.ctx.port_in_input.reserve(nbrs.size());
        s.port_send_allowed.reserve(nbrs.size());
        for (NodeId u : nbrs) {
            const bool in_g = instance.input.has_edge(EdgeKey(v, u));
            s.ctx.port_in_input.push_back(in_g ? 1 : 0);
            const bool allowed = (cfg.mode == ExecutionMode::SupportedActive) ? true : in_g;
            s.port_send_allowed.push_back(allowed ? 1 : 0);
        }
        setups.push_back(std::move(s));
    }

    detail::RoundRunner runner(alg, std::move(setups));
    runner.init();

    int rounds = 0;
    while (!runner.all_output()) {
        if (rounds >= max_rounds) {
            std::string missing;
            for (NodeId v : runner.missing_outputs()) missing += " " + std::to_string(v);
            throw NonTermination("max_rounds = " + std::to_string(max_rounds) +
                                 " reached; nodes without output:" + missing);
        }
        ++rounds;
        std::vector<detail::RoundRunner::ExternalMsg> leaked = runner.step(rounds, {});
        if (!leaked.empty()) throw SimError("message escaped the node set");
    }

    RunResult result;
    result.outputs = runner.outputs();
    result.trace = runner.trace();
    std::sort(result.trace.begin(), result.trace.end());

    result.metrics.rounds = rounds;
    std::set<EdgeKey> cut;
    if (cfg.designated_cut) cut.insert(cfg.designated_cut->begin(), cfg.designated_cut->end());
    for (const TraceEntry& t : result.trace) {
        result.metrics.bits_total += t.payload.size();
        result.metrics.bits_per_edge[DirectedEdge{t.from, t.to}] += t.payload.size();
        if (cut.count(EdgeKey(t.from, t.to))) result.metrics.cut_bits += t.payload.size();
    }
    for (const auto& [v, bytes] : advice) result.metrics.advice_bytes[v] = bytes.size();
    return result;
}

}  // namespace congest
