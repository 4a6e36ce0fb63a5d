#include "congestsim/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace congest {

namespace {

void put_u64(Bytes& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(const Bytes& in, std::size_t offset) {
    if (offset + 8 > in.size()) throw SimError("advice too short");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | in[offset + static_cast<std::size_t>(i)];
    return v;
}

// Field widths for a run with size parameter n.
int dist_width(std::uint32_t n) { return std::max(1, ceil_log2(n)); }       // values 0..n-1
int count_width(std::uint32_t n) { return std::max(1, ceil_log2(std::uint64_t{n} + 1)); }  // 0..n

std::vector<int> input_ports(const NodeContext& ctx) {
    std::vector<int> ports;
    for (std::size_t p = 0; p < ctx.port_in_input.size(); ++p)
        if (ctx.port_in_input[p]) ports.push_back(static_cast<int>(p));
    return ports;
}

std::vector<NodeId> smallest_fresh_ids(const std::set<NodeId>& taken, std::size_t m, int idw) {
    const std::uint64_t limit = (idw >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << idw);
    std::vector<NodeId> fresh;
    for (std::uint64_t v = 0; v < limit && fresh.size() < m; ++v)
        if (!taken.count(static_cast<NodeId>(v))) fresh.push_back(static_cast<NodeId>(v));
    if (fresh.size() < m)
        throw IdSpaceExhausted("identifier space has fewer than " + std::to_string(m) +
                               " unused values");
    return fresh;
}

}  // namespace

std::map<NodeId, int> greedy_coloring(const Graph& g) {
    std::map<NodeId, int> color;
    for (NodeId v : g.nodes()) {
        std::set<int> used;
        for (NodeId u : g.neighbors(v)) {
            auto it = color.find(u);
            if (it != color.end()) used.insert(it->second);
        }
        int c = 0;
        while (used.count(c)) ++c;
        color[v] = c;
    }
    return color;
}

AdviceFn advice_node_count() {
    return [](const Graph& h, NodeId) {
        Bytes b;
        put_u64(b, h.node_count());
        return b;
    };
}

AdviceFn advice_greedy_coloring() {
    return [](const Graph& h, NodeId v) {
        Bytes b;
        put_u64(b, static_cast<std::uint64_t>(greedy_coloring(h).at(v)));
        return b;
    };
}

AdviceFn advice_sorted_ids() {
    return [](const Graph& h, NodeId) {
        Bytes b;
        put_u64(b, h.node_count());
        for (NodeId v : h.nodes()) put_u64(b, v);
        return b;
    };
}

namespace {

// BFS tree of h rooted at the smallest id; deterministic through sorted
// adjacency. parent[root] = root.
std::map<NodeId, NodeId> bfs_tree_parents(const Graph& h) {
    if (h.node_count() == 0) throw ConfigError("empty support graph");
    const NodeId root = h.nodes().front();
    std::map<NodeId, NodeId> parent;
    parent[root] = root;
    std::deque<NodeId> queue{root};
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (NodeId u : h.neighbors(v))
            if (!parent.count(u)) {
                parent[u] = v;
                queue.push_back(u);
            }
    }
    if (parent.size() != h.node_count())
        throw ConfigError("support graph must be connected for tree advice");
    return parent;
}

}  // namespace

AdviceFn advice_bfs_tree() {
    return [](const Graph& h, NodeId v) {
        std::map<NodeId, NodeId> parent = bfs_tree_parents(h);
        std::vector<NodeId> children;
        for (const auto& [c, p] : parent)
            if (p == v && c != v) children.push_back(c);
        Bytes b;
        put_u64(b, parent.at(v));
        put_u64(b, children.size());
        for (NodeId c : children) put_u64(b, c);
        return b;
    };
}

// -------------------------------------------------------------------------
// BFS

namespace {

// 2-bit wave/echo codes; distances are implicit in arrival rounds.
constexpr std::uint64_t kBfsAnnounce = 0;       // settled, you are not my parent
constexpr std::uint64_t kBfsClaim = 1;          // settled, you are my parent
constexpr std::uint64_t kBfsClaimEcho = 2;      // claim + subtree already complete
constexpr std::uint64_t kBfsEcho = 3;           // subtree complete (to parent)

struct BfsState : NodeState {
    bool is_root = false;
    std::vector<int> gports;
    long long dist = -1;
    int parent_port = -1;
    bool announced = false;
    bool echoed = false;
    std::set<int> settled;  // gports that announced
    std::set<int> claimed;  // gports that claimed us
    std::set<int> echoes;   // gports whose echo arrived
    std::optional<OutputValue> out;

    bool subtree_complete() const {
        for (int p : gports)
            if (p != parent_port && !settled.count(p)) return false;
        for (int p : claimed)
            if (!echoes.count(p)) return false;
        return true;
    }
};

}  // namespace

AlgorithmSpec alg_bfs(NodeId root) {
    AlgorithmSpec alg;
    alg.name = "bfs";
    alg.init = [root](const NodeContext& ctx) {
        auto st = std::make_unique<BfsState>();
        st->gports = input_ports(ctx);
        if (ctx.id == root && ctx.in_input_graph) {
            st->is_root = true;
            st->dist = 0;
            if (st->gports.empty()) st->out = OutputValue{0};
        }
        return st;
    };
    alg.on_round = [](NodeState& state, const NodeContext& ctx, int round, const Inbox& inbox,
                      Outbox& outbox) {
        auto& st = static_cast<BfsState&>(state);
        for (const auto& [port, msg] : inbox) {
            const std::uint64_t code = msg.read_uint(0, 2);
            if (code == kBfsEcho) {
                st.echoes.insert(port);
                continue;
            }
            st.settled.insert(port);
            if (code == kBfsClaim || code == kBfsClaimEcho) st.claimed.insert(port);
            if (code == kBfsClaimEcho) st.echoes.insert(port);
            if (st.dist < 0) {
                st.dist = round - 1;
                st.parent_port = port;  // smallest announcing port this round
            }
        }

        if (st.dist >= 0 && !st.announced) {
            st.announced = true;
            const bool echo_now = !st.is_root && st.subtree_complete();
            for (int p : st.gports) {
                const std::uint64_t code = (p != st.parent_port) ? kBfsAnnounce
                                           : echo_now            ? kBfsClaimEcho
                                                                 : kBfsClaim;
                outbox[p] = BitString::from_uint(code, 2);
            }
            if (echo_now) st.echoed = true;
            if (!st.is_root && !st.out) st.out = OutputValue{st.dist};
        }

        if (st.announced && !st.echoed && !st.is_root && st.subtree_complete()) {
            st.echoed = true;
            outbox[st.parent_port] = BitString::from_uint(kBfsEcho, 2);
        }
        if (st.is_root && !st.out && st.subtree_complete() && st.announced) st.out = OutputValue{0};

        // Unreachable nodes give up once the wave can no longer arrive.
        if (st.dist < 0 && round >= static_cast<int>(ctx.n) + 1 && !st.out)
            st.out = OutputValue{-1};
    };
    alg.output = [](const NodeState& state) { return static_cast<const BfsState&>(state).out; };
    return alg;
}

// -------------------------------------------------------------------------
// APSP and diameter

namespace {

// Fixed-output state shared by the zero-round supported algorithms.
struct FixedState : NodeState {
    OutputValue out;
};

struct ApspState : NodeState {
    int idw = 0;
    int distw = 0;
    long long budget = 0;  // 3n
    std::vector<int> gports;
    std::map<NodeId, long long> table;
    std::map<int, std::map<NodeId, long long>> sent;  // per gport
    std::optional<OutputValue> out;

    void relax(NodeId id, long long d) {
        auto it = table.find(id);
        if (it == table.end() || d < it->second) table[id] = d;
    }

    void absorb(const Inbox& inbox) {
        for (const auto& [port, msg] : inbox) {
            BitReader r(msg);
            const NodeId id = static_cast<NodeId>(r.take_uint(idw));
            const long long d = static_cast<long long>(r.take_uint(distw));
            relax(id, d + 1);
        }
    }

    void pump(Outbox& outbox) {
        for (int p : gports) {
            const std::map<NodeId, long long>& s = sent[p];
            const std::pair<long long, NodeId>* best = nullptr;
            std::pair<long long, NodeId> best_val;
            for (const auto& [id, d] : table) {
                auto it = s.find(id);
                if (it != s.end() && it->second == d) continue;
                std::pair<long long, NodeId> cand{d, id};
                if (!best || cand < best_val) {
                    best_val = cand;
                    best = &best_val;
                }
            }
            if (best) {
                BitString msg;
                msg.append_uint(best_val.second, idw);
                msg.append_uint(static_cast<std::uint64_t>(best_val.first), distw);
                outbox[p] = std::move(msg);
                sent[p][best_val.second] = best_val.first;
            }
        }
    }

    OutputValue encode_table() const {
        OutputValue v;
        for (const auto& [id, d] : table) {
            v.push_back(static_cast<std::int64_t>(id));
            v.push_back(d);
        }
        return v;
    }
};

void apsp_setup(ApspState& st, const NodeContext& ctx) {
    st.idw = id_bits(ctx.n);
    st.distw = dist_width(ctx.n);
    if (ctx.bandwidth < st.idw + st.distw)
        throw ConfigError("apsp needs bandwidth >= " + std::to_string(st.idw + st.distw) +
                          ", have " + std::to_string(ctx.bandwidth));
    st.budget = 3 * static_cast<long long>(ctx.n);
    st.gports = input_ports(ctx);
    st.table[ctx.id] = 0;
}

}  // namespace

AlgorithmSpec alg_apsp_pipelined() {
    AlgorithmSpec alg;
    alg.name = "apsp";
    alg.init = [](const NodeContext& ctx) {
        auto st = std::make_unique<ApspState>();
        apsp_setup(*st, ctx);
        return st;
    };
    alg.on_round = [](NodeState& state, const NodeContext&, int round, const Inbox& inbox,
                      Outbox& outbox) {
        auto& st = static_cast<ApspState&>(state);
        st.absorb(inbox);
        if (round < st.budget) st.pump(outbox);
        if (round == st.budget) st.out = st.encode_table();
    };
    alg.output = [](const NodeState& state) { return static_cast<const ApspState&>(state).out; };
    return alg;
}

namespace {

struct DiameterState : ApspState {
    long long best = -1;
};

}  // namespace

AlgorithmSpec alg_diameter() {
    AlgorithmSpec alg;
    alg.name = "diameter";
    alg.init = [](const NodeContext& ctx) {
        auto st = std::make_unique<DiameterState>();
        apsp_setup(*st, ctx);
        return st;
    };
    alg.on_round = [](NodeState& state, const NodeContext& ctx, int round, const Inbox& inbox,
                      Outbox& outbox) {
        auto& st = static_cast<DiameterState&>(state);
        const long long finish = 4 * static_cast<long long>(ctx.n);
        if (round <= st.budget) {
            st.absorb(inbox);
            if (round < st.budget) st.pump(outbox);
            if (round == st.budget)
                for (const auto& [id, d] : st.table) st.best = std::max(st.best, d);
            return;
        }
        for (const auto& [port, msg] : inbox)
            st.best = std::max(st.best, static_cast<long long>(msg.read_uint(0, st.distw)));
        if (round < finish)
            for (int p : st.gports)
                outbox[p] = BitString::from_uint(static_cast<std::uint64_t>(st.best), st.distw);
        if (round == finish) st.out = OutputValue{st.best};
    };
    alg.output = [](const NodeState& state) { return static_cast<const DiameterState&>(state).out; };
    return alg;
}

// -------------------------------------------------------------------------
// 4-cycle detection (supported active mode)

namespace {

struct GatherState : NodeState {
    int idw = 0;
    int lenw = 0;
    long long lists_done = 0;  // round after which all lists are in: n + 1
    std::vector<int> gports;
    std::vector<NodeId> own_list;
    std::size_t send_idx = 0;
    std::map<int, std::size_t> expect;           // per gport, announced degree
    std::map<int, std::vector<NodeId>> lists;    // per gport, G-adjacency of that neighbor
    bool detected = false;

    bool is_root = false;
    int parent_port = -1;
    std::vector<int> child_ports;
    std::set<int> child_reports;
    bool or_bits = false;
    bool sent_up = false;
    bool concluded = false;
    std::optional<OutputValue> out;
};

}  // namespace

AlgorithmSpec alg_four_cycle_gather() {
    AlgorithmSpec alg;
    alg.name = "four-cycle";
    alg.advice = advice_bfs_tree();
    alg.init = [](const NodeContext& ctx) {
        if (ctx.advice.empty()) throw MissingAdvice("four-cycle gather needs the tree advice");
        if (!ctx.know_neighbor_ids)
            throw ConfigError("four-cycle gather needs neighbor identifiers");
        auto st = std::make_unique<GatherState>();
        st->idw = id_bits(ctx.n);
        st->lenw = dist_width(ctx.n);  // degrees are at most n-1
        st->lists_done = static_cast<long long>(ctx.n) + 1;
        st->gports = input_ports(ctx);
        for (int p : st->gports) st->own_list.push_back(ctx.neighbor_ids[static_cast<std::size_t>(p)]);

        const NodeId parent = static_cast<NodeId>(get_u64(ctx.advice, 0));
        const std::uint64_t nchild = get_u64(ctx.advice, 8);
        std::set<NodeId> children;
        for (std::uint64_t i = 0; i < nchild; ++i)
            children.insert(static_cast<NodeId>(get_u64(ctx.advice, 16 + 8 * i)));
        st->is_root = (parent == ctx.id);
        for (std::size_t p = 0; p < ctx.neighbor_ids.size(); ++p) {
            if (!st->is_root && ctx.neighbor_ids[p] == parent) st->parent_port = static_cast<int>(p);
            if (children.count(ctx.neighbor_ids[p])) st->child_ports.push_back(static_cast<int>(p));
        }
        return st;
    };
    alg.on_round = [](NodeState& state, const NodeContext& ctx, int round, const Inbox& inbox,
                      Outbox& outbox) {
        auto& st = static_cast<GatherState&>(state);

        if (round <= st.lists_done) {
            // Adjacency exchange: degree in round 1, one raw id per round after.
            for (const auto& [port, msg] : inbox) {
                if (round == 2)
                    st.expect[port] = msg.read_uint(0, st.lenw);
                else
                    st.lists[port].push_back(static_cast<NodeId>(msg.read_uint(0, st.idw)));
            }
            if (round == 1)
                for (int p : st.gports)
                    outbox[p] = BitString::from_uint(st.own_list.size(), st.lenw);
            else if (st.send_idx < st.own_list.size()) {
                for (int p : st.gports)
                    outbox[p] = BitString::from_uint(st.own_list[st.send_idx], st.idw);
                ++st.send_idx;
            }
            if (round == st.lists_done) {
                for (int p : st.gports)
                    if (st.lists[p].size() != st.expect[p])
                        throw SimError("adjacency list incomplete after the exchange phase");
                // A 4-cycle through this node: two distinct G-neighbors with a
                // second common neighbor.
                std::map<NodeId, int> seen;
                for (int p : st.gports)
                    for (NodeId x : st.lists[p])
                        if (x != ctx.id && ++seen[x] >= 2) st.detected = true;
                st.or_bits = st.detected;
            }
            return;
        }

        // OR aggregation over the tree carried in the advice.
        for (const auto& [port, msg] : inbox) {
            const bool bit = msg.read_uint(0, 1) != 0;
            if (port == st.parent_port && !st.is_root) {
                // Verdict coming down.
                if (!st.concluded) {
                    st.concluded = true;
                    st.out = OutputValue{bit ? 1 : 0};
                    for (int c : st.child_ports) outbox[c] = BitString::from_uint(bit ? 1 : 0, 1);
                }
            } else {
                st.child_reports.insert(port);
                st.or_bits = st.or_bits || bit;
            }
        }
        if (!st.sent_up && st.child_reports.size() == st.child_ports.size()) {
            st.sent_up = true;
            if (st.is_root) {
                st.concluded = true;
                st.out = OutputValue{st.or_bits ? 1 : 0};
                for (int c : st.child_ports)
                    outbox[c] = BitString::from_uint(st.or_bits ? 1 : 0, 1);
            } else {
                outbox[st.parent_port] = BitString::from_uint(st.or_bits ? 1 : 0, 1);
            }
        }
    };
    alg.output = [](const NodeState& state) { return static_cast<const GatherState&>(state).out; };
    return alg;
}

// -------------------------------------------------------------------------
// Network-size upper bound

namespace {

AlgorithmSpec size_bound_supported() {
    AlgorithmSpec alg;
    alg.name = "size-upper-bound";
    alg.advice = advice_node_count();
    alg.init = [](const NodeContext& ctx) {
        if (ctx.advice.empty())
            throw MissingAdvice("size-upper-bound needs preprocessing in supported mode");
        auto st = std::make_unique<FixedState>();
        st->out = OutputValue{static_cast<std::int64_t>(get_u64(ctx.advice, 0))};
        return st;
    };
    alg.on_round = [](NodeState&, const NodeContext&, int, const Inbox&, Outbox&) {};
    alg.output = [](const NodeState& state) {
        return std::optional<OutputValue>(static_cast<const FixedState&>(state).out);
    };
    return alg;
}

// Plain-mode exact count: minimum-id election by a propagation wave with
// feedback, subtree counting, then a broadcast of the total. Logical
// messages are chunked into [2-bit type][data] physical messages so
// everything fits the default bandwidth; the answer never reads ctx.n.
constexpr int kPifAnnounce = 0;
constexpr int kPifEcho = 1;
constexpr int kPifBcast = 2;
constexpr int kPifCont = 3;

struct PifMsg {
    int type = 0;
    NodeId root = 0;  // staleness tag for queued announces/echoes
    BitString payload;
};

struct PifState : NodeState {
    bool hello = false;  // n <= 2 degenerate mode

    int idw = 0;
    int cntw = 0;
    int data_bits = 0;

    NodeId best = 0;
    int parent_port = -1;  // -1: own id is best
    std::map<int, std::uint64_t> acked;
    bool completed = false;
    std::optional<std::uint64_t> total;
    bool forwarded = false;

    std::vector<std::deque<PifMsg>> outq;
    std::vector<std::size_t> progress;  // sent bits of each queue front
    struct Assembly {
        int type = -1;
        BitString buf;
    };
    std::vector<Assembly> assembly;

    std::optional<OutputValue> out;

    std::size_t expected_bits(int type) const {
        switch (type) {
            case kPifAnnounce: return static_cast<std::size_t>(idw);
            case kPifEcho: return static_cast<std::size_t>(idw + cntw);
            case kPifBcast: return static_cast<std::size_t>(cntw);
        }
        throw SimError("unexpected message type");
    }

    void enqueue_announce(int port) {
        PifMsg m;
        m.type = kPifAnnounce;
        m.root = best;
        m.payload.append_uint(best, idw);
        outq[static_cast<std::size_t>(port)].push_back(std::move(m));
    }

    void enqueue_echo(int port, NodeId root, std::uint64_t count) {
        PifMsg m;
        m.type = kPifEcho;
        m.root = root;
        m.payload.append_uint(root, idw);
        m.payload.append_uint(count, cntw);
        outq[static_cast<std::size_t>(port)].push_back(std::move(m));
    }

    void enqueue_bcast(int port, std::uint64_t count) {
        PifMsg m;
        m.type = kPifBcast;
        m.payload.append_uint(count, cntw);
        outq[static_cast<std::size_t>(port)].push_back(std::move(m));
    }

    void adopt(NodeId root, int port, std::size_t nports) {
        best = root;
        parent_port = port;
        acked.clear();
        completed = false;
        // Queued announces and echoes for superseded roots are pointless;
        // drop the ones that have not started transmitting.
        for (std::size_t p = 0; p < outq.size(); ++p) {
            std::deque<PifMsg>& q = outq[p];
            std::deque<PifMsg> kept;
            for (std::size_t i = 0; i < q.size(); ++i) {
                const bool started = (i == 0 && progress[p] > 0);
                const bool stale = (q[i].type == kPifAnnounce || q[i].type == kPifEcho) &&
                                   q[i].root != best;
                if (started || !stale) kept.push_back(std::move(q[i]));
            }
            q = std::move(kept);
        }
        for (std::size_t p = 0; p < nports; ++p)
            if (static_cast<int>(p) != port) enqueue_announce(static_cast<int>(p));
    }

    void check_completion(std::size_t nports) {
        if (completed) return;
        for (std::size_t p = 0; p < nports; ++p)
            if (static_cast<int>(p) != parent_port && !acked.count(static_cast<int>(p))) return;
        completed = true;
        std::uint64_t subtotal = 1;
        for (const auto& [p, c] : acked) subtotal += c;
        if (parent_port < 0) {
            total = subtotal;
            out = OutputValue{static_cast<std::int64_t>(subtotal)};
            forwarded = true;
            for (std::size_t p = 0; p < nports; ++p) enqueue_bcast(static_cast<int>(p), subtotal);
        } else {
            enqueue_echo(parent_port, best, subtotal);
        }
    }

    void pump(Outbox& outbox, int bandwidth) {
        for (std::size_t p = 0; p < outq.size(); ++p) {
            if (outq[p].empty()) continue;
            PifMsg& front = outq[p].front();
            const std::size_t remaining = front.payload.size() - progress[p];
            const std::size_t chunk = std::min(remaining, static_cast<std::size_t>(data_bits));
            BitString msg;
            msg.append_uint(progress[p] == 0 ? static_cast<std::uint64_t>(front.type)
                                             : static_cast<std::uint64_t>(kPifCont),
                            2);
            msg.append(front.payload.slice(progress[p], chunk));
            if (msg.size() > static_cast<std::size_t>(bandwidth))
                throw SimError("pif chunk exceeds bandwidth");
            outbox[static_cast<int>(p)] = std::move(msg);
            progress[p] += chunk;
            if (progress[p] == front.payload.size()) {
                outq[p].pop_front();
                progress[p] = 0;
            }
        }
    }
};

AlgorithmSpec size_bound_plain() {
    AlgorithmSpec alg;
    alg.name = "size-upper-bound";
    alg.init = [](const NodeContext& ctx) {
        auto st = std::make_unique<PifState>();
        if (ctx.n <= 2) {
            st->hello = true;
            if (ctx.degree == 0) st->out = OutputValue{1};
            return st;
        }
        if (ctx.bandwidth < 3)
            throw ConfigError("plain size count needs bandwidth >= 3 for n > 2");
        st->idw = id_bits(ctx.n);
        st->cntw = count_width(ctx.n);
        st->data_bits = ctx.bandwidth - 2;
        st->best = ctx.id;
        st->parent_port = -1;
        st->outq.resize(ctx.degree);
        st->progress.assign(ctx.degree, 0);
        st->assembly.resize(ctx.degree);
        for (std::size_t p = 0; p < ctx.degree; ++p) st->enqueue_announce(static_cast<int>(p));
        st->check_completion(ctx.degree);  // isolated node is its own network
        return st;
    };
    alg.on_round = [](NodeState& state, const NodeContext& ctx, int round, const Inbox& inbox,
                      Outbox& outbox) {
        auto& st = static_cast<PifState&>(state);
        if (st.hello) {
            if (round == 1 && ctx.degree > 0)
                for (std::size_t p = 0; p < ctx.degree; ++p)
                    outbox[static_cast<int>(p)] = BitString::from_uint(1, 1);
            if (round == 2) st.out = OutputValue{static_cast<std::int64_t>(1 + inbox.size())};
            return;
        }

        for (const auto& [port, msg] : inbox) {
            BitReader r(msg);
            const int type = static_cast<int>(r.take_uint(2));
            PifState::Assembly& as = st.assembly[static_cast<std::size_t>(port)];
            if (type == kPifCont) {
                if (as.type < 0) throw SimError("continuation chunk without a start");
            } else {
                if (as.type >= 0) throw SimError("start chunk while assembling");
                as.type = type;
            }
            as.buf.append(r.take_bits(r.remaining()));
            if (as.buf.size() < st.expected_bits(as.type)) continue;
            if (as.buf.size() > st.expected_bits(as.type)) throw SimError("oversized message");

            BitReader body(as.buf);
            if (as.type == kPifAnnounce) {
                const NodeId root = static_cast<NodeId>(body.take_uint(st.idw));
                if (root < st.best)
                    st.adopt(root, port, ctx.degree);
                else
                    st.enqueue_echo(port, root, 0);
            } else if (as.type == kPifEcho) {
                const NodeId root = static_cast<NodeId>(body.take_uint(st.idw));
                const std::uint64_t count = body.take_uint(st.cntw);
                if (root == st.best) st.acked[port] = count;
            } else {
                const std::uint64_t count = body.take_uint(st.cntw);
                if (!st.total) {
                    st.total = count;
                    st.out = OutputValue{static_cast<std::int64_t>(count)};
                }
                if (!st.forwarded) {
                    st.forwarded = true;
                    for (std::size_t p = 0; p < ctx.degree; ++p)
                        if (static_cast<int>(p) != port) st.enqueue_bcast(static_cast<int>(p), count);
                }
            }
            as.type = -1;
            as.buf = BitString{};
        }

        st.check_completion(ctx.degree);
        st.pump(outbox, ctx.bandwidth);
    };
    alg.output = [](const NodeState& state) { return static_cast<const PifState&>(state).out; };
    return alg;
}

}  // namespace

AlgorithmSpec alg_size_upper_bound(ExecutionMode mode) {
    return mode == ExecutionMode::PlainCongest ? size_bound_plain() : size_bound_supported();
}

// -------------------------------------------------------------------------
// Coloring from the support

AlgorithmSpec alg_color_via_support() {
    AlgorithmSpec alg;
    alg.name = "coloring";
    alg.advice = advice_greedy_coloring();
    struct ColorState : NodeState {
        OutputValue out;
    };
    alg.init = [](const NodeContext& ctx) {
        if (ctx.advice.empty()) throw MissingAdvice("coloring needs preprocessing");
        auto st = std::make_unique<ColorState>();
        st->out = OutputValue{static_cast<std::int64_t>(get_u64(ctx.advice, 0))};
        return st;
    };
    alg.on_round = [](NodeState&, const NodeContext&, int, const Inbox&, Outbox&) {};
    alg.output = [](const NodeState& state) {
        return std::optional<OutputValue>(static_cast<const ColorState&>(state).out);
    };
    return alg;
}

// -------------------------------------------------------------------------
// Identifier sets

namespace {

OutputValue encode_id_sets(const std::vector<NodeId>& i0, const std::vector<NodeId>& i1) {
    OutputValue v;
    v.push_back(static_cast<std::int64_t>(i0.size()));
    for (NodeId x : i0) v.push_back(static_cast<std::int64_t>(x));
    for (NodeId x : i1) v.push_back(static_cast<std::int64_t>(x));
    return v;
}

AlgorithmSpec identifier_sets_supported() {
    AlgorithmSpec alg;
    alg.name = "identifier-sets";
    alg.advice = advice_sorted_ids();
    struct IdState : NodeState {
        OutputValue out;
    };
    alg.init = [](const NodeContext& ctx) {
        if (ctx.advice.empty()) throw MissingAdvice("identifier-sets needs preprocessing");
        const std::uint64_t count = get_u64(ctx.advice, 0);
        std::vector<NodeId> i1;
        std::set<NodeId> taken;
        for (std::uint64_t i = 0; i < count; ++i) {
            const NodeId v = static_cast<NodeId>(get_u64(ctx.advice, 8 + 8 * i));
            i1.push_back(v);
            taken.insert(v);
        }
        auto st = std::make_unique<IdState>();
        st->out = encode_id_sets(smallest_fresh_ids(taken, i1.size(), id_bits(ctx.n)), i1);
        return st;
    };
    alg.on_round = [](NodeState&, const NodeContext&, int, const Inbox&, Outbox&) {};
    alg.output = [](const NodeState& state) {
        return std::optional<OutputValue>(static_cast<const IdState&>(state).out);
    };
    return alg;
}

struct IdGossipState : NodeState {
    int idw = 0;
    std::set<NodeId> known;
    std::map<int, std::set<NodeId>> sent;
    std::optional<OutputValue> out;

    void maybe_finish(const NodeContext& ctx) {
        if (out || known.size() < ctx.n) return;
        std::vector<NodeId> i1(known.begin(), known.end());
        out = encode_id_sets(smallest_fresh_ids(known, i1.size(), idw), i1);
    }
};

AlgorithmSpec identifier_sets_plain() {
    AlgorithmSpec alg;
    alg.name = "identifier-sets";
    alg.init = [](const NodeContext& ctx) {
        auto st = std::make_unique<IdGossipState>();
        st->idw = id_bits(ctx.n);
        st->known.insert(ctx.id);
        for (NodeId u : ctx.neighbor_ids) st->known.insert(u);
        st->maybe_finish(ctx);
        return st;
    };
    alg.on_round = [](NodeState& state, const NodeContext& ctx, int, const Inbox& inbox,
                      Outbox& outbox) {
        auto& st = static_cast<IdGossipState&>(state);
        for (const auto& [port, msg] : inbox)
            st.known.insert(static_cast<NodeId>(msg.read_uint(0, st.idw)));
        for (std::size_t p = 0; p < ctx.degree; ++p) {
            std::set<NodeId>& done = st.sent[static_cast<int>(p)];
            for (NodeId v : st.known)
                if (!done.count(v)) {
                    outbox[static_cast<int>(p)] = BitString::from_uint(v, st.idw);
                    done.insert(v);
                    break;
                }
        }
        st.maybe_finish(ctx);
    };
    alg.output = [](const NodeState& state) {
        return static_cast<const IdGossipState&>(state).out;
    };
    return alg;
}

}  // namespace

AlgorithmSpec alg_identifier_sets(ExecutionMode mode) {
    return mode == ExecutionMode::PlainCongest ? identifier_sets_plain()
                                               : identifier_sets_supported();
}

// -------------------------------------------------------------------------
// Decoders and the name registry

IdentifierSetsOutput decode_identifier_sets(const OutputValue& value) {
    if (value.empty()) throw SimError("empty identifier-sets output");
    const std::size_t m = static_cast<std::size_t>(value[0]);
    if (value.size() != 1 + 2 * m) throw SimError("malformed identifier-sets output");
    IdentifierSetsOutput out;
    for (std::size_t i = 0; i < m; ++i) out.i0.push_back(static_cast<NodeId>(value[1 + i]));
    for (std::size_t i = 0; i < m; ++i) out.i1.push_back(static_cast<NodeId>(value[1 + m + i]));
    return out;
}

std::map<NodeId, long long> decode_distance_vector(const OutputValue& value) {
    if (value.size() % 2 != 0) throw SimError("malformed distance vector");
    std::map<NodeId, long long> out;
    for (std::size_t i = 0; i < value.size(); i += 2)
        out[static_cast<NodeId>(value[i])] = value[i + 1];
    return out;
}

AlgorithmSpec find_algorithm(const std::string& expr, ExecutionMode mode) {
    std::string name = expr;
    std::string args;
    auto open = expr.find('(');
    if (open != std::string::npos) {
        if (expr.back() != ')') throw ConfigError("bad algorithm expression: " + expr);
        name = expr.substr(0, open);
        args = expr.substr(open + 1, expr.size() - open - 2);
    }
    if (name == "bfs") {
        std::string digits = args;
        auto eq = digits.find('=');
        if (eq != std::string::npos) digits = digits.substr(eq + 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ConfigError("bfs needs a numeric root, e.g. bfs(0)");
        return alg_bfs(static_cast<NodeId>(std::stoull(digits)));
    }
    if (name == "apsp") return alg_apsp_pipelined();
    if (name == "diameter") return alg_diameter();
    if (name == "four-cycle") return alg_four_cycle_gather();
    if (name == "size-upper-bound") return alg_size_upper_bound(mode);
    if (name == "coloring") return alg_color_via_support();
    if (name == "identifier-sets") return alg_identifier_sets(mode);
    throw ConfigError("unknown algorithm: " + name);
}

std::vector<std::string> algorithm_names() {
    return {"bfs(root)", "apsp", "diameter", "four-cycle", "size-upper-bound", "coloring",
            "identifier-sets"};
}

}  // namespace congest
