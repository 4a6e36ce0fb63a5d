#include "congestsim/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace congest {

Transcript::Transcript(std::vector<EdgeKey> cut, int bandwidth)
    : cut_(std::move(cut)), bandwidth_(bandwidth) {
    if (bandwidth_ < 1) throw ConfigError("transcript bandwidth must be >= 1");
    std::sort(cut_.begin(), cut_.end());
    prefix_width_ = std::max(1, ceil_log2(static_cast<std::uint64_t>(bandwidth_) + 1));
}

void Transcript::add_record(int round, EdgeKey edge, int direction, BitString payload) {
    if (payload.empty()) throw SimError("transcript record with empty payload");
    if (payload.size() > static_cast<std::size_t>(bandwidth_))
        throw BandwidthExceeded("transcript record larger than bandwidth");
    if (!std::binary_search(cut_.begin(), cut_.end(), edge))
        throw CutViolation("transcript record on edge {" + std::to_string(edge.u) + "," +
                           std::to_string(edge.v) + "} outside the cut");
    payload_bits_ += payload.size();
    records_.push_back(TranscriptRecord{round, edge, direction, std::move(payload)});
}

void Transcript::seal_round(int round, bool done0, bool done1) {
    if (round != static_cast<int>(round_done_.size()))
        throw SimError("rounds must be sealed in order");
    round_done_.emplace_back(done0, done1);
    rounds_ = round;
    // Framing: one done bit per side, plus a length prefix per cut edge and
    // direction from round 1 on (round 0 is the init exchange).
    framing_bits_ += 2;
    if (round >= 1) framing_bits_ += 2 * cut_.size() * static_cast<std::size_t>(prefix_width_);
    std::sort(records_.begin(), records_.end(), [](const TranscriptRecord& a, const TranscriptRecord& b) {
        return std::tie(a.round, a.edge, a.direction) < std::tie(b.round, b.edge, b.direction);
    });
}

BitString Transcript::serialize() const {
    BitString out;
    for (int r = 0; r < static_cast<int>(round_done_.size()); ++r) {
        for (int dir = 0; dir < 2; ++dir) {
            if (r >= 1) {
                for (EdgeKey e : cut_) {
                    auto it = std::find_if(records_.begin(), records_.end(),
                                           [&](const TranscriptRecord& rec) {
                                               return rec.round == r && rec.edge == e &&
                                                      rec.direction == dir;
                                           });
                    if (it == records_.end()) {
                        out.append_uint(0, prefix_width_);
                    } else {
                        out.append_uint(it->payload.size(), prefix_width_);
                        out.append(it->payload);
                    }
                }
            }
            out.push_back(dir == 0 ? round_done_[static_cast<std::size_t>(r)].first
                                   : round_done_[static_cast<std::size_t>(r)].second);
        }
    }
    if (answer_return_) out.push_back(*answer_return_);
    return out;
}

Transcript Transcript::parse(const BitString& stream, std::vector<EdgeKey> cut, int bandwidth) {
    Transcript t(std::move(cut), bandwidth);
    BitReader reader(stream);
    int round = 0;
    while (true) {
        bool done[2] = {false, false};
        for (int dir = 0; dir < 2; ++dir) {
            if (round >= 1) {
                for (EdgeKey e : t.cut_) {
                    std::uint64_t len = reader.take_uint(t.prefix_width_);
                    if (len > static_cast<std::uint64_t>(bandwidth))
                        throw SimError("transcript parse: length prefix exceeds bandwidth");
                    if (len > 0) t.add_record(round, e, dir, reader.take_bits(len));
                }
            }
            done[dir] = reader.take_bit();
        }
        t.seal_round(round, done[0], done[1]);
        if (done[0] && done[1]) break;
        ++round;
    }
    if (reader.remaining() == 1) t.set_answer_return(reader.take_bit());
    if (!reader.done()) throw SimError("transcript parse: trailing bits");
    return t;
}

void Transcript::set_answer_return(bool bit) {
    if (answer_return_) throw SimError("answer-return bit already set");
    answer_return_ = bit;
    payload_bits_ += 1;
}

std::string Transcript::export_text() const {
    std::ostringstream out;
    for (const TranscriptRecord& r : records_)
        out << r.round << ' ' << r.edge.u << ' ' << r.edge.v << ' ' << r.direction << ' '
            << r.payload.to_hex() << ' ' << r.payload.size() << '\n';
    return out.str();
}

bool verify_theorem_bound(const Transcript& t, int bandwidth, std::size_t cut_size, int rounds) {
    const std::uint64_t bound = 2ull * static_cast<std::uint64_t>(bandwidth) *
                                static_cast<std::uint64_t>(cut_size) *
                                static_cast<std::uint64_t>(rounds);
    return t.payload_bits_total() <= bound;
}

namespace {

ProtocolRun drive(const TwoPartyProtocol& proto, ProtocolPlayer& p0, ProtocolPlayer& p1,
                  std::optional<std::size_t> drop_cut_record) {
    Transcript transcript(proto.cut_edges(), proto.bandwidth());
    std::size_t record_index = 0;
    auto filter = [&](RoundBlock& blk) {
        if (!drop_cut_record) {
            record_index += blk.messages.size();
            return;
        }
        std::vector<CutMessage> kept;
        for (CutMessage& m : blk.messages) {
            if (record_index != *drop_cut_record) kept.push_back(std::move(m));
            ++record_index;
        }
        blk.messages = std::move(kept);
    };

    RoundBlock blk0 = p0.step(0, RoundBlock{});
    RoundBlock blk1 = p1.step(0, RoundBlock{});
    transcript.seal_round(0, blk0.side_done, blk1.side_done);

    int round = 0;
    while (!(blk0.side_done && blk1.side_done)) {
        ++round;
        if (round > proto.max_rounds())
            throw NonTermination("protocol exceeded " + std::to_string(proto.max_rounds()) +
                                 " exchange steps");
        RoundBlock next0 = p0.step(round, blk1);
        RoundBlock next1 = p1.step(round, blk0);
        filter(next0);
        filter(next1);
        for (const CutMessage& m : next0.messages) transcript.add_record(round, m.edge, 0, m.payload);
        for (const CutMessage& m : next1.messages) transcript.add_record(round, m.edge, 1, m.payload);
        transcript.seal_round(round, next0.side_done, next1.side_done);
        blk0 = std::move(next0);
        blk1 = std::move(next1);
    }

    ProtocolRun run;
    run.rounds = round;
    std::optional<bool> a0 = p0.answer();
    std::optional<bool> a1 = p1.answer();
    if (proto.answer_owner() == 1) {
        if (!a1) throw SimError("protocol terminated but the answer owner has no answer");
        run.answer = *a1;
    } else if (a0) {
        run.answer = *a0;
    } else if (a1) {
        // Side 0 never decided: player 1 moves the bit across in one more
        // exchange step, paid for in payload.
        run.answer = *a1;
        run.answer_bit_returned = true;
        run.rounds = round + 1;
        transcript.set_answer_return(*a1);
    } else {
        throw SimError("protocol terminated but neither player has an answer");
    }
    run.transcript = std::move(transcript);
    return run;
}

}  // namespace

ProtocolRun run_protocol(const TwoPartyProtocol& protocol, const BitString& x0, const BitString& x1) {
    if (x0.size() != protocol.input_bits() || x1.size() != protocol.input_bits())
        throw LengthMismatch("protocol inputs must have length " +
                             std::to_string(protocol.input_bits()));
    std::unique_ptr<ProtocolPlayer> p0 = protocol.make_player(0, x0);
    std::unique_ptr<ProtocolPlayer> p1 = protocol.make_player(1, x1);
    return drive(protocol, *p0, *p1, std::nullopt);
}

// -------------------------------------------------------------------------
// Protocol extraction

struct ExtractedProtocol::Shared {
    Graph support;
    std::vector<EdgeKey> cut;   // canonical, sorted
    std::set<EdgeKey> cut_set;
    AdviceMap advice;
    std::map<NodeId, int> side_of;
};

ExtractedProtocol::ExtractedProtocol(const AlgorithmSpec& alg, const LowerBoundFamily& fam,
                                     std::size_t n, ExecutionMode mode, int bandwidth,
                                     std::uint64_t seed)
    : alg_(alg), fam_(&fam), n_(n), mode_(mode), seed_(seed) {
    if (mode != ExecutionMode::SupportedActive && mode != ExecutionMode::SupportedPassive)
        throw ConfigError("protocol extraction needs a supported mode");
    if (!fam.valid_n(n)) throw ConfigError("n = " + std::to_string(n) + " is not valid for family " +
                                           fam.name());
    auto shared = std::make_shared<Shared>();
    shared->support = fam.support(n);
    shared->cut = fam.cut(n);
    std::sort(shared->cut.begin(), shared->cut.end());
    shared->cut_set.insert(shared->cut.begin(), shared->cut.end());
    if (alg.advice) shared->advice = preprocess(shared->support, alg.advice);
    for (NodeId v : shared->support.nodes()) shared->side_of[v] = fam.side_of(n, v);
    bandwidth_ = bandwidth > 0 ? bandwidth
                               : default_bandwidth(shared->support.node_count());
    shared_ = std::move(shared);
}

std::size_t ExtractedProtocol::input_bits() const { return fam_->input_bits(n_); }

std::vector<EdgeKey> ExtractedProtocol::cut_edges() const { return shared_->cut; }

namespace {

// Player i simulates exactly the nodes on its side: contexts are built from
// the support graph, the fixed cut and the player's own input, nothing else.
class SidePlayer : public ProtocolPlayer {
public:
    SidePlayer(const AlgorithmSpec& alg, const ExtractedProtocol& proto,
               const std::shared_ptr<const ExtractedProtocol::Shared>& shared, int side,
               const BitString& input);

    RoundBlock step(int round, const RoundBlock& incoming) override;
    std::optional<bool> answer() const override;

    const detail::RoundRunner& runner() const { return *runner_; }

private:
    std::shared_ptr<const ExtractedProtocol::Shared> shared_;
    int side_;
    std::unique_ptr<detail::RoundRunner> runner_;
};

SidePlayer::SidePlayer(const AlgorithmSpec& alg, const ExtractedProtocol& proto,
                       const std::shared_ptr<const ExtractedProtocol::Shared>& shared, int side,
                       const BitString& input)
    : shared_(shared), side_(side) {
    const ExtractedProtocol::Shared& sh = *shared_;
    FamilySide mine = proto.family().build_side(side, proto.n(), input);
    std::set<NodeId> input_nodes(mine.nodes.begin(), mine.nodes.end());
    std::set<EdgeKey> input_edges(mine.edges.begin(), mine.edges.end());

    std::vector<NodeId> participants;
    if (proto.mode() == ExecutionMode::SupportedActive) {
        for (NodeId v : sh.support.nodes())
            if (sh.side_of.at(v) == side) participants.push_back(v);
    } else {
        participants = mine.nodes;
    }

    const auto n_param = static_cast<std::uint32_t>(sh.support.node_count());
    std::vector<detail::RoundRunner::NodeSetup> setups;
    setups.reserve(participants.size());
    for (NodeId v : participants) {
        detail::RoundRunner::NodeSetup s;
        s.ctx.id = v;
        s.ctx.n = n_param;
        s.ctx.bandwidth = proto.bandwidth();
        s.ctx.know_neighbor_ids = true;
        s.ctx.in_input_graph = input_nodes.count(v) != 0;
        s.ctx.rng_seed = mix_seed(proto.seed(), v);
        auto adv = sh.advice.find(v);
        if (adv != sh.advice.end()) s.ctx.advice = adv->second;
        const std::vector<NodeId>& nbrs = sh.support.neighbors(v);
        s.ctx.degree = nbrs.size();
        s.ctx.neighbor_ids = nbrs;
        s.port_targets = nbrs;
        for (NodeId u : nbrs) {
            const EdgeKey e(v, u);
            const bool same_side = sh.side_of.at(u) == side;
            const bool in_input = same_side ? input_edges.count(e) != 0 : sh.cut_set.count(e) != 0;
            s.ctx.port_in_input.push_back(in_input ? 1 : 0);
            const bool allowed =
                (proto.mode() == ExecutionMode::SupportedActive) ? true : in_input;
            s.port_send_allowed.push_back(allowed ? 1 : 0);
        }
        setups.push_back(std::move(s));
    }
    runner_ = std::make_unique<detail::RoundRunner>(alg, std::move(setups));
}

RoundBlock SidePlayer::step(int round, const RoundBlock& incoming) {
    if (round == 0) {
        runner_->init();
        return RoundBlock{{}, runner_->all_output()};
    }
    std::vector<detail::RoundRunner::ExternalMsg> inbound;
    for (const CutMessage& m : incoming.messages) {
        const bool u_is_mine = shared_->side_of.at(m.edge.u) == side_;
        const NodeId mine = u_is_mine ? m.edge.u : m.edge.v;
        const NodeId theirs = u_is_mine ? m.edge.v : m.edge.u;
        inbound.push_back({theirs, mine, m.payload});
    }
    std::vector<detail::RoundRunner::ExternalMsg> external = runner_->step(round, inbound);

    RoundBlock out;
    for (detail::RoundRunner::ExternalMsg& em : external) {
        const EdgeKey e(em.from, em.to);
        if (!shared_->cut_set.count(e))
            throw CutViolation("message from " + std::to_string(em.from) + " to " +
                               std::to_string(em.to) + " crosses the partition outside the cut");
        out.messages.push_back(CutMessage{e, std::move(em.payload)});
    }
    std::sort(out.messages.begin(), out.messages.end(),
              [](const CutMessage& a, const CutMessage& b) { return a.edge < b.edge; });
    out.side_done = runner_->all_output();
    return out;
}

std::optional<bool> SidePlayer::answer() const {
    const auto& outputs = runner_->outputs();
    if (outputs.empty()) return std::nullopt;
    const OutputValue& v = outputs.begin()->second;
    if (v.empty()) return std::nullopt;
    return v[0] != 0;
}

}  // namespace

std::unique_ptr<ProtocolPlayer> ExtractedProtocol::make_player(int side,
                                                               const BitString& input) const {
    if (side != 0 && side != 1) throw ConfigError("player side must be 0 or 1");
    return std::make_unique<SidePlayer>(alg_, *this, shared_, side, input);
}

ExtractedProtocol::DetailedRun ExtractedProtocol::run_detailed(
    const BitString& x0, const BitString& x1, std::optional<std::size_t> drop_cut_record) const {
    if (x0.size() != input_bits() || x1.size() != input_bits())
        throw LengthMismatch("protocol inputs must have length " + std::to_string(input_bits()));
    SidePlayer p0(alg_, *this, shared_, 0, x0);
    SidePlayer p1(alg_, *this, shared_, 1, x1);
    ProtocolRun run = drive(*this, p0, p1, drop_cut_record);

    DetailedRun det;
    det.answer = run.answer;
    det.rounds = run.rounds;
    det.transcript = std::move(run.transcript);
    det.outputs = p0.runner().outputs();
    for (const auto& [v, out] : p1.runner().outputs()) det.outputs[v] = out;
    det.trace = p0.runner().trace();
    det.trace.insert(det.trace.end(), p1.runner().trace().begin(), p1.runner().trace().end());
    std::sort(det.trace.begin(), det.trace.end());
    return det;
}

ExtractedProtocol extract_protocol(const AlgorithmSpec& alg, const LowerBoundFamily& fam,
                                   std::size_t n, int bandwidth, std::uint64_t seed,
                                   ExecutionMode mode) {
    return ExtractedProtocol(alg, fam, n, mode, bandwidth, seed);
}

bool equivalence_check(const AlgorithmSpec& alg, const LowerBoundFamily& fam, std::size_t n,
                       const BitString& x0, const BitString& x1, std::uint64_t seed,
                       const EquivalenceOptions& opts) {
    PartitionedInstance p = fam.build(n, x0, x1);
    Graph merged = merge_to_graph(p);
    Graph support = fam.support(n);
    const bool spanning = merged.node_count() == support.node_count();
    SupportedInstance inst = SupportedInstance::make(std::move(support), std::move(merged), spanning);

    RunConfig cfg;
    cfg.mode = opts.mode;
    cfg.bandwidth = opts.bandwidth;
    cfg.seed = seed;
    cfg.designated_cut = fam.cut(n);
    RunResult mono = run(inst, alg, cfg);

    ExtractedProtocol proto = extract_protocol(alg, fam, n, opts.bandwidth, seed, opts.mode);
    try {
        ExtractedProtocol::DetailedRun det = proto.run_detailed(x0, x1, opts.drop_cut_record);
        return det.outputs == mono.outputs && det.rounds == mono.metrics.rounds &&
               det.trace == mono.trace;
    } catch (const SimError&) {
        return false;
    }
}

// -------------------------------------------------------------------------
// Communication-complexity utilities

bool check_fooling_set(const FoolingSetCertificate& cert) {
    if (!cert.f) throw ConfigError("fooling set certificate has no function");
    for (const auto& [a, b] : cert.pairs)
        if (a.size() != cert.k || b.size() != cert.k)
            throw LengthMismatch("fooling set pair with wrong input length");
    if (cert.pairs.empty()) return true;

    const bool v = cert.f(cert.pairs[0].first, cert.pairs[0].second);
    for (const auto& [a, b] : cert.pairs)
        if (cert.f(a, b) != v) return false;
    for (std::size_t i = 0; i < cert.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < cert.pairs.size(); ++j) {
            const bool cross1 = cert.f(cert.pairs[i].first, cert.pairs[j].second) != v;
            const bool cross2 = cert.f(cert.pairs[j].first, cert.pairs[i].second) != v;
            if (!cross1 && !cross2) return false;
        }
    return true;
}

std::size_t fooling_set_certified_bits(const FoolingSetCertificate& cert) {
    std::size_t bits = 0;
    while ((std::size_t{1} << (bits + 1)) <= cert.pairs.size()) ++bits;
    return cert.pairs.empty() ? 0 : bits;
}

namespace {

class TrivialPlayer0 : public ProtocolPlayer {
public:
    TrivialPlayer0(BitString input, std::size_t k) : input_(std::move(input)), k_(k) {}

    RoundBlock step(int round, const RoundBlock&) override {
        RoundBlock blk;
        if (round == 0) {
            blk.side_done = (k_ == 0);
            return blk;
        }
        if (!sent_ && k_ > 0) {
            blk.messages.push_back(CutMessage{EdgeKey(0, 1), input_});
            sent_ = true;
        }
        blk.side_done = true;
        return blk;
    }

    std::optional<bool> answer() const override { return std::nullopt; }

private:
    BitString input_;
    std::size_t k_;
    bool sent_ = false;
};

class TrivialPlayer1 : public ProtocolPlayer {
public:
    TrivialPlayer1(std::function<bool(const BitString&, const BitString&)> f, BitString input,
                   std::size_t k)
        : f_(std::move(f)), input_(std::move(input)), k_(k) {}

    RoundBlock step(int round, const RoundBlock& incoming) override {
        RoundBlock blk;
        if (round == 0 && k_ == 0) {
            answer_ = f_(BitString{}, input_);
            blk.side_done = true;
            return blk;
        }
        for (const CutMessage& m : incoming.messages)
            if (m.payload.size() == k_) answer_ = f_(m.payload, input_);
        blk.side_done = answer_.has_value();
        return blk;
    }

    std::optional<bool> answer() const override { return answer_; }

private:
    std::function<bool(const BitString&, const BitString&)> f_;
    BitString input_;
    std::size_t k_;
    std::optional<bool> answer_;
};

}  // namespace

TrivialUpperBoundProtocol::TrivialUpperBoundProtocol(
    std::function<bool(const BitString&, const BitString&)> f, std::size_t k)
    : f_(std::move(f)), k_(k) {
    if (!f_) throw ConfigError("trivial protocol needs a function");
}

std::unique_ptr<ProtocolPlayer> TrivialUpperBoundProtocol::make_player(
    int side, const BitString& input) const {
    if (side == 0) return std::make_unique<TrivialPlayer0>(input, k_);
    return std::make_unique<TrivialPlayer1>(f_, input, k_);
}

SuccessReport estimate_success_probability(
    const ProtocolFactory& make_protocol,
    const std::function<bool(const BitString&, const BitString&)>& f,
    const std::vector<std::pair<BitString, BitString>>& pairs, std::size_t trials,
    std::uint64_t seed) {
    if (trials < 1) throw ConfigError("success estimation needs at least one trial");
    SuccessReport report;
    report.trials = trials;
    for (const auto& [x0, x1] : pairs) {
        std::size_t correct = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            std::unique_ptr<TwoPartyProtocol> proto = make_protocol(mix_seed(seed, t));
            ProtocolRun run = run_protocol(*proto, x0, x1);
            if (run.answer == f(x0, x1)) ++correct;
        }
        const double rate = static_cast<double>(correct) / static_cast<double>(trials);
        report.per_pair.push_back({x0, x1, rate});
        report.min_rate = std::min(report.min_rate, rate);
    }
    if (pairs.empty()) report.min_rate = 1.0;
    return report;
}

}  // namespace congest
