#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "congestsim/engine.hpp"
#include "congestsim/graph.hpp"
#include "congestsim/lbgraphs.hpp"

namespace congest {

// One framed message that crossed the cut: direction 0 means side 0 -> side 1.
struct TranscriptRecord {
    int round = 0;
    EdgeKey edge;
    int direction = 0;
    BitString payload;

    auto operator<=>(const TranscriptRecord&) const = default;
};

// Ordered record of all bits crossing the cut during a protocol run.
// Payload bits (what the simulated algorithm sent) and framing bits (length
// prefixes and per-round done flags the harness needs to stay in lockstep)
// are accounted separately; the round bound is checked against payload only.
//
// Serialized form, per round r = 0..rounds():
//   r = 0:   [done0][done1]                      (no messages can exist yet)
//   r >= 1:  for each cut edge in canonical order: [len][payload] (dir 0),
//            [done0], same for dir 1, [done1]
// where [len] is a fixed-width prefix in ceil(log2(b+1)) bits and length 0
// encodes "no message on this edge this round". The stream is
// self-delimiting: it ends with the first round whose both done bits are 1.
class Transcript {
public:
    Transcript() = default;
    Transcript(std::vector<EdgeKey> cut, int bandwidth);

    void add_record(int round, EdgeKey edge, int direction, BitString payload);
    void seal_round(int round, bool done0, bool done1);

    const std::vector<TranscriptRecord>& records() const { return records_; }
    std::uint64_t payload_bits_total() const { return payload_bits_; }
    std::uint64_t framing_bits_total() const { return framing_bits_; }
    int rounds() const { return rounds_; }
    int prefix_width() const { return prefix_width_; }
    int bandwidth() const { return bandwidth_; }
    const std::vector<EdgeKey>& cut() const { return cut_; }

    // The owner-0 fallback: one answer bit crossing after the last round,
    // counted as payload.
    void set_answer_return(bool bit);
    std::optional<bool> answer_return() const { return answer_return_; }

    BitString serialize() const;
    static Transcript parse(const BitString& stream, std::vector<EdgeKey> cut, int bandwidth);

    // One line per record: "round edge_u edge_v dir payload_hex payload_bitlen".
    std::string export_text() const;

    bool operator==(const Transcript& other) const {
        return records_ == other.records_ && cut_ == other.cut_ && bandwidth_ == other.bandwidth_ &&
               round_done_ == other.round_done_ && answer_return_ == other.answer_return_;
    }

private:
    std::vector<EdgeKey> cut_;
    int bandwidth_ = 0;
    int prefix_width_ = 0;
    std::vector<TranscriptRecord> records_;  // sorted (round, edge, direction)
    std::vector<std::pair<bool, bool>> round_done_;  // by round, 0..rounds_
    std::optional<bool> answer_return_;
    std::uint64_t payload_bits_ = 0;
    std::uint64_t framing_bits_ = 0;
    int rounds_ = 0;
};

// A message a player pushes across the cut in one round.
struct CutMessage {
    EdgeKey edge;
    BitString payload;
};

// What one player emits for one exchange step: its cut messages (its own
// direction only, canonical edge order) and whether its side has finished.
struct RoundBlock {
    std::vector<CutMessage> messages;
    bool side_done = false;
};

// One player's strategy. A player is constructed from (side, own input) and
// sees nothing else except the blocks the counterpart sent.
class ProtocolPlayer {
public:
    virtual ~ProtocolPlayer() = default;

    // Produce this side's block for `round` given the counterpart's block
    // for round-1. Round 0 delivers no messages (init exchange).
    virtual RoundBlock step(int round, const RoundBlock& incoming) = 0;

    virtual std::optional<bool> answer() const = 0;
};

// A two-party protocol: a pair of player strategies over k-bit inputs plus
// the answer-owner rule.
class TwoPartyProtocol {
public:
    virtual ~TwoPartyProtocol() = default;

    virtual std::size_t input_bits() const = 0;
    virtual int bandwidth() const = 0;
    virtual std::vector<EdgeKey> cut_edges() const = 0;
    virtual int answer_owner() const { return 0; }
    virtual int max_rounds() const { return 1000; }

    virtual std::unique_ptr<ProtocolPlayer> make_player(int side, const BitString& input) const = 0;
};

struct ProtocolRun {
    bool answer = false;
    Transcript transcript;
    int rounds = 0;
    bool answer_bit_returned = false;  // the owner-0 fallback fired (+1 payload bit)
};

// Drives both players in lockstep until both sides are done and resolves
// the answer: the owner's answer bit, with the fallback that a protocol
// owned by player 0 whose side never decides costs one extra payload bit
// (and round) to move player 1's answer across.
ProtocolRun run_protocol(const TwoPartyProtocol& protocol, const BitString& x0, const BitString& x1);

// The round bound: payload <= 2 * b * |S| * T.
bool verify_theorem_bound(const Transcript& t, int bandwidth, std::size_t cut_size, int rounds);

// Simulation of a distributed algorithm on a family instance as a two-party
// protocol: player i runs all nodes on side i locally (advice included,
// computed from the support both players know); same-side messages never
// leave the player; cut messages become transcript records.
class ExtractedProtocol : public TwoPartyProtocol {
public:
    ExtractedProtocol(const AlgorithmSpec& alg, const LowerBoundFamily& fam, std::size_t n,
                      ExecutionMode mode, int bandwidth, std::uint64_t seed);

    std::size_t input_bits() const override;
    int bandwidth() const override { return bandwidth_; }
    std::vector<EdgeKey> cut_edges() const override;
    int answer_owner() const override { return 0; }
    int max_rounds() const override { return 10 * static_cast<int>(n_) + 100; }
    std::unique_ptr<ProtocolPlayer> make_player(int side, const BitString& input) const override;

    // Full comparison data for the faithfulness check. drop_cut_record, when
    // set, makes the harness silently lose the i-th cut message in flight
    // (fault injection for validating the check itself).
    struct DetailedRun {
        bool answer = false;
        int rounds = 0;
        Transcript transcript;
        std::map<NodeId, OutputValue> outputs;
        std::vector<TraceEntry> trace;  // both sides merged, sorted
    };
    DetailedRun run_detailed(const BitString& x0, const BitString& x1,
                             std::optional<std::size_t> drop_cut_record = std::nullopt) const;

    const LowerBoundFamily& family() const { return *fam_; }
    std::size_t n() const { return n_; }
    ExecutionMode mode() const { return mode_; }
    std::uint64_t seed() const { return seed_; }

    struct Shared;  // support graph, fixed cut, advice; common knowledge of both players

private:
    AlgorithmSpec alg_;            // by value: protocols outlive caller temporaries
    const LowerBoundFamily* fam_;  // families are stateless; caller keeps it alive
    std::size_t n_;
    ExecutionMode mode_;
    int bandwidth_;
    std::uint64_t seed_;
    std::shared_ptr<const Shared> shared_;  // support graph, cut, advice
};

// The algorithm must be a decision algorithm for the family predicate under
// the given supported mode.
ExtractedProtocol extract_protocol(const AlgorithmSpec& alg, const LowerBoundFamily& fam,
                                   std::size_t n, int bandwidth, std::uint64_t seed,
                                   ExecutionMode mode = ExecutionMode::SupportedActive);

// True iff the two-party run and the monolithic engine run of the same
// algorithm on the merged instance agree bit for bit: per-node outputs,
// round count and the complete message trace. Engine errors on the
// protocol side (e.g. after fault injection) yield false, not an exception.
struct EquivalenceOptions {
    int bandwidth = 0;
    ExecutionMode mode = ExecutionMode::SupportedActive;
    std::optional<std::size_t> drop_cut_record;
};
bool equivalence_check(const AlgorithmSpec& alg, const LowerBoundFamily& fam, std::size_t n,
                       const BitString& x0, const BitString& x1, std::uint64_t seed,
                       const EquivalenceOptions& opts = {});

// A set of input pairs witnessing CC(f) >= log2(|pairs|): all pairs share
// one f-value and every cross-combination of two distinct pairs breaks it.
struct FoolingSetCertificate {
    std::size_t k = 0;
    std::function<bool(const BitString&, const BitString&)> f;
    std::vector<std::pair<BitString, BitString>> pairs;
};

bool check_fooling_set(const FoolingSetCertificate& cert);
std::size_t fooling_set_certified_bits(const FoolingSetCertificate& cert);

// The k-bit upper bound: player 0 ships x0 verbatim, player 1 computes and
// holds the answer.
class TrivialUpperBoundProtocol : public TwoPartyProtocol {
public:
    TrivialUpperBoundProtocol(std::function<bool(const BitString&, const BitString&)> f, std::size_t k);

    std::size_t input_bits() const override { return k_; }
    int bandwidth() const override { return static_cast<int>(k_ > 0 ? k_ : 1); }
    std::vector<EdgeKey> cut_edges() const override { return {EdgeKey(0, 1)}; }
    int answer_owner() const override { return 1; }
    std::unique_ptr<ProtocolPlayer> make_player(int side, const BitString& input) const override;

private:
    std::function<bool(const BitString&, const BitString&)> f_;
    std::size_t k_;
};

inline TrivialUpperBoundProtocol trivial_upper_bound_protocol(
    std::function<bool(const BitString&, const BitString&)> f, std::size_t k) {
    return TrivialUpperBoundProtocol(std::move(f), k);
}

// Empirical success rate of a (typically randomized) protocol: fresh seed
// per trial, rate per input pair and the minimum over pairs. This is a
// measurement, not a computation of the randomized complexity.
struct SuccessReport {
    struct PairRate {
        BitString x0;
        BitString x1;
        double rate = 0.0;
    };
    std::vector<PairRate> per_pair;
    double min_rate = 1.0;
    std::size_t trials = 0;
};

using ProtocolFactory = std::function<std::unique_ptr<TwoPartyProtocol>(std::uint64_t seed)>;

SuccessReport estimate_success_probability(
    const ProtocolFactory& make_protocol,
    const std::function<bool(const BitString&, const BitString&)>& f,
    const std::vector<std::pair<BitString, BitString>>& pairs, std::size_t trials,
    std::uint64_t seed);

}  // namespace congest
