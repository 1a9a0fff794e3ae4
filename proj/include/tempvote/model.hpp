#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempvote/errors.hpp"

namespace tempvote {

// Subsets of voters and rounds are bitmasks over 0-based indices; iteration
// and serialization order is ascending index. Hard ceiling is 32 members,
// the configurable checker default is 24.
class IndexSet {
public:
    IndexSet() : bits_(0) {}
    explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

    static IndexSet full(int count) {
        return IndexSet(count >= 32 ? 0xffffffffu : ((1u << count) - 1u));
    }
    static IndexSet of(std::initializer_list<int> members) {
        std::uint32_t b = 0;
        for (int m : members) b |= (1u << m);
        return IndexSet(b);
    }

    std::uint32_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }
    bool contains(int i) const { return (bits_ >> i) & 1u; }
    void add(int i) { bits_ |= (1u << i); }
    void remove(int i) { bits_ &= ~(1u << i); }
    bool subsetOf(const IndexSet& o) const { return (bits_ & ~o.bits_) == 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctz(b));
        return out;
    }

    bool operator==(const IndexSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const IndexSet& o) const { return bits_ != o.bits_; }

private:
    std::uint32_t bits_;
};

using VoterSet = IndexSet;
using RoundSet = IndexSet;

enum class ElectionClass { General, AtLeastOne, ExactlyOne };

std::string to_string(ElectionClass c);

// A temporal election: an ordered candidate list, n voters, ell rounds, and
// per-voter per-round approval sets stored as sorted candidate indices.
// Voters, rounds and candidates are 0-based internally; every document and
// report uses 1-based voters/rounds and candidate names.
struct TemporalElection {
    std::vector<std::string> candidates;
    int voters = 0;
    int rounds = 0;
    // approvals[i][r] = sorted, duplicate-free candidate indices approved by
    // voter i in round r.
    std::vector<std::vector<std::vector<int>>> approvals;

    int candidateCount() const { return static_cast<int>(candidates.size()); }
    bool approves(int voter, int round, int candidate) const;
    int candidateIndex(const std::string& name) const;  // -1 when absent

    // Throws ParseError naming the offending field when an invariant fails.
    void validate() const;
};

struct Outcome {
    std::vector<int> picks;  // length rounds, candidate index per round

    bool operator==(const Outcome& o) const { return picks == o.picks; }
};

// A partial selection: one candidate per round of `rounds`, with picks stored
// in ascending round order (so the domain is exactly the round set).
struct Suboutcome {
    RoundSet rounds;
    std::vector<int> picks;

    static Suboutcome fromOutcome(const Outcome& o);
    std::optional<int> pickAt(int round) const;
};

void validateOutcome(const TemporalElection& e, const Outcome& o);
void validateSuboutcome(const TemporalElection& e, const Suboutcome& s);

// Number of rounds in the suboutcome's domain whose selected candidate is
// approved by at least one voter in `group`.
int satisfaction(const TemporalElection& e, const VoterSet& group, const Suboutcome& sub);
int satisfaction(const TemporalElection& e, const VoterSet& group, const Outcome& o);
int satisfaction(const TemporalElection& e, int voter, const Outcome& o);

// Candidates approved by every member of `group` in round `round`.
std::vector<int> agreementCandidates(const TemporalElection& e, const VoterSet& group, int round);

// Rounds where the group's approval sets have a common candidate. Its size is
// the maximal agreement level t of the group.
RoundSet agreementRounds(const TemporalElection& e, const VoterSet& group);

ElectionClass electionClass(const TemporalElection& e);

}  // namespace tempvote
