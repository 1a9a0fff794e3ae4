#include "tempvote/model.hpp"

#include <algorithm>
#include <set>

namespace tempvote {

std::string to_string(ElectionClass c) {
    switch (c) {
        case ElectionClass::General: return "General";
        case ElectionClass::AtLeastOne: return "AtLeastOne";
        case ElectionClass::ExactlyOne: return "ExactlyOne";
    }
    return "General";
}

bool TemporalElection::approves(int voter, int round, int candidate) const {
    const auto& cell = approvals[voter][round];
    return std::binary_search(cell.begin(), cell.end(), candidate);
}

int TemporalElection::candidateIndex(const std::string& name) const {
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (candidates[i] == name) return static_cast<int>(i);
    return -1;
}

void TemporalElection::validate() const {
    if (candidates.empty()) throw ParseError("candidates: list must be non-empty");
    if (voters < 1) throw ParseError("voters: must be a positive integer");
    if (rounds < 1) throw ParseError("rounds: must be a positive integer");
    std::set<std::string> seen;
    for (const auto& name : candidates) {
        if (!seen.insert(name).second)
            throw ParseError("candidates: duplicate identifier '" + name + "'");
    }
    if (static_cast<int>(approvals.size()) != voters)
        throw ParseError("approvals: expected " + std::to_string(voters) + " voter rows, got " +
                         std::to_string(approvals.size()));
    for (int i = 0; i < voters; ++i) {
        if (static_cast<int>(approvals[i].size()) != rounds)
            throw ParseError("approvals: voter " + std::to_string(i + 1) + " has " +
                             std::to_string(approvals[i].size()) + " rounds, expected " +
                             std::to_string(rounds));
        for (int r = 0; r < rounds; ++r) {
            const auto& cell = approvals[i][r];
            for (std::size_t k = 0; k < cell.size(); ++k) {
                if (cell[k] < 0 || cell[k] >= candidateCount())
                    throw ParseError("approvals: voter " + std::to_string(i + 1) + " round " +
                                     std::to_string(r + 1) + " has an out-of-range candidate index");
                if (k > 0 && cell[k] <= cell[k - 1])
                    throw ParseError("approvals: voter " + std::to_string(i + 1) + " round " +
                                     std::to_string(r + 1) + " is not sorted/duplicate-free");
            }
        }
    }
}

Suboutcome Suboutcome::fromOutcome(const Outcome& o) {
    Suboutcome s;
    s.rounds = RoundSet::full(static_cast<int>(o.picks.size()));
    s.picks = o.picks;
    return s;
}

std::optional<int> Suboutcome::pickAt(int round) const {
    if (!rounds.contains(round)) return std::nullopt;
    int pos = 0;
    for (int r : rounds.members()) {
        if (r == round) return picks[pos];
        ++pos;
    }
    return std::nullopt;
}

void validateOutcome(const TemporalElection& e, const Outcome& o) {
    if (static_cast<int>(o.picks.size()) != e.rounds)
        throw ParseError("picks: expected " + std::to_string(e.rounds) + " entries, got " +
                         std::to_string(o.picks.size()));
    for (int c : o.picks)
        if (c < 0 || c >= e.candidateCount())
            throw ParseError("picks: candidate index out of range");
}

void validateSuboutcome(const TemporalElection& e, const Suboutcome& s) {
    if (static_cast<int>(s.picks.size()) != s.rounds.size())
        throw ParseError("suboutcome: assignment count differs from round-set size");
    for (int r : s.rounds.members())
        if (r < 0 || r >= e.rounds) throw ParseError("suboutcome: round index out of range");
    for (int c : s.picks)
        if (c < 0 || c >= e.candidateCount())
            throw ParseError("suboutcome: candidate index out of range");
}

int satisfaction(const TemporalElection& e, const VoterSet& group, const Suboutcome& sub) {
    int count = 0;
    int pos = 0;
    for (int r : sub.rounds.members()) {
        int pick = sub.picks[pos++];
        for (int i : group.members()) {
            if (e.approves(i, r, pick)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

int satisfaction(const TemporalElection& e, const VoterSet& group, const Outcome& o) {
    return satisfaction(e, group, Suboutcome::fromOutcome(o));
}

int satisfaction(const TemporalElection& e, int voter, const Outcome& o) {
    VoterSet s;
    s.add(voter);
    return satisfaction(e, s, o);
}

std::vector<int> agreementCandidates(const TemporalElection& e, const VoterSet& group, int round) {
    std::vector<int> common;
    bool first = true;
    for (int i : group.members()) {
        const auto& cell = e.approvals[i][round];
        if (first) {
            common = cell;
            first = false;
        } else {
            std::vector<int> next;
            std::set_intersection(common.begin(), common.end(), cell.begin(), cell.end(),
                                  std::back_inserter(next));
            common = std::move(next);
        }
        if (common.empty()) break;
    }
    return common;
}

RoundSet agreementRounds(const TemporalElection& e, const VoterSet& group) {
    RoundSet out;
    for (int r = 0; r < e.rounds; ++r)
        if (!agreementCandidates(e, group, r).empty()) out.add(r);
    return out;
}

ElectionClass electionClass(const TemporalElection& e) {
    bool allSingleton = true;
    bool allNonEmpty = true;
    for (int i = 0; i < e.voters; ++i) {
        for (int r = 0; r < e.rounds; ++r) {
            std::size_t k = e.approvals[i][r].size();
            if (k == 0) allNonEmpty = false;
            if (k != 1) allSingleton = false;
        }
    }
    if (allSingleton) return ElectionClass::ExactlyOne;
    if (allNonEmpty) return ElectionClass::AtLeastOne;
    return ElectionClass::General;
}

}  // namespace tempvote
