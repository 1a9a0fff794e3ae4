#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tempvote/axioms.hpp"
#include "tempvote/model.hpp"
#include "tempvote/rational.hpp"

namespace tempvote {

// Fixed tie-break policy everywhere: lowest round first, then lowest
// candidate index.
struct RuleConfig {
    std::optional<Rational> epsilon;            // default 1/(2*ell^2)
    std::optional<Outcome> initial;             // default: per-round approval plurality
    std::optional<std::uint64_t> maxIterations; // safety bound; exceeding it is a bug
};

struct LsPavStep {
    int round = 0;
    int fromCandidate = 0;
    int toCandidate = 0;
    Rational gain;
};

struct GcrGroup {
    VoterSet group;       // S_p
    RoundSet tRounds;     // T_p
    int muValue = 0;      // mu_{S_p}(T_p) at selection time
    RoundSet assigned;    // R chosen in stage 2
    Suboutcome assignment;
};

struct RuleTrace {
    Outcome initial;                // lsPAV starting point
    std::vector<LsPavStep> steps;   // lsPAV swaps, in acceptance order
    std::vector<GcrGroup> groups;   // GCR partition, in creation order
    std::vector<int> dictators;     // SDR deciding voter per round
};

struct RuleResult {
    Outcome outcome;
    RuleTrace trace;
};

// Sum over voters of the harmonic number of their satisfaction.
Rational harmonicScore(const TemporalElection& e, const Outcome& o);

Rational defaultLsPavEpsilon(const TemporalElection& e);

// Local-search PAV: steepest-ascent single-round swaps, accepted only when
// the exact score gain exceeds epsilon.
RuleResult lspav(const TemporalElection& e, const RuleConfig& cfg = {});

// Greedy Cohesive Rule: partitions voters by descending compromise demand,
// then serves each group's demand on its claimed rounds. Round fills default
// to candidate 0.
RuleResult gcr(const TemporalElection& e, CheckOptions opts = {});

// Serial dictatorship: round r is decided by voter ((r-1) mod n)+1, who picks
// their lowest-indexed approved candidate. Requires every approval set to be
// non-empty.
RuleResult sdr(const TemporalElection& e);

}  // namespace tempvote
