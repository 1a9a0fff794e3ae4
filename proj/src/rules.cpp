#include "tempvote/rules.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tempvote {

namespace {

std::vector<std::vector<std::uint32_t>> approverMasks(const TemporalElection& e) {
    std::vector<std::vector<std::uint32_t>> mask(e.rounds,
                                                 std::vector<std::uint32_t>(e.candidateCount(), 0));
    for (int i = 0; i < e.voters; ++i)
        for (int r = 0; r < e.rounds; ++r)
            for (int c : e.approvals[i][r]) mask[r][c] |= 1u << i;
    return mask;
}

Outcome pluralityOutcome(const TemporalElection& e,
                         const std::vector<std::vector<std::uint32_t>>& mask) {
    Outcome o;
    o.picks.resize(e.rounds, 0);
    for (int r = 0; r < e.rounds; ++r) {
        int best = 0, bestCount = __builtin_popcount(mask[r][0]);
        for (int c = 1; c < e.candidateCount(); ++c) {
            int count = __builtin_popcount(mask[r][c]);
            if (count > bestCount) {
                best = c;
                bestCount = count;
            }
        }
        o.picks[r] = best;
    }
    return o;
}

}  // namespace

Rational harmonicScore(const TemporalElection& e, const Outcome& o) {
    validateOutcome(e, o);
    std::vector<Rational> h(e.rounds + 1);
    for (int k = 1; k <= e.rounds; ++k) h[k] = h[k - 1] + Rational(1, k);
    Rational score;
    for (int i = 0; i < e.voters; ++i) score += h[satisfaction(e, i, o)];
    return score;
}

Rational defaultLsPavEpsilon(const TemporalElection& e) {
    return Rational(1, 2ll * e.rounds * e.rounds);
}

RuleResult lspav(const TemporalElection& e, const RuleConfig& cfg) {
    e.validate();
    const int n = e.voters, ell = e.rounds, m = e.candidateCount();
    Rational eps = cfg.epsilon.value_or(defaultLsPavEpsilon(e));
    if (!(eps > Rational(0))) throw PreconditionError("lspav: epsilon must be positive");

    auto mask = approverMasks(e);
    RuleResult result;
    if (cfg.initial) {
        validateOutcome(e, *cfg.initial);
        result.outcome = *cfg.initial;
    } else {
        result.outcome = pluralityOutcome(e, mask);
    }
    result.trace.initial = result.outcome;

    std::vector<int> sat(n, 0);
    for (int r = 0; r < ell; ++r)
        for (std::uint32_t b = mask[r][result.outcome.picks[r]]; b; b &= b - 1)
            ++sat[__builtin_ctz(b)];

    // Every accepted swap gains more than eps and the total score is at most
    // n * (1 + ln ell), so this bound can only trip on a bug.
    std::uint64_t maxIter = cfg.maxIterations.value_or(
        static_cast<std::uint64_t>(
            std::ceil(n * (1.0 + std::log(static_cast<double>(ell))) / eps.toDouble())) +
        1);

    std::vector<Rational> h(ell + 1);
    for (int k = 1; k <= ell; ++k) h[k] = h[k - 1] + Rational(1, k);

    std::uint64_t iterations = 0;
    while (true) {
        Rational bestGain;
        int bestRound = -1, bestCand = -1;
        for (int r = 0; r < ell; ++r) {
            int cur = result.outcome.picks[r];
            std::uint32_t curMask = mask[r][cur];
            for (int c = 0; c < m; ++c) {
                if (c == cur) continue;
                std::uint32_t gainers = mask[r][c] & ~curMask;
                std::uint32_t losers = curMask & ~mask[r][c];
                if (!gainers && !losers) continue;
                Rational gain;
                for (std::uint32_t b = gainers; b; b &= b - 1)
                    gain += Rational(1, sat[__builtin_ctz(b)] + 1);
                for (std::uint32_t b = losers; b; b &= b - 1)
                    gain -= Rational(1, sat[__builtin_ctz(b)]);
                if (bestRound < 0 || gain > bestGain) {
                    bestGain = gain;
                    bestRound = r;
                    bestCand = c;
                }
            }
        }
        if (bestRound < 0 || !(bestGain > eps)) break;
        if (++iterations > maxIter)
            throw std::logic_error("lspav: iteration bound exceeded; swap accounting is broken");

        int cur = result.outcome.picks[bestRound];
        std::uint32_t curMask = mask[bestRound][cur];
        std::uint32_t newMask = mask[bestRound][bestCand];
        for (std::uint32_t b = newMask & ~curMask; b; b &= b - 1) ++sat[__builtin_ctz(b)];
        for (std::uint32_t b = curMask & ~newMask; b; b &= b - 1) --sat[__builtin_ctz(b)];
        result.outcome.picks[bestRound] = bestCand;
        result.trace.steps.push_back({bestRound, cur, bestCand, bestGain});
    }
    return result;
}

RuleResult gcr(const TemporalElection& e, CheckOptions opts) {
    e.validate();
    Checker checker(e, opts);
    const int n = e.voters, ell = e.rounds;
    const std::uint32_t allRounds = (1u << ell) - 1u;

    RuleResult result;
    result.outcome.picks.assign(ell, 0);  // filler candidate

    // Stage 1: peel off the highest-demand group until no voter remains.
    std::uint32_t remaining = (1u << n) - 1u;
    while (remaining) {
        int bestVal = -1, bestPop = -1;
        std::uint32_t bestS = 0, bestT = 0;
        for (std::uint32_t s = (0u - remaining) & remaining;;
             s = (s - remaining) & remaining) {
            if (s == 0) break;
            int val = -1, valTSize = 0;
            std::uint32_t valT = 0;
            for (std::uint32_t t = 0; t <= allRounds; ++t) {
                int muT = checker.mu(VoterSet(s), RoundSet(t));
                int tSize = __builtin_popcount(t);
                if (muT > val || (muT == val && tSize < valTSize)) {
                    val = muT;
                    valT = t;
                    valTSize = tSize;
                }
            }
            int pop = __builtin_popcount(s);
            if (val > bestVal || (val == bestVal && pop > bestPop)) {
                bestVal = val;
                bestPop = pop;
                bestS = s;
                bestT = valT;
            }
            if (s == remaining) break;
        }
        GcrGroup group;
        group.group = VoterSet(bestS);
        group.tRounds = RoundSet(bestT);
        group.muValue = bestVal;
        result.trace.groups.push_back(group);
        remaining &= ~bestS;
    }

    // Stage 2: serve groups in order of |T|, claiming the lowest still-free
    // rounds of T and maximizing the group's minimum satisfaction there.
    std::vector<int> order(result.trace.groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return result.trace.groups[a].tRounds.size() < result.trace.groups[b].tRounds.size();
    });

    std::uint32_t freeRounds = allRounds;
    for (int idx : order) {
        GcrGroup& group = result.trace.groups[idx];
        int need = (group.tRounds.size() * group.group.size()) / n;
        std::uint32_t avail = group.tRounds.bits() & freeRounds;
        if (__builtin_popcount(avail) < need)
            throw std::logic_error("gcr: claimed rounds unavailable; the partition argument failed");
        std::uint32_t claimed = 0;
        for (std::uint32_t b = avail; b && __builtin_popcount(claimed) < need; b &= b - 1)
            claimed |= b & (0u - b);
        group.assigned = RoundSet(claimed);
        group.assignment = checker.guaranteeMaxminArgmax(group.group, group.assigned);
        int pos = 0;
        for (int r : group.assigned.members()) result.outcome.picks[r] = group.assignment.picks[pos++];
        freeRounds &= ~claimed;
    }
    return result;
}

RuleResult sdr(const TemporalElection& e) {
    e.validate();
    for (int i = 0; i < e.voters; ++i)
        for (int r = 0; r < e.rounds; ++r)
            if (e.approvals[i][r].empty())
                throw PreconditionError("sdr: voter " + std::to_string(i + 1) +
                                        " approves no candidate in round " + std::to_string(r + 1));

    RuleResult result;
    result.outcome.picks.resize(e.rounds);
    for (int r = 0; r < e.rounds; ++r) {
        int dictator = r % e.voters;
        result.trace.dictators.push_back(dictator);
        result.outcome.picks[r] = e.approvals[dictator][r].front();
    }
    return result;
}

}  // namespace tempvote
