#include "tempvote/axioms.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <unordered_map>

namespace tempvote {

namespace {

struct AxiomNameRow {
    AxiomId id;
    const char* name;
};

constexpr AxiomNameRow kAxiomNames[] = {
    {AxiomId::WJR, "wJR"},           {AxiomId::JR, "JR"},
    {AxiomId::SJR, "sJR"},           {AxiomId::WPJR, "wPJR"},
    {AxiomId::PJR, "PJR"},           {AxiomId::SPJR, "sPJR"},
    {AxiomId::WEJR, "wEJR"},         {AxiomId::EJR, "EJR"},
    {AxiomId::SEJR, "sEJR"},         {AxiomId::WEJRPlus, "wEJR+"},
    {AxiomId::EJRPlus, "EJR+"},      {AxiomId::SEJRPlus, "sEJR+"},
    {AxiomId::WFJR, "wFJR"},         {AxiomId::FJR, "FJR"},
    {AxiomId::SFJR, "sFJR"},         {AxiomId::WFPJR, "wFPJR"},
    {AxiomId::FPJR, "FPJR"},         {AxiomId::SFPJR, "sFPJR"},
    {AxiomId::WCore, "wCore"},       {AxiomId::Core, "Core"},
    {AxiomId::SCore, "sCore"},       {AxiomId::DroopEJR, "Droop-EJR"},
    {AxiomId::DroopFJR, "Droop-FJR"},
};

std::string lower(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

int floorDiv(long long a, long long b) { return static_cast<int>(a / b); }
int ceilDiv(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

}  // namespace

const std::vector<AxiomId>& allAxioms() {
    static const std::vector<AxiomId> all = [] {
        std::vector<AxiomId> v;
        for (const auto& row : kAxiomNames) v.push_back(row.id);
        return v;
    }();
    return all;
}

std::string axiomName(AxiomId a) {
    for (const auto& row : kAxiomNames)
        if (row.id == a) return row.name;
    return "?";
}

std::optional<AxiomId> axiomFromName(const std::string& name) {
    std::string want = lower(name);
    for (const auto& row : kAxiomNames)
        if (lower(row.name) == want) return row.id;
    return std::nullopt;
}

bool satProfileDetermined(AxiomId a) {
    switch (a) {
        // The JR family's thresholds are 0/1, and a group satisfaction of at
        // least 1 is equivalent to some member having satisfaction at least 1.
        case AxiomId::WJR:
        case AxiomId::JR:
        case AxiomId::SJR:
        // Single-member guarantees compare individual satisfactions against
        // outcome-independent thresholds.
        case AxiomId::WEJR:
        case AxiomId::EJR:
        case AxiomId::SEJR:
        case AxiomId::WFJR:
        case AxiomId::FJR:
        case AxiomId::SFJR:
        case AxiomId::WCore:
        case AxiomId::Core:
        case AxiomId::SCore:
        case AxiomId::DroopEJR:
        case AxiomId::DroopFJR:
            return true;
        // PJR/FPJR compare the collective sat_S, which depends on where the
        // benefits fall; the EJR+ family inspects the selected candidates.
        default:
            return false;
    }
}

// ---------------------------------------------------------------------------

struct Checker::Impl {
    TemporalElection e;
    CheckOptions opts;
    int n = 0, ell = 0, m = 0;

    std::vector<std::vector<std::uint32_t>> approverMask;  // [r][c] voter mask
    std::vector<std::vector<int>> approvedInRound;         // [r] candidates with approvers
    std::vector<std::vector<std::uint64_t>> candMask;      // [i][r] candidate-set mask
    std::vector<int> capPerRound;                          // max approvals of one candidate

    std::unordered_map<std::uint64_t, int> maxminMemo;
    std::unordered_map<std::uint64_t, int> muMemo;
    WorkCounters work;

    explicit Impl(const TemporalElection& election, CheckOptions options)
        : e(election), opts(options) {
        e.validate();
        n = e.voters;
        ell = e.rounds;
        m = e.candidateCount();
        if (n > opts.maxVoters || n > 31)
            throw ResourceCapError("checker limit: " + std::to_string(n) + " voters exceeds cap of " +
                                   std::to_string(std::min(opts.maxVoters, 31)));
        if (ell > opts.maxRounds || ell > 31)
            throw ResourceCapError("checker limit: " + std::to_string(ell) +
                                   " rounds exceeds cap of " +
                                   std::to_string(std::min(opts.maxRounds, 31)));
        if (m > 64)
            throw ResourceCapError("checker limit: " + std::to_string(m) +
                                   " candidates exceeds cap of 64");

        approverMask.assign(ell, std::vector<std::uint32_t>(m, 0));
        approvedInRound.assign(ell, {});
        candMask.assign(n, std::vector<std::uint64_t>(ell, 0));
        capPerRound.assign(ell, 0);
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < ell; ++r)
                for (int c : e.approvals[i][r]) {
                    approverMask[r][c] |= 1u << i;
                    candMask[i][r] |= 1ull << c;
                }
        for (int r = 0; r < ell; ++r)
            for (int c = 0; c < m; ++c)
                if (approverMask[r][c]) {
                    approvedInRound[r].push_back(c);
                    capPerRound[r] = std::max(capPerRound[r], __builtin_popcount(approverMask[r][c]));
                }
    }

    void bumpSubset() {
        if (++work.subsets + work.suboutcomes > opts.maxWork)
            throw ResourceCapError("work budget exceeded while enumerating voter/round subsets");
    }
    void bumpSuboutcome() {
        if (work.subsets + ++work.suboutcomes > opts.maxWork)
            throw ResourceCapError("work budget exceeded while enumerating suboutcomes");
    }
    void ensureEstimate(std::uint64_t estimate, const char* what) const {
        if (estimate > opts.maxWork)
            throw ResourceCapError(std::string("estimated work for ") + what + " (" +
                                   std::to_string(estimate) + " units) exceeds the budget of " +
                                   std::to_string(opts.maxWork));
    }

    std::uint32_t fullVoters() const { return (n >= 32) ? 0xffffffffu : ((1u << n) - 1u); }
    std::uint32_t fullRounds() const { return (ell >= 32) ? 0xffffffffu : ((1u << ell) - 1u); }

    int floorShare(long long t, long long s) const { return floorDiv(t * s, n); }

    // --- per-outcome scratch -------------------------------------------------

    struct OutcomeInfo {
        const Outcome* o = nullptr;
        std::vector<int> sat;
        std::vector<std::uint32_t> benefit;  // [r] approvers of the pick
        std::uint32_t zeroMask = 0;
    };

    OutcomeInfo analyze(const Outcome& o) {
        validateOutcome(e, o);
        OutcomeInfo info;
        info.o = &o;
        info.benefit.resize(ell);
        info.sat.assign(n, 0);
        for (int r = 0; r < ell; ++r) {
            info.benefit[r] = approverMask[r][o.picks[r]];
            for (std::uint32_t b = info.benefit[r]; b; b &= b - 1) ++info.sat[__builtin_ctz(b)];
        }
        for (int i = 0; i < n; ++i)
            if (info.sat[i] == 0) info.zeroMask |= 1u << i;
        return info;
    }

    int maxSat(const OutcomeInfo& info, std::uint32_t group) const {
        int mx = 0;
        for (std::uint32_t b = group; b; b &= b - 1)
            mx = std::max(mx, info.sat[__builtin_ctz(b)]);
        return mx;
    }
    int groupSat(const OutcomeInfo& info, std::uint32_t group) const {
        int s = 0;
        for (int r = 0; r < ell; ++r)
            if (info.benefit[r] & group) ++s;
        return s;
    }

    // Per-round intersection of the members' approval sets.
    std::uint64_t interAt(std::uint32_t group, int r) const {
        std::uint64_t inter = ~0ull;
        for (std::uint32_t b = group; b; b &= b - 1) inter &= candMask[__builtin_ctz(b)][r];
        return inter;
    }
    std::uint32_t agreementMask(std::uint32_t group) const {
        std::uint32_t rounds = 0;
        for (int r = 0; r < ell; ++r)
            if (interAt(group, r)) rounds |= 1u << r;
        return rounds;
    }

    // Largest number of members approving one common candidate in round r.
    int coApproval(std::uint32_t group, int r) const {
        int best = 0;
        for (int c : approvedInRound[r])
            best = std::max(best, __builtin_popcount(approverMask[r][c] & group));
        return best;
    }

    // --- max-min guarantee machinery ------------------------------------------

    struct DfsPlan {
        std::vector<int> rounds;                         // ascending
        std::vector<int> memberIds;                      // ascending
        std::vector<std::vector<int>> choices;           // per position
        std::vector<std::vector<std::uint32_t>> benefit; // local-member mask per choice
        std::vector<std::vector<int>> availSuffix;       // [pos][memberLocal]
    };

    DfsPlan buildPlan(std::uint32_t group, std::uint32_t roundsMask) {
        DfsPlan plan;
        plan.memberIds = IndexSet(group).members();
        plan.rounds = IndexSet(roundsMask).members();
        int k = static_cast<int>(plan.rounds.size());
        int s = static_cast<int>(plan.memberIds.size());
        plan.choices.resize(k);
        plan.benefit.resize(k);
        for (int pos = 0; pos < k; ++pos) {
            int r = plan.rounds[pos];
            // Candidate 0 is always offered as the filler; other unapproved
            // candidates cannot change any member's satisfaction.
            std::vector<int>& ch = plan.choices[pos];
            ch.push_back(0);
            for (int c : approvedInRound[r])
                if (c != 0 && (approverMask[r][c] & group)) ch.push_back(c);
            for (int c : ch) {
                std::uint32_t local = 0;
                for (int j = 0; j < s; ++j)
                    if (approverMask[r][c] & (1u << plan.memberIds[j])) local |= 1u << j;
                plan.benefit[pos].push_back(local);
            }
        }
        plan.availSuffix.assign(k + 1, std::vector<int>(s, 0));
        for (int pos = k - 1; pos >= 0; --pos) {
            std::uint32_t any = 0;
            for (std::uint32_t b : plan.benefit[pos]) any |= b;
            for (int j = 0; j < s; ++j)
                plan.availSuffix[pos][j] =
                    plan.availSuffix[pos + 1][j] + ((any >> j) & 1u);
        }
        return plan;
    }

    struct MaxminSearch {
        Impl* impl;
        const DfsPlan* plan;
        int memberCount;
        int best = -1;
        std::vector<int> counts;
        std::vector<int> current;
        std::vector<int> bestPicks;
        bool wantArgmax = false;

        void run() {
            counts.assign(memberCount, 0);
            current.assign(plan->rounds.size(), 0);
            dfs(0);
        }
        void dfs(std::size_t pos) {
            impl->bumpSuboutcome();
            if (pos == plan->rounds.size()) {
                int v = minCount();
                if (v > best) {
                    best = v;
                    if (wantArgmax) bestPicks = current;
                }
                return;
            }
            if (boundFrom(pos) <= best) return;
            const auto& ch = plan->choices[pos];
            const auto& ben = plan->benefit[pos];
            for (std::size_t k = 0; k < ch.size(); ++k) {
                current[pos] = ch[k];
                addMask(ben[k], +1);
                dfs(pos + 1);
                addMask(ben[k], -1);
                if (best == static_cast<int>(plan->rounds.size())) return;
            }
        }
        int minCount() const {
            int mn = counts.empty() ? 0 : counts[0];
            for (int v : counts) mn = std::min(mn, v);
            return mn;
        }
        int boundFrom(std::size_t pos) const {
            int mn = INT32_MAX;
            for (int j = 0; j < memberCount; ++j)
                mn = std::min(mn, counts[j] + plan->availSuffix[pos][j]);
            return mn == INT32_MAX ? 0 : mn;
        }
        void addMask(std::uint32_t mask, int delta) {
            for (std::uint32_t b = mask; b; b &= b - 1) counts[__builtin_ctz(b)] += delta;
        }
    };

    int maxminValue(std::uint32_t group, std::uint32_t roundsMask) {
        std::uint64_t key = group | (static_cast<std::uint64_t>(roundsMask) << 32);
        auto it = maxminMemo.find(key);
        if (it != maxminMemo.end()) return it->second;
        DfsPlan plan = buildPlan(group, roundsMask);
        MaxminSearch search{this, &plan, static_cast<int>(plan.memberIds.size())};
        search.run();
        maxminMemo.emplace(key, search.best);
        return search.best;
    }

    Suboutcome maxminArgmax(std::uint32_t group, std::uint32_t roundsMask) {
        DfsPlan plan = buildPlan(group, roundsMask);
        MaxminSearch search{this, &plan, static_cast<int>(plan.memberIds.size())};
        search.wantArgmax = true;
        search.run();
        Suboutcome sub;
        sub.rounds = RoundSet(roundsMask);
        sub.picks = search.bestPicks;
        return sub;
    }

    // First (lexicographic) suboutcome on R giving every member at least its
    // personal threshold; nullopt when none exists.
    std::optional<Suboutcome> beats(std::uint32_t group, std::uint32_t roundsMask,
                                    const std::vector<int>& thresholdByLocal) {
        DfsPlan plan = buildPlan(group, roundsMask);
        int s = static_cast<int>(plan.memberIds.size());
        std::vector<int> deficits = thresholdByLocal;
        std::vector<int> picks(plan.rounds.size(), 0);
        std::optional<Suboutcome> found;

        auto dfs = [&](auto&& self, std::size_t pos) -> bool {
            bumpSuboutcome();
            for (int j = 0; j < s; ++j)
                if (deficits[j] > plan.availSuffix[pos][j]) return false;
            if (pos == plan.rounds.size()) {
                Suboutcome sub;
                sub.rounds = RoundSet(roundsMask);
                sub.picks = picks;
                found = sub;
                return true;
            }
            const auto& ch = plan.choices[pos];
            const auto& ben = plan.benefit[pos];
            for (std::size_t k = 0; k < ch.size(); ++k) {
                picks[pos] = ch[k];
                for (std::uint32_t b = ben[k]; b; b &= b - 1) --deficits[__builtin_ctz(b)];
                if (self(self, pos + 1)) return true;
                for (std::uint32_t b = ben[k]; b; b &= b - 1) ++deficits[__builtin_ctz(b)];
            }
            return false;
        };
        dfs(dfs, 0);
        return found;
    }

    // Sum of the q largest per-round best co-approval counts over `pool`;
    // a beating deviation on q rounds can hand out at most this many
    // member-round benefits.
    int capacity(std::uint32_t group, std::uint32_t poolMask, int q, bool exact) {
        std::vector<int> w;
        for (int r : IndexSet(poolMask).members())
            w.push_back(exact ? coApproval(group, r)
                              : std::min(__builtin_popcount(group), capPerRound[r]));
        std::sort(w.begin(), w.end(), std::greater<int>());
        int sum = 0;
        for (int i = 0; i < q && i < static_cast<int>(w.size()); ++i) sum += w[i];
        return sum;
    }

    int muValue(std::uint32_t group, std::uint32_t tMask) {
        std::uint64_t key = group | (static_cast<std::uint64_t>(tMask) << 32);
        auto it = muMemo.find(key);
        if (it != muMemo.end()) return it->second;
        int q = floorShare(__builtin_popcount(tMask), __builtin_popcount(group));
        int value;
        if (q == 0) {
            value = 0;
        } else {
            value = INT32_MAX;
            forEachSubsetOfSize(tMask, q, [&](std::uint32_t r) {
                value = std::min(value, maxminValue(group, r));
                return value > 0;  // a zero cannot be undercut
            });
        }
        muMemo.emplace(key, value);
        return value;
    }

    // Calls fn on ascending submasks of pool with the given popcount while fn
    // returns true.
    template <typename Fn>
    void forEachSubsetOfSize(std::uint32_t pool, int size, Fn fn) {
        if (size == 0) {
            bumpSubset();
            fn(0);
            return;
        }
        if (__builtin_popcount(pool) < size) return;
        for (std::uint32_t s = (0u - pool) & pool;; s = (s - pool) & pool) {
            if (s == 0) break;  // wrapped past pool
            if (__builtin_popcount(s) == size) {
                bumpSubset();
                if (!fn(s)) return;
            }
            if (s == pool) break;
        }
    }

    int rhoValue(std::uint32_t group, RhoVariant v) {
        int q = floorShare(ell, __builtin_popcount(group));
        switch (v) {
            case RhoVariant::Strong: {
                int best = 0;
                if (q > 0)
                    forEachSubsetOfSize(fullRounds(), q, [&](std::uint32_t r) {
                        best = std::max(best, maxminValue(group, r));
                        return best < q;  // q is the ceiling
                    });
                return best;
            }
            case RhoVariant::Weak: {
                if (q == 0) return 0;
                int worst = INT32_MAX;
                forEachSubsetOfSize(fullRounds(), q, [&](std::uint32_t r) {
                    worst = std::min(worst, maxminValue(group, r));
                    return worst > 0;
                });
                return worst;
            }
            case RhoVariant::Standard: {
                int best = 0;
                std::uint32_t all = fullRounds();
                for (std::uint32_t t = 1; t <= all; ++t) {
                    bumpSubset();
                    if (floorShare(__builtin_popcount(t), __builtin_popcount(group)) <= best)
                        continue;
                    best = std::max(best, muValue(group, t));
                }
                return best;
            }
        }
        return 0;
    }
};

// ---------------------------------------------------------------------------

Checker::Checker(const TemporalElection& e, CheckOptions opts)
    : impl_(std::make_unique<Impl>(e, opts)) {}
Checker::~Checker() = default;
Checker::Checker(Checker&&) noexcept = default;
Checker& Checker::operator=(Checker&&) noexcept = default;

const TemporalElection& Checker::election() const { return impl_->e; }
WorkCounters Checker::workTotal() const { return impl_->work; }

int Checker::guaranteeMaxmin(const VoterSet& group, const RoundSet& r) {
    if (group.empty()) throw PreconditionError("guaranteeMaxmin: empty voter group");
    return impl_->maxminValue(group.bits(), r.bits());
}

Suboutcome Checker::guaranteeMaxminArgmax(const VoterSet& group, const RoundSet& r) {
    if (group.empty()) throw PreconditionError("guaranteeMaxmin: empty voter group");
    return impl_->maxminArgmax(group.bits(), r.bits());
}

int Checker::mu(const VoterSet& group, const RoundSet& t) {
    if (group.empty()) throw PreconditionError("mu: empty voter group");
    return impl_->muValue(group.bits(), t.bits());
}

int Checker::rho(const VoterSet& group, RhoVariant v) {
    if (group.empty()) throw PreconditionError("rho: empty voter group");
    return impl_->rhoValue(group.bits(), v);
}

namespace {

CheckReport makeReport(AxiomId axiom, WorkCounters before, WorkCounters after,
                       std::optional<Witness> witness) {
    CheckReport rep;
    rep.axiom = axiom;
    rep.holds = !witness.has_value();
    rep.witness = std::move(witness);
    rep.work.subsets = after.subsets - before.subsets;
    rep.work.suboutcomes = after.suboutcomes - before.suboutcomes;
    return rep;
}

AxiomId jrAxiom(Variant v) {
    return v == Variant::Weak ? AxiomId::WJR : v == Variant::Standard ? AxiomId::JR : AxiomId::SJR;
}
AxiomId pjrAxiom(Variant v) {
    return v == Variant::Weak ? AxiomId::WPJR
                              : v == Variant::Standard ? AxiomId::PJR : AxiomId::SPJR;
}
AxiomId ejrAxiom(Variant v) {
    return v == Variant::Weak ? AxiomId::WEJR
                              : v == Variant::Standard ? AxiomId::EJR : AxiomId::SEJR;
}
AxiomId ejrPlusAxiom(Variant v) {
    return v == Variant::Weak ? AxiomId::WEJRPlus
                              : v == Variant::Standard ? AxiomId::EJRPlus : AxiomId::SEJRPlus;
}
AxiomId fjrAxiom(Variant v) {
    return v == Variant::Weak ? AxiomId::WFJR
                              : v == Variant::Standard ? AxiomId::FJR : AxiomId::SFJR;
}
AxiomId fpjrAxiom(Variant v) {
    return v == Variant::Weak ? AxiomId::WFPJR
                              : v == Variant::Standard ? AxiomId::FPJR : AxiomId::SFPJR;
}
AxiomId coreAxiom(Variant v) {
    return v == Variant::Weak ? AxiomId::WCore
                              : v == Variant::Standard ? AxiomId::Core : AxiomId::SCore;
}

}  // namespace

// --- JR family --------------------------------------------------------------

CheckReport Checker::checkJrFamily(const Outcome& o, Variant v) {
    Impl& im = *impl_;
    WorkCounters before = im.work;
    auto info = im.analyze(o);
    std::optional<Witness> witness;

    if (v == Variant::Strong) {
        // Any violating group can be grown to all zero-satisfaction approvers
        // of a commonly approved candidate; the grown group still agrees in
        // that round and its floor threshold only increases.
        for (int r = 0; r < im.ell && !witness; ++r) {
            for (int c : im.approvedInRound[r]) {
                im.bumpSubset();
                std::uint32_t grown = im.approverMask[r][c] & info.zeroMask;
                if (!grown) continue;
                if (im.floorShare(im.ell, __builtin_popcount(grown)) < 1) continue;
                Witness w;
                w.group = VoterSet(grown);
                w.rounds = RoundSet(im.agreementMask(grown));
                w.threshold = 1;
                w.pivot = {{r, c}};
                witness = std::move(w);
                break;
            }
        }
        return makeReport(jrAxiom(v), before, im.work, std::move(witness));
    }

    // JR and wJR are checked exhaustively over subsets of the unsatisfied
    // voters: growing a group can shrink its agreement level, so the
    // maximal-group shortcut used for sJR is not sound here.
    im.ensureEstimate(std::uint64_t(1) << __builtin_popcount(info.zeroMask),
                      "JR-family subset scan");
    std::uint32_t zero = info.zeroMask;
    if (zero) {
        for (std::uint32_t s = (0u - zero) & zero;; s = (s - zero) & zero) {
            if (s == 0) break;
            im.bumpSubset();
            std::uint32_t agree = im.agreementMask(s);
            int t = __builtin_popcount(agree);
            int size = __builtin_popcount(s);
            bool violated = false;
            if (v == Variant::Weak)
                violated = (t == im.ell) && im.floorShare(im.ell, size) >= 1;
            else
                violated = im.floorShare(t, size) >= 1;
            if (violated) {
                Witness w;
                w.group = VoterSet(s);
                w.rounds = RoundSet(agree);
                w.threshold = 1;
                witness = std::move(w);
                break;
            }
            if (s == zero) break;
        }
    }
    return makeReport(jrAxiom(v), before, im.work, std::move(witness));
}

// --- PJR / EJR families ------------------------------------------------------

CheckReport Checker::checkPjrFamily(const Outcome& o, Variant v) {
    Impl& im = *impl_;
    WorkCounters before = im.work;
    im.ensureEstimate(std::uint64_t(1) << im.n, "PJR-family subset scan");
    auto info = im.analyze(o);
    std::optional<Witness> witness;

    std::uint32_t all = im.fullVoters();
    for (std::uint32_t s = 1; s <= all && !witness; ++s) {
        im.bumpSubset();
        int size = __builtin_popcount(s);
        int qfull = im.floorShare(im.ell, size);
        int satS = im.groupSat(info, s);
        if (satS >= qfull) continue;  // every variant's threshold is at most qfull
        std::uint32_t agree = im.agreementMask(s);
        int t = __builtin_popcount(agree);
        int threshold = 0;
        if (v == Variant::Weak)
            threshold = (t == im.ell) ? qfull : 0;
        else if (v == Variant::Standard)
            threshold = im.floorShare(t, size);
        else
            threshold = std::min(t, qfull);
        if (threshold >= 1 && satS < threshold) {
            Witness w;
            w.group = VoterSet(s);
            w.rounds = RoundSet(agree);
            w.threshold = threshold;
            witness = std::move(w);
        }
    }
    return makeReport(pjrAxiom(v), before, im.work, std::move(witness));
}

CheckReport Checker::checkEjrFamily(const Outcome& o, Variant v) {
    Impl& im = *impl_;
    WorkCounters before = im.work;
    im.ensureEstimate(std::uint64_t(1) << im.n, "EJR-family subset scan");
    auto info = im.analyze(o);
    std::optional<Witness> witness;

    std::uint32_t all = im.fullVoters();
    for (std::uint32_t s = 1; s <= all && !witness; ++s) {
        im.bumpSubset();
        int size = __builtin_popcount(s);
        int qfull = im.floorShare(im.ell, size);
        int mx = im.maxSat(info, s);
        if (mx >= qfull) continue;
        std::uint32_t agree = im.agreementMask(s);
        int t = __builtin_popcount(agree);
        int threshold = 0;
        if (v == Variant::Weak)
            threshold = (t == im.ell) ? qfull : 0;
        else if (v == Variant::Standard)
            threshold = im.floorShare(t, size);
        else
            threshold = std::min(t, qfull);
        if (threshold >= 1 && mx < threshold) {
            Witness w;
            w.group = VoterSet(s);
            w.rounds = RoundSet(agree);
            w.threshold = threshold;
            witness = std::move(w);
        }
    }
    return makeReport(ejrAxiom(v), before, im.work, std::move(witness));
}

CheckReport Checker::checkDroopEjr(const Outcome& o) {
    Impl& im = *impl_;
    WorkCounters before = im.work;
    im.ensureEstimate(std::uint64_t(1) << im.n, "Droop-EJR subset scan");
    auto info = im.analyze(o);
    std::optional<Witness> witness;

    std::uint32_t all = im.fullVoters();
    for (std::uint32_t s = 1; s <= all && !witness; ++s) {
        im.bumpSubset();
        int size = __builtin_popcount(s);
        std::uint32_t agree = im.agreementMask(s);
        int t = __builtin_popcount(agree);
        if (t == 0) continue;
        int threshold = ceilDiv(static_cast<long long>(t + 1) * size, im.n) - 1;
        if (threshold < 1) continue;
        if (im.maxSat(info, s) < threshold) {
            Witness w;
            w.group = VoterSet(s);
            w.rounds = RoundSet(agree);
            w.threshold = threshold;
            witness = std::move(w);
        }
    }
    return makeReport(AxiomId::DroopEJR, before, im.work, std::move(witness));
}

// --- EJR+ family -------------------------------------------------------------

CheckReport Checker::checkEjrPlus(const Outcome& o, Variant v) {
    Impl& im = *impl_;
    WorkCounters before = im.work;
    auto info = im.analyze(o);
    std::optional<Witness> witness;

    // below[lambda] = voters with satisfaction < lambda
    std::vector<std::uint32_t> below(im.ell + 1, 0);
    for (int lambda = 1; lambda <= im.ell; ++lambda)
        for (int i = 0; i < im.n; ++i)
            if (info.sat[i] < lambda) below[lambda] |= 1u << i;

    for (int r = 0; r < im.ell && !witness; ++r) {
        std::uint32_t approveHere = im.approverMask[r][o.picks[r]];
        for (int c : im.approvedInRound[r]) {
            if (c == o.picks[r]) continue;
            std::uint32_t arc = im.approverMask[r][c];
            // No threshold reachable from any subset of arc can exceed this.
            int lambdaCap = im.floorShare(im.ell, __builtin_popcount(arc));
            for (int lambda = 1; lambda <= lambdaCap; ++lambda) {
                im.bumpSubset();
                std::uint32_t s = arc & below[lambda];
                if (!s) continue;
                if ((s & ~approveHere) == 0) continue;  // all members approve the pick
                int size = __builtin_popcount(s);

                if (v == Variant::Strong) {
                    int threshold = im.floorShare(im.ell, size);
                    if (threshold >= lambda) {
                        Witness w;
                        w.group = VoterSet(s);
                        w.rounds = RoundSet::of({r});
                        w.threshold = threshold;
                        w.pivot = {{r, c}};
                        witness = std::move(w);
                        break;
                    }
                    continue;
                }

                // Per-round best co-approval counts within the candidate set.
                std::vector<std::pair<int, int>> alpha;  // (count, round)
                alpha.reserve(im.ell);
                for (int q = 0; q < im.ell; ++q) alpha.push_back({im.coApproval(s, q), q});

                if (v == Variant::Weak) {
                    int sigma = INT32_MAX;
                    for (auto& [count, round] : alpha) sigma = std::min(sigma, count);
                    if (sigma >= 1 && im.floorShare(im.ell, sigma) >= lambda) {
                        Witness w;
                        w.group = VoterSet(s);
                        w.rounds = RoundSet(im.fullRounds());
                        w.threshold = im.floorShare(im.ell, sigma);
                        w.cohesion = {{sigma, im.ell}};
                        w.pivot = {{r, c}};
                        witness = std::move(w);
                        break;
                    }
                    continue;
                }

                // Standard: sort counts descending (ties: lower round first)
                // and look for a prefix q with floor(q * alpha_q / n) >= lambda.
                std::sort(alpha.begin(), alpha.end(), [](const auto& a, const auto& b) {
                    if (a.first != b.first) return a.first > b.first;
                    return a.second < b.second;
                });
                for (int q = 1; q <= im.ell; ++q) {
                    int sigma = alpha[q - 1].first;
                    if (sigma == 0) break;
                    int threshold = im.floorShare(q, sigma);
                    if (threshold >= lambda) {
                        Witness w;
                        w.group = VoterSet(s);
                        RoundSet rounds;
                        for (int j = 0; j < q; ++j) rounds.add(alpha[j].second);
                        w.rounds = rounds;
                        w.threshold = threshold;
                        w.cohesion = {{sigma, q}};
                        w.pivot = {{r, c}};
                        witness = std::move(w);
                        break;
                    }
                }
                if (witness) break;
            }
            if (witness) break;
        }
    }
    return makeReport(ejrPlusAxiom(v), before, im.work, std::move(witness));
}

CheckReport Checker::checkEjrPlusBruteforce(const Outcome& o, Variant v) {
    Impl& im = *impl_;
    WorkCounters before = im.work;
    im.ensureEstimate(std::uint64_t(1) << im.n, "EJR+ brute force");
    auto info = im.analyze(o);
    std::optional<Witness> witness;

    std::uint32_t all = im.fullVoters();
    for (std::uint32_t s = 1; s <= all && !witness; ++s) {
        im.bumpSubset();
        // Rounds where the group commonly approves a candidate yet the pick
        // is outside the common set: condition (ii) fails there.
        int pivotRound = -1;
        std::uint64_t pivotInter = 0;
        for (int r = 0; r < im.ell; ++r) {
            std::uint64_t inter = im.interAt(s, r);
            if (inter && !((inter >> o.picks[r]) & 1ull)) {
                pivotRound = r;
                pivotInter = inter;
                break;
            }
        }
        if (pivotRound < 0) continue;
        int pivotCand = __builtin_ctzll(pivotInter);
        int size = __builtin_popcount(s);
        int mx = im.maxSat(info, s);

        auto violated = [&](int sigma, int tau, int threshold) {
            Witness w;
            w.group = VoterSet(s);
            std::vector<std::pair<int, int>> alpha;
            for (int q = 0; q < im.ell; ++q) alpha.push_back({im.coApproval(s, q), q});
            std::sort(alpha.begin(), alpha.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
            });
            RoundSet rounds;
            for (int j = 0; j < tau && j < static_cast<int>(alpha.size()); ++j)
                rounds.add(alpha[j].second);
            w.rounds = rounds;
            w.threshold = threshold;
            if (v != Variant::Strong) w.cohesion = {{sigma, tau}};
            w.pivot = {{pivotRound, pivotCand}};
            witness = std::move(w);
        };

        if (v == Variant::Strong) {
            int threshold = im.floorShare(im.ell, size);
            if (mx < threshold) violated(size, im.ell, threshold);
            continue;
        }

        // Cohesion levels: a round supports sigma iff some candidate is
        // approved there by at least sigma members.
        std::vector<int> beta(im.ell);
        for (int q = 0; q < im.ell; ++q) beta[q] = im.coApproval(s, q);

        if (v == Variant::Weak) {
            int minBeta = *std::min_element(beta.begin(), beta.end());
            for (int sigma = 1; sigma <= minBeta && !witness; ++sigma) {
                im.bumpSubset();
                int threshold = im.floorShare(im.ell, sigma);
                if (mx < threshold) violated(sigma, im.ell, threshold);
            }
            continue;
        }

        for (int sigma = 1; sigma <= size && !witness; ++sigma) {
            int tauMax = 0;
            for (int q = 0; q < im.ell; ++q)
                if (beta[q] >= sigma) ++tauMax;
            for (int tau = 1; tau <= tauMax && !witness; ++tau) {
                im.bumpSubset();
                int threshold = im.floorShare(tau, sigma);
                if (mx < threshold) violated(sigma, tau, threshold);
            }
        }
    }
    return makeReport(ejrPlusAxiom(v), before, im.work, std::move(witness));
}

// --- FJR / FPJR families -----------------------------------------------------

namespace {

// Shared scan for the FJR (single-member) and FPJR (collective) families.
// `have` is what the group already gets from the outcome; a violation needs
// some guarantee value strictly above it.
struct GuaranteeScan {
    Checker::Impl& im;
    std::uint32_t group;
    int have;

    std::optional<Witness> strongViolation() {
        int q = im.floorShare(im.ell, __builtin_popcount(group));
        if (have >= q) return std::nullopt;
        std::optional<Witness> w;
        im.forEachSubsetOfSize(im.fullRounds(), q, [&](std::uint32_t r) {
            int v = im.maxminValue(group, r);
            if (v > have) {
                w = witnessFor(r, v);
                return false;
            }
            return true;
        });
        return w;
    }

    std::optional<Witness> weakViolation() {
        int q = im.floorShare(im.ell, __builtin_popcount(group));
        if (q == 0 || have >= q) return std::nullopt;
        bool pass = false;
        int worst = INT32_MAX;
        std::uint32_t worstR = 0;
        im.forEachSubsetOfSize(im.fullRounds(), q, [&](std::uint32_t r) {
            int v = im.maxminValue(group, r);
            if (v <= have) {
                pass = true;
                return false;
            }
            if (v < worst) {
                worst = v;
                worstR = r;
            }
            return true;
        });
        if (pass || worst == INT32_MAX) return std::nullopt;
        return witnessFor(worstR, worst);
    }

    // droop=false: |R| = floor(|T|*|S|/n); droop=true: |R| = ceil((|T|+1)*|S|/n)-1,
    // capped at |T|.
    std::optional<Witness> standardViolation(bool droop) {
        int size = __builtin_popcount(group);
        std::uint32_t all = im.fullRounds();
        for (std::uint32_t t = 1; t <= all; ++t) {
            im.bumpSubset();
            int tSize = __builtin_popcount(t);
            int q;
            if (droop)
                q = std::min(tSize,
                             static_cast<int>(((static_cast<long long>(tSize) + 1) * size +
                                               im.n - 1) / im.n) - 1);
            else
                q = im.floorShare(tSize, size);
            if (q <= have || q <= 0) continue;  // the guarantee is capped by q
            bool pass = false;
            int worst = INT32_MAX;
            std::uint32_t worstR = 0;
            im.forEachSubsetOfSize(t, q, [&](std::uint32_t r) {
                int v = im.maxminValue(group, r);
                if (v <= have) {
                    pass = true;
                    return false;
                }
                if (v < worst) {
                    worst = v;
                    worstR = r;
                }
                return true;
            });
            if (!pass && worst != INT32_MAX) return witnessFor(worstR, worst);
        }
        return std::nullopt;
    }

    Witness witnessFor(std::uint32_t roundsMask, int value) {
        Witness w;
        w.group = VoterSet(group);
        w.rounds = RoundSet(roundsMask);
        w.deviation = im.maxminArgmax(group, roundsMask);
        w.threshold = value;
        return w;
    }
};

}  // namespace

CheckReport Checker::checkFjrFamily(const Outcome& o, Variant v) {
    Impl& im = *impl_;
    WorkCounters before = im.work;
    im.ensureEstimate((std::uint64_t(1) << im.n) << im.ell, "FJR-family scan");
    auto info = im.analyze(o);
    std::optional<Witness> witness;

    std::uint32_t all = im.fullVoters();
    for (std::uint32_t s = 1; s <= all && !witness; ++s) {
        im.bumpSubset();
        GuaranteeScan scan{im, s, im.maxSat(info, s)};
        if (v == Variant::Strong)
            witness = scan.strongViolation();
        else if (v == Variant::Weak)
            witness = scan.weakViolation();
        else
            witness = scan.standardViolation(false);
    }
    return makeReport(fjrAxiom(v), before, im.work, std::move(witness));
}

CheckReport Checker::checkFpjrFamily(const Outcome& o, Variant v) {
    Impl& im = *impl_;
    WorkCounters before = im.work;
    im.ensureEstimate((std::uint64_t(1) << im.n) << im.ell, "FPJR-family scan");
    auto info = im.analyze(o);
    std::optional<Witness> witness;

    std::uint32_t all = im.fullVoters();
    for (std::uint32_t s = 1; s <= all && !witness; ++s) {
        im.bumpSubset();
        GuaranteeScan scan{im, s, im.groupSat(info, s)};
        if (v == Variant::Strong)
            witness = scan.strongViolation();
        else if (v == Variant::Weak)
            witness = scan.weakViolation();
        else
            witness = scan.standardViolation(false);
    }
    return makeReport(fpjrAxiom(v), before, im.work, std::move(witness));
}

CheckReport Checker::checkDroopFjr(const Outcome& o) {
    Impl& im = *impl_;
    WorkCounters before = im.work;
    im.ensureEstimate((std::uint64_t(1) << im.n) << im.ell, "Droop-FJR scan");
    auto info = im.analyze(o);
    std::optional<Witness> witness;

    std::uint32_t all = im.fullVoters();
    for (std::uint32_t s = 1; s <= all && !witness; ++s) {
        im.bumpSubset();
        GuaranteeScan scan{im, s, im.maxSat(info, s)};
        witness = scan.standardViolation(true);
    }
    return makeReport(AxiomId::DroopFJR, before, im.work, std::move(witness));
}

// --- Core family -------------------------------------------------------------

namespace {

struct CoreScan {
    Checker::Impl& im;
    std::uint32_t group;
    const std::vector<int>& sat;
    int mx;
    int demand;                    // sum over members of sat+1
    std::vector<int> thresholds;   // per local member, sat+1

    CoreScan(Checker::Impl& impl, std::uint32_t g, const std::vector<int>& satVec)
        : im(impl), group(g), sat(satVec) {
        mx = 0;
        demand = 0;
        for (std::uint32_t b = group; b; b &= b - 1) {
            int i = __builtin_ctz(b);
            mx = std::max(mx, sat[i]);
            demand += sat[i] + 1;
            thresholds.push_back(sat[i] + 1);
        }
    }

    // True when no deviation on any q rounds of `pool` can leave every
    // member strictly better off.
    bool screenedUnbeatable(std::uint32_t pool, int q) {
        if (mx >= q) return true;
        if (im.capacity(group, pool, q, false) < demand) return true;
        if (im.capacity(group, pool, q, true) < demand) return true;
        return false;
    }

    std::optional<Suboutcome> beatingDeviation(std::uint32_t roundsMask) {
        return im.beats(group, roundsMask, thresholds);
    }

    Witness witnessFor(std::uint32_t roundsMask, const Suboutcome& deviation) {
        Witness w;
        w.group = VoterSet(group);
        w.rounds = RoundSet(roundsMask);
        w.deviation = deviation;
        int mn = INT32_MAX;
        for (std::uint32_t b = group; b; b &= b - 1) {
            VoterSet one;
            one.add(__builtin_ctz(b));
            mn = std::min(mn, satisfaction(im.e, one, deviation));
        }
        w.threshold = mn == INT32_MAX ? 0 : mn;
        return w;
    }
};

}  // namespace

CheckReport Checker::checkCoreFamily(const Outcome& o, Variant v) {
    Impl& im = *impl_;
    WorkCounters before = im.work;
    im.ensureEstimate((std::uint64_t(1) << im.n) << im.ell, "core-family scan");
    auto info = im.analyze(o);
    std::optional<Witness> witness;

    std::uint32_t all = im.fullVoters();
    for (std::uint32_t s = 1; s <= all && !witness; ++s) {
        im.bumpSubset();
        CoreScan scan(im, s, info.sat);
        int size = __builtin_popcount(s);

        if (v == Variant::Strong || v == Variant::Weak) {
            int q = im.floorShare(im.ell, size);
            if (scan.screenedUnbeatable(im.fullRounds(), q)) continue;
            if (v == Variant::Strong) {
                // violated as soon as one subset of rounds admits a beating
                // deviation
                im.forEachSubsetOfSize(im.fullRounds(), q, [&](std::uint32_t r) {
                    auto dev = scan.beatingDeviation(r);
                    if (dev) {
                        witness = scan.witnessFor(r, *dev);
                        return false;
                    }
                    return true;
                });
            } else {
                // violated only if every subset of rounds is beaten
                bool pass = false;
                std::optional<Witness> firstBeaten;
                im.forEachSubsetOfSize(im.fullRounds(), q, [&](std::uint32_t r) {
                    auto dev = scan.beatingDeviation(r);
                    if (!dev) {
                        pass = true;
                        return false;
                    }
                    if (!firstBeaten) firstBeaten = scan.witnessFor(r, *dev);
                    return true;
                });
                if (!pass) witness = std::move(firstBeaten);
            }
            continue;
        }

        // Standard: every designated T must contain some blocking R.
        std::uint32_t allRounds = im.fullRounds();
        for (std::uint32_t t = 1; t <= allRounds && !witness; ++t) {
            im.bumpSubset();
            int q = im.floorShare(__builtin_popcount(t), size);
            if (q == 0) continue;
            if (scan.screenedUnbeatable(t, q)) continue;
            bool pass = false;
            std::optional<Witness> firstBeaten;
            im.forEachSubsetOfSize(t, q, [&](std::uint32_t r) {
                auto dev = scan.beatingDeviation(r);
                if (!dev) {
                    pass = true;
                    return false;
                }
                if (!firstBeaten) firstBeaten = scan.witnessFor(r, *dev);
                return true;
            });
            if (!pass) witness = std::move(firstBeaten);
        }
    }
    return makeReport(coreAxiom(v), before, im.work, std::move(witness));
}

// --- dispatch ----------------------------------------------------------------

CheckReport Checker::check(const Outcome& o, AxiomId axiom) {
    switch (axiom) {
        case AxiomId::WJR: return checkJrFamily(o, Variant::Weak);
        case AxiomId::JR: return checkJrFamily(o, Variant::Standard);
        case AxiomId::SJR: return checkJrFamily(o, Variant::Strong);
        case AxiomId::WPJR: return checkPjrFamily(o, Variant::Weak);
        case AxiomId::PJR: return checkPjrFamily(o, Variant::Standard);
        case AxiomId::SPJR: return checkPjrFamily(o, Variant::Strong);
        case AxiomId::WEJR: return checkEjrFamily(o, Variant::Weak);
        case AxiomId::EJR: return checkEjrFamily(o, Variant::Standard);
        case AxiomId::SEJR: return checkEjrFamily(o, Variant::Strong);
        case AxiomId::WEJRPlus: return checkEjrPlus(o, Variant::Weak);
        case AxiomId::EJRPlus: return checkEjrPlus(o, Variant::Standard);
        case AxiomId::SEJRPlus: return checkEjrPlus(o, Variant::Strong);
        case AxiomId::WFJR: return checkFjrFamily(o, Variant::Weak);
        case AxiomId::FJR: return checkFjrFamily(o, Variant::Standard);
        case AxiomId::SFJR: return checkFjrFamily(o, Variant::Strong);
        case AxiomId::WFPJR: return checkFpjrFamily(o, Variant::Weak);
        case AxiomId::FPJR: return checkFpjrFamily(o, Variant::Standard);
        case AxiomId::SFPJR: return checkFpjrFamily(o, Variant::Strong);
        case AxiomId::WCore: return checkCoreFamily(o, Variant::Weak);
        case AxiomId::Core: return checkCoreFamily(o, Variant::Standard);
        case AxiomId::SCore: return checkCoreFamily(o, Variant::Strong);
        case AxiomId::DroopEJR: return checkDroopEjr(o);
        case AxiomId::DroopFJR: return checkDroopFjr(o);
    }
    throw std::logic_error("unknown axiom id");
}

CheckReport check(const TemporalElection& e, const Outcome& o, AxiomId axiom, CheckOptions opts) {
    Checker checker(e, opts);
    return checker.check(o, axiom);
}

int guaranteeMaxmin(const TemporalElection& e, const VoterSet& group, const RoundSet& r,
                    CheckOptions opts) {
    Checker checker(e, opts);
    return checker.guaranteeMaxmin(group, r);
}

int mu(const TemporalElection& e, const VoterSet& group, const RoundSet& t, CheckOptions opts) {
    Checker checker(e, opts);
    return checker.mu(group, t);
}

int rho(const TemporalElection& e, const VoterSet& group, RhoVariant v, CheckOptions opts) {
    Checker checker(e, opts);
    return checker.rho(group, v);
}

}  // namespace tempvote
