#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tempvote/model.hpp"

namespace tempvote {

enum class AxiomId {
    WJR, JR, SJR,
    WPJR, PJR, SPJR,
    WEJR, EJR, SEJR,
    WEJRPlus, EJRPlus, SEJRPlus,
    WFJR, FJR, SFJR,
    WFPJR, FPJR, SFPJR,
    WCore, Core, SCore,
    DroopEJR, DroopFJR,
};

enum class Variant { Weak, Standard, Strong };
enum class RhoVariant { Strong, Standard, Weak };

const std::vector<AxiomId>& allAxioms();
std::string axiomName(AxiomId a);
std::optional<AxiomId> axiomFromName(const std::string& name);  // case-insensitive

// True when the axiom's verdict depends on the outcome only through the
// per-voter satisfaction vector. Lets bulk verification memoize verdicts
// across outcomes sharing a satisfaction profile.
bool satProfileDetermined(AxiomId a);

struct Witness {
    VoterSet group;
    RoundSet rounds;
    std::optional<Suboutcome> deviation;  // domain equals `rounds` when present
    int threshold = 0;
    std::optional<std::pair<int, int>> cohesion;  // (sigma, tau)
    std::optional<std::pair<int, int>> pivot;     // (round, candidate), 0-based
};

struct WorkCounters {
    std::uint64_t subsets = 0;
    std::uint64_t suboutcomes = 0;
};

struct CheckReport {
    AxiomId axiom{};
    bool holds = true;
    std::optional<Witness> witness;
    WorkCounters work;
};

struct CheckOptions {
    std::uint64_t maxWork = 1'000'000'000'000ull;
    int maxVoters = 24;
    int maxRounds = 24;
};

// One checker instance per election; memoizes the max-min guarantee values
// shared by the FJR/FPJR/Core checkers and by GCR.
class Checker {
public:
    explicit Checker(const TemporalElection& e, CheckOptions opts = {});
    ~Checker();
    Checker(Checker&&) noexcept;
    Checker& operator=(Checker&&) noexcept;

    const TemporalElection& election() const;

    CheckReport check(const Outcome& o, AxiomId axiom);

    CheckReport checkJrFamily(const Outcome& o, Variant v);
    CheckReport checkPjrFamily(const Outcome& o, Variant v);
    CheckReport checkEjrFamily(const Outcome& o, Variant v);
    CheckReport checkEjrPlus(const Outcome& o, Variant v);
    CheckReport checkEjrPlusBruteforce(const Outcome& o, Variant v);
    CheckReport checkFjrFamily(const Outcome& o, Variant v);
    CheckReport checkFpjrFamily(const Outcome& o, Variant v);
    CheckReport checkCoreFamily(const Outcome& o, Variant v);
    CheckReport checkDroopEjr(const Outcome& o);
    CheckReport checkDroopFjr(const Outcome& o);

    // max over suboutcomes on R of the minimum member satisfaction.
    int guaranteeMaxmin(const VoterSet& group, const RoundSet& r);
    // Lexicographically first suboutcome attaining guaranteeMaxmin.
    Suboutcome guaranteeMaxminArgmax(const VoterSet& group, const RoundSet& r);
    // min over R subsets of T of size floor(|T|*|S|/n) of guaranteeMaxmin.
    int mu(const VoterSet& group, const RoundSet& t);
    int rho(const VoterSet& group, RhoVariant v);

    WorkCounters workTotal() const;

    struct Impl;

private:
    std::unique_ptr<Impl> impl_;
};

// One-shot conveniences over a fresh Checker.
CheckReport check(const TemporalElection& e, const Outcome& o, AxiomId axiom,
                  CheckOptions opts = {});
int guaranteeMaxmin(const TemporalElection& e, const VoterSet& group, const RoundSet& r,
                    CheckOptions opts = {});
int mu(const TemporalElection& e, const VoterSet& group, const RoundSet& t,
       CheckOptions opts = {});
int rho(const TemporalElection& e, const VoterSet& group, RhoVariant v, CheckOptions opts = {});

}  // namespace tempvote
