#pragma once

#include <string>

#include "tempvote/model.hpp"

namespace tempvote {

// Election document:
//   {"candidates": ["a","b"], "voters": n, "rounds": ell,
//    "approvals": [[["a"], ...ell cells...], ...n rows...]}
// approvals are voter-major, round-minor; cells hold candidate names.
// Unknown keys are rejected; candidate names inside cells must exist.
TemporalElection loadElection(const std::string& bytes);
std::string saveElection(const TemporalElection& e);

// Outcome document: {"picks": ["a","b",...]} of length ell.
Outcome loadOutcome(const std::string& bytes, const TemporalElection& e);
std::string saveOutcome(const TemporalElection& e, const Outcome& o);

// Parses a comma-separated candidate-name list ("a,b,c") as an outcome.
Outcome parsePicks(const std::string& csv, const TemporalElection& e);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& bytes);

}  // namespace tempvote
