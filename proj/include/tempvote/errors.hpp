#pragma once

#include <stdexcept>
#include <string>

namespace tempvote {

// Malformed documents, unknown names, dimension mismatches.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A checker or enumeration refused to start (or to continue) because the
// estimated or accumulated work exceeds the configured budget, or because a
// structural limit (voters/rounds/candidates) is exceeded.
struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a stated precondition (e.g. SDR on an election with an
// empty approval cell).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tempvote
