#pragma once

#include <stdexcept>
#include <string>

namespace jamkit {

/// Malformed input: bad token, unexpected end of input, invalid case payload.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke an API contract (bad handle, out-of-guard instance, bad flag).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

namespace tabling {

/// Re-entrant evaluation of a key whose computation is still in progress.
class CycleError : public std::runtime_error {
public:
    explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

/// A min-policy evaluation produced no candidate values.
class NoDerivationError : public std::runtime_error {
public:
    explicit NoDerivationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tabling
} // namespace jamkit
