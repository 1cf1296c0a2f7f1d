#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "jamkit/problems.hpp"

namespace jamkit::oracles {

/// Exhaustive scan over all (x2,y2,x3,y3) tuples with vertex 1 at the
/// origin. Guard: n, m <= 12.
problems::TriangleAnswer triangle_enumerate(const problems::TriangleInstance& inst);

/// Exact embedding count of the fixed pattern in t, as a decimal string
/// (the count outgrows machine words), plus its value mod 10000.
/// Bottom-up, unbounded |t|.
struct WelcomeCount {
    std::string exact;     // exact count, base 10
    std::int64_t mod10000; // exact % 10000
};
WelcomeCount welcome_bruteforce(const problems::WelcomeInstance& inst);

/// Path-enumerating embedding count. Guard: |t| <= 25.
std::int64_t welcome_enumerate(const problems::WelcomeInstance& inst);

/// Simulates every release order over the occupancy array and takes the
/// minimum. Guard: at most 8 listed prisoners.
std::int64_t prisoners_bruteforce(const problems::PrisonerInstance& inst);

/// The imperative analysis: absorb smallest-to-largest; when stuck, the
/// better of removing everything left or add-and-absorb until unstuck.
std::int64_t osmos_greedy(const problems::OsmosInstance& inst);

/// Enumerates every action sequence of cost <= limit, no tabling, and
/// returns the least cost reaching a final state. Guards: motes <= 6,
/// sizes <= 8, limit <= 6.
std::optional<std::int64_t> osmos_exhaustive(const problems::OsmosInstance& inst,
                                             std::int64_t limit);

} // namespace jamkit::oracles
