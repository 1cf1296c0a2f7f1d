#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jamkit/io.hpp"
#include "jamkit/planner.hpp"
#include "jamkit/tabling.hpp"

namespace jamkit::problems {

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

struct TriangleInstance {
    std::int64_t n = 1; // 0 <= x <= n
    std::int64_t m = 1; // 0 <= y <= m
    std::int64_t a = 1; // required doubled area
};

/// Either six vertex coordinates or IMPOSSIBLE.
struct TriangleAnswer {
    std::optional<std::array<std::int64_t, 6>> points; // x1 y1 x2 y2 x3 y3
    bool possible() const { return points.has_value(); }
    std::string body() const;
};

struct WelcomeInstance {
    std::string t; // the haystack; the pattern is fixed
};

/// The fixed pattern searched for as a subsequence.
std::string_view welcome_pattern();

struct PrisonerInstance {
    std::int64_t p = 1;                  // cell count, cells numbered 1..p
    std::vector<std::int64_t> free_list; // distinct cells to release, sorted ascending
};

struct OsmosInstance {
    std::int64_t armin = 1;            // controlled-mote size
    std::vector<std::int64_t> others;  // passive-mote sizes, all >= 1
};

struct TpkRecord {
    int index = 0;
    std::optional<double> value; // empty means TOO LARGE
    std::string body() const;
};

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

/// Constraint-programming route: vertex 1 fixed at (0,0), the other two found
/// by finite-domain labeling of |x2*y3 - x3*y2| = a.
TriangleAnswer solve_triangle_cp(const TriangleInstance& inst);

/// Closed-form route, constant time.
TriangleAnswer solve_triangle_closed_form(const TriangleInstance& inst);

/// Doubled area of the answer triangle.
std::int64_t triangle_doubled_area(const std::array<std::int64_t, 6>& pts);

/// Answer matches the instance: coordinates in range and doubled area == a.
bool triangle_answer_valid(const TriangleInstance& inst, const TriangleAnswer& ans);

/// Count of pattern embeddings in t, mod 10000, zero-padded to 4 digits.
/// Top-down tabled recursion.
std::string solve_welcome(const WelcomeInstance& inst, tabling::TableStats* stats = nullptr);

/// Minimum total coins over all release orders. Min-tabled interval
/// recursion keyed on the remaining occupied range.
std::int64_t solve_prisoners(const PrisonerInstance& inst, tabling::TableStats* stats = nullptr);

/// Planner state for Osmos: controlled-mote size plus the sorted passive
/// sizes that remain.
struct OsmosState {
    std::int64_t armin = 1;
    std::vector<std::int64_t> others;
    friend bool operator==(const OsmosState&, const OsmosState&) = default;
};

/// The Osmos planning problem: absorb the smallest for free when strictly
/// bigger; otherwise remove the largest or add a mote of size armin-1, one
/// operation each. Limit: removing everything always works.
planner::SearchProblem<OsmosState> make_osmos_problem(const OsmosInstance& inst);

/// Minimum number of add/remove operations, via the planner.
std::int64_t solve_osmos_plan(const OsmosInstance& inst);

/// Classic 11-value demo: y = sqrt(|t|) + 5*t^3 reported for i = 10 down to
/// 0, values above 400 flagged TOO LARGE. Throws UsageError unless exactly
/// 11 values are given.
std::vector<TpkRecord> tpk(std::span<const double> values);

// ---------------------------------------------------------------------------
// Case-file parsing (one function per problem's input format)
// ---------------------------------------------------------------------------

std::vector<TriangleInstance> parse_triangle_cases(io::TokenStream& in);
std::vector<WelcomeInstance> parse_welcome_cases(io::TokenStream& in);
std::vector<PrisonerInstance> parse_prisoner_cases(io::TokenStream& in);
std::vector<OsmosInstance> parse_osmos_cases(io::TokenStream& in);

} // namespace jamkit::problems
