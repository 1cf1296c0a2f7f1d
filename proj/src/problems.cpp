#include "jamkit/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include "jamkit/fd.hpp"

namespace jamkit::problems {

// ---------------------------------------------------------------------------
// Triangle Areas
// ---------------------------------------------------------------------------

std::string TriangleAnswer::body() const {
    if (!points) return "IMPOSSIBLE";
    std::string out;
    for (std::size_t i = 0; i < points->size(); ++i) {
        if (i) out += ' ';
        out += std::to_string((*points)[i]);
    }
    return out;
}

std::int64_t triangle_doubled_area(const std::array<std::int64_t, 6>& pts) {
    const std::int64_t ux = pts[2] - pts[0], uy = pts[3] - pts[1];
    const std::int64_t vx = pts[4] - pts[0], vy = pts[5] - pts[1];
    return std::abs(ux * vy - vx * uy);
}

bool triangle_answer_valid(const TriangleInstance& inst, const TriangleAnswer& ans) {
    if (!ans.points) return false;
    const auto& pts = *ans.points;
    for (int i = 0; i < 3; ++i) {
        if (pts[2 * i] < 0 || pts[2 * i] > inst.n) return false;
        if (pts[2 * i + 1] < 0 || pts[2 * i + 1] > inst.m) return false;
    }
    return triangle_doubled_area(pts) == inst.a;
}

TriangleAnswer solve_triangle_cp(const TriangleInstance& inst) {
    fd::ConstraintStore store;
    fd::VarId x2 = store.add_var(0, inst.n);
    fd::VarId x3 = store.add_var(0, inst.n);
    fd::VarId y2 = store.add_var(0, inst.m);
    fd::VarId y3 = store.add_var(0, inst.m);
    store.post_abs_cross(inst.a, x2, y2, x3, y3);
    auto assignment = store.label({x2, y2, x3, y3});
    if (!assignment) return {};
    const auto& v = *assignment;
    return {std::array<std::int64_t, 6>{0, 0, v[0], v[1], v[2], v[3]}};
}

TriangleAnswer solve_triangle_closed_form(const TriangleInstance& inst) {
    const std::int64_t n = inst.n, m = inst.m, a = inst.a;
    if (a > n * m) return {};
    if (a == n * m) return {std::array<std::int64_t, 6>{0, 0, n, 0, 0, m}};
    if (a % m == 0) return {std::array<std::int64_t, 6>{0, 0, a / m, 0, 0, m}};
    const std::int64_t q = a / m, r = a % m;
    return {std::array<std::int64_t, 6>{q, 0, q + 1, m, 0, r}};
}

// ---------------------------------------------------------------------------
// Welcome to Code Jam
// ---------------------------------------------------------------------------

std::string_view welcome_pattern() {
    return "welcome to code jam";
}

std::string solve_welcome(const WelcomeInstance& inst, tabling::TableStats* stats) {
    const std::string_view s = welcome_pattern();
    const std::string_view t = inst.t;
    tabling::MemoTable<std::int64_t> table(tabling::Policy::functional);

    // ways(i, j): embeddings of the first j pattern chars in the first i
    // text chars, mod 10000.
    std::function<std::int64_t(std::int64_t, std::int64_t)> ways =
        [&](std::int64_t i, std::int64_t j) -> std::int64_t {
        return table.eval(tabling::ArgKey::of(i, j), [&]() -> std::int64_t {
            if (j == 0) return 1;
            if (i == 0) return 0;
            if (t[i - 1] == s[j - 1]) return (ways(i - 1, j) + ways(i - 1, j - 1)) % 10000;
            return ways(i - 1, j);
        });
    };

    std::int64_t w = ways(static_cast<std::int64_t>(t.size()), static_cast<std::int64_t>(s.size()));
    if (stats) *stats = table.stats();
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04lld", static_cast<long long>(w));
    return buf;
}

// ---------------------------------------------------------------------------
// Bribe the Prisoners
// ---------------------------------------------------------------------------

std::int64_t solve_prisoners(const PrisonerInstance& inst, tabling::TableStats* stats) {
    tabling::MemoTable<std::int64_t> table(tabling::Policy::min);
    const auto& free_list = inst.free_list;

    // cost(a, b): minimum coins to release every listed prisoner inside the
    // occupied range [a, b].
    std::function<std::int64_t(std::int64_t, std::int64_t)> cost =
        [&](std::int64_t a, std::int64_t b) -> std::int64_t {
        return table.min_eval(tabling::ArgKey::of(a, b), [&](auto&& yield) {
            bool any_inside = false;
            for (std::int64_t x : free_list) {
                if (x < a || x > b) continue;
                any_inside = true;
                yield((b - a) + cost(a, x - 1) + cost(x + 1, b));
            }
            if (!any_inside) yield(0);
        });
    };

    std::int64_t total = cost(1, inst.p);
    if (stats) *stats = table.stats();
    return total;
}

// ---------------------------------------------------------------------------
// Osmos
// ---------------------------------------------------------------------------

planner::SearchProblem<OsmosState> make_osmos_problem(const OsmosInstance& inst) {
    OsmosState initial{inst.armin, inst.others};
    std::sort(initial.others.begin(), initial.others.end());

    planner::SearchProblem<OsmosState> problem;
    problem.initial = std::move(initial);
    problem.limit = static_cast<std::int64_t>(inst.others.size());
    problem.is_final = [](const OsmosState& s) { return s.others.empty(); };
    problem.actions = [](const OsmosState& s) {
        std::vector<planner::Action<OsmosState>> acts;
        if (s.others.empty()) return acts;
        const std::int64_t smallest = s.others.front();
        if (s.armin > smallest) {
            OsmosState next{s.armin + smallest, {s.others.begin() + 1, s.others.end()}};
            acts.push_back({"absorb", std::move(next), 0});
        } else {
            OsmosState shorter{s.armin, {s.others.begin(), s.others.end() - 1}};
            acts.push_back({"remove", std::move(shorter), 1});
            if (s.armin > 1) {
                OsmosState grown{s.armin, {}};
                grown.others.reserve(s.others.size() + 1);
                grown.others.push_back(s.armin - 1);
                grown.others.insert(grown.others.end(), s.others.begin(), s.others.end());
                acts.push_back({"add", std::move(grown), 1});
            }
        }
        return acts;
    };
    problem.canonical = [](const OsmosState& s) {
        tabling::ArgKey key = tabling::ArgKey::of(s.armin);
        key.append_span(s.others);
        return key;
    };
    problem.measure = [](const OsmosState& s) {
        return static_cast<std::int64_t>(s.others.size());
    };
    return problem;
}

std::int64_t solve_osmos_plan(const OsmosInstance& inst) {
    auto plan = planner::best_plan(make_osmos_problem(inst));
    if (!plan) throw UsageError("osmos search failed within the remove-all limit");
    return plan->cost;
}

// ---------------------------------------------------------------------------
// TPK
// ---------------------------------------------------------------------------

std::string TpkRecord::body() const {
    std::string out = std::to_string(index);
    out += ' ';
    if (!value) {
        out += "TOO LARGE";
    } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%g", *value);
        out += buf;
    }
    return out;
}

std::vector<TpkRecord> tpk(std::span<const double> values) {
    if (values.size() != 11) throw UsageError("tpk expects exactly 11 values");
    std::vector<TpkRecord> records;
    records.reserve(values.size());
    for (int i = 10; i >= 0; --i) {
        const double t = values[static_cast<std::size_t>(i)];
        const double y = std::sqrt(std::abs(t)) + 5.0 * t * t * t;
        if (y > 400.0)
            records.push_back({i, std::nullopt});
        else
            records.push_back({i, y});
    }
    return records;
}

// ---------------------------------------------------------------------------
// Case-file parsing
// ---------------------------------------------------------------------------

namespace {

std::int64_t read_case_count(io::TokenStream& in) {
    std::int64_t c = in.read_int();
    if (c < 1) throw ParseError("case count must be positive, got " + std::to_string(c));
    return c;
}

} // namespace

std::vector<TriangleInstance> parse_triangle_cases(io::TokenStream& in) {
    std::int64_t c = read_case_count(in);
    std::vector<TriangleInstance> cases;
    cases.reserve(static_cast<std::size_t>(c));
    for (std::int64_t k = 0; k < c; ++k) {
        TriangleInstance inst;
        inst.n = in.read_int();
        inst.m = in.read_int();
        inst.a = in.read_int();
        if (inst.n < 1 || inst.m < 1 || inst.a < 1)
            throw ParseError("triangle case " + std::to_string(k + 1) +
                             ": N, M, A must all be positive");
        cases.push_back(inst);
    }
    return cases;
}

std::vector<WelcomeInstance> parse_welcome_cases(io::TokenStream& in) {
    std::int64_t c = read_case_count(in);
    std::vector<WelcomeInstance> cases;
    cases.reserve(static_cast<std::size_t>(c));
    for (std::int64_t k = 0; k < c; ++k) cases.push_back({in.read_line()});
    return cases;
}

std::vector<PrisonerInstance> parse_prisoner_cases(io::TokenStream& in) {
    std::int64_t c = read_case_count(in);
    std::vector<PrisonerInstance> cases;
    cases.reserve(static_cast<std::size_t>(c));
    for (std::int64_t k = 0; k < c; ++k) {
        PrisonerInstance inst;
        inst.p = in.read_int();
        std::int64_t q = in.read_int();
        if (inst.p < 1 || q < 0)
            throw ParseError("prisoners case " + std::to_string(k + 1) + ": bad P or Q");
        std::set<std::int64_t> seen;
        for (std::int64_t i = 0; i < q; ++i) {
            std::int64_t cell = in.read_int();
            if (cell < 1 || cell > inst.p)
                throw ParseError("prisoners case " + std::to_string(k + 1) +
                                 ": cell index out of range");
            if (!seen.insert(cell).second)
                throw ParseError("prisoners case " + std::to_string(k + 1) +
                                 ": duplicate cell index");
        }
        inst.free_list.assign(seen.begin(), seen.end());
        cases.push_back(std::move(inst));
    }
    return cases;
}

std::vector<OsmosInstance> parse_osmos_cases(io::TokenStream& in) {
    std::int64_t c = read_case_count(in);
    std::vector<OsmosInstance> cases;
    cases.reserve(static_cast<std::size_t>(c));
    for (std::int64_t k = 0; k < c; ++k) {
        OsmosInstance inst;
        inst.armin = in.read_int();
        std::int64_t count = in.read_int();
        if (inst.armin < 1 || count < 0)
            throw ParseError("osmos case " + std::to_string(k + 1) + ": bad A or N");
        for (std::int64_t i = 0; i < count; ++i) {
            std::int64_t size = in.read_int();
            if (size < 1)
                throw ParseError("osmos case " + std::to_string(k + 1) +
                                 ": mote sizes must be positive");
            inst.others.push_back(size);
        }
        cases.push_back(std::move(inst));
    }
    return cases;
}

} // namespace jamkit::problems
