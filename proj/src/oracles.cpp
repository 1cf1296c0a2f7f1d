#include "jamkit/oracles.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "jamkit/errors.hpp"

namespace jamkit::oracles {

using problems::OsmosInstance;
using problems::PrisonerInstance;
using problems::TriangleAnswer;
using problems::TriangleInstance;
using problems::WelcomeInstance;

TriangleAnswer triangle_enumerate(const TriangleInstance& inst) {
    if (inst.n > 12 || inst.m > 12)
        throw UsageError("triangle_enumerate guard: n, m must be <= 12");
    for (std::int64_t x2 = 0; x2 <= inst.n; ++x2)
        for (std::int64_t y2 = 0; y2 <= inst.m; ++y2)
            for (std::int64_t x3 = 0; x3 <= inst.n; ++x3)
                for (std::int64_t y3 = 0; y3 <= inst.m; ++y3)
                    if (std::abs(x2 * y3 - x3 * y2) == inst.a)
                        return {std::array<std::int64_t, 6>{0, 0, x2, y2, x3, y3}};
    return {};
}

WelcomeCount welcome_bruteforce(const WelcomeInstance& inst) {
    const std::string_view s = problems::welcome_pattern();
    const std::string_view t = inst.t;
    std::vector<boost::multiprecision::cpp_int> dp(s.size() + 1);
    dp[0] = 1;
    for (char ch : t)
        for (std::size_t j = s.size(); j >= 1; --j)
            if (s[j - 1] == ch) dp[j] += dp[j - 1];
    WelcomeCount out;
    out.exact = dp[s.size()].str();
    out.mod10000 = static_cast<std::int64_t>(dp[s.size()] % 10000);
    return out;
}

namespace {

std::int64_t count_paths(std::string_view t, std::string_view s, std::size_t i, std::size_t j) {
    if (j == 0) return 1;
    if (i == 0) return 0;
    std::int64_t total = count_paths(t, s, i - 1, j);
    if (t[i - 1] == s[j - 1]) total += count_paths(t, s, i - 1, j - 1);
    return total;
}

} // namespace

std::int64_t welcome_enumerate(const WelcomeInstance& inst) {
    if (inst.t.size() > 25) throw UsageError("welcome_enumerate guard: |T| must be <= 25");
    const std::string_view s = problems::welcome_pattern();
    return count_paths(inst.t, s, inst.t.size(), s.size());
}

std::int64_t prisoners_bruteforce(const PrisonerInstance& inst) {
    if (inst.free_list.size() > 8)
        throw UsageError("prisoners_bruteforce guard: at most 8 releases");
    std::vector<std::int64_t> order = inst.free_list;
    std::sort(order.begin(), order.end());
    std::int64_t best = -1;
    do {
        std::vector<char> occupied(static_cast<std::size_t>(inst.p) + 2, 1);
        occupied[0] = 0;
        occupied[static_cast<std::size_t>(inst.p) + 1] = 0;
        std::int64_t total = 0;
        for (std::int64_t x : order) {
            for (std::int64_t l = x - 1; occupied[static_cast<std::size_t>(l)]; --l) ++total;
            for (std::int64_t r = x + 1; occupied[static_cast<std::size_t>(r)]; ++r) ++total;
            occupied[static_cast<std::size_t>(x)] = 0;
        }
        if (best < 0 || total < best) best = total;
    } while (std::next_permutation(order.begin(), order.end()));
    return best < 0 ? 0 : best;
}

std::int64_t osmos_greedy(const OsmosInstance& inst) {
    std::vector<std::int64_t> sizes = inst.others;
    std::sort(sizes.begin(), sizes.end());
    const std::int64_t n = static_cast<std::int64_t>(sizes.size());

    std::int64_t armin = inst.armin;
    std::int64_t ops = 0;
    std::int64_t best = n; // remove everything up front
    std::int64_t i = 0;
    while (i < n) {
        if (armin > sizes[static_cast<std::size_t>(i)]) {
            armin += sizes[static_cast<std::size_t>(i)];
            ++i;
            continue;
        }
        best = std::min(best, ops + (n - i)); // remove the rest here
        if (armin <= 1) return best;          // adding can never unstick size 1
        armin += armin - 1;                   // add a mote of size armin-1 and absorb it
        ++ops;
        if (ops >= best) return best;
    }
    return std::min(best, ops);
}

namespace {

void exhaust(std::int64_t armin, std::vector<std::int64_t>& motes, std::int64_t spent,
             std::int64_t limit, std::optional<std::int64_t>& best) {
    if (motes.empty()) {
        if (!best || spent < *best) best = spent;
        return;
    }
    if (best && spent >= *best) return;
    const std::int64_t smallest = motes.front();
    if (armin > smallest) {
        std::vector<std::int64_t> rest(motes.begin() + 1, motes.end());
        exhaust(armin + smallest, rest, spent, limit, best);
        return;
    }
    if (spent + 1 > limit) return;
    std::vector<std::int64_t> shorter(motes.begin(), motes.end() - 1);
    exhaust(armin, shorter, spent + 1, limit, best);
    if (armin > 1) {
        std::vector<std::int64_t> grown;
        grown.reserve(motes.size() + 1);
        grown.push_back(armin - 1);
        grown.insert(grown.end(), motes.begin(), motes.end());
        exhaust(armin, grown, spent + 1, limit, best);
    }
}

} // namespace

std::optional<std::int64_t> osmos_exhaustive(const OsmosInstance& inst, std::int64_t limit) {
    if (inst.others.size() > 6) throw UsageError("osmos_exhaustive guard: at most 6 motes");
    for (std::int64_t size : inst.others)
        if (size > 8) throw UsageError("osmos_exhaustive guard: sizes must be <= 8");
    if (limit > 6) throw UsageError("osmos_exhaustive guard: limit must be <= 6");
    std::vector<std::int64_t> motes = inst.others;
    std::sort(motes.begin(), motes.end());
    std::optional<std::int64_t> best;
    exhaust(inst.armin, motes, 0, limit, best);
    return best;
}

} // namespace jamkit::oracles
