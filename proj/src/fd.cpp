#include "jamkit/fd.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace jamkit::fd {

namespace {

struct Range {
    std::int64_t lo;
    std::int64_t hi;
    bool empty() const { return lo > hi; }
};

Range product_range(const IntervalDomain& u, const IntervalDomain& v) {
    std::array<std::int64_t, 4> corners{u.lo * v.lo, u.lo * v.hi, u.hi * v.lo, u.hi * v.hi};
    auto [mn, mx] = std::minmax_element(corners.begin(), corners.end());
    return {*mn, *mx};
}

std::int64_t ceil_div_nonneg(std::int64_t a, std::int64_t b) {
    return (a + b - 1) / b; // a ≥ 0, b > 0
}

// Shrink u and v so that u*v can stay inside [plo, phi]. Only valid for
// non-negative factor domains; the callers' model domains are 0..N / 0..M.
bool refine_nonneg_factors(IntervalDomain& u, IntervalDomain& v, std::int64_t plo,
                           std::int64_t phi, bool& changed) {
    plo = std::max<std::int64_t>(plo, 0);
    if (plo > phi) return false;
    for (int round = 0; round < 4; ++round) {
        bool local = false;
        if (v.lo > 0) {
            std::int64_t cap = phi / v.lo;
            if (cap < u.hi) {
                u.hi = cap;
                local = true;
            }
        }
        if (plo > 0) {
            if (v.hi == 0) return false;
            std::int64_t floor_u = ceil_div_nonneg(plo, v.hi);
            if (floor_u > u.lo) {
                u.lo = floor_u;
                local = true;
            }
        }
        if (u.lo > 0) {
            std::int64_t cap = phi / u.lo;
            if (cap < v.hi) {
                v.hi = cap;
                local = true;
            }
        }
        if (plo > 0) {
            if (u.hi == 0) return false;
            std::int64_t floor_v = ceil_div_nonneg(plo, u.hi);
            if (floor_v > v.lo) {
                v.lo = floor_v;
                local = true;
            }
        }
        if (u.empty() || v.empty()) return false;
        changed = changed || local;
        if (!local) break;
    }
    return true;
}

} // namespace

VarId ConstraintStore::add_var(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw UsageError("variable registered with an empty domain");
    domains_.push_back({lo, hi});
    originals_.push_back({lo, hi});
    return static_cast<VarId>(domains_.size() - 1);
}

void ConstraintStore::check_var(VarId v) const {
    if (v < 0 || v >= static_cast<VarId>(domains_.size()))
        throw UsageError("unknown variable handle " + std::to_string(v));
}

const IntervalDomain& ConstraintStore::domain(VarId v) const {
    check_var(v);
    return domains_[v];
}

const IntervalDomain& ConstraintStore::original_domain(VarId v) const {
    check_var(v);
    return originals_[v];
}

void ConstraintStore::post_abs_cross(std::int64_t target, VarId x2, VarId y2, VarId x3,
                                     VarId y3) {
    if (target < 0) throw UsageError("abs-cross target must be non-negative");
    for (VarId v : {x2, y2, x3, y3}) check_var(v);
    constraints_.push_back({target, x2, y2, x3, y3});
    if (consistent_) consistent_ = propagate(domains_);
}

// One pass of bounds propagation for |x2*y3 - x3*y2| = target. Returns false
// on wipeout; sets changed when some bound moved.
bool ConstraintStore::propagate_abs_cross(const AbsCross& c,
                                          std::vector<IntervalDomain>& doms) const {
    IntervalDomain& x2 = doms[c.x2];
    IntervalDomain& y2 = doms[c.y2];
    IntervalDomain& x3 = doms[c.x3];
    IntervalDomain& y3 = doms[c.y3];

    Range p1 = product_range(x2, y3);
    Range p2 = product_range(x3, y2);
    Range diff{p1.lo - p2.hi, p1.hi - p2.lo};

    // The difference must hit +target or -target.
    std::int64_t tmin = 0, tmax = 0;
    bool any = false;
    for (std::int64_t t : {-c.target, c.target}) {
        if (t < diff.lo || t > diff.hi) continue;
        tmin = any ? std::min(tmin, t) : t;
        tmax = any ? std::max(tmax, t) : t;
        any = true;
    }
    if (!any) return false;

    Range p1_window{std::max(p1.lo, p2.lo + tmin), std::min(p1.hi, p2.hi + tmax)};
    Range p2_window{std::max(p2.lo, p1.lo - tmax), std::min(p2.hi, p1.hi - tmin)};
    if (p1_window.empty() || p2_window.empty()) return false;

    bool changed = false;
    if (x2.lo >= 0 && y3.lo >= 0) {
        if (!refine_nonneg_factors(x2, y3, p1_window.lo, p1_window.hi, changed)) return false;
    }
    if (x3.lo >= 0 && y2.lo >= 0) {
        if (!refine_nonneg_factors(x3, y2, p2_window.lo, p2_window.hi, changed)) return false;
    }
    return true;
}

bool ConstraintStore::propagate(std::vector<IntervalDomain>& doms) const {
    for (const auto& dom : doms)
        if (dom.empty()) return false;
    std::vector<IntervalDomain> before;
    for (int pass = 0; pass < 64; ++pass) {
        before = doms;
        for (const auto& c : constraints_)
            if (!propagate_abs_cross(c, doms)) return false;
        if (doms == before) break;
    }
    return true;
}

bool ConstraintStore::search(std::vector<IntervalDomain>& doms, const std::vector<VarId>& vars,
                             std::vector<std::int64_t>& out) const {
    VarId pick = -1;
    for (VarId v : vars) {
        if (doms[v].bound()) continue;
        if (pick < 0 || doms[v].size() < doms[pick].size() || (doms[v].size() == doms[pick].size() && v < pick))
            pick = v;
    }
    if (pick < 0) {
        out.clear();
        for (VarId v : vars) out.push_back(doms[v].lo);
        return true;
    }
    const std::int64_t lo = doms[pick].lo;
    const std::int64_t hi = doms[pick].hi;
    std::vector<IntervalDomain> trial;
    for (std::int64_t value = lo; value <= hi; ++value) {
        trial = doms;
        trial[pick] = {value, value};
        if (propagate(trial) && search(trial, vars, out)) return true;
    }
    return false;
}

std::optional<std::vector<std::int64_t>> ConstraintStore::label(
    const std::vector<VarId>& vars) const {
    for (VarId v : vars) check_var(v);
    for (const auto& c : constraints_)
        for (VarId v : {c.x2, c.y2, c.x3, c.y3})
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                throw UsageError("label must cover every constrained variable");
    if (!consistent_) return std::nullopt;
    std::vector<IntervalDomain> doms = domains_;
    std::vector<std::int64_t> out;
    if (!search(doms, vars, out)) return std::nullopt;
    return out;
}

} // namespace jamkit::fd
