#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jamkit/errors.hpp"

namespace jamkit::fd {

/// Closed integer interval [lo, hi]; empty iff lo > hi. Propagation only
/// ever shrinks it.
struct IntervalDomain {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const { return lo > hi; }
    bool bound() const { return lo == hi; }
    std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(std::int64_t v) const { return lo <= v && v <= hi; }

    friend bool operator==(const IntervalDomain&, const IntervalDomain&) = default;
};

using VarId = int;

/// Minimal finite-domain store: interval variables, the absolute
/// cross-product equality constraint |x2*y3 - x3*y2| = a, bounds propagation
/// and depth-first labeling.
class ConstraintStore {
public:
    /// Registers a variable over [lo, hi]. Throws UsageError on an empty
    /// initial domain.
    VarId add_var(std::int64_t lo, std::int64_t hi);

    /// Posts |x2*y3 - x3*y2| = target and runs propagation to a fixpoint.
    /// The store becomes inconsistent if any domain empties.
    void post_abs_cross(std::int64_t target, VarId x2, VarId y2, VarId x3, VarId y3);

    bool consistent() const { return consistent_; }
    int var_count() const { return static_cast<int>(domains_.size()); }
    const IntervalDomain& domain(VarId v) const;
    const IntervalDomain& original_domain(VarId v) const;

    /// Depth-first search for a full assignment of `vars` satisfying every
    /// posted constraint. Branching picks the unbound variable with the
    /// smallest domain (ties by registration order) and tries values
    /// ascending. Returns values in the order of `vars`, or nullopt when the
    /// search space is exhausted. The store's domains are left untouched.
    std::optional<std::vector<std::int64_t>> label(const std::vector<VarId>& vars) const;

private:
    struct AbsCross {
        std::int64_t target;
        VarId x2, y2, x3, y3;
    };

    void check_var(VarId v) const;
    bool propagate(std::vector<IntervalDomain>& doms) const;
    bool propagate_abs_cross(const AbsCross& c, std::vector<IntervalDomain>& doms) const;
    bool search(std::vector<IntervalDomain>& doms, const std::vector<VarId>& vars,
                std::vector<std::int64_t>& out) const;

    std::vector<IntervalDomain> domains_;
    std::vector<IntervalDomain> originals_;
    std::vector<AbsCross> constraints_;
    bool consistent_ = true;
};

} // namespace jamkit::fd
