#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>

#include "jamkit/errors.hpp"

namespace jamkit::tabling {

/// Canonical byte encoding of a call's input arguments. Two calls with equal
/// arguments produce equal keys.
class ArgKey {
public:
    ArgKey() = default;

    template <std::integral... Ts>
    static ArgKey of(Ts... parts) {
        ArgKey key;
        (key.append(static_cast<std::int64_t>(parts)), ...);
        return key;
    }

    void append(std::int64_t x) {
        auto u = static_cast<std::uint64_t>(x);
        for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
    }

    void append_span(std::span<const std::int64_t> xs) {
        for (auto x : xs) append(x);
    }

    const std::string& bytes() const { return bytes_; }

    friend bool operator==(const ArgKey&, const ArgKey&) = default;

private:
    std::string bytes_;
};

struct ArgKeyHash {
    std::size_t operator()(const ArgKey& key) const {
        return std::hash<std::string>{}(key.bytes());
    }
};

enum class Policy {
    functional, // first computed value wins; keys are evaluated at most once
    min,        // keep the minimum over all derived candidates per key
};

struct TableStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
};

/// Argument-keyed memo table. One table per solve invocation; not shared
/// across threads.
template <typename Value>
class MemoTable {
public:
    explicit MemoTable(Policy policy) : policy_(policy) {}

    Policy policy() const { return policy_; }
    std::size_t size() const { return entries_.size(); }
    std::uint64_t hits() const { return stats_.hits; }
    std::uint64_t misses() const { return stats_.misses; }
    const TableStats& stats() const { return stats_; }

    /// Functional tabling: returns compute() for this key, evaluating each
    /// distinct key at most once. compute may recurse into the same table on
    /// strictly smaller keys; re-entering a key mid-computation is a cycle.
    template <typename Compute>
        requires std::invocable<Compute&>
    Value eval(const ArgKey& key, Compute&& compute) {
        if (policy_ != Policy::functional)
            throw UsageError("eval requires a functional-policy table");
        if (auto it = entries_.find(key); it != entries_.end()) {
            if (it->second.in_progress) throw CycleError("cyclic dependency in tabled call");
            ++stats_.hits;
            return it->second.value;
        }
        ++stats_.misses;
        entries_.emplace(key, Entry{true, Value{}});
        Value value = compute();
        // compute() may have grown the map; look the entry up again.
        auto it = entries_.find(key);
        it->second.in_progress = false;
        it->second.value = value;
        return value;
    }

    /// Min tabling: derive enumerates candidate values through the sink it is
    /// given; the minimum is memoized. Candidates may recursively consume
    /// min_eval of smaller subproblems.
    template <typename Derive>
    Value min_eval(const ArgKey& key, Derive&& derive) {
        if (policy_ != Policy::min) throw UsageError("min_eval requires a min-policy table");
        if (auto it = entries_.find(key); it != entries_.end()) {
            if (it->second.in_progress) throw CycleError("cyclic dependency in tabled call");
            ++stats_.hits;
            return it->second.value;
        }
        ++stats_.misses;
        entries_.emplace(key, Entry{true, Value{}});
        bool any = false;
        Value best{};
        derive([&](Value candidate) {
            if (!any || candidate < best) best = candidate;
            any = true;
        });
        if (!any) {
            entries_.erase(key);
            throw NoDerivationError("no derivation for tabled key");
        }
        auto it = entries_.find(key);
        it->second.in_progress = false;
        it->second.value = best;
        return best;
    }

private:
    struct Entry {
        bool in_progress;
        Value value;
    };

    Policy policy_;
    std::unordered_map<ArgKey, Entry, ArgKeyHash> entries_;
    TableStats stats_;
};

} // namespace jamkit::tabling
