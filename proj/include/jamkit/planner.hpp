#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jamkit/errors.hpp"
#include "jamkit/tabling.hpp"

namespace jamkit::planner {

template <typename State>
struct Action {
    std::string name;
    State next;
    std::int64_t cost = 0;
};

/// A cost-optimal planning problem. Costs are non-negative integers;
/// zero-cost actions must strictly decrease `measure` (a non-negative
/// well-founded measure of the state), which keeps depth-first search away
/// from free cycles.
template <typename State>
struct SearchProblem {
    State initial;
    std::int64_t limit = 0;
    std::function<bool(const State&)> is_final;
    std::function<std::vector<Action<State>>(const State&)> actions;
    std::function<tabling::ArgKey(const State&)> canonical;
    std::function<std::int64_t(const State&)> measure;
};

struct Plan {
    std::vector<std::string> steps;
    std::int64_t cost = 0;
};

struct PlanOptions {
    bool use_state_table = true; // dominance table; off only for validation
};

namespace detail {

template <typename State>
using StateTable = std::unordered_map<tabling::ArgKey, std::int64_t, tabling::ArgKeyHash>;

template <typename State>
bool plan_dfs(const SearchProblem<State>& problem, const State& state, std::int64_t spent,
              std::int64_t bound, StateTable<State>& table, const PlanOptions& opt,
              std::vector<std::string>& steps, std::int64_t& found_cost) {
    for (auto& act : problem.actions(state)) {
        if (act.cost < 0) throw UsageError("planner action with negative cost");
        const std::int64_t next_spent = spent + act.cost;
        if (next_spent > bound) continue;
        if (act.cost == 0 && !(problem.measure(act.next) < problem.measure(state)))
            throw UsageError("zero-cost action must strictly decrease the measure");
        if (opt.use_state_table) {
            auto key = problem.canonical(act.next);
            auto it = table.find(key);
            if (it != table.end() && it->second <= next_spent) continue;
            table[std::move(key)] = next_spent;
        }
        steps.push_back(act.name);
        if (problem.is_final(act.next)) {
            found_cost = next_spent;
            return true;
        }
        if (plan_dfs(problem, act.next, next_spent, bound, table, opt, steps, found_cost))
            return true;
        steps.pop_back();
    }
    return false;
}

} // namespace detail

/// Minimum-cost plan with cost <= problem.limit, or nullopt when none
/// exists. Iterative deepening on the cost bound; within a bound,
/// depth-first search with a per-bound table of the least cost spent to
/// reach each canonical state. Ties break by action generation order.
template <typename State>
std::optional<Plan> best_plan(const SearchProblem<State>& problem, PlanOptions opt = {}) {
    if (problem.limit < 0) throw UsageError("planner resource limit must be non-negative");
    if (problem.is_final(problem.initial)) return Plan{{}, 0};
    detail::StateTable<State> table;
    for (std::int64_t bound = 0; bound <= problem.limit; ++bound) {
        table.clear();
        table[problem.canonical(problem.initial)] = 0;
        std::vector<std::string> steps;
        std::int64_t cost = 0;
        if (detail::plan_dfs(problem, problem.initial, 0, bound, table, opt, steps, cost))
            return Plan{std::move(steps), cost};
    }
    return std::nullopt;
}

/// Replays a plan's action names from the initial state. Returns the reached
/// state when every step matched a generated action, else nullopt.
template <typename State>
std::optional<State> replay(const SearchProblem<State>& problem, const Plan& plan) {
    State state = problem.initial;
    std::int64_t cost = 0;
    for (const auto& name : plan.steps) {
        bool stepped = false;
        for (auto& act : problem.actions(state)) {
            if (act.name != name) continue;
            cost += act.cost;
            state = std::move(act.next);
            stepped = true;
            break;
        }
        if (!stepped) return std::nullopt;
    }
    if (cost != plan.cost) return std::nullopt;
    return state;
}

/// Full contract check: replay succeeds, lands on a final state, and the
/// summed cost matches.
template <typename State>
bool plan_is_valid(const SearchProblem<State>& problem, const Plan& plan) {
    auto reached = replay(problem, plan);
    return reached.has_value() && problem.is_final(*reached);
}

} // namespace jamkit::planner
