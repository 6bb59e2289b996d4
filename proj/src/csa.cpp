#include "redchain/csa.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace redchain {

int CsaAutomaton::location_index(std::string_view name) const {
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i] == name)
            return static_cast<int>(i);
    return -1;
}

std::size_t CsaStateHash::operator()(const CsaState& s) const {
    std::uint64_t h = fnv1a64(&s.location, sizeof(s.location));
    h = fnv1a64(s.counters.data(), s.counters.size() * sizeof(Nat), h);
    return static_cast<std::size_t>(h);
}

CsaDiagnostics validate_csa(const CsaAutomaton& a) {
    CsaDiagnostics d;
    auto bad = [&](std::size_t ti, const std::string& msg) {
        d.violations.push_back("transition " + std::to_string(ti) + ": " + msg);
    };

    if (a.locations.empty())
        d.violations.push_back("automaton has no locations");
    if (a.k < 1)
        d.violations.push_back("counter count k must be at least 1");
    if (a.initial < 0 || a.initial >= static_cast<int>(a.locations.size()))
        d.violations.push_back("initial location index out of range");
    for (std::size_t i = 0; i < a.locations.size(); ++i)
        for (std::size_t j = i + 1; j < a.locations.size(); ++j)
            if (a.locations[i] == a.locations[j])
                d.violations.push_back("duplicate location name: " + a.locations[i]);

    for (std::size_t ti = 0; ti < a.transitions.size(); ++ti) {
        const CsaTransition& t = a.transitions[ti];
        if (t.from < 0 || t.from >= static_cast<int>(a.locations.size()))
            bad(ti, "source location index out of range");
        if (t.to < 0 || t.to >= static_cast<int>(a.locations.size()))
            bad(ti, "target location index out of range");
        if (static_cast<int>(t.inc.size()) != a.k)
            bad(ti, "increment vector has " + std::to_string(t.inc.size()) +
                        " entries, expected " + std::to_string(a.k));
        for (const auto& [c, val] : t.eq) {
            (void)val;
            if (c < 1 || c > a.k)
                bad(ti, "equality test on counter " + std::to_string(c) +
                            " outside [1, " + std::to_string(a.k) + "]");
        }
        if (!t.eq.empty()) {
            // Upward closure: tests must cover every counter from the lowest
            // tested one up to k.
            int lowest = t.eq.begin()->first;
            for (int c = lowest + 1; c <= a.k; ++c)
                if (!t.eq.count(c)) {
                    bad(ti, "equality test on counter " + std::to_string(lowest) +
                                " without a test on counter " + std::to_string(c) +
                                " (tested counters must be upward closed)");
                    break;
                }
        }
        for (int c : t.resets) {
            if (c < 1 || c > a.k)
                bad(ti, "reset of counter " + std::to_string(c) + " outside [1, " +
                            std::to_string(a.k) + "]");
            else if (!t.eq.count(c))
                bad(ti, "reset of counter " + std::to_string(c) +
                            " which is not equality-tested on the same transition");
            else if (static_cast<int>(t.inc.size()) == a.k &&
                     t.inc[static_cast<std::size_t>(c - 1)] != 0)
                d.warnings.push_back("transition " + std::to_string(ti) +
                                     ": increment on reset counter " + std::to_string(c) +
                                     " is ignored");
        }
    }
    return d;
}

void require_valid_csa(const CsaAutomaton& a) {
    CsaDiagnostics d = validate_csa(a);
    if (!d.ok()) {
        std::string msg = "invalid counter-stack automaton:";
        for (const std::string& v : d.violations)
            msg += "\n  " + v;
        throw ValidationError(msg);
    }
}

namespace {

bool transition_enabled(const CsaTransition& t, const CsaState& s) {
    for (const auto& [c, val] : t.eq)
        if (s.counters[static_cast<std::size_t>(c - 1)] != val)
            return false;
    return true;
}

CsaState apply_transition(const CsaTransition& t, const CsaState& s) {
    CsaState out;
    out.location = t.to;
    out.counters = s.counters;
    for (std::size_t i = 0; i < out.counters.size(); ++i) {
        int c = static_cast<int>(i) + 1;
        if (t.resets.count(c))
            out.counters[i] = 0;
        else
            out.counters[i] = checked_add(out.counters[i], t.inc[i]);
    }
    return out;
}

void check_state_shape(const CsaAutomaton& a, const CsaState& s, const char* what) {
    if (s.location < 0 || s.location >= static_cast<int>(a.locations.size()))
        throw ValidationError(std::string(what) + ": location index out of range");
    if (static_cast<int>(s.counters.size()) != a.k)
        throw ValidationError(std::string(what) + ": state has " +
                              std::to_string(s.counters.size()) + " counters, expected " +
                              std::to_string(a.k));
}

} // namespace

std::vector<std::pair<CsaState, int>> csa_step(const CsaAutomaton& a, const CsaState& s) {
    check_state_shape(a, s, "csa_step");
    std::vector<std::pair<CsaState, int>> out;
    for (std::size_t ti = 0; ti < a.transitions.size(); ++ti) {
        const CsaTransition& t = a.transitions[ti];
        if (t.from != s.location || !transition_enabled(t, s))
            continue;
        out.emplace_back(apply_transition(t, s), static_cast<int>(ti));
    }
    return out;
}

std::optional<std::size_t> replay_run(const CsaAutomaton& a, const CsaRun& r) {
    if (r.states.empty())
        throw ValidationError("run has no states");
    if (r.transitions.size() + 1 != r.states.size())
        throw ValidationError("run has " + std::to_string(r.states.size()) + " states but " +
                              std::to_string(r.transitions.size()) + " transitions");
    for (const CsaState& s : r.states)
        check_state_shape(a, s, "replay_run");

    for (std::size_t i = 0; i < r.transitions.size(); ++i) {
        int ti = r.transitions[i];
        if (ti < 0 || ti >= static_cast<int>(a.transitions.size()))
            return i;
        const CsaTransition& t = a.transitions[static_cast<std::size_t>(ti)];
        const CsaState& src = r.states[i];
        if (t.from != src.location || !transition_enabled(t, src))
            return i;
        if (apply_transition(t, src) != r.states[i + 1])
            return i;
    }
    return std::nullopt;
}

namespace {

bool over_bounds(const CsaState& s, const CsaReachOptions& opts) {
    if (opts.bound)
        for (Nat c : s.counters)
            if (c > *opts.bound)
                return true;
    if (opts.counter_bounds)
        for (std::size_t i = 0; i < s.counters.size(); ++i)
            if (s.counters[i] > (*opts.counter_bounds)[i])
                return true;
    return false;
}

} // namespace

CsaReachResult reach_csa(const CsaAutomaton& a, const CsaState& target,
                         const CsaReachOptions& opts) {
    require_valid_csa(a);
    check_state_shape(a, target, "reach_csa target");
    if (opts.counter_bounds && static_cast<int>(opts.counter_bounds->size()) != a.k)
        throw ValidationError("per-counter bound vector has wrong size");
    if (opts.bound)
        for (Nat c : target.counters)
            if (c > *opts.bound)
                throw ValidationError("target counter exceeds the bound monitor");
    if (opts.counter_bounds)
        for (std::size_t i = 0; i < target.counters.size(); ++i)
            if (target.counters[i] > (*opts.counter_bounds)[i])
                throw ValidationError("target counter exceeds the per-counter bound monitor");
    if (opts.state_budget == 0)
        throw ValidationError("state budget must be positive");

    // Transitions grouped by source, declaration order preserved.
    std::vector<std::vector<int>> by_source(a.locations.size());
    for (std::size_t ti = 0; ti < a.transitions.size(); ++ti)
        by_source[static_cast<std::size_t>(a.transitions[ti].from)].push_back(
            static_cast<int>(ti));

    CsaReachResult res;
    std::vector<CsaState> order;                  // discovery order
    std::vector<std::pair<std::int64_t, int>> via; // (predecessor index, transition)
    std::unordered_map<CsaState, std::size_t, CsaStateHash> index;

    CsaState init;
    init.location = a.initial;
    init.counters.assign(static_cast<std::size_t>(a.k), 0);

    auto build_witness = [&](std::size_t at) {
        CsaRun run;
        std::vector<std::size_t> chain;
        std::int64_t cur = static_cast<std::int64_t>(at);
        while (cur >= 0) {
            chain.push_back(static_cast<std::size_t>(cur));
            cur = via[static_cast<std::size_t>(cur)].first;
        }
        std::reverse(chain.begin(), chain.end());
        for (std::size_t i = 0; i < chain.size(); ++i) {
            run.states.push_back(order[chain[i]]);
            if (i > 0)
                run.transitions.push_back(via[chain[i]].second);
        }
        return run;
    };

    order.push_back(init);
    via.emplace_back(-1, -1);
    index.emplace(init, 0);
    res.states_explored = 1;

    if (init == target) {
        res.reachable = true;
        res.witness = build_witness(0);
        return res;
    }

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        CsaState src = order[cur]; // copy: order may reallocate below
        for (int ti : by_source[static_cast<std::size_t>(src.location)]) {
            const CsaTransition& t = a.transitions[static_cast<std::size_t>(ti)];
            if (!transition_enabled(t, src))
                continue;
            CsaState next = apply_transition(t, src);
            if (over_bounds(next, opts)) {
                res.bound_violation = std::move(next);
                return res;
            }
            if (index.count(next))
                continue;
            if (order.size() >= opts.state_budget)
                throw BudgetError("state budget of " + std::to_string(opts.state_budget) +
                                  " states exhausted before the search finished");
            std::size_t id = order.size();
            index.emplace(next, id);
            order.push_back(std::move(next));
            via.emplace_back(static_cast<std::int64_t>(cur), ti);
            res.states_explored = order.size();
            if (order.back() == target) {
                res.reachable = true;
                res.witness = build_witness(id);
                return res;
            }
            queue.push_back(id);
        }
    }
    return res;
}

} // namespace redchain
