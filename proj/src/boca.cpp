#include "redchain/boca.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace redchain {

int BocaAutomaton::location_index(std::string_view name) const {
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i] == name)
            return static_cast<int>(i);
    return -1;
}

BocaDiagnostics validate_boca(const BocaAutomaton& a) {
    BocaDiagnostics d;
    auto bad = [&](std::size_t ti, const std::string& msg) {
        d.violations.push_back("transition " + std::to_string(ti) + ": " + msg);
    };

    if (a.locations.empty())
        d.violations.push_back("automaton has no locations");
    if (a.initial < 0 || a.initial >= static_cast<int>(a.locations.size()))
        d.violations.push_back("initial location index out of range");
    if (a.bound > (Nat{1} << 62))
        d.violations.push_back("bound exceeds the supported range (2^62)");
    for (std::size_t i = 0; i < a.locations.size(); ++i)
        for (std::size_t j = i + 1; j < a.locations.size(); ++j)
            if (a.locations[i] == a.locations[j])
                d.violations.push_back("duplicate location name: " + a.locations[i]);

    for (std::size_t ti = 0; ti < a.transitions.size(); ++ti) {
        const BocaTransition& t = a.transitions[ti];
        if (t.from < 0 || t.from >= static_cast<int>(a.locations.size()))
            bad(ti, "source location index out of range");
        if (t.to < 0 || t.to >= static_cast<int>(a.locations.size()))
            bad(ti, "target location index out of range");
        if (t.g1 > t.g2)
            bad(ti, "degenerate guard: g1 = " + std::to_string(t.g1) + " > g2 = " +
                        std::to_string(t.g2));
        if (t.g2 > a.bound)
            bad(ti, "guard upper end " + std::to_string(t.g2) + " exceeds the bound " +
                        std::to_string(a.bound));
        Nat mag = t.p < 0 ? Nat(-(t.p + 1)) + 1 : Nat(t.p);
        if (mag > a.bound)
            bad(ti, "counter delta " + std::to_string(t.p) + " exceeds the bound " +
                        std::to_string(a.bound));
    }
    return d;
}

void require_valid_boca(const BocaAutomaton& a) {
    BocaDiagnostics d = validate_boca(a);
    if (!d.ok()) {
        std::string msg = "invalid bounded one-counter automaton:";
        for (const std::string& v : d.violations)
            msg += "\n  " + v;
        throw ValidationError(msg);
    }
}

namespace {

void check_state_shape(const BocaAutomaton& a, const BocaState& s, const char* what) {
    if (s.location < 0 || s.location >= static_cast<int>(a.locations.size()))
        throw ValidationError(std::string(what) + ": location index out of range");
    if (s.c > a.bound)
        throw ValidationError(std::string(what) + ": counter value " + std::to_string(s.c) +
                              " exceeds the bound " + std::to_string(a.bound));
}

// Returns the successor value, or nullopt when the guard fails or the result
// leaves [0, bound].
std::optional<Nat> fire(const BocaAutomaton& a, const BocaTransition& t, Nat c) {
    if (c < t.g1 || c > t.g2)
        return std::nullopt;
    if (t.p < 0) {
        Nat drop = Nat(-(t.p + 1)) + 1;
        if (c < drop)
            return std::nullopt;
        return c - drop;
    }
    Nat next = c + Nat(t.p);
    if (next > a.bound)
        return std::nullopt;
    return next;
}

struct LocValue {
    int location;
    Nat c;
    bool operator==(const LocValue&) const = default;
};

struct LocValueHash {
    std::size_t operator()(const LocValue& s) const {
        std::uint64_t h = fnv1a64(&s.location, sizeof(s.location));
        h = fnv1a64(&s.c, sizeof(s.c), h);
        return static_cast<std::size_t>(h);
    }
};

} // namespace

std::vector<std::pair<BocaState, int>> boca_step(const BocaAutomaton& a, const BocaState& s) {
    check_state_shape(a, s, "boca_step");
    std::vector<std::pair<BocaState, int>> out;
    for (std::size_t ti = 0; ti < a.transitions.size(); ++ti) {
        const BocaTransition& t = a.transitions[ti];
        if (t.from != s.location)
            continue;
        if (auto next = fire(a, t, s.c))
            out.push_back({BocaState{t.to, *next}, static_cast<int>(ti)});
    }
    return out;
}

std::optional<std::size_t> replay_run(const BocaAutomaton& a, const BocaRun& r) {
    if (r.states.empty())
        throw ValidationError("run has no states");
    if (r.transitions.size() + 1 != r.states.size())
        throw ValidationError("run has " + std::to_string(r.states.size()) + " states but " +
                              std::to_string(r.transitions.size()) + " transitions");
    for (const BocaState& s : r.states)
        check_state_shape(a, s, "replay_run");

    for (std::size_t i = 0; i < r.transitions.size(); ++i) {
        int ti = r.transitions[i];
        if (ti < 0 || ti >= static_cast<int>(a.transitions.size()))
            return i;
        const BocaTransition& t = a.transitions[static_cast<std::size_t>(ti)];
        const BocaState& src = r.states[i];
        if (t.from != src.location)
            return i;
        auto next = fire(a, t, src.c);
        if (!next || BocaState{t.to, *next} != r.states[i + 1])
            return i;
    }
    return std::nullopt;
}

namespace {

struct BocaSearch {
    std::vector<BocaState> order;
    std::vector<std::pair<std::int64_t, int>> via;
    std::unordered_map<LocValue, std::size_t, LocValueHash> index;
};

// Shared BFS core; stops early when `target` is given and found, in which
// case `hit` receives its discovery index.
void boca_bfs(const BocaAutomaton& a, const std::optional<BocaState>& target, Nat budget,
              BocaSearch& se, std::optional<std::size_t>& hit) {
    std::vector<std::vector<int>> by_source(a.locations.size());
    for (std::size_t ti = 0; ti < a.transitions.size(); ++ti)
        by_source[static_cast<std::size_t>(a.transitions[ti].from)].push_back(
            static_cast<int>(ti));

    BocaState init{a.initial, 0};
    se.order.push_back(init);
    se.via.emplace_back(-1, -1);
    se.index.emplace(LocValue{init.location, init.c}, 0);
    if (target && init == *target) {
        hit = 0;
        return;
    }

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        BocaState src = se.order[cur];
        for (int ti : by_source[static_cast<std::size_t>(src.location)]) {
            const BocaTransition& t = a.transitions[static_cast<std::size_t>(ti)];
            auto next_c = fire(a, t, src.c);
            if (!next_c)
                continue;
            BocaState next{t.to, *next_c};
            if (se.index.count(LocValue{next.location, next.c}))
                continue;
            if (se.order.size() >= budget)
                throw BudgetError("state budget of " + std::to_string(budget) +
                                  " states exhausted before the search finished");
            std::size_t id = se.order.size();
            se.index.emplace(LocValue{next.location, next.c}, id);
            se.order.push_back(next);
            se.via.emplace_back(static_cast<std::int64_t>(cur), ti);
            if (target && next == *target) {
                hit = id;
                return;
            }
            queue.push_back(id);
        }
    }
}

} // namespace

BocaReachResult reach_boca(const BocaAutomaton& a, const BocaState& target,
                           const BocaReachOptions& opts) {
    require_valid_boca(a);
    check_state_shape(a, target, "reach_boca target");
    if (opts.state_budget == 0)
        throw ValidationError("state budget must be positive");

    BocaSearch se;
    std::optional<std::size_t> hit;
    boca_bfs(a, target, opts.state_budget, se, hit);

    BocaReachResult res;
    res.states_explored = se.order.size();
    if (!hit)
        return res;
    res.reachable = true;
    BocaRun run;
    std::vector<std::size_t> chain;
    std::int64_t cur = static_cast<std::int64_t>(*hit);
    while (cur >= 0) {
        chain.push_back(static_cast<std::size_t>(cur));
        cur = se.via[static_cast<std::size_t>(cur)].first;
    }
    std::reverse(chain.begin(), chain.end());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        run.states.push_back(se.order[chain[i]]);
        if (i > 0)
            run.transitions.push_back(se.via[chain[i]].second);
    }
    res.witness = std::move(run);
    return res;
}

std::vector<BocaState> reach_set_boca(const BocaAutomaton& a, const BocaReachOptions& opts) {
    require_valid_boca(a);
    if (opts.state_budget == 0)
        throw ValidationError("state budget must be positive");
    BocaSearch se;
    std::optional<std::size_t> hit;
    boca_bfs(a, std::nullopt, opts.state_budget, se, hit);
    return se.order;
}

BocaAutomaton desugar_guards(const BocaAutomaton& a) {
    require_valid_boca(a);

    BocaAutomaton out;
    out.locations = a.locations;
    out.bound = a.bound;
    out.initial = a.initial;

    std::set<std::string> taken(a.locations.begin(), a.locations.end());
    auto fresh = [&](std::size_t ti, int step) {
        std::string name = "_g" + std::to_string(ti) + "_" + std::to_string(step);
        while (taken.count(name))
            name += "_";
        taken.insert(name);
        out.locations.push_back(name);
        return static_cast<int>(out.locations.size() - 1);
    };

    for (std::size_t ti = 0; ti < a.transitions.size(); ++ti) {
        const BocaTransition& t = a.transitions[ti];
        std::vector<std::int64_t> deltas;
        if (t.g1 > 0) {
            deltas.push_back(-static_cast<std::int64_t>(t.g1));
            deltas.push_back(static_cast<std::int64_t>(t.g1));
        }
        if (t.g2 < a.bound) {
            deltas.push_back(static_cast<std::int64_t>(a.bound - t.g2));
            deltas.push_back(-static_cast<std::int64_t>(a.bound - t.g2));
        }
        deltas.push_back(t.p);

        int at = t.from;
        for (std::size_t di = 0; di < deltas.size(); ++di) {
            bool last = di + 1 == deltas.size();
            int next = last ? t.to : fresh(ti, static_cast<int>(di));
            out.transitions.push_back({at, next, deltas[di], 0, a.bound});
            at = next;
        }
    }
    return out;
}

} // namespace redchain
