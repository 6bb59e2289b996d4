#ifndef REDCHAIN_BOCA_HPP
#define REDCHAIN_BOCA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "redchain/common.hpp"

namespace redchain {

// Bounded one-counter automaton over counter values [0, bound]. A transition
// fires from (l, c) when g1 <= c <= g2 and c + p stays inside [0, bound].
struct BocaTransition {
    int from = 0, to = 0;
    std::int64_t p = 0;
    Nat g1 = 0, g2 = 0;
    bool operator==(const BocaTransition&) const = default;
};

struct BocaAutomaton {
    std::vector<std::string> locations;
    Nat bound = 0;
    int initial = 0;
    std::vector<BocaTransition> transitions;
    bool operator==(const BocaAutomaton&) const = default;

    int location_index(std::string_view name) const; // -1 when absent
};

struct BocaState {
    int location = 0;
    Nat c = 0;
    bool operator==(const BocaState&) const = default;
};

struct BocaDiagnostics {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Rejects g1 > g2, guards or |p| over the bound, and bad indices.
BocaDiagnostics validate_boca(const BocaAutomaton& a);
void require_valid_boca(const BocaAutomaton& a);

std::vector<std::pair<BocaState, int>> boca_step(const BocaAutomaton& a, const BocaState& s);

struct BocaRun {
    std::vector<BocaState> states;
    std::vector<int> transitions;
    bool operator==(const BocaRun&) const = default;
};

std::optional<std::size_t> replay_run(const BocaAutomaton& a, const BocaRun& r);

struct BocaReachOptions {
    Nat state_budget = 50'000'000;
};

struct BocaReachResult {
    bool reachable = false;
    std::optional<BocaRun> witness;
    Nat states_explored = 0;
};

// Breadth-first search from (initial, 0), deterministic like reach_csa.
BocaReachResult reach_boca(const BocaAutomaton& a, const BocaState& target,
                           const BocaReachOptions& opts = {});

// Every reachable state, in discovery order.
std::vector<BocaState> reach_set_boca(const BocaAutomaton& a, const BocaReachOptions& opts = {});

// Compiles every non-trivial guard away: l -(-g1)-> . -(+g1)-> . -(+(b-g2))->
// . -(-(b-g2))-> . -(+p)-> l' through fresh locations, each hop guarded by the
// trivial [0, b]. Gadget halves with zero delta are dropped, and a transition
// whose guard is already [0, b] is kept as is. Fresh location names derive
// from the transition index, so the output is deterministic.
BocaAutomaton desugar_guards(const BocaAutomaton& a);

} // namespace redchain

#endif
