#ifndef REDCHAIN_CSA_HPP
#define REDCHAIN_CSA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "redchain/common.hpp"

namespace redchain {

// Counter-stack automaton. Counters are indexed 1..k; equality tests must be
// upward closed (a test on counter i forces tests on every counter above i),
// and resets are only allowed on tested counters. That discipline is what the
// validator checks; the step function applies whatever it is given.
struct CsaTransition {
    int from = 0, to = 0;       // location indices
    std::map<int, Nat> eq;      // counter -> required value
    std::vector<Nat> inc;       // per-counter increment, size k
    std::set<int> resets;       // counters forced to zero after the test
    bool operator==(const CsaTransition&) const = default;
};

struct CsaAutomaton {
    std::vector<std::string> locations;
    int k = 0;
    int initial = 0;
    std::vector<CsaTransition> transitions;
    bool operator==(const CsaAutomaton&) const = default;

    int location_index(std::string_view name) const; // -1 when absent
};

struct CsaState {
    int location = 0;
    std::vector<Nat> counters; // size k, counter i at index i-1
    bool operator==(const CsaState&) const = default;
};

struct CsaStateHash {
    std::size_t operator()(const CsaState& s) const;
};

// Shape problems (bad indices, wrong inc size) land in violations alongside
// discipline breaches; warnings flag legal but suspicious constructs.
struct CsaDiagnostics {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

CsaDiagnostics validate_csa(const CsaAutomaton& a);

// Throws ValidationError when the automaton fails validate_csa.
void require_valid_csa(const CsaAutomaton& a);

// Enabled successors of s with the transition that produced each, in
// declaration order.
std::vector<std::pair<CsaState, int>> csa_step(const CsaAutomaton& a, const CsaState& s);

// states.size() == transitions.size() + 1; a run of length 0 is one state.
struct CsaRun {
    std::vector<CsaState> states;
    std::vector<int> transitions;
    bool operator==(const CsaRun&) const = default;
};

// nullopt when every step checks out, otherwise the index of the first step
// whose source, guard, update or destination does not match. Malformed
// containers (empty run, size mismatch, wrong counter count) throw.
std::optional<std::size_t> replay_run(const CsaAutomaton& a, const CsaRun& r);

struct CsaReachOptions {
    std::optional<Nat> bound;                        // uniform counter monitor
    std::optional<std::vector<Nat>> counter_bounds;  // per-counter monitor, size k
    Nat state_budget = 50'000'000;
};

struct CsaReachResult {
    bool reachable = false;
    std::optional<CsaRun> witness;         // shortest, deterministic
    std::optional<CsaState> bound_violation; // first state over the monitor
    Nat states_explored = 0;
};

// Breadth-first search from (initial, all zeros). Transitions are expanded in
// declaration order and states kept in first-discovered order, so witnesses
// are reproducible byte for byte. A state over the bound monitor aborts the
// search and is reported; exceeding the state budget throws BudgetError.
CsaReachResult reach_csa(const CsaAutomaton& a, const CsaState& target,
                         const CsaReachOptions& opts = {});

} // namespace redchain

#endif
