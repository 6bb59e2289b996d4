#ifndef REDCHAIN_SSG2CSA_HPP
#define REDCHAIN_SSG2CSA_HPP

#include <set>
#include <string>
#include <vector>

#include "redchain/csa.hpp"
#include "redchain/ssg.hpp"

namespace redchain {

// Counter layout of the game automaton: four counters per round plus one
// running-sum counter on top. Counter indices are 1-based; a_i counts
// universal A picks of round i, b_i the B picks, e_i / f_i the existential
// picks, and top accumulates the chosen numbers within a pass.
struct CounterLayout {
    int n = 0;
    int k() const { return 4 * n + 1; }
    int a(int i) const { return 4 * (i - 1) + 1; }
    int b(int i) const { return 4 * (i - 1) + 2; }
    int e(int i) const { return 4 * (i - 1) + 3; }
    int f(int i) const { return 4 * (i - 1) + 4; }
    int top() const { return k(); }
};

// What role a transition plays in the construction. Picks carry the round
// and the side (0 = first of the pair); ResetEF carries which test branch
// (0 = the e-side test, 1 = the f-side); Exit and Descend carry the level.
struct GadgetTag {
    enum class Kind { UniversalPick, ExistentialPick, SumCheck, Connector, ResetEF, Exit, Descend };
    Kind kind = Kind::Connector;
    int level = 0;
    int pick = -1;
    bool operator==(const GadgetTag&) const = default;
};

struct BuiltCsa {
    CsaAutomaton aut;
    CounterLayout layout;
    std::vector<GadgetTag> tags;          // parallel to aut.transitions
    std::vector<std::string> counter_names;
    CsaState target;                      // (t, all zeros)
    Nat analytic_bound = 0;               // uniform bound on every counter
    std::vector<Nat> counter_bounds;      // per-counter bound, size k
};

// The game automaton without numbers: one pass walks u_1 e_1 .. u_n e_n w_1
// w_2 and then the reset cascade r'_n r_n .. down to an exit back to u_1 or,
// after the final pass, to t. Every equality test is completed with zero
// tests on all higher counters, which is what forces the canonical pass
// structure.
BuiltCsa build_base_automaton(int n);

// The base automaton plus the game numbers: each pick also adds its number
// to the top counter, and the w_1 -> w_2 hop tests top = target and resets
// it. Reaching (t, all zeros) is equivalent to the existential player owning
// a sequential winning strategy.
BuiltCsa build_full_automaton(const SsgInstance& g);

// A run slice covering one pass: state indices [first_state, last_state] of
// the source run, with owned copies of those states and the steps between.
struct Segment {
    std::size_t first_state = 0, last_state = 0;
    std::vector<CsaState> states;
    std::vector<int> transitions;
};

// Splits a run of a built automaton at every visit of u_1. Runs must start
// at u_1; the final segment may be cut short (stuck run) or end at t.
std::vector<Segment> decompose_segments(const CsaAutomaton& a, const CsaRun& r);

// True iff there are exactly 2^n segments, each with a full set of pick
// deltas, and the induced play order satisfies the three sequential-strategy
// conditions (A side throughout even blocks, B side throughout odd blocks,
// constant existential side per block).
bool ssruns_predicate(int n, const std::vector<Segment>& segments);

// The reset locations pass j walks through: r'_i and r_i for every level i
// with j mod 2^(n-i) = 0, visited from level n downward. j ranges over
// [1, 2^n].
std::set<std::string> reset_visit_oracle(int n, std::uint64_t j);

// Reads the sequential strategy off a successful run of the full automaton
// for g. Throws ValidationError when the run does not end in (t, all zeros).
SequentialStrategy run_to_sequential(const SsgInstance& g, const CsaRun& r);

// Simulates the canonical run of a sequential strategy through the full
// automaton. When some play misses the target the run would get stuck at
// w_1; that is reported as a ValidationError naming the play and its sum.
CsaRun sequential_to_run(const SsgInstance& g, const SequentialStrategy& seq);

} // namespace redchain

#endif
