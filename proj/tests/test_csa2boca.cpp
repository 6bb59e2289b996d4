#include <doctest.h>

#include "oracles.hpp"
#include "redchain/csa2boca.hpp"
#include "redchain/gen.hpp"
#include "redchain/ssg2csa.hpp"

using namespace redchain;

namespace {

// Two locations, two counters. t0 bumps both, t1 tests c2 = 1, t2 tests
// c1 = 2 and c2 = 1 and wipes c2.
CsaAutomaton two_counter_automaton() {
    CsaAutomaton a;
    a.locations = {"p", "q"};
    a.k = 2;
    a.initial = 0;
    a.transitions.push_back({0, 0, {}, {1, 1}, {}});
    a.transitions.push_back({0, 1, {{2, 1}}, {0, 0}, {}});
    a.transitions.push_back({0, 1, {{1, 2}, {2, 1}}, {0, 0}, {2}});
    return a;
}

Nat field(Nat c, int i, const PackingScheme& s) {
    return (c >> ((i - 1) * s.n_bits)) & s.per_counter_bound();
}

} // namespace

TEST_CASE("field encoding is frozen for two 2-bit counters") {
    CsaToBocaResult res = csa_to_boca(two_counter_automaton(), 3);
    const PackingScheme& s = res.scheme;
    CHECK(s.k == 2);
    CHECK(s.n_bits == 2);
    CHECK(s.per_counter_bound() == 3);
    CHECK(s.packed_bound() == 15);

    CHECK(enc(1, 1, s) == 1);
    CHECK(enc(1, 2, s) == 4);
    CHECK(enc(3, 2, s) == 12);
    CHECK_THROWS_AS(enc(4, 1, s), ValidationError);
    CHECK_THROWS_AS(enc(1, 3, s), ValidationError);
    CHECK_THROWS_AS(enc(1, 0, s), ValidationError);
}

TEST_CASE("guards and deltas of the packed automaton are frozen") {
    CsaToBocaResult res = csa_to_boca(two_counter_automaton(), 3);
    const BocaAutomaton& b = res.aut;
    REQUIRE(b.transitions.size() == 3);
    CHECK(b.bound == 15);
    CHECK(b.initial == 0);
    CHECK(b.locations == std::vector<std::string>{"p", "q"});

    // Untested bump of both counters: +1 in each field, guard wide open.
    CHECK(b.transitions[0] == BocaTransition{0, 0, 5, 0, 15});
    // Test c2 = 1: the c1 field below ranges freely.
    CHECK(b.transitions[1] == BocaTransition{0, 1, 0, 4, 7});
    // Full test c1 = 2, c2 = 1 pins the value; the reset drops c2's field.
    CHECK(b.transitions[2] == BocaTransition{0, 1, -4, 6, 6});
}

TEST_CASE("translate_state and unpack are inverse over the packed range") {
    PackingScheme s = csa_to_boca(two_counter_automaton(), 3).scheme;
    for (Nat x1 = 0; x1 <= 3; ++x1)
        for (Nat x2 = 0; x2 <= 3; ++x2) {
            BocaState packed = translate_state(CsaState{1, {x1, x2}}, s);
            CHECK(packed.location == 1);
            CHECK(unpack(packed.c, s) == std::vector<Nat>{x1, x2});
        }
    CHECK_THROWS_AS(translate_state(CsaState{0, {0, 0, 0}}, s), ValidationError);
    CHECK_THROWS_AS(unpack(16, s), ValidationError);
}

TEST_CASE("oversized packings and broken test discipline are rejected") {
    CsaAutomaton wide;
    wide.locations = {"p"};
    wide.k = 7;
    wide.initial = 0;
    CHECK_THROWS_AS(csa_to_boca(wide, 1000), BudgetError);

    CsaAutomaton loose;
    loose.locations = {"p", "q"};
    loose.k = 2;
    loose.initial = 0;
    loose.transitions.push_back({0, 1, {{1, 0}}, {0, 0}, {}}); // c2 untested
    CHECK_THROWS_AS(csa_to_boca(loose, 3), ValidationError);

    // Constants above the attested bound do not fit their field.
    CsaAutomaton hot = two_counter_automaton();
    hot.transitions[0].inc = {5, 0};
    CHECK_THROWS_AS(csa_to_boca(hot, 3), ValidationError);
}

TEST_CASE("a packed guard accepts exactly the field-matching values") {
    for (int k = 1; k <= 5; ++k) {
        for (int n_bits = 1; k * n_bits <= 10; ++n_bits) {
            Nat bound = pow2(n_bits) - 1;
            SplitMix64 rng(static_cast<std::uint64_t>(k * 100 + n_bits));
            for (int sample = 0; sample < 5; ++sample) {
                int lowest = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k) + 1));
                std::map<int, Nat> eq;
                for (int i = lowest; i <= k; ++i)
                    eq[i] = rng.in(0, bound);

                CsaAutomaton a;
                a.locations = {"p", "q"};
                a.k = k;
                a.initial = 0;
                a.transitions.push_back({0, 1, eq, std::vector<Nat>(static_cast<std::size_t>(k), 0), {}});
                CsaToBocaResult res = csa_to_boca(a, bound);
                const BocaTransition& t = res.aut.transitions[0];

                for (Nat c = 0; c <= res.scheme.packed_bound(); ++c) {
                    bool match = true;
                    for (const auto& [i, v] : eq)
                        if (field(c, i, res.scheme) != v)
                            match = false;
                    CHECK((t.g1 <= c && c <= t.g2) == match);
                }
            }
        }
    }
}

TEST_CASE("packing the game automaton preserves reachability") {
    SsgInstance g;
    g.rounds.push_back({1, 0, 2, 3});
    g.target = 3;
    BuiltCsa full = build_full_automaton(g);
    CsaToBocaResult res = csa_to_boca(full.aut, full.analytic_bound);
    CHECK(res.scheme.k == 5);
    CHECK(res.scheme.n_bits == 3);
    CHECK(res.aut.transitions.size() == full.aut.transitions.size());

    BocaState target = translate_state(full.target, res.scheme);
    BocaReachResult reached = reach_boca(res.aut, target);
    REQUIRE(reached.reachable);
    REQUIRE(reached.witness.has_value());

    // The lift replays on the original automaton step for step.
    CsaRun lifted = lift_boca_run(full.aut, res.scheme, *reached.witness);
    CHECK(lifted.transitions == reached.witness->transitions);
    CHECK(replay_run(full.aut, lifted) == std::nullopt);
    CHECK(lifted.states.back() == full.target);
    for (std::size_t i = 0; i < lifted.states.size(); ++i)
        CHECK(lifted.states[i].counters == unpack(reached.witness->states[i].c, res.scheme));

    g.target = 5;
    BuiltCsa lost = build_full_automaton(g);
    CsaToBocaResult res5 = csa_to_boca(lost.aut, lost.analytic_bound);
    CHECK_FALSE(reach_boca(res5.aut, translate_state(lost.target, res5.scheme)).reachable);
}

TEST_CASE("lifting rejects a scheme for the wrong automaton") {
    PackingScheme s = csa_to_boca(two_counter_automaton(), 3).scheme;
    SsgInstance g;
    g.rounds.push_back({0, 0, 0, 0});
    g.target = 0;
    BuiltCsa full = build_full_automaton(g);
    BocaRun r;
    r.states.push_back(BocaState{0, 0});
    CHECK_THROWS_AS(lift_boca_run(full.aut, s, r), ValidationError);
}
