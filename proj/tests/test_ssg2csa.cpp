#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "redchain/gen.hpp"
#include "redchain/ssg2csa.hpp"

using namespace redchain;
using Kind = GadgetTag::Kind;

namespace {

// One round, numbers 1/0 against 2/3. Existential wins target 3 (answer e
// against A, f against B) and loses target 5 (no branch reaches 5).
SsgInstance one_round_game(Nat target) {
    SsgInstance g;
    g.rounds.push_back({1, 0, 2, 3});
    g.target = target;
    return g;
}

bool upward_closed(const CsaTransition& t, int k) {
    if (t.eq.empty())
        return true;
    int lowest = t.eq.begin()->first;
    for (int c = lowest; c <= k; ++c)
        if (!t.eq.count(c))
            return false;
    return true;
}

} // namespace

TEST_CASE("one-round base automaton has the frozen shape") {
    BuiltCsa built = build_base_automaton(1);
    const CsaAutomaton& a = built.aut;

    CHECK(a.locations == std::vector<std::string>{"loc:u1", "loc:e1", "loc:w1", "loc:w2",
                                                  "loc:r1", "loc:r'1", "loc:t"});
    CHECK(a.k == 5);
    CHECK(a.initial == 0);
    CHECK(built.counter_names ==
          std::vector<std::string>{"ctr:a1", "ctr:b1", "ctr:e1", "ctr:f1", "ctr:top"});
    REQUIRE(a.transitions.size() == 10);
    REQUIRE(built.tags.size() == 10);
    CHECK(validate_csa(a).ok());

    // Picks bump their own counter and nothing else.
    CHECK(a.transitions[0].inc == std::vector<Nat>{1, 0, 0, 0, 0});
    CHECK(a.transitions[3].inc == std::vector<Nat>{0, 0, 0, 1, 0});
    CHECK(built.tags[0] == GadgetTag{Kind::UniversalPick, 1, 0});
    CHECK(built.tags[3] == GadgetTag{Kind::ExistentialPick, 1, 1});

    // Plain sum-check hop, then the cascade.
    CHECK(a.transitions[4].eq.empty());
    CHECK(built.tags[4].kind == Kind::SumCheck);
    CHECK(built.tags[5].kind == Kind::Connector);

    // e-branch of the reset: e1 = 1, f1 = 0, top forced to 0 implicitly.
    const CsaTransition& efr = a.transitions[6];
    CHECK(efr.eq == std::map<int, Nat>{{3, 1}, {4, 0}, {5, 0}});
    CHECK(efr.resets == std::set<int>{3, 4});

    // Exit back to u1 sees one A pick and a clean B counter.
    const CsaTransition& exit = a.transitions[8];
    CHECK(exit.eq == std::map<int, Nat>{{1, 1}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
    CHECK(exit.resets.empty());
    CHECK(built.tags[8] == GadgetTag{Kind::Exit, 1, -1});

    // Descend consumes both halves and wipes them.
    const CsaTransition& desc = a.transitions[9];
    CHECK(desc.eq == std::map<int, Nat>{{1, 1}, {2, 1}, {3, 0}, {4, 0}, {5, 0}});
    CHECK(desc.resets == std::set<int>{1, 2});
    CHECK(a.locations[static_cast<std::size_t>(desc.to)] == "loc:t");

    CHECK(built.counter_bounds == std::vector<Nat>{2, 2, 1, 1, 0});
    CHECK(built.analytic_bound == 2);
    CHECK(built.target == CsaState{6, {0, 0, 0, 0, 0}});
}

TEST_CASE("every equality test is completed with zeros upward") {
    BuiltCsa built = build_base_automaton(2);
    const CsaAutomaton& a = built.aut;

    CHECK(a.locations.size() == 11);
    CHECK(a.k == 9);
    REQUIRE(a.transitions.size() == 18);
    CHECK(validate_csa(a).ok());
    for (const CsaTransition& t : a.transitions)
        CHECK(upward_closed(t, a.k));

    // Leaving r2 forces a2 = 1, b2 = 0 and, implicitly, e2 = f2 = top = 0.
    CHECK(built.tags[12] == GadgetTag{Kind::Exit, 2, -1});
    CHECK(a.transitions[12].eq ==
          std::map<int, Nat>{{5, 1}, {6, 0}, {7, 0}, {8, 0}, {9, 0}});

    // The level-1 reset tests a full block of two e picks.
    CHECK(built.tags[14] == GadgetTag{Kind::ResetEF, 1, 0});
    CHECK(a.transitions[14].eq == std::map<int, Nat>{{3, 2}, {4, 0}, {5, 0}, {6, 0},
                                                     {7, 0}, {8, 0}, {9, 0}});
    CHECK(a.transitions[14].resets == std::set<int>{3, 4});

    CHECK(built.counter_bounds == std::vector<Nat>{4, 4, 2, 2, 2, 2, 1, 1, 0});
    CHECK(built.analytic_bound == 4);
}

TEST_CASE("round counts outside the supported range are rejected") {
    CHECK_THROWS_AS(build_base_automaton(0), ValidationError);
    CHECK_THROWS_AS(build_base_automaton(21), ValidationError);

    SsgInstance big;
    big.rounds.assign(21, SsgRound{0, 0, 0, 0});
    big.target = 0;
    CHECK_THROWS_AS(build_full_automaton(big), ValidationError);
}

TEST_CASE("game numbers ride on the picks and the sum check") {
    SsgInstance g = one_round_game(3);
    BuiltCsa full = build_full_automaton(g);
    const CsaAutomaton& a = full.aut;

    CHECK(a.transitions[0].inc == std::vector<Nat>{1, 0, 0, 0, 1});
    CHECK(a.transitions[1].inc == std::vector<Nat>{0, 1, 0, 0, 0});
    CHECK(a.transitions[2].inc == std::vector<Nat>{0, 0, 1, 0, 2});
    CHECK(a.transitions[3].inc == std::vector<Nat>{0, 0, 0, 1, 3});

    const CsaTransition& sum = a.transitions[4];
    CHECK(sum.eq == std::map<int, Nat>{{5, 3}});
    CHECK(sum.resets == std::set<int>{5});

    CHECK(full.counter_bounds == std::vector<Nat>{2, 2, 1, 1, 6});
    CHECK(full.analytic_bound == 6);
    CHECK(validate_csa(a).ok());
}

TEST_CASE("the target is reachable exactly when the existential player wins") {
    SsgInstance win = one_round_game(3);
    BuiltCsa full = build_full_automaton(win);
    CHECK(solve_ssg(win).winner == Winner::Existential);

    CsaReachOptions opts;
    opts.counter_bounds = full.counter_bounds;
    CsaReachResult res = reach_csa(full.aut, full.target, opts);
    REQUIRE(res.reachable);
    CHECK_FALSE(res.bound_violation.has_value());
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->transitions.size() == 12);
    CHECK(replay_run(full.aut, *res.witness) == std::nullopt);

    SsgInstance lose = one_round_game(5);
    CHECK(solve_ssg(lose).winner == Winner::Universal);
    BuiltCsa full5 = build_full_automaton(lose);
    CsaReachOptions opts5;
    opts5.counter_bounds = full5.counter_bounds;
    CsaReachResult res5 = reach_csa(full5.aut, full5.target, opts5);
    CHECK_FALSE(res5.reachable);
    CHECK_FALSE(res5.bound_violation.has_value());
}

TEST_CASE("the search witness is the canonical run of the winning strategy") {
    SsgInstance g = one_round_game(3);
    BuiltCsa full = build_full_automaton(g);
    CsaReachResult res = reach_csa(full.aut, full.target);
    REQUIRE(res.witness.has_value());

    SequentialStrategy seq;
    seq.plays = {make_play(g, 0, 0), make_play(g, 1, 1)};
    CsaRun canonical = sequential_to_run(g, seq);
    CHECK(canonical.transitions == res.witness->transitions);
    CHECK(canonical.states == res.witness->states);

    CHECK(run_to_sequential(g, *res.witness) == seq);
}

TEST_CASE("segments split at every return to the start location") {
    SsgInstance g = one_round_game(3);
    BuiltCsa full = build_full_automaton(g);
    CsaRun run = *reach_csa(full.aut, full.target).witness;

    std::vector<Segment> segs = decompose_segments(full.aut, run);
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].first_state == 0);
    CHECK(segs[0].last_state == 6);
    CHECK(segs[1].first_state == 6);
    CHECK(segs[1].last_state == 12);
    CHECK(segs[0].states.size() == 7);
    CHECK(segs[1].transitions.size() == 6);
    // The pass boundary state belongs to both segments.
    CHECK(segs[0].states.back() == segs[1].states.front());
    CHECK(segs[0].states.back() == run.states[6]);

    CsaRun empty;
    empty.states.push_back(run.states.front());
    std::vector<Segment> one = decompose_segments(full.aut, empty);
    REQUIRE(one.size() == 1);
    CHECK(one[0].states.size() == 1);
    CHECK(one[0].transitions.empty());

    CsaRun shifted;
    shifted.states.push_back(run.states[1]); // starts at loc:e1
    CHECK_THROWS_AS(decompose_segments(full.aut, shifted), ValidationError);

    CsaAutomaton foreign;
    foreign.locations = {"p"};
    foreign.k = 1;
    foreign.initial = 0;
    CsaRun tiny;
    tiny.states.push_back(CsaState{0, {0}});
    CHECK_THROWS_AS(decompose_segments(foreign, tiny), ValidationError);
}

TEST_CASE("the pass predicate accepts the witness split and rejects rearrangements") {
    SsgInstance g = one_round_game(3);
    BuiltCsa full = build_full_automaton(g);
    CsaRun run = *reach_csa(full.aut, full.target).witness;
    std::vector<Segment> segs = decompose_segments(full.aut, run);

    CHECK(ssruns_predicate(1, segs));

    std::vector<Segment> half{segs[0]};
    CHECK_FALSE(ssruns_predicate(1, half));

    std::vector<Segment> swapped{segs[1], segs[0]};
    CHECK_FALSE(ssruns_predicate(1, swapped));

    CHECK_THROWS_AS(ssruns_predicate(0, segs), ValidationError);
    CHECK_THROWS_AS(ssruns_predicate(21, segs), ValidationError);
}

TEST_CASE("reset cascade visits are periodic in the pass index") {
    using set = std::set<std::string>;
    CHECK(reset_visit_oracle(2, 1) == set{"loc:r'2", "loc:r2"});
    CHECK(reset_visit_oracle(2, 2) == set{"loc:r'2", "loc:r2", "loc:r'1", "loc:r1"});
    CHECK(reset_visit_oracle(2, 3) == set{"loc:r'2", "loc:r2"});
    CHECK(reset_visit_oracle(2, 4) == set{"loc:r'2", "loc:r2", "loc:r'1", "loc:r1"});

    CHECK(reset_visit_oracle(1, 1) == set{"loc:r'1", "loc:r1"});
    CHECK(reset_visit_oracle(1, 2) == set{"loc:r'1", "loc:r1"});
    CHECK(reset_visit_oracle(3, 4) ==
          set{"loc:r'3", "loc:r3", "loc:r'2", "loc:r2", "loc:r'1", "loc:r1"});
    CHECK(reset_visit_oracle(3, 6) == set{"loc:r'3", "loc:r3", "loc:r'2", "loc:r2"});

    CHECK_THROWS_AS(reset_visit_oracle(2, 0), ValidationError);
    CHECK_THROWS_AS(reset_visit_oracle(2, 5), ValidationError);
    CHECK_THROWS_AS(reset_visit_oracle(0, 1), ValidationError);
}

TEST_CASE("losing strategies cannot be driven through the automaton") {
    SsgInstance g = one_round_game(3);

    // Sequential but not winning: the first play answers f and sums to 4.
    SequentialStrategy miss;
    miss.plays = {make_play(g, 0, 1), make_play(g, 1, 0)};
    try {
        sequential_to_run(g, miss);
        FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("play 1 sums to 4") != std::string::npos);
        CHECK(std::string(e.what()).find("loc:w1") != std::string::npos);
    }

    // Not sequential: both plays on the A side.
    SequentialStrategy twice;
    twice.plays = {make_play(g, 0, 0), make_play(g, 0, 0)};
    CHECK_THROWS_AS(sequential_to_run(g, twice), ValidationError);

    // A run cut short of (loc:t, all zeros) carries no strategy.
    BuiltCsa full = build_full_automaton(g);
    CsaRun run = *reach_csa(full.aut, full.target).witness;
    run.states.pop_back();
    run.transitions.pop_back();
    CHECK_THROWS_AS(run_to_sequential(g, run), ValidationError);
}

TEST_CASE("sequential strategies round-trip through canonical runs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GenSsgParams params;
        params.n = 1 + static_cast<int>(seed % 2);
        params.max_number = 5;
        params.winnable = true;
        params.seed = seed * 7 + 1;
        SsgInstance g = gen_ssg(params);

        SsgSolveResult solved = solve_ssg(g);
        REQUIRE(solved.winner == Winner::Existential);
        SequentialStrategy seq = strategy_to_sequential(g, *solved.strategy);

        CsaRun run = sequential_to_run(g, seq);
        BuiltCsa full = build_full_automaton(g);
        CHECK(replay_run(full.aut, run) == std::nullopt);
        CHECK(run.states.back() == full.target);

        std::vector<Segment> segs = decompose_segments(full.aut, run);
        CHECK(ssruns_predicate(g.n(), segs));
        CHECK(run_to_sequential(g, run) == seq);
    }
}

TEST_CASE("winnable generated games stay reachable under the counter monitors") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        GenSsgParams params;
        params.n = 1 + static_cast<int>(seed % 2);
        params.max_number = 3;
        params.winnable = true;
        params.seed = seed + 400;
        SsgInstance g = gen_ssg(params);

        BuiltCsa full = build_full_automaton(g);
        CsaReachOptions opts;
        opts.counter_bounds = full.counter_bounds;
        CsaReachResult res = reach_csa(full.aut, full.target, opts);
        CHECK(res.reachable);
        CHECK_FALSE(res.bound_violation.has_value());
        REQUIRE(res.witness.has_value());
        CHECK(replay_run(full.aut, *res.witness) == std::nullopt);
    }
}
