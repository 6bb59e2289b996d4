#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "oracles.hpp"
#include "redchain/gen.hpp"
#include "redchain/json_io.hpp"

using namespace redchain;

namespace {

SsgInstance one_round_game() {
    SsgInstance g;
    g.rounds.push_back({1, 0, 2, 3});
    g.target = 3;
    return g;
}

} // namespace

TEST_CASE("games, formulas and automata round-trip through json") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenSsgParams sp;
        sp.n = 1 + static_cast<int>(seed % 3);
        sp.seed = seed;
        SsgInstance g = gen_ssg(sp);
        CHECK(ssg_from_json(ssg_to_json(g)) == g);

        GenQbfParams qp;
        qp.vars = 1 + static_cast<int>(seed % 4);
        qp.clauses = 1 + static_cast<int>(seed % 5);
        qp.seed = seed;
        Qbf3Cnf q = gen_qbf(qp);
        CHECK(qbf_from_json(qbf_to_json(q)) == q);

        GenCsaParams cp;
        cp.seed = seed;
        CsaAutomaton c = gen_csa(cp);
        CHECK(csa_from_json(csa_to_json(c)) == c);

        GenBocaParams bp;
        bp.seed = seed;
        BocaAutomaton b = gen_boca(bp);
        CHECK(boca_from_json(boca_to_json(b)) == b);
    }
}

TEST_CASE("runs and strategies round-trip through json") {
    SsgInstance g = one_round_game();
    BuiltCsa full = build_full_automaton(g);
    CsaRun run = *reach_csa(full.aut, full.target).witness;
    CHECK(csa_run_from_json(full.aut, csa_run_to_json(full.aut, run)) == run);

    CsaToBocaResult packed = csa_to_boca(full.aut, full.analytic_bound);
    BocaRun brun = *reach_boca(packed.aut, translate_state(full.target, packed.scheme)).witness;
    CHECK(boca_run_from_json(packed.aut, boca_run_to_json(packed.aut, brun)) == brun);

    Strategy s = *solve_ssg(g).strategy;
    CHECK(strategy_from_json(strategy_to_json(s)) == s);
}

TEST_CASE("canonical dumps and digests are frozen") {
    json j = ssg_to_json(one_round_game());
    std::string expected = "{\n"
                           "  \"rounds\": [\n"
                           "    [\n"
                           "      1,\n"
                           "      0,\n"
                           "      2,\n"
                           "      3\n"
                           "    ]\n"
                           "  ],\n"
                           "  \"target\": 3\n"
                           "}\n";
    CHECK(canonical_dump(j) == expected);
    CHECK(canonical_dump(j) == canonical_dump(ssg_to_json(one_round_game())));

    CHECK(digest(j) == "fnv1a64:1ca0dd042a8d48f4");
    SsgInstance other = one_round_game();
    other.target = 4;
    CHECK(digest(ssg_to_json(other)) != digest(j));
}

TEST_CASE("reduction sidecars expose layout and packing parameters") {
    SsgInstance g = one_round_game();
    BuiltCsa full = build_full_automaton(g);
    json meta = built_csa_meta_to_json(full);
    CHECK(meta["n"] == 1);
    CHECK(meta["k"] == 5);
    CHECK(meta["analytic_bound"] == 6);
    CHECK(meta["counter_bounds"] == json({2, 2, 1, 1, 6}));
    CHECK(meta["counter_names"][4] == "ctr:top");

    CsaToBocaResult packed = csa_to_boca(full.aut, full.analytic_bound);
    json pmeta = packing_meta_to_json(full.aut, packed.scheme);
    CHECK(pmeta["k"] == 5);
    CHECK(pmeta["n_bits"] == 3);
    CHECK(pmeta["per_counter_bound"] == 7);
    CHECK(pmeta["packed_bound"] == 32767);
}

TEST_CASE("malformed documents are rejected with context") {
    CHECK_THROWS_AS(parse_json("{"), ValidationError);
    CHECK_THROWS_AS(parse_json("not json"), ValidationError);

    json g = ssg_to_json(one_round_game());
    g.erase("target");
    CHECK_THROWS_AS(ssg_from_json(g), ValidationError);

    json g2 = ssg_to_json(one_round_game());
    g2["rounds"][0] = json::array({1, 2, 3});
    CHECK_THROWS_AS(ssg_from_json(g2), ValidationError);

    json q = json{{"prefix", json::array({json::array({"x1", "maybe"})})},
                  {"clauses", json::array()}};
    CHECK_THROWS_AS(qbf_from_json(q), ValidationError);

    SsgInstance game = one_round_game();
    json c = csa_to_json(build_full_automaton(game).aut);
    c["initial"] = "loc:nowhere";
    CHECK_THROWS_AS(csa_from_json(c), ValidationError);

    json b = boca_to_json(gen_boca({}));
    b["transitions"][0] = json::array();
    CHECK_THROWS_AS(boca_from_json(b), ValidationError);
}

TEST_CASE("qdimacs text maps onto the prefix and clause structure") {
    std::istringstream in("c example\n"
                          "p cnf 3 4\n"
                          "a 1 0\n"
                          "e 2 0\n"
                          "a 3 0\n"
                          "1 -2 -3 0\n"
                          "-1 -2 -3 0\n"
                          "-1 -2 3 0\n"
                          "1 2 3 0\n");
    Qbf3Cnf q = parse_qdimacs(in);
    REQUIRE(q.prefix.size() == 3);
    CHECK(q.prefix[0] == std::pair<std::string, Quant>{"x1", Quant::Forall});
    CHECK(q.prefix[1] == std::pair<std::string, Quant>{"x2", Quant::Exists});
    CHECK(q.prefix[2] == std::pair<std::string, Quant>{"x3", Quant::Forall});
    REQUIRE(q.clauses.size() == 4);
    CHECK(q.clauses[0] == std::array<QbfLit, 3>{{{0, true}, {1, false}, {2, false}}});
    CHECK(q.clauses[3] == std::array<QbfLit, 3>{{{0, true}, {1, true}, {2, true}}});
}

TEST_CASE("unquantified variables become outermost existentials") {
    std::istringstream in("p cnf 3 1\n"
                          "a 2 0\n"
                          "1 2 -3 0\n");
    Qbf3Cnf q = parse_qdimacs(in);
    REQUIRE(q.prefix.size() == 3);
    // 1 and 3 carry no quantifier line and move to the front, in order.
    CHECK(q.prefix[0] == std::pair<std::string, Quant>{"x1", Quant::Exists});
    CHECK(q.prefix[1] == std::pair<std::string, Quant>{"x3", Quant::Exists});
    CHECK(q.prefix[2] == std::pair<std::string, Quant>{"x2", Quant::Forall});
    CHECK(q.clauses[0] == std::array<QbfLit, 3>{{{0, true}, {2, true}, {1, false}}});
}

TEST_CASE("qdimacs rejections name the offending line") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_qdimacs(in);
    };
    CHECK_THROWS_WITH_AS(parse("p cnf 2 1\n1 -2 0\n"),
                         doctest::Contains("expected 3"), ValidationError);
    CHECK_THROWS_WITH_AS(parse("p cnf 2 1\nfoo bar\n"),
                         doctest::Contains("unrecognized line"), ValidationError);
    CHECK_THROWS_WITH_AS(parse("1 2 3 0\n"), doctest::Contains("problem line"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse("p cnf 2 1\n1 2 9 0\n"),
                         doctest::Contains("declared"), ValidationError);
}

TEST_CASE("documents survive a trip through the filesystem") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "redchain_json_io_test.json";
    json j = csa_to_json(build_full_automaton(one_round_game()).aut);
    write_text_file(path.string(), canonical_dump(j));
    CHECK(load_json_file(path.string()) == j);
    fs::remove(path);

    CHECK_THROWS_AS(load_json_file((fs::temp_directory_path() / "redchain_absent.json").string()),
                    ValidationError);
}
