#include <doctest.h>

#include "oracles.hpp"
#include "redchain/gen.hpp"
#include "redchain/json_io.hpp"
#include "redchain/pipeline.hpp"

using namespace redchain;

namespace {

std::vector<std::string> stage_names(const PipelineReport& r) {
    std::vector<std::string> out;
    for (const StageReport& st : r.stages)
        out.push_back(st.name);
    return out;
}

} // namespace

TEST_CASE("generators are deterministic in the seed") {
    GenSsgParams sp;
    sp.seed = 1;
    CHECK(gen_ssg(sp) == gen_ssg(sp));
    GenSsgParams sp2 = sp;
    sp2.seed = 2;
    CHECK_FALSE(gen_ssg(sp) == gen_ssg(sp2));

    GenQbfParams qp;
    qp.seed = 1;
    CHECK(gen_qbf(qp) == gen_qbf(qp));
    GenCsaParams cp;
    cp.seed = 1;
    CHECK(gen_csa(cp) == gen_csa(cp));
    GenBocaParams bp;
    bp.seed = 1;
    CHECK(gen_boca(bp) == gen_boca(bp));
    GenBocaParams bp2 = bp;
    bp2.seed = 2;
    CHECK_FALSE(gen_boca(bp) == gen_boca(bp2));
}

TEST_CASE("generated instances validate cleanly") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GenSsgParams sp;
        sp.n = 1 + static_cast<int>(seed % 4);
        sp.seed = seed;
        validate_ssg(gen_ssg(sp)); // must not throw

        GenQbfParams qp;
        qp.vars = 1 + static_cast<int>(seed % 5);
        qp.clauses = 1 + static_cast<int>(seed % 6);
        qp.seed = seed;
        validate_qbf(gen_qbf(qp));

        GenCsaParams cp;
        cp.k = 1 + static_cast<int>(seed % 5);
        cp.seed = seed;
        CHECK(validate_csa(gen_csa(cp)).ok());

        GenBocaParams bp;
        bp.bound = 1 + seed % 40;
        bp.seed = seed;
        CHECK(validate_boca(gen_boca(bp)).ok());
    }
}

TEST_CASE("arranged games always fall to the existential player") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        GenSsgParams p;
        p.n = 1 + static_cast<int>(seed % 3);
        p.winnable = true;
        p.seed = seed;
        CHECK(solve_ssg(gen_ssg(p)).winner == Winner::Existential);
    }
}

TEST_CASE("game pipelines agree across all three stages") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenSsgParams p;
        p.n = 1 + static_cast<int>(seed % 2);
        p.max_number = 3;
        p.winnable = seed % 2 == 0;
        p.seed = seed;
        SsgInstance g = gen_ssg(p);

        PipelineReport rep = pipeline_from_ssg(g);
        CHECK(stage_names(rep) == std::vector<std::string>{"ssg", "csa", "boca"});
        CHECK(rep.agreement);
        CHECK_FALSE(rep.budget_hit);
        CHECK(pipeline_exit_code(rep) == 0);
        CHECK(rep.stages[0].answer_bit == (solve_ssg(g).winner == Winner::Existential));
        CHECK(rep.stages[1].answer_bit == rep.stages[0].answer_bit);
        CHECK(rep.stages[2].answer_bit == rep.stages[0].answer_bit);
    }
}

TEST_CASE("a tiny state budget cuts the chain short") {
    GenSsgParams p;
    p.n = 2;
    p.winnable = true;
    p.seed = 5;
    PipelineOptions opts;
    opts.state_budget = 10;
    PipelineReport rep = pipeline_from_ssg(gen_ssg(p), opts);

    CHECK(stage_names(rep) == std::vector<std::string>{"ssg", "csa"});
    CHECK(rep.stages[1].status == StageReport::Status::Budget);
    CHECK(rep.budget_hit);
    CHECK(rep.agreement); // the one answered stage has nothing to disagree with
    CHECK(pipeline_exit_code(rep) == 3);
}

TEST_CASE("stopping after the automaton stage skips the packing") {
    GenSsgParams p;
    p.n = 1;
    p.winnable = true;
    p.seed = 3;
    PipelineOptions opts;
    opts.stop_after = Stage::Csa;
    PipelineReport rep = pipeline_from_ssg(gen_ssg(p), opts);
    CHECK(stage_names(rep) == std::vector<std::string>{"ssg", "csa"});
    CHECK(rep.agreement);
    CHECK(pipeline_exit_code(rep) == 0);
}

TEST_CASE("a formula pipeline carries one answer through four stages") {
    Qbf3Cnf q;
    q.prefix.emplace_back("x1", Quant::Forall);
    q.clauses.push_back({QbfLit{0, true}, QbfLit{0, true}, QbfLit{0, true}});

    PipelineReport rep = pipeline_from_qbf(q);
    CHECK(stage_names(rep) == std::vector<std::string>{"qbf", "ssg", "csa", "boca"});
    for (const StageReport& st : rep.stages) {
        CHECK(st.status == StageReport::Status::Answered);
        CHECK_FALSE(st.answer_bit); // a universally quantified positive literal fails
    }
    CHECK(rep.agreement);
    CHECK(pipeline_exit_code(rep) == 0);
}

TEST_CASE("a variable budget stops the formula stage") {
    Qbf3Cnf q;
    q.prefix.emplace_back("x1", Quant::Exists);
    q.prefix.emplace_back("x2", Quant::Exists);
    q.clauses.push_back({QbfLit{0, true}, QbfLit{1, true}, QbfLit{0, true}});
    PipelineOptions opts;
    opts.max_vars = 1;
    PipelineReport rep = pipeline_from_qbf(q, opts);
    REQUIRE(rep.stages.size() == 1);
    CHECK(rep.stages[0].status == StageReport::Status::Budget);
    CHECK(pipeline_exit_code(rep) == 3);
}

TEST_CASE("a broken bound attestation breaks agreement") {
    CsaAutomaton a;
    a.locations = {"p", "q"};
    a.k = 1;
    a.initial = 0;
    a.transitions.push_back({0, 0, {}, {1}, {}});

    PipelineReport rep = pipeline_from_csa(a, CsaState{1, {0}}, 3);
    REQUIRE(rep.stages.size() == 1); // the packing stage never runs
    CHECK(rep.stages[0].answer == "bound violated");
    CHECK_FALSE(rep.agreement);
    CHECK(pipeline_exit_code(rep) == 1);
}

TEST_CASE("a clean attestation carries the automaton into the packing") {
    CsaAutomaton a;
    a.locations = {"p", "q"};
    a.k = 2;
    a.initial = 0;
    a.transitions.push_back({0, 0, {}, {1, 1}, {}});
    a.transitions.push_back({0, 1, {{1, 2}, {2, 2}}, {0, 0}, {1, 2}});

    PipelineReport rep = pipeline_from_csa(a, CsaState{1, {0, 0}}, 3);
    CHECK(stage_names(rep) == std::vector<std::string>{"csa", "boca"});
    CHECK(rep.stages[0].answer_bit);
    CHECK(rep.stages[1].answer_bit);
    CHECK(rep.agreement);
    CHECK(pipeline_exit_code(rep) == 0);
}

TEST_CASE("a packed automaton alone reports a single stage") {
    BocaAutomaton a;
    a.locations = {"p", "q"};
    a.bound = 7;
    a.initial = 0;
    a.transitions.push_back({0, 0, 2, 0, 5});
    a.transitions.push_back({0, 1, 0, 6, 6});

    PipelineReport rep = pipeline_from_boca(a, BocaState{1, 6});
    CHECK(stage_names(rep) == std::vector<std::string>{"boca"});
    CHECK(rep.stages[0].answer_bit);
    CHECK(rep.agreement);
    CHECK(pipeline_exit_code(rep) == 0);
}

TEST_CASE("pipeline reports serialize with one row per stage") {
    GenSsgParams p;
    p.n = 1;
    p.winnable = true;
    p.seed = 9;
    PipelineReport rep = pipeline_from_ssg(gen_ssg(p));

    nlohmann::json j = pipeline_report_to_json(rep);
    REQUIRE(j["stages"].size() == 3);
    CHECK(j["stages"][0]["stage"] == "ssg");
    CHECK(j["stages"][2]["stage"] == "boca");
    CHECK(j["agreement"] == true);
    CHECK(j["budget_hit"] == false);
    for (const auto& st : j["stages"])
        CHECK(st["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);

    std::string text = pipeline_report_to_text(rep);
    CHECK(text.find("stage ssg") != std::string::npos);
    CHECK(text.find("agreement: yes") != std::string::npos);
}
