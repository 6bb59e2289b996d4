#include "redchain/pipeline.hpp"

#include <chrono>
#include <cstdio>

#include "redchain/csa2boca.hpp"
#include "redchain/json_io.hpp"
#include "redchain/ssg2csa.hpp"

namespace redchain {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

bool wants(const PipelineOptions& opts, Stage s) {
    return static_cast<int>(opts.stop_after) >= static_cast<int>(s);
}

void check(StageReport& rep, bool ok, const std::string& what) {
    if (ok)
        return;
    if (!rep.note.empty())
        rep.note += "; ";
    rep.note += "check failed: " + what;
}

bool checks_ok(const StageReport& rep) {
    return rep.note.find("check failed") == std::string::npos;
}

void finish(PipelineReport& rep) {
    rep.agreement = true;
    rep.first_disagreement.clear();
    const StageReport* prev = nullptr;
    for (const StageReport& st : rep.stages) {
        if (st.status == StageReport::Status::Budget) {
            rep.budget_hit = true;
            continue;
        }
        if (!checks_ok(st)) {
            rep.agreement = false;
            if (rep.first_disagreement.empty())
                rep.first_disagreement = st.name + " cross-checks";
        }
        if (prev && st.answer_bit != prev->answer_bit) {
            rep.agreement = false;
            if (rep.first_disagreement.empty())
                rep.first_disagreement = prev->name + " vs " + st.name;
        }
        prev = &st;
    }
}

// Reachability of the built game automaton plus the checks that tie its
// witness back to the game: the witness must replay, decompose into 2^n
// segments forming a sequential strategy, and every play must hit the target.
StageReport csa_stage_from_game(const SsgInstance& g, const BuiltCsa& built,
                                const PipelineOptions& opts) {
    StageReport rep;
    rep.name = "csa";
    rep.instance_digest = digest(csa_to_json(built.aut));
    Timer t;
    try {
        CsaReachOptions ropts;
        ropts.bound = built.analytic_bound;
        ropts.counter_bounds = built.counter_bounds;
        ropts.state_budget = opts.state_budget;
        CsaReachResult res = reach_csa(built.aut, built.target, ropts);
        rep.millis = t.millis();
        check(rep, !res.bound_violation.has_value(),
              "analytic counter bound violated by a reachable state");
        rep.answer_bit = res.reachable;
        rep.answer = res.reachable ? "reachable" : "unreachable";
        if (res.reachable) {
            rep.witness_summary = "run of " + std::to_string(res.witness->transitions.size()) +
                                  " steps";
            check(rep, !replay_run(built.aut, *res.witness).has_value(),
                  "witness run does not replay");
            try {
                SequentialStrategy seq = run_to_sequential(g, *res.witness);
                check(rep, seq.plays.size() == pow2(g.n()), "witness play count is off");
                bool sums_ok = true;
                for (const Play& p : seq.plays)
                    sums_ok = sums_ok && play_sum(g, p) == g.target;
                check(rep, sums_ok, "a witness play misses the target");
            } catch (const ValidationError& e) {
                check(rep, false, std::string("witness does not induce a strategy: ") +
                                      e.what());
            }
        }
    } catch (const BudgetError& e) {
        rep.millis = t.millis();
        rep.status = StageReport::Status::Budget;
        rep.note = e.what();
    }
    return rep;
}

StageReport boca_stage(const CsaAutomaton& csa_aut, const CsaState& csa_target, Nat bound,
                       const PipelineOptions& opts) {
    StageReport rep;
    rep.name = "boca";
    Timer t;
    try {
        CsaToBocaResult packed = csa_to_boca(csa_aut, bound);
        rep.instance_digest = digest(boca_to_json(packed.aut));
        BocaState target = translate_state(csa_target, packed.scheme);
        BocaReachOptions ropts;
        ropts.state_budget = opts.state_budget;
        BocaReachResult res = reach_boca(packed.aut, target, ropts);
        rep.millis = t.millis();
        rep.answer_bit = res.reachable;
        rep.answer = res.reachable ? "reachable" : "unreachable";
        if (res.reachable) {
            rep.witness_summary = "run of " + std::to_string(res.witness->transitions.size()) +
                                  " steps";
            CsaRun lifted = lift_boca_run(csa_aut, packed.scheme, *res.witness);
            check(rep, !replay_run(csa_aut, lifted).has_value(),
                  "lifted witness does not replay on the counter-stack automaton");
            check(rep, !lifted.states.empty() && lifted.states.back() == csa_target,
                  "lifted witness misses the target state");
        }
    } catch (const BudgetError& e) {
        rep.millis = t.millis();
        rep.status = StageReport::Status::Budget;
        rep.note = e.what();
    }
    return rep;
}

} // namespace

PipelineReport pipeline_from_ssg(const SsgInstance& g, const PipelineOptions& opts) {
    PipelineReport rep;

    StageReport ssg;
    ssg.name = "ssg";
    ssg.instance_digest = digest(ssg_to_json(g));
    Timer t;
    try {
        SsgSolveOptions sopts;
        sopts.max_rounds = opts.max_rounds;
        SsgSolveResult res = solve_ssg(g, sopts);
        ssg.millis = t.millis();
        ssg.answer_bit = res.winner == Winner::Existential;
        ssg.answer = ssg.answer_bit ? "existential" : "universal";
        if (res.strategy)
            ssg.witness_summary = "strategy over " + std::to_string(g.n()) + " rounds";
        rep.stages.push_back(std::move(ssg));
    } catch (const BudgetError& e) {
        ssg.millis = t.millis();
        ssg.status = StageReport::Status::Budget;
        ssg.note = e.what();
        rep.stages.push_back(std::move(ssg));
        finish(rep);
        return rep;
    }

    if (wants(opts, Stage::Csa)) {
        BuiltCsa built = build_full_automaton(g);
        StageReport csa = csa_stage_from_game(g, built, opts);
        bool cut = csa.status == StageReport::Status::Budget;
        rep.stages.push_back(std::move(csa));
        if (!cut && wants(opts, Stage::Boca))
            rep.stages.push_back(boca_stage(built.aut, built.target, built.analytic_bound,
                                            opts));
    }
    finish(rep);
    return rep;
}

PipelineReport pipeline_from_qbf(const Qbf3Cnf& q, const PipelineOptions& opts) {
    PipelineReport rep;

    StageReport qs;
    qs.name = "qbf";
    qs.instance_digest = digest(qbf_to_json(q));
    Timer t;
    try {
        QbfEvalOptions eopts;
        eopts.max_vars = opts.max_vars;
        bool truth = eval_qbf(q, eopts);
        qs.millis = t.millis();
        qs.answer_bit = truth;
        qs.answer = truth ? "true" : "false";
        rep.stages.push_back(std::move(qs));
    } catch (const BudgetError& e) {
        qs.millis = t.millis();
        qs.status = StageReport::Status::Budget;
        qs.note = e.what();
        rep.stages.push_back(std::move(qs));
        finish(rep);
        return rep;
    }

    if (wants(opts, Stage::Ssg)) {
        PipelineReport tail = pipeline_from_ssg(qbf_to_ssg(q), opts);
        for (StageReport& st : tail.stages)
            rep.stages.push_back(std::move(st));
    }
    finish(rep);
    return rep;
}

PipelineReport pipeline_from_csa(const CsaAutomaton& a, const CsaState& target, Nat bound,
                                 const PipelineOptions& opts) {
    PipelineReport rep;

    StageReport cs;
    cs.name = "csa";
    cs.instance_digest = digest(csa_to_json(a));
    Timer t;
    bool cut = false;
    try {
        CsaReachOptions ropts;
        ropts.bound = bound;
        ropts.state_budget = opts.state_budget;
        CsaReachResult res = reach_csa(a, target, ropts);
        cs.millis = t.millis();
        if (res.bound_violation) {
            // The caller attested the bound; a state above it falsifies the
            // attestation, and the packed automaton would not be faithful.
            check(cs, false, "attested bound violated by a reachable state");
            cs.answer = "bound violated";
            cut = true;
        } else {
            cs.answer_bit = res.reachable;
            cs.answer = res.reachable ? "reachable" : "unreachable";
            if (res.reachable) {
                cs.witness_summary = "run of " +
                                     std::to_string(res.witness->transitions.size()) + " steps";
                check(cs, !replay_run(a, *res.witness).has_value(),
                      "witness run does not replay");
            }
        }
    } catch (const BudgetError& e) {
        cs.millis = t.millis();
        cs.status = StageReport::Status::Budget;
        cs.note = e.what();
        cut = true;
    }
    rep.stages.push_back(std::move(cs));

    if (!cut && wants(opts, Stage::Boca))
        rep.stages.push_back(boca_stage(a, target, bound, opts));
    finish(rep);
    return rep;
}

PipelineReport pipeline_from_boca(const BocaAutomaton& a, const BocaState& target,
                                  const PipelineOptions& opts) {
    PipelineReport rep;
    StageReport bs;
    bs.name = "boca";
    bs.instance_digest = digest(boca_to_json(a));
    Timer t;
    try {
        BocaReachOptions ropts;
        ropts.state_budget = opts.state_budget;
        BocaReachResult res = reach_boca(a, target, ropts);
        bs.millis = t.millis();
        bs.answer_bit = res.reachable;
        bs.answer = res.reachable ? "reachable" : "unreachable";
        if (res.reachable) {
            bs.witness_summary = "run of " + std::to_string(res.witness->transitions.size()) +
                                 " steps";
            check(bs, !replay_run(a, *res.witness).has_value(), "witness run does not replay");
        }
    } catch (const BudgetError& e) {
        bs.millis = t.millis();
        bs.status = StageReport::Status::Budget;
        bs.note = e.what();
    }
    rep.stages.push_back(std::move(bs));
    finish(rep);
    return rep;
}

nlohmann::json pipeline_report_to_json(const PipelineReport& r) {
    nlohmann::json stages = nlohmann::json::array();
    for (const StageReport& st : r.stages) {
        stages.push_back({{"stage", st.name},
                          {"status",
                           st.status == StageReport::Status::Answered ? "answered" : "budget"},
                          {"answer", st.answer},
                          {"digest", st.instance_digest},
                          {"millis", st.millis},
                          {"witness", st.witness_summary},
                          {"note", st.note}});
    }
    return {{"stages", std::move(stages)},
            {"agreement", r.agreement},
            {"budget_hit", r.budget_hit},
            {"first_disagreement", r.first_disagreement}};
}

std::string pipeline_report_to_text(const PipelineReport& r) {
    std::string out;
    for (const StageReport& st : r.stages) {
        out += "stage " + st.name;
        out.append(st.name.size() < 5 ? 5 - st.name.size() : 1, ' ');
        if (st.status == StageReport::Status::Budget)
            out += " budget-limited";
        else
            out += " answer=" + st.answer;
        char timing[48];
        std::snprintf(timing, sizeof timing, "  (%.2f ms)", st.millis);
        out += timing;
        if (!st.witness_summary.empty())
            out += "  witness: " + st.witness_summary;
        if (!st.note.empty())
            out += "\n      note: " + st.note;
        out += "\n";
    }
    if (r.budget_hit)
        out += "budget: a stage was cut short; deeper stages were skipped\n";
    out += "agreement: ";
    out += r.agreement ? "yes" : ("NO (" + r.first_disagreement + ")");
    out += "\n";
    return out;
}

int pipeline_exit_code(const PipelineReport& r) {
    if (!r.agreement)
        return 1;
    if (r.budget_hit)
        return 3;
    return 0;
}

} // namespace redchain
