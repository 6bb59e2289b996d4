#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "redchain/dot.hpp"
#include "redchain/gen.hpp"
#include "redchain/json_io.hpp"
#include "redchain/pipeline.hpp"

using namespace redchain;

namespace {

Nat default_state_budget() {
    if (const char* env = std::getenv("REDCHAIN_STATE_BUDGET")) {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(env, &pos);
            if (pos == std::string(env).size() && v > 0)
                return static_cast<Nat>(v);
        } catch (const std::exception&) {
        }
        throw ValidationError("REDCHAIN_STATE_BUDGET is not a positive integer");
    }
    return 50'000'000;
}

std::vector<Nat> parse_counter_list(const std::string& text) {
    std::vector<Nat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument(item);
            out.push_back(static_cast<Nat>(v));
        } catch (const std::exception&) {
            throw ValidationError("bad counter value \"" + item + "\" in list");
        }
    }
    return out;
}

CsaState parse_csa_target(const CsaAutomaton& a, const std::string& loc,
                          const std::string& counters) {
    CsaState target;
    int idx = a.location_index(loc);
    if (idx < 0)
        throw ValidationError("target location \"" + loc + "\" is not in the automaton");
    target.location = idx;
    if (counters.empty())
        target.counters.assign(static_cast<std::size_t>(a.k), 0);
    else
        target.counters = parse_counter_list(counters);
    if (static_cast<int>(target.counters.size()) != a.k)
        throw ValidationError("target has " + std::to_string(target.counters.size()) +
                              " counters, automaton has " + std::to_string(a.k));
    return target;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

struct CommonSolveArgs {
    std::string in, format = "text";
    Nat state_budget = 0; // 0 = take the default
};

Nat budget_of(const CommonSolveArgs& args) {
    return args.state_budget ? args.state_budget : default_state_budget();
}

int run_solve_qbf(const std::string& in, const std::string& qdimacs, const std::string& format,
                  int max_vars) {
    Qbf3Cnf q = qdimacs.empty() ? qbf_from_json(load_json_file(in))
                                : load_qdimacs_file(qdimacs);
    QbfEvalOptions opts;
    opts.max_vars = max_vars;
    bool truth = eval_qbf(q, opts);
    if (format == "json")
        std::cout << canonical_dump(json{{"true", truth}});
    else
        std::cout << (truth ? "true" : "false") << "\n";
    return 0;
}

int run_solve_ssg(const CommonSolveArgs& args, int max_rounds, bool no_strategy) {
    SsgInstance g = ssg_from_json(load_json_file(args.in));
    SsgSolveOptions opts;
    opts.max_rounds = max_rounds;
    opts.want_strategy = !no_strategy;
    SsgSolveResult res = solve_ssg(g, opts);
    bool ex = res.winner == Winner::Existential;
    if (args.format == "json") {
        json j{{"winner", ex ? "existential" : "universal"}};
        if (res.strategy)
            j["strategy"] = strategy_to_json(*res.strategy);
        std::cout << canonical_dump(j);
    } else {
        std::cout << "winner: " << (ex ? "existential" : "universal") << "\n";
        if (res.strategy)
            std::cout << "strategy: " << strategy_to_json(*res.strategy)["maps"].dump()
                      << "\n";
    }
    return 0;
}

int run_solve_csa(const CommonSolveArgs& args, const std::string& target_loc,
                  const std::string& target_counters, std::optional<Nat> bound) {
    CsaAutomaton a = csa_from_json(load_json_file(args.in));
    CsaState target = parse_csa_target(a, target_loc, target_counters);
    CsaReachOptions opts;
    opts.bound = bound;
    opts.state_budget = budget_of(args);
    CsaReachResult res = reach_csa(a, target, opts);

    if (args.format == "json") {
        json j{{"reachable", res.reachable}, {"states_explored", res.states_explored}};
        if (res.witness)
            j["witness"] = csa_run_to_json(a, *res.witness);
        if (res.bound_violation)
            j["bound_violation"] = csa_run_to_json(a, CsaRun{{*res.bound_violation}, {}});
        std::cout << canonical_dump(j);
    } else {
        if (res.bound_violation)
            std::cout << "bound violated at location "
                      << a.locations[static_cast<std::size_t>(res.bound_violation->location)]
                      << "\n";
        else
            std::cout << (res.reachable ? "reachable" : "unreachable") << " ("
                      << res.states_explored << " states explored)\n";
        if (res.witness)
            std::cout << "witness: " << res.witness->transitions.size() << " steps\n";
    }
    return res.bound_violation ? 1 : 0;
}

int run_solve_boca(const CommonSolveArgs& args, const std::string& target_loc,
                   Nat target_value) {
    BocaAutomaton a = boca_from_json(load_json_file(args.in));
    int idx = a.location_index(target_loc);
    if (idx < 0)
        throw ValidationError("target location \"" + target_loc +
                              "\" is not in the automaton");
    BocaState target{idx, target_value};
    BocaReachOptions opts;
    opts.state_budget = budget_of(args);
    BocaReachResult res = reach_boca(a, target, opts);
    if (args.format == "json") {
        json j{{"reachable", res.reachable}, {"states_explored", res.states_explored}};
        if (res.witness)
            j["witness"] = boca_run_to_json(a, *res.witness);
        std::cout << canonical_dump(j);
    } else {
        std::cout << (res.reachable ? "reachable" : "unreachable") << " ("
                  << res.states_explored << " states explored)\n";
        if (res.witness)
            std::cout << "witness: " << res.witness->transitions.size() << " steps\n";
    }
    return 0;
}

std::string meta_path_for(const std::string& out, const std::string& meta) {
    if (!meta.empty())
        return meta;
    if (out.empty())
        return "";
    return out + ".meta.json";
}

int run_reduce_qbf_to_ssg(const std::string& in, const std::string& qdimacs,
                          const std::string& out) {
    Qbf3Cnf q = qdimacs.empty() ? qbf_from_json(load_json_file(in))
                                : load_qdimacs_file(qdimacs);
    emit(out, canonical_dump(ssg_to_json(qbf_to_ssg(q))));
    return 0;
}

int run_reduce_ssg_to_csa(const std::string& in, const std::string& out,
                          const std::string& meta) {
    SsgInstance g = ssg_from_json(load_json_file(in));
    BuiltCsa built = build_full_automaton(g);
    json meta_j = built_csa_meta_to_json(built);
    if (out.empty()) {
        std::cout << canonical_dump(
            json{{"automaton", csa_to_json(built.aut)}, {"meta", meta_j}});
    } else {
        write_text_file(out, canonical_dump(csa_to_json(built.aut)));
        write_text_file(meta_path_for(out, meta), canonical_dump(meta_j));
    }
    return 0;
}

int run_reduce_csa_to_boca(const std::string& in, const std::string& out,
                           const std::string& meta, Nat bound) {
    CsaAutomaton a = csa_from_json(load_json_file(in));
    CsaToBocaResult packed = csa_to_boca(a, bound);
    json meta_j = packing_meta_to_json(a, packed.scheme);
    if (out.empty()) {
        std::cout << canonical_dump(
            json{{"automaton", boca_to_json(packed.aut)}, {"meta", meta_j}});
    } else {
        write_text_file(out, canonical_dump(boca_to_json(packed.aut)));
        write_text_file(meta_path_for(out, meta), canonical_dump(meta_j));
    }
    return 0;
}

int run_pipeline(const std::string& qbf_in, const std::string& ssg_in,
                 const std::string& csa_in, const std::string& boca_in,
                 const std::string& target_loc, const std::string& target_counters,
                 Nat target_value, std::optional<Nat> bound, const std::string& to,
                 const std::string& format, Nat state_budget) {
    PipelineOptions opts;
    opts.state_budget = state_budget ? state_budget : default_state_budget();
    if (to == "qbf")
        opts.stop_after = Stage::Qbf;
    else if (to == "ssg")
        opts.stop_after = Stage::Ssg;
    else if (to == "csa")
        opts.stop_after = Stage::Csa;
    else if (to == "boca" || to.empty())
        opts.stop_after = Stage::Boca;
    else
        throw ValidationError("--to must be one of qbf, ssg, csa, boca");

    PipelineReport rep;
    if (!qbf_in.empty()) {
        rep = pipeline_from_qbf(qbf_from_json(load_json_file(qbf_in)), opts);
    } else if (!ssg_in.empty()) {
        rep = pipeline_from_ssg(ssg_from_json(load_json_file(ssg_in)), opts);
    } else if (!csa_in.empty()) {
        if (!bound)
            throw ValidationError("pipeline from a counter-stack automaton needs --bound");
        CsaAutomaton a = csa_from_json(load_json_file(csa_in));
        rep = pipeline_from_csa(a, parse_csa_target(a, target_loc, target_counters), *bound,
                                opts);
    } else if (!boca_in.empty()) {
        BocaAutomaton a = boca_from_json(load_json_file(boca_in));
        int idx = a.location_index(target_loc);
        if (idx < 0)
            throw ValidationError("target location \"" + target_loc +
                                  "\" is not in the automaton");
        rep = pipeline_from_boca(a, BocaState{idx, target_value}, opts);
    } else {
        throw ValidationError("pipeline needs one of --qbf, --ssg, --csa, --boca");
    }

    if (format == "json")
        std::cout << canonical_dump(pipeline_report_to_json(rep));
    else
        std::cout << pipeline_report_to_text(rep);
    return pipeline_exit_code(rep);
}

int run_validate(const std::string& qbf_in, const std::string& ssg_in,
                 const std::string& csa_in, const std::string& boca_in) {
    if (!qbf_in.empty()) {
        validate_qbf(qbf_from_json(load_json_file(qbf_in))); // throws on problems
        std::cout << "ok\n";
        return 0;
    }
    if (!ssg_in.empty()) {
        validate_ssg(ssg_from_json(load_json_file(ssg_in)));
        std::cout << "ok\n";
        return 0;
    }
    if (!csa_in.empty()) {
        CsaDiagnostics d = validate_csa(csa_from_json(load_json_file(csa_in)));
        for (const std::string& w : d.warnings)
            std::cout << "warning: " << w << "\n";
        if (!d.ok()) {
            for (const std::string& v : d.violations)
                std::cerr << "violation: " << v << "\n";
            return 2;
        }
        std::cout << "ok\n";
        return 0;
    }
    if (!boca_in.empty()) {
        BocaDiagnostics d = validate_boca(boca_from_json(load_json_file(boca_in)));
        if (!d.ok()) {
            for (const std::string& v : d.violations)
                std::cerr << "violation: " << v << "\n";
            return 2;
        }
        std::cout << "ok\n";
        return 0;
    }
    throw ValidationError("validate needs one of --qbf, --ssg, --csa, --boca");
}

int run_witness_replay_csa(const std::string& aut_in, const std::string& run_in) {
    CsaAutomaton a = csa_from_json(load_json_file(aut_in));
    CsaRun r = csa_run_from_json(a, load_json_file(run_in));
    if (auto bad = replay_run(a, r)) {
        std::cerr << "invalid at step " << *bad << "\n";
        return 1;
    }
    std::cout << "ok (" << r.transitions.size() << " steps)\n";
    return 0;
}

int run_witness_replay_boca(const std::string& aut_in, const std::string& run_in) {
    BocaAutomaton a = boca_from_json(load_json_file(aut_in));
    BocaRun r = boca_run_from_json(a, load_json_file(run_in));
    if (auto bad = replay_run(a, r)) {
        std::cerr << "invalid at step " << *bad << "\n";
        return 1;
    }
    std::cout << "ok (" << r.transitions.size() << " steps)\n";
    return 0;
}

int run_witness_lift(const std::string& csa_in, Nat bound, const std::string& run_in,
                     const std::string& out) {
    CsaAutomaton a = csa_from_json(load_json_file(csa_in));
    CsaToBocaResult packed = csa_to_boca(a, bound);
    BocaRun br = boca_run_from_json(packed.aut, load_json_file(run_in));
    CsaRun lifted = lift_boca_run(a, packed.scheme, br);
    if (auto bad = replay_run(a, lifted)) {
        std::cerr << "lifted run invalid at step " << *bad << "\n";
        return 1;
    }
    emit(out, canonical_dump(csa_run_to_json(a, lifted)));
    return 0;
}

int run_export_dot(const std::string& in, const std::string& out, bool compact) {
    json j = load_json_file(in);
    DotOptions opts;
    opts.compact = compact;
    if (j.contains("k"))
        emit(out, export_dot(csa_from_json(j), opts));
    else if (j.contains("bound"))
        emit(out, export_dot(boca_from_json(j), opts));
    else
        throw ValidationError("input is neither a counter-stack nor a one-counter automaton");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers and reductions for subset-sum games and bounded counter"
                 " automata"};
    app.require_subcommand(1);

    // solve-qbf
    auto* sq = app.add_subcommand("solve-qbf", "Evaluate a quantified 3-CNF formula");
    std::string sq_in, sq_qdimacs, sq_format = "text";
    int sq_max_vars = 20;
    sq->add_option("--in", sq_in, "formula JSON");
    sq->add_option("--qdimacs", sq_qdimacs, "formula in QDIMACS-like text");
    sq->add_option("--format", sq_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sq->add_option("--max-vars", sq_max_vars, "variable budget (default 20)");

    // solve-ssg
    auto* ss = app.add_subcommand("solve-ssg", "Solve a subset-sum game exactly");
    CommonSolveArgs ss_args;
    int ss_max_rounds = 20;
    bool ss_no_strategy = false;
    ss->add_option("--in", ss_args.in, "game JSON")->required();
    ss->add_option("--format", ss_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    ss->add_option("--max-rounds", ss_max_rounds, "round budget (default 20)");
    ss->add_flag("--no-strategy", ss_no_strategy, "report only the winner");

    // solve-csa
    auto* sc = app.add_subcommand("solve-csa", "Reachability in a counter-stack automaton");
    CommonSolveArgs sc_args;
    std::string sc_target_loc, sc_target_counters;
    std::optional<Nat> sc_bound;
    sc->add_option("--in", sc_args.in, "automaton JSON")->required();
    sc->add_option("--target-loc", sc_target_loc, "target location name")->required();
    sc->add_option("--target-counters", sc_target_counters,
                   "comma-separated target counters (default all zeros)");
    sc->add_option("--bound", sc_bound, "abort when any counter exceeds this");
    sc->add_option("--state-budget", sc_args.state_budget,
                   "visited-state cap (default 5e7, env REDCHAIN_STATE_BUDGET)");
    sc->add_option("--format", sc_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // solve-boca
    auto* sb = app.add_subcommand("solve-boca", "Reachability in a bounded one-counter"
                                                " automaton");
    CommonSolveArgs sb_args;
    std::string sb_target_loc;
    Nat sb_target_value = 0;
    sb->add_option("--in", sb_args.in, "automaton JSON")->required();
    sb->add_option("--target-loc", sb_target_loc, "target location name")->required();
    sb->add_option("--target-value", sb_target_value, "target counter value (default 0)");
    sb->add_option("--state-budget", sb_args.state_budget, "visited-state cap");
    sb->add_option("--format", sb_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // reduce
    auto* red = app.add_subcommand("reduce", "Run one reduction step");
    red->require_subcommand(1);
    auto* rq = red->add_subcommand("qbf-to-ssg", "Formula to subset-sum game");
    std::string rq_in, rq_qdimacs, rq_out;
    rq->add_option("--in", rq_in, "formula JSON");
    rq->add_option("--qdimacs", rq_qdimacs, "formula in QDIMACS-like text");
    rq->add_option("--out", rq_out, "output path (default stdout)");
    auto* rs = red->add_subcommand("ssg-to-csa", "Game to counter-stack automaton");
    std::string rs_in, rs_out, rs_meta;
    rs->add_option("--in", rs_in, "game JSON")->required();
    rs->add_option("--out", rs_out, "automaton output path (default stdout, combined)");
    rs->add_option("--meta", rs_meta, "sidecar path (default <out>.meta.json)");
    auto* rb = red->add_subcommand("csa-to-boca", "Pack counters into one");
    std::string rb_in, rb_out, rb_meta;
    Nat rb_bound = 0;
    rb->add_option("--in", rb_in, "automaton JSON")->required();
    rb->add_option("--bound", rb_bound, "attested counter bound")->required();
    rb->add_option("--out", rb_out, "output path (default stdout, combined)");
    rb->add_option("--meta", rb_meta, "sidecar path (default <out>.meta.json)");

    // pipeline
    auto* pl = app.add_subcommand("pipeline", "Chain the reductions and cross-check answers");
    std::string pl_qbf, pl_ssg, pl_csa, pl_boca, pl_target_loc, pl_target_counters;
    std::string pl_to, pl_format = "text";
    Nat pl_target_value = 0, pl_budget = 0;
    std::optional<Nat> pl_bound;
    pl->add_option("--qbf", pl_qbf, "start from a formula JSON");
    pl->add_option("--ssg", pl_ssg, "start from a game JSON");
    pl->add_option("--csa", pl_csa, "start from a counter-stack automaton JSON");
    pl->add_option("--boca", pl_boca, "start from a one-counter automaton JSON");
    pl->add_option("--target-loc", pl_target_loc, "target location (csa/boca inputs)");
    pl->add_option("--target-counters", pl_target_counters, "target counters (csa input)");
    pl->add_option("--target-value", pl_target_value, "target counter value (boca input)");
    pl->add_option("--bound", pl_bound, "attested counter bound (csa input)");
    pl->add_option("--to", pl_to, "stop after this stage: qbf, ssg, csa, boca");
    pl->add_option("--state-budget", pl_budget, "visited-state cap");
    pl->add_option("--format", pl_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // validate
    auto* va = app.add_subcommand("validate", "Check an input file");
    std::string va_qbf, va_ssg, va_csa, va_boca;
    va->add_option("--qbf", va_qbf, "formula JSON");
    va->add_option("--ssg", va_ssg, "game JSON");
    va->add_option("--csa", va_csa, "counter-stack automaton JSON");
    va->add_option("--boca", va_boca, "one-counter automaton JSON");

    // witness
    auto* wi = app.add_subcommand("witness", "Replay and lift runs");
    wi->require_subcommand(1);
    auto* wrc = wi->add_subcommand("replay-csa", "Replay a counter-stack run");
    std::string wrc_aut, wrc_run;
    wrc->add_option("--aut", wrc_aut, "automaton JSON")->required();
    wrc->add_option("--run", wrc_run, "run JSON")->required();
    auto* wrb = wi->add_subcommand("replay-boca", "Replay a one-counter run");
    std::string wrb_aut, wrb_run;
    wrb->add_option("--aut", wrb_aut, "automaton JSON")->required();
    wrb->add_option("--run", wrb_run, "run JSON")->required();
    auto* wl = wi->add_subcommand("lift", "Lift a packed run back to counter-stack form");
    std::string wl_csa, wl_run, wl_out;
    Nat wl_bound = 0;
    wl->add_option("--csa", wl_csa, "counter-stack automaton JSON")->required();
    wl->add_option("--bound", wl_bound, "attested counter bound used when packing")
        ->required();
    wl->add_option("--run", wl_run, "packed run JSON")->required();
    wl->add_option("--out", wl_out, "output path (default stdout)");

    // export-dot
    auto* ed = app.add_subcommand("export-dot", "Render an automaton as Graphviz");
    std::string ed_in, ed_out;
    bool ed_compact = false;
    ed->add_option("--in", ed_in, "automaton JSON")->required();
    ed->add_option("--out", ed_out, "output path (default stdout)");
    ed->add_flag("--compact", ed_compact, "drop zero-valued equality tests from labels");

    // gen
    auto* ge = app.add_subcommand("gen", "Seeded instance generators");
    ge->require_subcommand(1);
    auto* gs = ge->add_subcommand("ssg", "Random subset-sum game");
    GenSsgParams gs_params;
    std::string gs_out;
    gs->add_option("--n", gs_params.n, "rounds (default 2)");
    gs->add_option("--max", gs_params.max_number, "largest number (default 7)");
    gs->add_flag("--winnable", gs_params.winnable, "arrange an existential win");
    gs->add_option("--seed", gs_params.seed, "seed (default 0)");
    gs->add_option("--out", gs_out, "output path (default stdout)");
    auto* gq = ge->add_subcommand("qbf", "Random quantified 3-CNF formula");
    GenQbfParams gq_params;
    std::string gq_out;
    gq->add_option("--vars", gq_params.vars, "variables (default 3)");
    gq->add_option("--clauses", gq_params.clauses, "clauses (default 4)");
    gq->add_option("--seed", gq_params.seed, "seed (default 0)");
    gq->add_option("--out", gq_out, "output path (default stdout)");
    auto* gc = ge->add_subcommand("csa", "Random counter-stack automaton");
    GenCsaParams gc_params;
    std::string gc_out;
    gc->add_option("--locations", gc_params.locations, "locations (default 4)");
    gc->add_option("--counters", gc_params.k, "counters (default 3)");
    gc->add_option("--transitions", gc_params.transitions, "transitions (default 8)");
    gc->add_option("--max-const", gc_params.max_const, "largest constant (default 3)");
    gc->add_option("--seed", gc_params.seed, "seed (default 0)");
    gc->add_option("--out", gc_out, "output path (default stdout)");
    auto* gb = ge->add_subcommand("boca", "Random bounded one-counter automaton");
    GenBocaParams gb_params;
    std::string gb_out;
    gb->add_option("--locations", gb_params.locations, "locations (default 4)");
    gb->add_option("--bound", gb_params.bound, "counter bound (default 15)");
    gb->add_option("--transitions", gb_params.transitions, "transitions (default 10)");
    gb->add_option("--seed", gb_params.seed, "seed (default 0)");
    gb->add_option("--out", gb_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);

        if (*sq) {
            if (sq_in.empty() == sq_qdimacs.empty())
                throw ValidationError("solve-qbf needs exactly one of --in, --qdimacs");
            return run_solve_qbf(sq_in, sq_qdimacs, sq_format, sq_max_vars);
        }
        if (*ss)
            return run_solve_ssg(ss_args, ss_max_rounds, ss_no_strategy);
        if (*sc)
            return run_solve_csa(sc_args, sc_target_loc, sc_target_counters, sc_bound);
        if (*sb)
            return run_solve_boca(sb_args, sb_target_loc, sb_target_value);
        if (*rq) {
            if (rq_in.empty() == rq_qdimacs.empty())
                throw ValidationError("qbf-to-ssg needs exactly one of --in, --qdimacs");
            return run_reduce_qbf_to_ssg(rq_in, rq_qdimacs, rq_out);
        }
        if (*rs)
            return run_reduce_ssg_to_csa(rs_in, rs_out, rs_meta);
        if (*rb)
            return run_reduce_csa_to_boca(rb_in, rb_out, rb_meta, rb_bound);
        if (*pl)
            return run_pipeline(pl_qbf, pl_ssg, pl_csa, pl_boca, pl_target_loc,
                                pl_target_counters, pl_target_value, pl_bound, pl_to,
                                pl_format, pl_budget);
        if (*va)
            return run_validate(va_qbf, va_ssg, va_csa, va_boca);
        if (*wrc)
            return run_witness_replay_csa(wrc_aut, wrc_run);
        if (*wrb)
            return run_witness_replay_boca(wrb_aut, wrb_run);
        if (*wl)
            return run_witness_lift(wl_csa, wl_bound, wl_run, wl_out);
        if (*ed)
            return run_export_dot(ed_in, ed_out, ed_compact);
        if (*gs)
            return static_cast<int>(
                (emit(gs_out, canonical_dump(ssg_to_json(gen_ssg(gs_params)))), 0));
        if (*gq)
            return static_cast<int>(
                (emit(gq_out, canonical_dump(qbf_to_json(gen_qbf(gq_params)))), 0));
        if (*gc)
            return static_cast<int>(
                (emit(gc_out, canonical_dump(csa_to_json(gen_csa(gc_params)))), 0));
        if (*gb)
            return static_cast<int>(
                (emit(gb_out, canonical_dump(boca_to_json(gen_boca(gb_params)))), 0));
        throw ValidationError("no subcommand selected");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
