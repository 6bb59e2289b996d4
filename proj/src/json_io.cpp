#include "redchain/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace redchain {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw ValidationError(what);
}

const json& field(const json& j, const char* key, const char* ctx) {
    if (!j.is_object())
        fail(std::string(ctx) + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(std::string(ctx) + ": missing field \"" + key + "\"");
    return *it;
}

Nat as_nat(const json& j, const char* ctx) {
    if (j.is_number_unsigned())
        return j.get<Nat>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return static_cast<Nat>(j.get<std::int64_t>());
    fail(std::string(ctx) + ": expected a non-negative integer");
}

std::int64_t as_int(const json& j, const char* ctx) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        fail(std::string(ctx) + ": expected an integer");
    if (j.is_number_unsigned() && j.get<Nat>() > Nat(INT64_MAX))
        fail(std::string(ctx) + ": integer out of range");
    return j.get<std::int64_t>();
}

std::string as_string(const json& j, const char* ctx) {
    if (!j.is_string())
        fail(std::string(ctx) + ": expected a string");
    return j.get<std::string>();
}

const json& as_array(const json& j, const char* ctx) {
    if (!j.is_array())
        fail(std::string(ctx) + ": expected an array");
    return j;
}

int resolve_location(const std::vector<std::string>& locations, const std::string& name,
                     const char* ctx) {
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i] == name)
            return static_cast<int>(i);
    fail(std::string(ctx) + ": unknown location \"" + name + "\"");
}

} // namespace

json ssg_to_json(const SsgInstance& g) {
    json rounds = json::array();
    for (const SsgRound& r : g.rounds)
        rounds.push_back({r.a, r.b, r.e, r.f});
    return {{"rounds", std::move(rounds)}, {"target", g.target}};
}

SsgInstance ssg_from_json(const json& j) {
    SsgInstance g;
    const json& rounds = as_array(field(j, "rounds", "game"), "game rounds");
    for (const json& r : rounds) {
        as_array(r, "game round");
        if (r.size() != 4)
            fail("game round: expected [A, B, E, F]");
        g.rounds.push_back({as_nat(r[0], "A"), as_nat(r[1], "B"), as_nat(r[2], "E"),
                            as_nat(r[3], "F")});
    }
    g.target = as_nat(field(j, "target", "game"), "game target");
    validate_ssg(g);
    return g;
}

json qbf_to_json(const Qbf3Cnf& q) {
    json prefix = json::array();
    for (const auto& [name, quant] : q.prefix)
        prefix.push_back({name, quant == Quant::Forall ? "forall" : "exists"});
    json clauses = json::array();
    for (const auto& cl : q.clauses) {
        json c = json::array();
        for (const QbfLit& lit : cl)
            c.push_back({q.prefix[static_cast<std::size_t>(lit.var)].first, lit.positive});
        clauses.push_back(std::move(c));
    }
    return {{"prefix", std::move(prefix)}, {"clauses", std::move(clauses)}};
}

Qbf3Cnf qbf_from_json(const json& j) {
    Qbf3Cnf q;
    for (const json& p : as_array(field(j, "prefix", "formula"), "formula prefix")) {
        as_array(p, "prefix entry");
        if (p.size() != 2)
            fail("prefix entry: expected [name, quantifier]");
        std::string quant = as_string(p[1], "quantifier");
        if (quant != "forall" && quant != "exists")
            fail("quantifier must be \"forall\" or \"exists\", got \"" + quant + "\"");
        q.prefix.emplace_back(as_string(p[0], "variable name"),
                              quant == "forall" ? Quant::Forall : Quant::Exists);
    }
    for (const json& c : as_array(field(j, "clauses", "formula"), "formula clauses")) {
        as_array(c, "clause");
        if (c.size() != 3)
            fail("clause: expected exactly three literals");
        std::array<QbfLit, 3> cl;
        for (int i = 0; i < 3; ++i) {
            as_array(c[i], "literal");
            if (c[i].size() != 2)
                fail("literal: expected [variable, sign]");
            std::string name = as_string(c[i][0], "literal variable");
            int var = -1;
            for (std::size_t v = 0; v < q.prefix.size(); ++v)
                if (q.prefix[v].first == name)
                    var = static_cast<int>(v);
            if (var < 0)
                fail("literal uses variable \"" + name + "\" missing from the prefix");
            if (!c[i][1].is_boolean())
                fail("literal sign: expected a boolean");
            cl[static_cast<std::size_t>(i)] = {var, c[i][1].get<bool>()};
        }
        q.clauses.push_back(cl);
    }
    validate_qbf(q);
    return q;
}

json csa_to_json(const CsaAutomaton& a) {
    json transitions = json::array();
    for (const CsaTransition& t : a.transitions) {
        json eq = json::object();
        for (const auto& [c, v] : t.eq)
            eq[std::to_string(c)] = v;
        json tj = {{"from", a.locations[static_cast<std::size_t>(t.from)]},
                   {"to", a.locations[static_cast<std::size_t>(t.to)]},
                   {"eq", std::move(eq)},
                   {"inc", t.inc},
                   {"resets", json::array()}};
        for (int c : t.resets)
            tj["resets"].push_back(c);
        transitions.push_back(std::move(tj));
    }
    return {{"locations", a.locations},
            {"k", a.k},
            {"initial", a.locations[static_cast<std::size_t>(a.initial)]},
            {"transitions", std::move(transitions)}};
}

CsaAutomaton csa_from_json(const json& j) {
    CsaAutomaton a;
    for (const json& l : as_array(field(j, "locations", "automaton"), "locations"))
        a.locations.push_back(as_string(l, "location"));
    if (a.locations.empty())
        fail("automaton has no locations");
    std::int64_t k = as_int(field(j, "k", "automaton"), "k");
    if (k < 1 || k > 4096)
        fail("counter count k outside [1, 4096]");
    a.k = static_cast<int>(k);
    a.initial = resolve_location(a.locations, as_string(field(j, "initial", "automaton"),
                                                        "initial"),
                                 "initial");
    for (const json& tj : as_array(field(j, "transitions", "automaton"), "transitions")) {
        CsaTransition t;
        t.from = resolve_location(a.locations, as_string(field(tj, "from", "transition"),
                                                         "from"),
                                  "transition");
        t.to = resolve_location(a.locations, as_string(field(tj, "to", "transition"), "to"),
                                "transition");
        const json& eq = field(tj, "eq", "transition");
        if (!eq.is_object())
            fail("transition eq: expected an object");
        for (const auto& [key, val] : eq.items()) {
            int c = 0;
            try {
                std::size_t pos = 0;
                c = std::stoi(key, &pos);
                if (pos != key.size())
                    throw std::invalid_argument(key);
            } catch (const std::exception&) {
                fail("transition eq: key \"" + key + "\" is not a counter index");
            }
            if (c < 1 || c > a.k)
                fail("transition eq: counter " + std::to_string(c) + " outside [1, " +
                     std::to_string(a.k) + "]");
            t.eq[c] = as_nat(val, "transition eq value");
        }
        for (const json& iv : as_array(field(tj, "inc", "transition"), "transition inc"))
            t.inc.push_back(as_nat(iv, "transition inc value"));
        if (static_cast<int>(t.inc.size()) != a.k)
            fail("transition inc: expected " + std::to_string(a.k) + " entries, got " +
                 std::to_string(t.inc.size()));
        for (const json& rv : as_array(field(tj, "resets", "transition"), "transition resets")) {
            std::int64_t c = as_int(rv, "reset counter");
            if (c < 1 || c > a.k)
                fail("transition resets: counter " + std::to_string(c) + " outside [1, " +
                     std::to_string(a.k) + "]");
            t.resets.insert(static_cast<int>(c));
        }
        a.transitions.push_back(std::move(t));
    }
    return a;
}

json boca_to_json(const BocaAutomaton& a) {
    json transitions = json::array();
    for (const BocaTransition& t : a.transitions)
        transitions.push_back({{"from", a.locations[static_cast<std::size_t>(t.from)]},
                               {"to", a.locations[static_cast<std::size_t>(t.to)]},
                               {"p", t.p},
                               {"g1", t.g1},
                               {"g2", t.g2}});
    return {{"locations", a.locations},
            {"bound", a.bound},
            {"initial", a.locations[static_cast<std::size_t>(a.initial)]},
            {"transitions", std::move(transitions)}};
}

BocaAutomaton boca_from_json(const json& j) {
    BocaAutomaton a;
    for (const json& l : as_array(field(j, "locations", "automaton"), "locations"))
        a.locations.push_back(as_string(l, "location"));
    if (a.locations.empty())
        fail("automaton has no locations");
    a.bound = as_nat(field(j, "bound", "automaton"), "bound");
    a.initial = resolve_location(a.locations, as_string(field(j, "initial", "automaton"),
                                                        "initial"),
                                 "initial");
    for (const json& tj : as_array(field(j, "transitions", "automaton"), "transitions")) {
        BocaTransition t;
        t.from = resolve_location(a.locations, as_string(field(tj, "from", "transition"),
                                                         "from"),
                                  "transition");
        t.to = resolve_location(a.locations, as_string(field(tj, "to", "transition"), "to"),
                                "transition");
        t.p = as_int(field(tj, "p", "transition"), "transition p");
        t.g1 = as_nat(field(tj, "g1", "transition"), "transition g1");
        t.g2 = as_nat(field(tj, "g2", "transition"), "transition g2");
        a.transitions.push_back(t);
    }
    return a;
}

json csa_run_to_json(const CsaAutomaton& a, const CsaRun& r) {
    json states = json::array();
    for (const CsaState& s : r.states) {
        if (s.location < 0 || s.location >= static_cast<int>(a.locations.size()))
            fail("run state location index out of range");
        states.push_back({{"location", a.locations[static_cast<std::size_t>(s.location)]},
                          {"counters", s.counters}});
    }
    return {{"states", std::move(states)}, {"transitions", r.transitions}};
}

CsaRun csa_run_from_json(const CsaAutomaton& a, const json& j) {
    CsaRun r;
    for (const json& sj : as_array(field(j, "states", "run"), "run states")) {
        CsaState s;
        s.location = resolve_location(a.locations,
                                      as_string(field(sj, "location", "run state"), "location"),
                                      "run state");
        for (const json& c : as_array(field(sj, "counters", "run state"), "counters"))
            s.counters.push_back(as_nat(c, "counter value"));
        r.states.push_back(std::move(s));
    }
    for (const json& t : as_array(field(j, "transitions", "run"), "run transitions"))
        r.transitions.push_back(static_cast<int>(as_int(t, "transition index")));
    return r;
}

json boca_run_to_json(const BocaAutomaton& a, const BocaRun& r) {
    json states = json::array();
    for (const BocaState& s : r.states) {
        if (s.location < 0 || s.location >= static_cast<int>(a.locations.size()))
            fail("run state location index out of range");
        states.push_back({{"location", a.locations[static_cast<std::size_t>(s.location)]},
                          {"c", s.c}});
    }
    return {{"states", std::move(states)}, {"transitions", r.transitions}};
}

BocaRun boca_run_from_json(const BocaAutomaton& a, const json& j) {
    BocaRun r;
    for (const json& sj : as_array(field(j, "states", "run"), "run states")) {
        BocaState s;
        s.location = resolve_location(a.locations,
                                      as_string(field(sj, "location", "run state"), "location"),
                                      "run state");
        s.c = as_nat(field(sj, "c", "run state"), "counter value");
        r.states.push_back(s);
    }
    for (const json& t : as_array(field(j, "transitions", "run"), "run transitions"))
        r.transitions.push_back(static_cast<int>(as_int(t, "transition index")));
    return r;
}

json strategy_to_json(const Strategy& s) {
    json maps = json::array();
    for (const auto& m : s.maps)
        maps.push_back(m);
    return {{"maps", std::move(maps)}};
}

Strategy strategy_from_json(const json& j) {
    Strategy s;
    for (const json& mj : as_array(field(j, "maps", "strategy"), "strategy maps")) {
        std::vector<std::uint8_t> m;
        for (const json& v : as_array(mj, "strategy map")) {
            std::int64_t pick = as_int(v, "strategy pick");
            if (pick != 0 && pick != 1)
                fail("strategy pick must be 0 or 1");
            m.push_back(static_cast<std::uint8_t>(pick));
        }
        s.maps.push_back(std::move(m));
    }
    return s;
}

json built_csa_meta_to_json(const BuiltCsa& b) {
    return {{"n", b.layout.n},
            {"k", b.aut.k},
            {"target",
             {{"location", b.aut.locations[static_cast<std::size_t>(b.target.location)]},
              {"counters", b.target.counters}}},
            {"analytic_bound", b.analytic_bound},
            {"counter_bounds", b.counter_bounds},
            {"counter_names", b.counter_names}};
}

json packing_meta_to_json(const CsaAutomaton& a, const PackingScheme& s) {
    (void)a;
    return {{"k", s.k},
            {"n_bits", s.n_bits},
            {"per_counter_bound", s.per_counter_bound()},
            {"packed_bound", s.packed_bound()}};
}

std::string canonical_dump(const json& j) {
    return j.dump(2) + "\n";
}

std::string digest(const json& j) {
    std::uint64_t h = fnv1a64(canonical_dump(j));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        fail("input is not valid JSON");
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        fail("cannot open " + path + " for writing");
    out << text;
    if (!out)
        fail("write to " + path + " failed");
}

Qbf3Cnf parse_qdimacs(std::istream& in) {
    Qbf3Cnf q;
    int declared_vars = -1;
    std::vector<std::pair<int, Quant>> quantified; // in line order
    std::vector<std::array<int, 3>> raw_clauses;

    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c")
            continue;
        if (tok == "p") {
            std::string fmt;
            int nv = 0, nc = 0;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 1)
                fail("bad problem line: " + line);
            declared_vars = nv;
            continue;
        }
        if (tok == "a" || tok == "e") {
            Quant quant = tok == "a" ? Quant::Forall : Quant::Exists;
            int v = 0;
            while (ls >> v && v != 0)
                quantified.emplace_back(v, quant);
            continue;
        }
        // clause line; the first token is already a literal
        std::vector<int> lits;
        int lit = 0;
        try {
            std::size_t pos = 0;
            lit = std::stoi(tok, &pos);
            if (pos != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            fail("unrecognized line: " + line);
        }
        while (lit != 0) {
            lits.push_back(lit);
            if (!(ls >> lit))
                fail("clause line not terminated by 0: " + line);
        }
        if (lits.size() != 3)
            fail("clause has " + std::to_string(lits.size()) + " literals, expected 3: " + line);
        raw_clauses.push_back({lits[0], lits[1], lits[2]});
    }
    if (declared_vars < 0)
        fail("missing \"p cnf\" problem line");

    // Unquantified variables become outermost existentials, in numeric order.
    std::vector<bool> seen(static_cast<std::size_t>(declared_vars) + 1, false);
    for (const auto& [v, quant] : quantified) {
        (void)quant;
        if (v < 1 || v > declared_vars)
            fail("quantified variable " + std::to_string(v) + " outside [1, " +
                 std::to_string(declared_vars) + "]");
        if (seen[static_cast<std::size_t>(v)])
            fail("variable " + std::to_string(v) + " quantified twice");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<std::pair<int, Quant>> order;
    for (int v = 1; v <= declared_vars; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            order.emplace_back(v, Quant::Exists);
    order.insert(order.end(), quantified.begin(), quantified.end());

    std::vector<int> var_pos(static_cast<std::size_t>(declared_vars) + 1, -1);
    for (const auto& [v, quant] : order) {
        var_pos[static_cast<std::size_t>(v)] = static_cast<int>(q.prefix.size());
        q.prefix.emplace_back("x" + std::to_string(v), quant);
    }
    for (const auto& cl : raw_clauses) {
        std::array<QbfLit, 3> out;
        for (int i = 0; i < 3; ++i) {
            int lit = cl[static_cast<std::size_t>(i)];
            int v = lit < 0 ? -lit : lit;
            if (v < 1 || v > declared_vars)
                fail("literal " + std::to_string(lit) + " outside the declared variables");
            out[static_cast<std::size_t>(i)] = {var_pos[static_cast<std::size_t>(v)], lit > 0};
        }
        q.clauses.push_back(out);
    }
    validate_qbf(q);
    return q;
}

Qbf3Cnf load_qdimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail("cannot open " + path);
    return parse_qdimacs(in);
}

} // namespace redchain
