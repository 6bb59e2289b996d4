#include "redchain/csa2boca.hpp"

#include <bit>

namespace redchain {

namespace {

PackingScheme make_scheme(int k, Nat bound) {
    PackingScheme s;
    s.k = k;
    s.n_bits = std::max(1, static_cast<int>(std::bit_width(bound)));
    if (k * s.n_bits > 62)
        throw BudgetError("packing " + std::to_string(k) + " counters bounded by " +
                          std::to_string(bound) + " needs " + std::to_string(k * s.n_bits) +
                          " bits; only 62 are supported");
    return s;
}

} // namespace

Nat enc(Nat x, int i, const PackingScheme& scheme) {
    if (i < 1 || i > scheme.k)
        throw ValidationError("counter index " + std::to_string(i) + " outside [1, " +
                              std::to_string(scheme.k) + "]");
    if (x > scheme.per_counter_bound())
        throw ValidationError("value " + std::to_string(x) + " does not fit a " +
                              std::to_string(scheme.n_bits) + "-bit counter field");
    return x << ((i - 1) * scheme.n_bits);
}

BocaState translate_state(const CsaState& s, const PackingScheme& scheme) {
    if (static_cast<int>(s.counters.size()) != scheme.k)
        throw ValidationError("state has " + std::to_string(s.counters.size()) +
                              " counters, packing expects " + std::to_string(scheme.k));
    BocaState out;
    out.location = s.location;
    out.c = 0;
    for (int i = 1; i <= scheme.k; ++i)
        out.c += enc(s.counters[static_cast<std::size_t>(i - 1)], i, scheme);
    return out;
}

std::vector<Nat> unpack(Nat c, const PackingScheme& scheme) {
    if (c > scheme.packed_bound())
        throw ValidationError("packed value " + std::to_string(c) + " exceeds the packed bound");
    std::vector<Nat> out(static_cast<std::size_t>(scheme.k), 0);
    Nat mask = scheme.per_counter_bound();
    for (int i = 1; i <= scheme.k; ++i)
        out[static_cast<std::size_t>(i - 1)] = (c >> ((i - 1) * scheme.n_bits)) & mask;
    return out;
}

CsaToBocaResult csa_to_boca(const CsaAutomaton& a, Nat bound) {
    require_valid_csa(a);
    CsaToBocaResult res;
    res.scheme = make_scheme(a.k, bound);
    const PackingScheme& sch = res.scheme;

    res.aut.locations = a.locations;
    res.aut.bound = sch.packed_bound();
    res.aut.initial = a.initial;

    for (std::size_t ti = 0; ti < a.transitions.size(); ++ti) {
        const CsaTransition& t = a.transitions[ti];
        BocaTransition out;
        out.from = t.from;
        out.to = t.to;

        // Delta: increments of surviving counters minus the tested values of
        // reset ones. A reset counter's field is pinned by the guard, so
        // subtracting its tested value zeroes the field exactly.
        std::int64_t p = 0;
        for (int i = 1; i <= a.k; ++i) {
            if (t.resets.count(i))
                p -= static_cast<std::int64_t>(enc(t.eq.at(i), i, sch));
            else
                p += static_cast<std::int64_t>(
                    enc(t.inc[static_cast<std::size_t>(i - 1)], i, sch));
        }
        out.p = p;

        if (t.eq.empty()) {
            out.g1 = 0;
            out.g2 = sch.packed_bound();
        } else {
            int lowest = t.eq.begin()->first;
            Nat g1 = 0;
            for (const auto& [c, v] : t.eq)
                g1 += enc(v, c, sch);
            out.g1 = g1;
            // The tested fields are pinned; the free fields below counter
            // `lowest` cover [0, enc(1, lowest) - 1].
            out.g2 = g1 + enc(1, lowest, sch) - 1;
        }
        res.aut.transitions.push_back(out);
    }

    require_valid_boca(res.aut);
    return res;
}

CsaRun lift_boca_run(const CsaAutomaton& a, const PackingScheme& scheme, const BocaRun& r) {
    if (a.k != scheme.k)
        throw ValidationError("packing scheme does not match the automaton's counter count");
    CsaRun out;
    for (const BocaState& s : r.states) {
        CsaState cs;
        cs.location = s.location;
        cs.counters = unpack(s.c, scheme);
        out.states.push_back(std::move(cs));
    }
    out.transitions = r.transitions;
    return out;
}

} // namespace redchain
