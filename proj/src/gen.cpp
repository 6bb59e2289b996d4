#include "redchain/gen.hpp"

#include <algorithm>

namespace redchain {

SsgInstance gen_ssg(const GenSsgParams& p) {
    if (p.n < 1 || p.n > 12)
        throw ValidationError("generator round count outside [1, 12]");
    if (p.max_number > 1'000'000)
        throw ValidationError("generator max number above 1000000");

    SplitMix64 rng(p.seed);
    SsgInstance g;
    for (int i = 0; i < p.n; ++i) {
        SsgRound r;
        r.a = rng.in(0, p.max_number);
        r.b = rng.in(0, p.max_number);
        if (p.winnable) {
            // Pad the smaller universal number so A + E = B + F, then the
            // answer to A is always E and to B always F. Swapping the pair
            // keeps things varied without breaking the argument.
            Nat base = rng.in(0, p.max_number);
            Nat diff = r.a >= r.b ? r.a - r.b : r.b - r.a;
            Nat to_a = r.a >= r.b ? base : base + diff;
            Nat to_b = r.a >= r.b ? base + diff : base;
            r.e = to_a;
            r.f = to_b;
            if (rng.below(2) == 0) {
                std::swap(r.e, r.f);
                std::swap(r.a, r.b);
            }
        } else {
            r.e = rng.in(0, p.max_number);
            r.f = rng.in(0, p.max_number);
        }
        g.rounds.push_back(r);
    }

    Nat total = 0;
    for (const SsgRound& r : g.rounds)
        total += r.a + r.b + r.e + r.f;
    if (p.winnable) {
        g.target = 0;
        for (const SsgRound& r : g.rounds)
            g.target += r.a + r.e; // constant per round by construction
    } else {
        g.target = rng.in(0, total);
    }
    return g;
}

Qbf3Cnf gen_qbf(const GenQbfParams& p) {
    if (p.vars < 1 || p.vars > 8)
        throw ValidationError("generator variable count outside [1, 8]");
    if (p.clauses < 1 || p.clauses > 16)
        throw ValidationError("generator clause count outside [1, 16]");

    SplitMix64 rng(p.seed);
    Qbf3Cnf q;
    for (int v = 1; v <= p.vars; ++v)
        q.prefix.emplace_back("x" + std::to_string(v),
                              rng.below(2) == 0 ? Quant::Forall : Quant::Exists);
    for (int c = 0; c < p.clauses; ++c) {
        // One sign per variable within a clause, so no clause is tautological.
        std::array<QbfLit, 3> cl;
        std::vector<int> sign(static_cast<std::size_t>(p.vars), -1);
        for (int i = 0; i < 3; ++i) {
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.vars)));
            if (sign[static_cast<std::size_t>(v)] == -1)
                sign[static_cast<std::size_t>(v)] = static_cast<int>(rng.below(2));
            cl[static_cast<std::size_t>(i)] = {v, sign[static_cast<std::size_t>(v)] == 1};
        }
        q.clauses.push_back(cl);
    }
    return q;
}

CsaAutomaton gen_csa(const GenCsaParams& p) {
    if (p.locations < 1 || p.locations > 50)
        throw ValidationError("generator location count outside [1, 50]");
    if (p.k < 1 || p.k > 8)
        throw ValidationError("generator counter count outside [1, 8]");
    if (p.transitions < 0 || p.transitions > 200)
        throw ValidationError("generator transition count outside [0, 200]");
    if (p.max_const > 15)
        throw ValidationError("generator max constant above 15");

    SplitMix64 rng(p.seed);
    CsaAutomaton a;
    for (int l = 0; l < p.locations; ++l)
        a.locations.push_back("l" + std::to_string(l));
    a.k = p.k;
    a.initial = 0;

    for (int n = 0; n < p.transitions; ++n) {
        CsaTransition t;
        t.from = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.locations)));
        t.to = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.locations)));
        t.inc.assign(static_cast<std::size_t>(p.k), 0);
        if (rng.below(2) == 0) {
            // Tested suffix [j, k], reset an upper slice of it.
            int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.k)));
            for (int c = j; c <= p.k; ++c)
                t.eq[c] = rng.in(0, p.max_const);
            int reset_from = j + static_cast<int>(
                                     rng.below(static_cast<std::uint64_t>(p.k - j + 2)));
            for (int c = reset_from; c <= p.k; ++c)
                t.resets.insert(c);
        }
        for (int c = 1; c <= p.k; ++c)
            if (!t.resets.count(c) && rng.below(2) == 0)
                t.inc[static_cast<std::size_t>(c - 1)] = rng.in(0, p.max_const);
        a.transitions.push_back(std::move(t));
    }
    return a;
}

BocaAutomaton gen_boca(const GenBocaParams& p) {
    if (p.locations < 1 || p.locations > 64)
        throw ValidationError("generator location count outside [1, 64]");
    if (p.bound < 1 || p.bound > 1'000'000)
        throw ValidationError("generator bound outside [1, 1000000]");
    if (p.transitions < 0 || p.transitions > 400)
        throw ValidationError("generator transition count outside [0, 400]");

    SplitMix64 rng(p.seed);
    BocaAutomaton a;
    for (int l = 0; l < p.locations; ++l)
        a.locations.push_back("l" + std::to_string(l));
    a.bound = p.bound;
    a.initial = 0;

    for (int n = 0; n < p.transitions; ++n) {
        BocaTransition t;
        t.from = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.locations)));
        t.to = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.locations)));
        Nat mag = rng.in(0, p.bound);
        t.p = rng.below(2) == 0 ? static_cast<std::int64_t>(mag)
                                : -static_cast<std::int64_t>(mag);
        if (rng.below(2) == 0) {
            t.g1 = 0;
            t.g2 = a.bound;
        } else {
            t.g1 = rng.in(0, p.bound);
            t.g2 = rng.in(t.g1, p.bound);
        }
        a.transitions.push_back(t);
    }
    return a;
}

} // namespace redchain
