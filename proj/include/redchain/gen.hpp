#ifndef REDCHAIN_GEN_HPP
#define REDCHAIN_GEN_HPP

#include "redchain/boca.hpp"
#include "redchain/csa.hpp"
#include "redchain/qbf.hpp"
#include "redchain/ssg.hpp"

namespace redchain {

// splitmix64: tiny, portable, and stable across platforms and standard
// libraries, which keeps seeded corpora byte-identical everywhere.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform enough for test corpora; modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    std::uint64_t in(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
};

struct GenSsgParams {
    int n = 2;
    Nat max_number = 7;
    // With winnable set, numbers are arranged so the existential player wins:
    // every round gets a constant round sum regardless of the universal pick.
    bool winnable = false;
    std::uint64_t seed = 0;
};
SsgInstance gen_ssg(const GenSsgParams& p);

struct GenQbfParams {
    int vars = 3;
    int clauses = 4;
    std::uint64_t seed = 0;
};
Qbf3Cnf gen_qbf(const GenQbfParams& p);

struct GenCsaParams {
    int locations = 4;
    int k = 3;
    int transitions = 8;
    Nat max_const = 3;
    std::uint64_t seed = 0;
};
// Stack discipline holds by construction: tests are upward closed, resets
// only hit tested counters, and reset counters carry no increment.
CsaAutomaton gen_csa(const GenCsaParams& p);

struct GenBocaParams {
    int locations = 4;
    Nat bound = 15;
    int transitions = 10;
    std::uint64_t seed = 0;
};
BocaAutomaton gen_boca(const GenBocaParams& p);

} // namespace redchain

#endif
