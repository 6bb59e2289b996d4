#ifndef REDCHAIN_CSA2BOCA_HPP
#define REDCHAIN_CSA2BOCA_HPP

#include "redchain/boca.hpp"
#include "redchain/csa.hpp"

namespace redchain {

// Radix packing of k bounded counters into one: counter i occupies bit field
// [(i-1)*n_bits, i*n_bits), so counter k ends up in the most significant
// field. n_bits is sized for the attested per-counter bound.
struct PackingScheme {
    int k = 0;
    int n_bits = 0;
    Nat per_counter_bound() const { return pow2(n_bits) - 1; }
    Nat packed_bound() const { return pow2(k * n_bits) - 1; }
    bool operator==(const PackingScheme&) const = default;
};

// The field value of x placed at counter i's position. Throws when x does not
// fit the field.
Nat enc(Nat x, int i, const PackingScheme& scheme);

// Packs a counter vector; the location index is carried over unchanged.
BocaState translate_state(const CsaState& s, const PackingScheme& scheme);

// Splits a packed value back into the k counter fields (index 0 holds
// counter 1).
std::vector<Nat> unpack(Nat c, const PackingScheme& scheme);

struct CsaToBocaResult {
    BocaAutomaton aut;
    PackingScheme scheme;
};

// Packs a b-bounded counter-stack automaton into a bounded one-counter
// automaton, transition for transition (output transition i simulates input
// transition i). The upward-closed equality test becomes an interval guard on
// the packed value: all fields from the lowest tested counter upward are
// pinned, the fields below range freely. Resets and increments fold into one
// signed delta. Throws ValidationError when the automaton breaks stack
// discipline or a constant does not fit the field, and BudgetError when
// k * n_bits exceeds 62.
CsaToBocaResult csa_to_boca(const CsaAutomaton& a, Nat bound);

// Reinterprets a run of the packed automaton as a run of the original, using
// the one-to-one transition correspondence.
CsaRun lift_boca_run(const CsaAutomaton& a, const PackingScheme& scheme, const BocaRun& r);

} // namespace redchain

#endif
