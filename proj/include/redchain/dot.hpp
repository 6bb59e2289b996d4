#ifndef REDCHAIN_DOT_HPP
#define REDCHAIN_DOT_HPP

#include <string>

#include "redchain/boca.hpp"
#include "redchain/csa.hpp"

namespace redchain {

struct DotOptions {
    // Drops zero-valued equality tests from edge labels; the structure is
    // unchanged, only the labels get shorter.
    bool compact = false;
};

// Graphviz rendering. Edge labels use the update/test notation of the
// construction: "c1 + 1", "c9 = 3", "R(c7, c8)" for counter-stack automata
// and "+5 [0, 15]" for one-counter automata.
std::string export_dot(const CsaAutomaton& a, const DotOptions& opts = {});
std::string export_dot(const BocaAutomaton& a, const DotOptions& opts = {});

} // namespace redchain

#endif
