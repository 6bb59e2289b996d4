#ifndef REDCHAIN_JSON_IO_HPP
#define REDCHAIN_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "redchain/boca.hpp"
#include "redchain/csa.hpp"
#include "redchain/csa2boca.hpp"
#include "redchain/qbf.hpp"
#include "redchain/ssg.hpp"
#include "redchain/ssg2csa.hpp"

namespace redchain {

using nlohmann::json;

// All decoders throw ValidationError on malformed documents. Encoders and
// decoders round-trip exactly, and canonical_dump is stable: the same value
// always prints the same bytes.

json ssg_to_json(const SsgInstance& g);
SsgInstance ssg_from_json(const json& j);

json qbf_to_json(const Qbf3Cnf& q);
Qbf3Cnf qbf_from_json(const json& j);

json csa_to_json(const CsaAutomaton& a);
CsaAutomaton csa_from_json(const json& j);

json boca_to_json(const BocaAutomaton& a);
BocaAutomaton boca_from_json(const json& j);

json csa_run_to_json(const CsaAutomaton& a, const CsaRun& r);
CsaRun csa_run_from_json(const CsaAutomaton& a, const json& j);

json boca_run_to_json(const BocaAutomaton& a, const BocaRun& r);
BocaRun boca_run_from_json(const BocaAutomaton& a, const json& j);

json strategy_to_json(const Strategy& s);
Strategy strategy_from_json(const json& j);

// Reduction sidecars: layout and bounds of a built game automaton, and the
// packing parameters of a packed one.
json built_csa_meta_to_json(const BuiltCsa& b);
json packing_meta_to_json(const CsaAutomaton& a, const PackingScheme& s);

std::string canonical_dump(const json& j);
std::string digest(const json& j); // "fnv1a64:" + 16 hex digits of the canonical dump

json parse_json(const std::string& text);
json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// QDIMACS-flavoured text: "p cnf <vars> <clauses>", optional "a ..."/"e ..."
// quantifier lines (variables missing from them become outermost
// existentials), then clause lines of exactly three literals terminated by 0.
// Variable i is named "x<i>".
Qbf3Cnf parse_qdimacs(std::istream& in);
Qbf3Cnf load_qdimacs_file(const std::string& path);

} // namespace redchain

#endif
