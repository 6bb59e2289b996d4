#ifndef REDCHAIN_PIPELINE_HPP
#define REDCHAIN_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "redchain/boca.hpp"
#include "redchain/csa.hpp"
#include "redchain/qbf.hpp"
#include "redchain/ssg.hpp"

namespace redchain {

enum class Stage { Qbf, Ssg, Csa, Boca };

// Per-stage outcome of a chained run. Answered stages carry a canonical
// yes/no bit: formula true, existential wins, target reachable. A stage that
// exhausts a budget (or exceeds the packing width) reports Budget and stops
// the chain; cross-check failures land in `note` and break agreement.
struct StageReport {
    std::string name;
    enum class Status { Answered, Budget } status = Status::Answered;
    bool answer_bit = false;
    std::string answer;
    std::string instance_digest;
    double millis = 0;
    std::string witness_summary;
    std::string note;
};

struct PipelineReport {
    std::vector<StageReport> stages;
    bool agreement = false;        // answered stages all coincide, checks clean
    bool budget_hit = false;
    std::string first_disagreement;
};

struct PipelineOptions {
    Nat state_budget = 50'000'000;
    int max_rounds = 20;
    int max_vars = 20;
    Stage stop_after = Stage::Boca;
};

PipelineReport pipeline_from_qbf(const Qbf3Cnf& q, const PipelineOptions& opts = {});
PipelineReport pipeline_from_ssg(const SsgInstance& g, const PipelineOptions& opts = {});
// For a user-supplied automaton the bound is the caller's attestation; a
// monitor violation counts as a failed check, not a crash.
PipelineReport pipeline_from_csa(const CsaAutomaton& a, const CsaState& target, Nat bound,
                                 const PipelineOptions& opts = {});
PipelineReport pipeline_from_boca(const BocaAutomaton& a, const BocaState& target,
                                  const PipelineOptions& opts = {});

nlohmann::json pipeline_report_to_json(const PipelineReport& r);
std::string pipeline_report_to_text(const PipelineReport& r);

// 0 when every answered stage agrees and nothing was cut short, 3 when a
// budget stopped the chain early (without a disagreement), 1 on any
// disagreement or failed cross-check.
int pipeline_exit_code(const PipelineReport& r);

} // namespace redchain

#endif
