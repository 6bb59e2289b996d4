#ifndef REDCHAIN_QBF_HPP
#define REDCHAIN_QBF_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "redchain/common.hpp"
#include "redchain/ssg.hpp"

namespace redchain {

enum class Quant { Forall, Exists };

// Literal of a fully quantified 3-CNF formula; var indexes into the prefix.
struct QbfLit {
    int var = 0;
    bool positive = true;
    bool operator==(const QbfLit&) const = default;
};

struct Qbf3Cnf {
    std::vector<std::pair<std::string, Quant>> prefix;
    std::vector<std::array<QbfLit, 3>> clauses;
    bool operator==(const Qbf3Cnf&) const = default;
};

// Rejects duplicate variable names, out-of-range literals and tautological
// clauses (a variable together with its negation).
void validate_qbf(const Qbf3Cnf& q);

struct QbfEvalOptions {
    int max_vars = 20;
};

// Game semantics over the prefix, exact. Throws BudgetError when the prefix
// is longer than opts.max_vars.
bool eval_qbf(const Qbf3Cnf& q, const QbfEvalOptions& opts = {});

// Decimal digit table of the reduction to a one-player subset-sum game.
// Columns are x_1..x_m then C_1..C_l, most significant first. Row v_i sets
// digit 1 in column x_i and in every clause column where x_i occurs
// positively; v'_i the same for negative occurrences. Row s_j is a single 1
// in column C_j, s'_j a single 2, and the target t has 1 in every variable
// column and 4 in every clause column.
struct DigitTable {
    int num_vars = 0;
    int num_clauses = 0;
    std::vector<Nat> v, vp; // per variable
    std::vector<Nat> s, sp; // per clause
    Nat t = 0;
    bool operator==(const DigitTable&) const = default;
};

DigitTable build_digit_table(const Qbf3Cnf& q);

// One quantified number pair, before the strict-alternation fix-up.
struct QuantifiedNumberPair {
    Quant quant = Quant::Exists;
    Nat first = 0, second = 0;
    bool operator==(const QuantifiedNumberPair&) const = default;
};

// The raw quantifier list of the reduction: per variable its quantifier over
// {v_i, v'_i}, then per clause Exists{s_j, 0} and Exists{s'_j, 0}.
std::vector<QuantifiedNumberPair> qbf_to_quantifier_list(const Qbf3Cnf& q);

// Restores strict for-all/exists alternation by inserting dummy {0, 0}
// quantifiers: scan left to right, insert one opposite dummy between
// consecutive same-quantifier pairs, prepend a universal dummy when the list
// starts existentially, append an existential dummy when it ends universally.
// Then fold consecutive (universal, existential) pairs into rounds.
SsgInstance quantifier_list_to_ssg(const std::vector<QuantifiedNumberPair>& list, Nat target);

SsgInstance qbf_to_ssg(const Qbf3Cnf& q);

} // namespace redchain

#endif
