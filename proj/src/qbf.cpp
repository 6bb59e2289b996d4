#include "redchain/qbf.hpp"

#include <set>

namespace redchain {

void validate_qbf(const Qbf3Cnf& q) {
    if (q.prefix.empty())
        throw ValidationError("formula has no variables");
    std::set<std::string> seen;
    for (const auto& [name, quant] : q.prefix) {
        (void)quant;
        if (name.empty())
            throw ValidationError("empty variable name in prefix");
        if (!seen.insert(name).second)
            throw ValidationError("variable quantified twice: " + name);
    }
    int m = static_cast<int>(q.prefix.size());
    for (std::size_t ci = 0; ci < q.clauses.size(); ++ci) {
        const auto& cl = q.clauses[ci];
        for (const QbfLit& lit : cl) {
            if (lit.var < 0 || lit.var >= m)
                throw ValidationError("clause " + std::to_string(ci + 1) +
                                      " uses a variable outside the prefix");
        }
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (cl[a].var == cl[b].var && cl[a].positive != cl[b].positive)
                    throw ValidationError("clause " + std::to_string(ci + 1) +
                                          " contains a variable and its negation");
    }
}

namespace {

bool matrix_true(const Qbf3Cnf& q, const std::vector<bool>& assignment) {
    for (const auto& cl : q.clauses) {
        bool sat = false;
        for (const QbfLit& lit : cl) {
            if (assignment[static_cast<std::size_t>(lit.var)] == lit.positive) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

bool eval_from(const Qbf3Cnf& q, std::size_t idx, std::vector<bool>& assignment) {
    if (idx == q.prefix.size())
        return matrix_true(q, assignment);
    for (bool val : {true, false}) {
        assignment[idx] = val;
        bool sub = eval_from(q, idx + 1, assignment);
        if (q.prefix[idx].second == Quant::Exists && sub)
            return true;
        if (q.prefix[idx].second == Quant::Forall && !sub)
            return false;
    }
    return q.prefix[idx].second == Quant::Forall;
}

} // namespace

bool eval_qbf(const Qbf3Cnf& q, const QbfEvalOptions& opts) {
    validate_qbf(q);
    if (opts.max_vars < 1)
        throw ValidationError("max_vars must be positive");
    if (static_cast<int>(q.prefix.size()) > opts.max_vars)
        throw BudgetError("formula has " + std::to_string(q.prefix.size()) +
                          " variables, over the limit of " + std::to_string(opts.max_vars));
    std::vector<bool> assignment(q.prefix.size(), false);
    return eval_from(q, 0, assignment);
}

DigitTable build_digit_table(const Qbf3Cnf& q) {
    validate_qbf(q);
    int m = static_cast<int>(q.prefix.size());
    int l = static_cast<int>(q.clauses.size());
    if (m + l > 19)
        throw ValidationError("digit table needs " + std::to_string(m + l) +
                              " decimal columns, more than a 64-bit value holds");

    int width = m + l;
    auto col = [&](int c) { // 0-based column from the left
        Nat p = 1;
        for (int i = 0; i < width - 1 - c; ++i)
            p = checked_mul(p, 10);
        return p;
    };
    auto var_col = [&](int i) { return col(i); };          // 0-based variable index
    auto clause_col = [&](int j) { return col(m + j); };   // 0-based clause index

    DigitTable tbl;
    tbl.num_vars = m;
    tbl.num_clauses = l;
    tbl.v.assign(static_cast<std::size_t>(m), 0);
    tbl.vp.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        tbl.v[static_cast<std::size_t>(i)] = var_col(i);
        tbl.vp[static_cast<std::size_t>(i)] = var_col(i);
        for (int j = 0; j < l; ++j) {
            bool pos = false, neg = false;
            for (const QbfLit& lit : q.clauses[static_cast<std::size_t>(j)]) {
                if (lit.var == i)
                    (lit.positive ? pos : neg) = true;
            }
            if (pos)
                tbl.v[static_cast<std::size_t>(i)] += clause_col(j);
            if (neg)
                tbl.vp[static_cast<std::size_t>(i)] += clause_col(j);
        }
    }
    tbl.s.assign(static_cast<std::size_t>(l), 0);
    tbl.sp.assign(static_cast<std::size_t>(l), 0);
    for (int j = 0; j < l; ++j) {
        tbl.s[static_cast<std::size_t>(j)] = clause_col(j);
        tbl.sp[static_cast<std::size_t>(j)] = 2 * clause_col(j);
    }
    tbl.t = 0;
    for (int i = 0; i < m; ++i)
        tbl.t += var_col(i);
    for (int j = 0; j < l; ++j)
        tbl.t += 4 * clause_col(j);
    return tbl;
}

std::vector<QuantifiedNumberPair> qbf_to_quantifier_list(const Qbf3Cnf& q) {
    DigitTable tbl = build_digit_table(q);
    std::vector<QuantifiedNumberPair> list;
    for (int i = 0; i < tbl.num_vars; ++i)
        list.push_back({q.prefix[static_cast<std::size_t>(i)].second,
                        tbl.v[static_cast<std::size_t>(i)],
                        tbl.vp[static_cast<std::size_t>(i)]});
    for (int j = 0; j < tbl.num_clauses; ++j) {
        list.push_back({Quant::Exists, tbl.s[static_cast<std::size_t>(j)], 0});
        list.push_back({Quant::Exists, tbl.sp[static_cast<std::size_t>(j)], 0});
    }
    return list;
}

SsgInstance quantifier_list_to_ssg(const std::vector<QuantifiedNumberPair>& list, Nat target) {
    if (list.empty())
        throw ValidationError("empty quantifier list");

    std::vector<QuantifiedNumberPair> alt;
    for (const QuantifiedNumberPair& p : list) {
        bool need_univ = alt.empty() ? (p.quant == Quant::Exists)
                                     : (alt.back().quant == p.quant);
        if (need_univ)
            alt.push_back({p.quant == Quant::Exists ? Quant::Forall : Quant::Exists, 0, 0});
        alt.push_back(p);
    }
    if (alt.back().quant == Quant::Forall)
        alt.push_back({Quant::Exists, 0, 0});

    SsgInstance g;
    g.target = target;
    for (std::size_t i = 0; i + 1 < alt.size(); i += 2) {
        const QuantifiedNumberPair& u = alt[i];
        const QuantifiedNumberPair& e = alt[i + 1];
        if (u.quant != Quant::Forall || e.quant != Quant::Exists)
            throw ValidationError("alternation fix-up failed"); // unreachable by construction
        g.rounds.push_back({u.first, u.second, e.first, e.second});
    }
    return g;
}

SsgInstance qbf_to_ssg(const Qbf3Cnf& q) {
    return quantifier_list_to_ssg(qbf_to_quantifier_list(q), build_digit_table(q).t);
}

} // namespace redchain
