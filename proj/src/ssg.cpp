#include "redchain/ssg.hpp"

#include <algorithm>

namespace redchain {

void validate_ssg(const SsgInstance& g) {
    if (g.rounds.empty())
        throw ValidationError("subset-sum game needs at least one round");
    if (g.rounds.size() > 62)
        throw ValidationError("subset-sum game has too many rounds: " +
                              std::to_string(g.rounds.size()));
}

namespace {

const PlayStep& step_at(const Play& p, int round, Player who) {
    std::size_t idx = 2 * static_cast<std::size_t>(round - 1) +
                      (who == Player::Existential ? 1 : 0);
    if (round < 1 || idx >= p.steps.size())
        throw ValidationError("play has no round " + std::to_string(round));
    return p.steps[idx];
}

Nat pair_value(const SsgRound& r, Player who, int pick) {
    if (who == Player::Universal)
        return pick == 0 ? r.a : r.b;
    return pick == 0 ? r.e : r.f;
}

} // namespace

int Play::upick(int round) const { return step_at(*this, round, Player::Universal).pick; }
int Play::epick(int round) const { return step_at(*this, round, Player::Existential).pick; }

Play make_play(const SsgInstance& g, std::uint64_t ubits, std::uint64_t ebits) {
    validate_ssg(g);
    int n = g.n();
    Play p;
    p.steps.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int u = static_cast<int>((ubits >> (n - i)) & 1);
        int e = static_cast<int>((ebits >> (n - i)) & 1);
        const SsgRound& r = g.rounds[static_cast<std::size_t>(i - 1)];
        p.steps.push_back({i, Player::Universal, u, pair_value(r, Player::Universal, u)});
        p.steps.push_back({i, Player::Existential, e, pair_value(r, Player::Existential, e)});
    }
    return p;
}

std::uint64_t play_ubits(const Play& p) {
    std::uint64_t bits = 0;
    int n = static_cast<int>(p.steps.size() / 2);
    for (int i = 1; i <= n; ++i)
        bits |= static_cast<std::uint64_t>(p.upick(i)) << (n - i);
    return bits;
}

std::uint64_t play_ebits(const Play& p) {
    std::uint64_t bits = 0;
    int n = static_cast<int>(p.steps.size() / 2);
    for (int i = 1; i <= n; ++i)
        bits |= static_cast<std::uint64_t>(p.epick(i)) << (n - i);
    return bits;
}

void validate_play(const SsgInstance& g, const Play& p) {
    validate_ssg(g);
    int n = g.n();
    if (p.steps.size() != 2 * static_cast<std::size_t>(n))
        throw ValidationError("play has " + std::to_string(p.steps.size()) +
                              " steps, expected " + std::to_string(2 * n));
    for (int i = 1; i <= n; ++i) {
        for (Player who : {Player::Universal, Player::Existential}) {
            const PlayStep& st = step_at(p, i, who);
            if (st.round != i || st.player != who)
                throw ValidationError("play step order broken at round " + std::to_string(i));
            if (st.pick != 0 && st.pick != 1)
                throw ValidationError("play pick out of range at round " + std::to_string(i));
            Nat want = pair_value(g.rounds[static_cast<std::size_t>(i - 1)], who, st.pick);
            if (st.value != want)
                throw ValidationError("play value mismatch at round " + std::to_string(i) +
                                      ": got " + std::to_string(st.value) + ", pair says " +
                                      std::to_string(want));
        }
    }
}

Nat play_sum(const SsgInstance& g, const Play& p) {
    validate_play(g, p);
    Nat sum = 0;
    for (const PlayStep& st : p.steps)
        sum = checked_add(sum, st.value);
    return sum;
}

void validate_strategy(const SsgInstance& g, const Strategy& s) {
    validate_ssg(g);
    if (s.n() != g.n())
        throw ValidationError("strategy covers " + std::to_string(s.n()) +
                              " rounds, game has " + std::to_string(g.n()));
    for (int i = 1; i <= s.n(); ++i) {
        const auto& m = s.maps[static_cast<std::size_t>(i - 1)];
        if (m.size() != pow2(i))
            throw ValidationError("strategy map for round " + std::to_string(i) +
                                  " has " + std::to_string(m.size()) + " entries, expected " +
                                  std::to_string(pow2(i)));
        for (std::uint8_t pick : m)
            if (pick > 1)
                throw ValidationError("strategy pick out of range at round " + std::to_string(i));
    }
}

std::vector<Play> enumerate_plays(const SsgInstance& g, const Strategy& s) {
    validate_strategy(g, s);
    int n = g.n();
    std::vector<Play> plays;
    plays.reserve(pow2(n));
    for (std::uint64_t ubits = 0; ubits < pow2(n); ++ubits) {
        std::uint64_t ebits = 0;
        for (int i = 1; i <= n; ++i) {
            std::uint64_t prefix = ubits >> (n - i); // universal picks through round i
            ebits |= static_cast<std::uint64_t>(
                         s.maps[static_cast<std::size_t>(i - 1)][prefix])
                     << (n - i);
        }
        plays.push_back(make_play(g, ubits, ebits));
    }
    return plays;
}

std::vector<Block> blocks(int n, int i) {
    if (n < 1 || n > 62)
        throw ValidationError("block structure undefined for n = " + std::to_string(n));
    if (i < 1 || i > n)
        throw ValidationError("block level " + std::to_string(i) + " outside [1, " +
                              std::to_string(n) + "]");
    std::vector<Block> out;
    Nat width = pow2(n - i);
    for (Nat m = 0; m < pow2(i); ++m)
        out.push_back({i, m * width + 1, (m + 1) * width, m % 2 == 0});
    return out;
}

SeqCheck is_sequential_strategy(const SsgInstance& g, const std::vector<Play>& candidate) {
    validate_ssg(g);
    int n = g.n();
    if (candidate.size() != pow2(n))
        throw ValidationError("sequential candidate has " + std::to_string(candidate.size()) +
                              " plays, expected " + std::to_string(pow2(n)));
    for (const Play& p : candidate)
        validate_play(g, p);

    for (int i = 1; i <= n; ++i) {
        for (const Block& blk : blocks(n, i)) {
            int want_u = blk.even ? 0 : 1;
            for (std::uint64_t j = blk.lo; j <= blk.hi; ++j) {
                if (candidate[j - 1].upick(i) != want_u) {
                    SeqCheck bad;
                    bad.condition = blk.even ? 1 : 2;
                    bad.level = i;
                    bad.block_lo = blk.lo;
                    bad.block_hi = blk.hi;
                    bad.message = "play " + std::to_string(j) + " picks the " +
                                  (want_u == 0 ? "B" : "A") + std::to_string(i) +
                                  " side inside the " + (blk.even ? "even" : "odd") +
                                  " level-" + std::to_string(i) + " block [" +
                                  std::to_string(blk.lo) + ", " + std::to_string(blk.hi) + "]";
                    return bad;
                }
            }
            int first_e = candidate[blk.lo - 1].epick(i);
            for (std::uint64_t j = blk.lo; j <= blk.hi; ++j) {
                if (candidate[j - 1].epick(i) != first_e) {
                    SeqCheck bad;
                    bad.condition = 3;
                    bad.level = i;
                    bad.block_lo = blk.lo;
                    bad.block_hi = blk.hi;
                    bad.message = "existential side at round " + std::to_string(i) +
                                  " is not constant across the level-" + std::to_string(i) +
                                  " block [" + std::to_string(blk.lo) + ", " +
                                  std::to_string(blk.hi) + "] (play " + std::to_string(j) +
                                  " deviates)";
                    return bad;
                }
            }
        }
    }
    SeqCheck ok;
    ok.ok = true;
    return ok;
}

namespace {

struct MinimaxCtx {
    const SsgInstance& g;
    int n;
};

bool exist_wins_after_univ(const MinimaxCtx& ctx, int round, Nat sum);

// Universal to move at `round` (0-based). True iff every universal pick still
// lets the existential player force the target.
bool exist_wins_at_univ(const MinimaxCtx& ctx, int round, Nat sum) {
    if (round == ctx.n)
        return sum == ctx.g.target;
    const SsgRound& r = ctx.g.rounds[static_cast<std::size_t>(round)];
    return exist_wins_after_univ(ctx, round, checked_add(sum, r.a)) &&
           exist_wins_after_univ(ctx, round, checked_add(sum, r.b));
}

bool exist_wins_after_univ(const MinimaxCtx& ctx, int round, Nat sum) {
    const SsgRound& r = ctx.g.rounds[static_cast<std::size_t>(round)];
    return exist_wins_at_univ(ctx, round + 1, checked_add(sum, r.e)) ||
           exist_wins_at_univ(ctx, round + 1, checked_add(sum, r.f));
}

void extract_strategy(const MinimaxCtx& ctx, int round, std::uint64_t prefix, Nat sum,
                      Strategy& out) {
    if (round == ctx.n)
        return;
    const SsgRound& r = ctx.g.rounds[static_cast<std::size_t>(round)];
    for (int u = 0; u <= 1; ++u) {
        Nat after_u = checked_add(sum, u == 0 ? r.a : r.b);
        std::uint64_t child = prefix * 2 + static_cast<std::uint64_t>(u);
        // Prefer the E side; fall back to F only when E alone loses.
        int pick = exist_wins_at_univ(ctx, round + 1, checked_add(after_u, r.e)) ? 0 : 1;
        out.maps[static_cast<std::size_t>(round)][child] = static_cast<std::uint8_t>(pick);
        extract_strategy(ctx, round + 1, child,
                         checked_add(after_u, pick == 0 ? r.e : r.f), out);
    }
}

} // namespace

SsgSolveResult solve_ssg(const SsgInstance& g, const SsgSolveOptions& opts) {
    validate_ssg(g);
    if (opts.max_rounds < 1 || opts.max_rounds > 62)
        throw ValidationError("max_rounds outside [1, 62]");
    if (g.n() > opts.max_rounds)
        throw BudgetError("game has " + std::to_string(g.n()) +
                          " rounds, over the limit of " + std::to_string(opts.max_rounds));

    MinimaxCtx ctx{g, g.n()};
    SsgSolveResult res;
    res.winner = exist_wins_at_univ(ctx, 0, 0) ? Winner::Existential : Winner::Universal;
    if (res.winner == Winner::Existential && opts.want_strategy) {
        Strategy s;
        s.maps.resize(static_cast<std::size_t>(ctx.n));
        for (int i = 1; i <= ctx.n; ++i)
            s.maps[static_cast<std::size_t>(i - 1)].assign(pow2(i), 0);
        extract_strategy(ctx, 0, 0, 0, s);
        res.strategy = std::move(s);
    }
    return res;
}

SequentialStrategy strategy_to_sequential(const SsgInstance& g, const Strategy& s) {
    std::vector<Play> plays = enumerate_plays(g, s);
    int n = g.n();
    // Level by level, move the A-side plays of each block in front of the
    // B-side plays, keeping relative order. After level i the list is grouped
    // into the 2^i level-i blocks.
    for (int i = 1; i <= n; ++i) {
        std::uint64_t parent_width = pow2(n - i + 1);
        for (std::uint64_t start = 0; start < pow2(n); start += parent_width) {
            auto first = plays.begin() + static_cast<std::ptrdiff_t>(start);
            auto last = first + static_cast<std::ptrdiff_t>(parent_width);
            std::stable_partition(first, last,
                                  [i](const Play& p) { return p.upick(i) == 0; });
        }
    }
    return {std::move(plays)};
}

Strategy sequential_to_strategy(const SsgInstance& g, const SequentialStrategy& seq) {
    SeqCheck chk = is_sequential_strategy(g, seq.plays);
    if (!chk.ok)
        throw ValidationError("not a sequential strategy: " + chk.message);
    int n = g.n();
    Strategy s;
    s.maps.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        auto& m = s.maps[static_cast<std::size_t>(i - 1)];
        m.assign(pow2(i), 0);
        // Universal prefix w lands in the level-i block with index w; read the
        // constant existential side off that block's first play.
        for (std::uint64_t w = 0; w < pow2(i); ++w) {
            const Play& first = seq.plays[w << (n - i)];
            m[w] = static_cast<std::uint8_t>(first.epick(i));
        }
    }
    return s;
}

} // namespace redchain
