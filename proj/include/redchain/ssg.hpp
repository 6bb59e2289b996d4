#ifndef REDCHAIN_SSG_HPP
#define REDCHAIN_SSG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redchain/common.hpp"

namespace redchain {

// Subset-sum game. Round i offers a universal pair {A_i, B_i} followed by an
// existential pair {E_i, F_i}; the existential player wins a play iff the
// chosen numbers sum to exactly `target`.
struct SsgRound {
    Nat a = 0, b = 0; // universal pair
    Nat e = 0, f = 0; // existential pair
    bool operator==(const SsgRound&) const = default;
};

struct SsgInstance {
    std::vector<SsgRound> rounds;
    Nat target = 0;
    int n() const { return static_cast<int>(rounds.size()); }
    bool operator==(const SsgInstance&) const = default;
};

// Throws ValidationError unless the instance has at least one round.
void validate_ssg(const SsgInstance& g);

enum class Player { Universal, Existential };

// pick 0 selects the first element of a pair (A or E), pick 1 the second.
struct PlayStep {
    int round = 0; // 1-based
    Player player = Player::Universal;
    int pick = 0;
    Nat value = 0;
    bool operator==(const PlayStep&) const = default;
};

// An ordered record of one full play: 2n steps, universal before existential
// in every round. Two plays with the same chosen values but different picks
// are distinct (pairs may repeat numbers).
struct Play {
    std::vector<PlayStep> steps;
    bool operator==(const Play&) const = default;

    int upick(int round) const; // round is 1-based
    int epick(int round) const;
};

// Builds the play whose round-i universal pick is bit n-i of ubits and whose
// existential pick is bit n-i of ebits (round 1 sits in the most significant
// of the n low bits).
Play make_play(const SsgInstance& g, std::uint64_t ubits, std::uint64_t ebits);
std::uint64_t play_ubits(const Play& p);
std::uint64_t play_ebits(const Play& p);

// Throws ValidationError if p is not a well-formed play of g.
void validate_play(const SsgInstance& g, const Play& p);

Nat play_sum(const SsgInstance& g, const Play& p);

// Existential strategy: maps[i-1][w] is the round-i pick after universal
// prefix w, encoded as an i-bit integer with the round-1 choice in the most
// significant bit. maps[i-1] has size 2^i.
struct Strategy {
    std::vector<std::vector<std::uint8_t>> maps;
    int n() const { return static_cast<int>(maps.size()); }
    bool operator==(const Strategy&) const = default;
};

void validate_strategy(const SsgInstance& g, const Strategy& s);

// The 2^n plays conforming to s, ordered by universal choices (ubits
// ascending, i.e. all-A first).
std::vector<Play> enumerate_plays(const SsgInstance& g, const Strategy& s);

// An explicitly ordered list of 2^n plays (see is_sequential_strategy for
// the conditions that make it sequential).
struct SequentialStrategy {
    std::vector<Play> plays;
    bool operator==(const SequentialStrategy&) const = default;
};

// Level-i block structure over play positions [1, 2^n]: 2^i blocks of width
// 2^(n-i); block m (0-based) covers [m*2^(n-i)+1, (m+1)*2^(n-i)] and is even
// iff m is even.
struct Block {
    int level = 0;
    std::uint64_t lo = 0, hi = 0; // 1-based, inclusive
    bool even = false;
    bool operator==(const Block&) const = default;
};

// Throws ValidationError when i is outside [1, n].
std::vector<Block> blocks(int n, int i);

// Verdict of the sequential-strategy check. Conditions: 1 = a universal pick
// in an even i-block is not the A_i side, 2 = a universal pick in an odd
// i-block is not the B_i side, 3 = the existential side is not constant
// across an i-block.
struct SeqCheck {
    bool ok = false;
    int condition = 0;
    int level = 0;
    std::uint64_t block_lo = 0, block_hi = 0;
    std::string message;
};

// Structural problems (wrong play count, malformed plays) throw
// ValidationError; condition failures come back in the verdict.
SeqCheck is_sequential_strategy(const SsgInstance& g, const std::vector<Play>& candidate);

enum class Winner { Existential, Universal };

struct SsgSolveOptions {
    int max_rounds = 20;
    bool want_strategy = true;
};

struct SsgSolveResult {
    Winner winner = Winner::Universal;
    // Present iff the existential player wins and want_strategy was set.
    // Deterministic: at a winning existential node the E side is preferred.
    std::optional<Strategy> strategy;
};

// Exact minimax over the full game tree. Throws BudgetError when
// n > opts.max_rounds.
SsgSolveResult solve_ssg(const SsgInstance& g, const SsgSolveOptions& opts = {});

// Reorders the conforming plays of s into sequential order by the per-level
// stable partition (level 1 first: A-plays before B-plays inside each block).
SequentialStrategy strategy_to_sequential(const SsgInstance& g, const Strategy& s);

// Inverse direction; throws ValidationError when seq fails the sequential
// conditions. strategy_to_sequential(g, sequential_to_strategy(g, seq))
// reproduces seq exactly.
Strategy sequential_to_strategy(const SsgInstance& g, const SequentialStrategy& seq);

} // namespace redchain

#endif
