#include "redchain/ssg2csa.hpp"

#include <algorithm>
#include <optional>

namespace redchain {

namespace {

// Adds the implicit zero tests: every counter above the lowest explicitly
// tested one must be tested too, so untested ones get = 0.
void complete_eq(CsaTransition& t, int k) {
    if (t.eq.empty())
        return;
    int lowest = t.eq.begin()->first;
    for (int c = lowest + 1; c <= k; ++c)
        t.eq.emplace(c, 0);
}

struct Builder {
    BuiltCsa out;
    const SsgInstance* game = nullptr; // null for the base automaton

    int loc(const std::string& name) {
        int idx = out.aut.location_index(name);
        if (idx < 0)
            throw std::logic_error("unknown location " + name);
        return idx;
    }

    void add(int from, int to, const std::map<int, Nat>& eq, const std::map<int, Nat>& inc,
             const std::set<int>& resets, GadgetTag tag) {
        CsaTransition t;
        t.from = from;
        t.to = to;
        t.eq = eq;
        t.inc.assign(static_cast<std::size_t>(out.aut.k), 0);
        for (const auto& [c, v] : inc)
            t.inc[static_cast<std::size_t>(c - 1)] = v;
        t.resets = resets;
        complete_eq(t, out.aut.k);
        out.aut.transitions.push_back(std::move(t));
        out.tags.push_back(tag);
    }
};

BuiltCsa build_automaton(int n, const SsgInstance* game) {
    if (n < 1 || n > 20)
        throw ValidationError("round count " + std::to_string(n) + " outside [1, 20]");

    Builder b;
    b.game = game;
    CounterLayout& lay = b.out.layout;
    lay.n = n;
    b.out.aut.k = lay.k();

    auto& names = b.out.aut.locations;
    for (int i = 1; i <= n; ++i)
        names.push_back("loc:u" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        names.push_back("loc:e" + std::to_string(i));
    names.push_back("loc:w1");
    names.push_back("loc:w2");
    for (int i = 1; i <= n; ++i)
        names.push_back("loc:r" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        names.push_back("loc:r'" + std::to_string(i));
    names.push_back("loc:t");
    b.out.aut.initial = b.loc("loc:u1");

    for (int i = 1; i <= n; ++i) {
        std::string si = std::to_string(i);
        b.out.counter_names.push_back("ctr:a" + si);
        b.out.counter_names.push_back("ctr:b" + si);
        b.out.counter_names.push_back("ctr:e" + si);
        b.out.counter_names.push_back("ctr:f" + si);
    }
    b.out.counter_names.push_back("ctr:top");

    Nat total = 0;
    if (game) {
        for (const SsgRound& r : game->rounds) {
            total = checked_add(total, checked_add(r.a, r.b));
            total = checked_add(total, checked_add(r.e, r.f));
        }
    }

    using Kind = GadgetTag::Kind;

    // Play gadget: pick a side at u_i, answer at e_i, next round (w_1 after
    // round n). Each pick bumps its own counter; with game numbers attached
    // the pick also adds its number to top.
    for (int i = 1; i <= n; ++i) {
        std::string si = std::to_string(i);
        int u_i = b.loc("loc:u" + si);
        int e_i = b.loc("loc:e" + si);
        int after = i == n ? b.loc("loc:w1") : b.loc("loc:u" + std::to_string(i + 1));
        const SsgRound* r = game ? &game->rounds[static_cast<std::size_t>(i - 1)] : nullptr;

        std::map<int, Nat> inc_a{{lay.a(i), 1}}, inc_b{{lay.b(i), 1}};
        std::map<int, Nat> inc_e{{lay.e(i), 1}}, inc_f{{lay.f(i), 1}};
        if (r) {
            inc_a[lay.top()] = r->a;
            inc_b[lay.top()] = r->b;
            inc_e[lay.top()] = r->e;
            inc_f[lay.top()] = r->f;
        }
        b.add(u_i, e_i, {}, inc_a, {}, {Kind::UniversalPick, i, 0});
        b.add(u_i, e_i, {}, inc_b, {}, {Kind::UniversalPick, i, 1});
        b.add(e_i, after, {}, inc_e, {}, {Kind::ExistentialPick, i, 0});
        b.add(e_i, after, {}, inc_f, {}, {Kind::ExistentialPick, i, 1});
    }

    // Sum check: without numbers a plain hop, with numbers the test
    // top = target followed by a reset of top.
    if (game)
        b.add(b.loc("loc:w1"), b.loc("loc:w2"), {{lay.top(), game->target}}, {},
              {lay.top()}, {Kind::SumCheck, 0, -1});
    else
        b.add(b.loc("loc:w1"), b.loc("loc:w2"), {}, {}, {}, {Kind::SumCheck, 0, -1});
    b.add(b.loc("loc:w2"), b.loc("loc:r'" + std::to_string(n)), {}, {}, {},
          {Kind::Connector, 0, -1});

    // Reset cascade, level n down to 1. r'_i checks that the existential side
    // was constant over the finished level-i block and wipes e_i/f_i; r_i
    // either exits back to u_1 (half-open level, all A picks) or consumes the
    // full level (A half then B half) and descends with a_i/b_i wiped.
    for (int i = n; i >= 1; --i) {
        std::string si = std::to_string(i);
        int rp_i = b.loc("loc:r'" + si);
        int r_i = b.loc("loc:r" + si);
        int below = i == 1 ? b.loc("loc:t") : b.loc("loc:r'" + std::to_string(i - 1));
        Nat full = pow2(n - i);

        b.add(rp_i, r_i, {{lay.e(i), full}, {lay.f(i), 0}}, {}, {lay.e(i), lay.f(i)},
              {Kind::ResetEF, i, 0});
        b.add(rp_i, r_i, {{lay.e(i), 0}, {lay.f(i), full}}, {}, {lay.e(i), lay.f(i)},
              {Kind::ResetEF, i, 1});
        b.add(r_i, b.loc("loc:u1"), {{lay.a(i), full}, {lay.b(i), 0}}, {}, {},
              {Kind::Exit, i, -1});
        b.add(r_i, below, {{lay.a(i), full}, {lay.b(i), full}}, {}, {lay.a(i), lay.b(i)},
              {Kind::Descend, i, -1});
    }

    b.out.target.location = b.loc("loc:t");
    b.out.target.counters.assign(static_cast<std::size_t>(lay.k()), 0);

    b.out.counter_bounds.clear();
    for (int i = 1; i <= n; ++i) {
        Nat ab = pow2(n - i + 1);
        Nat ef = pow2(n - i);
        b.out.counter_bounds.insert(b.out.counter_bounds.end(), {ab, ab, ef, ef});
    }
    b.out.counter_bounds.push_back(game ? total : 0);
    b.out.analytic_bound = std::max(pow2(n), game ? total : 0);

    return b.out;
}

} // namespace

BuiltCsa build_base_automaton(int n) {
    return build_automaton(n, nullptr);
}

BuiltCsa build_full_automaton(const SsgInstance& g) {
    validate_ssg(g);
    if (g.n() > 20)
        throw ValidationError("game has more than 20 rounds");
    return build_automaton(g.n(), &g);
}

std::vector<Segment> decompose_segments(const CsaAutomaton& a, const CsaRun& r) {
    int u1 = a.location_index("loc:u1");
    if (u1 < 0)
        throw ValidationError("automaton has no loc:u1; not built by this module");
    if (r.states.empty())
        throw ValidationError("run has no states");
    if (r.transitions.size() + 1 != r.states.size())
        throw ValidationError("run state/transition counts disagree");
    if (r.states.front().location != u1)
        throw ValidationError("run does not start at loc:u1");

    std::vector<Segment> out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= r.states.size(); ++i) {
        bool cut = i == r.states.size() || r.states[i].location == u1;
        if (!cut)
            continue;
        std::size_t last = i == r.states.size() ? i - 1 : i;
        Segment seg;
        seg.first_state = start;
        seg.last_state = last;
        seg.states.assign(r.states.begin() + static_cast<std::ptrdiff_t>(start),
                          r.states.begin() + static_cast<std::ptrdiff_t>(last) + 1);
        seg.transitions.assign(r.transitions.begin() + static_cast<std::ptrdiff_t>(start),
                               r.transitions.begin() + static_cast<std::ptrdiff_t>(last));
        out.push_back(std::move(seg));
        if (i == r.states.size())
            break;
        start = i;
    }
    return out;
}

namespace {

// Picks of one segment, read off the +1 deltas of the per-round counters.
// nullopt when some round lacks a pick or records two.
struct SegmentPicks {
    std::vector<int> upick, epick; // index i-1 holds round i, -1 = missing
};

std::optional<SegmentPicks> read_picks(const CounterLayout& lay, const Segment& seg) {
    SegmentPicks p;
    p.upick.assign(static_cast<std::size_t>(lay.n), -1);
    p.epick.assign(static_cast<std::size_t>(lay.n), -1);

    // Both sides of a pair share one slot per round; a second bump means the
    // segment is malformed.
    auto record = [](std::vector<int>& slot, int i, int side) {
        if (slot[static_cast<std::size_t>(i - 1)] != -1)
            return false;
        slot[static_cast<std::size_t>(i - 1)] = side;
        return true;
    };

    for (std::size_t s = 0; s + 1 < seg.states.size(); ++s) {
        const auto& before = seg.states[s].counters;
        const auto& after = seg.states[s + 1].counters;
        for (int i = 1; i <= lay.n; ++i) {
            auto bumped = [&](int ctr) {
                return after[static_cast<std::size_t>(ctr - 1)] ==
                       before[static_cast<std::size_t>(ctr - 1)] + 1;
            };
            if (bumped(lay.a(i)) && !record(p.upick, i, 0))
                return std::nullopt;
            if (bumped(lay.b(i)) && !record(p.upick, i, 1))
                return std::nullopt;
            if (bumped(lay.e(i)) && !record(p.epick, i, 0))
                return std::nullopt;
            if (bumped(lay.f(i)) && !record(p.epick, i, 1))
                return std::nullopt;
        }
    }
    for (int i = 0; i < lay.n; ++i)
        if (p.upick[static_cast<std::size_t>(i)] == -1 ||
            p.epick[static_cast<std::size_t>(i)] == -1)
            return std::nullopt;
    return p;
}

} // namespace

bool ssruns_predicate(int n, const std::vector<Segment>& segments) {
    if (n < 1 || n > 20)
        throw ValidationError("round count " + std::to_string(n) + " outside [1, 20]");
    if (segments.size() != pow2(n))
        return false;

    CounterLayout lay{n};
    std::vector<SegmentPicks> picks;
    for (const Segment& seg : segments) {
        auto p = read_picks(lay, seg);
        if (!p)
            return false;
        picks.push_back(std::move(*p));
    }

    for (int i = 1; i <= n; ++i) {
        for (const Block& blk : blocks(n, i)) {
            int want_u = blk.even ? 0 : 1;
            int first_e = picks[blk.lo - 1].epick[static_cast<std::size_t>(i - 1)];
            for (std::uint64_t j = blk.lo; j <= blk.hi; ++j) {
                const SegmentPicks& p = picks[j - 1];
                if (p.upick[static_cast<std::size_t>(i - 1)] != want_u)
                    return false;
                if (p.epick[static_cast<std::size_t>(i - 1)] != first_e)
                    return false;
            }
        }
    }
    return true;
}

std::set<std::string> reset_visit_oracle(int n, std::uint64_t j) {
    if (n < 1 || n > 20)
        throw ValidationError("round count " + std::to_string(n) + " outside [1, 20]");
    if (j < 1 || j > pow2(n))
        throw ValidationError("pass index " + std::to_string(j) + " outside [1, " +
                              std::to_string(pow2(n)) + "]");
    std::set<std::string> out;
    for (int i = n; i >= 1; --i) {
        if (j % pow2(n - i) != 0)
            break;
        out.insert("loc:r'" + std::to_string(i));
        out.insert("loc:r" + std::to_string(i));
    }
    return out;
}

SequentialStrategy run_to_sequential(const SsgInstance& g, const CsaRun& r) {
    BuiltCsa built = build_full_automaton(g);
    if (r.states.empty() || !(r.states.back() == built.target))
        throw ValidationError("run is not successful: it does not end in (loc:t, all zeros)");

    std::vector<Segment> segs = decompose_segments(built.aut, r);
    if (segs.size() != pow2(g.n()))
        throw ValidationError("successful run has " + std::to_string(segs.size()) +
                              " segments, expected " + std::to_string(pow2(g.n())));

    SequentialStrategy seq;
    for (const Segment& seg : segs) {
        auto p = read_picks(built.layout, seg);
        if (!p)
            throw ValidationError("run segment lacks a full set of picks");
        std::uint64_t ubits = 0, ebits = 0;
        for (int i = 1; i <= g.n(); ++i) {
            ubits |= static_cast<std::uint64_t>(p->upick[static_cast<std::size_t>(i - 1)])
                     << (g.n() - i);
            ebits |= static_cast<std::uint64_t>(p->epick[static_cast<std::size_t>(i - 1)])
                     << (g.n() - i);
        }
        seq.plays.push_back(make_play(g, ubits, ebits));
    }
    return seq;
}

CsaRun sequential_to_run(const SsgInstance& g, const SequentialStrategy& seq) {
    SeqCheck chk = is_sequential_strategy(g, seq.plays);
    if (!chk.ok)
        throw ValidationError("not a sequential strategy: " + chk.message);

    BuiltCsa built = build_full_automaton(g);
    const CsaAutomaton& aut = built.aut;
    int n = g.n();

    // Transition ids by role.
    using Kind = GadgetTag::Kind;
    auto find = [&](Kind kind, int level, int pick) {
        for (std::size_t ti = 0; ti < built.tags.size(); ++ti) {
            const GadgetTag& t = built.tags[ti];
            if (t.kind == kind && t.level == level && t.pick == pick)
                return static_cast<int>(ti);
        }
        throw std::logic_error("gadget transition not found");
    };

    CsaRun run;
    CsaState cur;
    cur.location = aut.initial;
    cur.counters.assign(static_cast<std::size_t>(aut.k), 0);
    run.states.push_back(cur);

    auto take = [&](int tid) {
        for (const auto& [next, t2] : csa_step(aut, cur)) {
            if (t2 == tid) {
                run.transitions.push_back(tid);
                run.states.push_back(next);
                cur = next;
                return;
            }
        }
        throw std::logic_error("canonical run blocked on transition " + std::to_string(tid));
    };

    for (std::uint64_t j = 1; j <= pow2(n); ++j) {
        const Play& play = seq.plays[j - 1];
        for (int i = 1; i <= n; ++i) {
            take(find(Kind::UniversalPick, i, play.upick(i)));
            take(find(Kind::ExistentialPick, i, play.epick(i)));
        }

        Nat sum = cur.counters[static_cast<std::size_t>(built.layout.top() - 1)];
        if (sum != g.target)
            throw ValidationError("not winning: play " + std::to_string(j) + " sums to " +
                                  std::to_string(sum) + ", target is " +
                                  std::to_string(g.target) + "; the run would stall at loc:w1");
        take(find(Kind::SumCheck, 0, -1));
        take(find(Kind::Connector, 0, -1));

        for (int i = n; i >= 1; --i) {
            if (j % pow2(n - i) != 0)
                break;
            Nat full = pow2(n - i);
            bool e_full =
                cur.counters[static_cast<std::size_t>(built.layout.e(i) - 1)] == full;
            take(find(Kind::ResetEF, i, e_full ? 0 : 1));
            if (j % pow2(n - i + 1) != 0) {
                take(find(Kind::Exit, i, -1));
                break;
            }
            take(find(Kind::Descend, i, -1));
        }
    }

    if (replay_run(aut, run))
        throw std::logic_error("constructed canonical run failed to replay");
    if (!(run.states.back() == built.target))
        throw std::logic_error("constructed canonical run missed (loc:t, all zeros)");
    return run;
}

} // namespace redchain
