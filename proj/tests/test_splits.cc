/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/errors.hh>
#include <nicesec/splits.hh>

#include "generators.hh"

#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <string>

using namespace nicesec;
using std::string;
using std::vector;

namespace
{
    auto all_splits(const SectionCode & c) -> vector<Split>
    {
        SplitSearchLog log;
        return all_splits_exhaustive(build_from_code(c).poset(), log);
    }

    auto cut_levels(const Poset & p, const RetractWitness & r) -> string
    {
        std::set<string> keys;
        for (auto & split : matching_splits(p, r)) {
            if (auto d = std::get_if<DownSplit>(&split))
                keys.insert("d" + std::to_string(d->k));
            else
                keys.insert("u" + std::to_string(std::get<UpSplit>(split).k));
        }
        string result;
        for (auto & k : keys)
            result += k;
        return result;
    }
}

TEST_CASE("code 1001 has a down-split at level 2")
{
    SectionCode c{"1001"};
    auto g = build_from_code(c);
    bool found = false;
    for (auto & split : all_splits(c))
        if (auto d = std::get_if<DownSplit>(&split) ; d && d->k == 2) {
            found = true;
            CHECK(check_down_condition(g.poset(), *d));
            CHECK(is_valid_witness(g.poset(), build_retraction(g.poset(), split)));
        }
    CHECK(found);
}

TEST_CASE("first condition: T must lie below the bottom of S")
{
    auto g = build_from_code(SectionCode{"1001"});
    auto & p = g.poset();
    int failed = 0;
    for (auto & split : all_splits(g.code())) {
        auto d = std::get_if<DownSplit>(&split);
        if (! d || d->k != 0)
            continue;
        auto bottom = retract_levels(p, d->s).front();
        for (int a : g.level(0))
            for (int b : g.level(0)) {
                if (a >= b)
                    continue;
                PointSet target{a, b};
                auto t = retraction_exists(p, g.level(0), target);
                REQUIRE(t);
                auto changed = *d;
                changed.t = *t;
                bool below = p.all_below(target, bottom);
                if (! below) {
                    CHECK(! check_down_condition(p, changed));
                    ++failed;
                }
            }
    }
    CHECK(failed > 0);
}

TEST_CASE("second condition rejects some candidates")
{
    long long rejected = 0;
    for (int h = 2 ; h <= 4 ; ++h)
        for (auto & c : testing::crowned_codes(h)) {
            SplitSearchLog log;
            find_split_exhaustive(build_from_code(c).poset(), log);
            rejected += log.rejected_second_condition;
        }
    CHECK(rejected > 0);
}

TEST_CASE("removed points beyond the adjacent level are a contract violation")
{
    auto g = build_from_code(SectionCode{"1001"});
    auto & p = g.poset();
    bool tried = false;
    for (auto & split : all_splits(g.code()))
        if (auto d = std::get_if<DownSplit>(&split) ; d && d->k + 2 <= g.height()) {
            auto changed = *d;
            changed.removed.insert(GridPoset::point(d->k + 2, 0));
            CHECK_THROWS_AS(check_down_condition(p, changed), InvariantError);
            tried = true;
            break;
        }
    CHECK(tried);
}

TEST_CASE("up-splits with nothing removed paste s and t")
{
    int seen = 0;
    for (int h = 3 ; h <= 5 ; ++h)
        for (auto & c : testing::crowned_codes(h)) {
            auto g = build_from_code(c);
            auto & p = g.poset();
            for (auto & split : all_splits(c)) {
                auto u = std::get_if<UpSplit>(&split);
                if (! u || ! u->removed.empty())
                    continue;
                ++seen;
                CHECK(check_up_condition(p, *u));
                auto r = build_retraction_from_up_split(p, *u);
                for (int x : u->s.domain)
                    CHECK(r.map[x] == u->s.map[x]);
                for (int x : u->t.domain)
                    CHECK(r.map[x] == u->t.map[x]);
            }
        }
    CHECK(seen > 0);
}

TEST_CASE("splits and retractions convert both ways up to height 4")
{
    for (int h = 2 ; h <= 4 ; ++h)
        for (auto & c : testing::crowned_codes(h)) {
            auto g = build_from_code(c);
            auto & p = g.poset();
            for (auto & split : all_splits(c)) {
                auto r = build_retraction(p, split);
                CHECK_MESSAGE(is_valid_witness(p, r), c.str() << " " << describe(p, split));
                CHECK(r.retract_class == RetractClass::FourCrownStack);
                CHECK(is_matching(p, r, split));
            }
        }
}

TEST_CASE("every spanning witness has a matching split up to height 5")
{
    for (int h = 2 ; h <= 5 ; ++h)
        for (auto & c : testing::crowned_codes(h)) {
            auto g = build_from_code(c);
            auto w = has_4crownstack_retract(g, OracleMode::Spanning);
            if (! w)
                continue;
            auto split = split_from_retraction(g.poset(), *w);
            CHECK_MESSAGE(is_matching(g.poset(), *w, split), c.str());
        }
}

TEST_CASE("height-3 sections: matching split levels")
{
    auto g = build_from_code(SectionCode{"111"});
    auto w = has_4crownstack_retract(g, OracleMode::Spanning);
    REQUIRE(w);
    CHECK(cut_levels(g.poset(), *w) == "d0u3");

    // some retraction of 101 matches at down-levels 0, 2 and up-levels 1, 3
    auto h = build_from_code(SectionCode{"101"});
    auto & p = h.poset();
    std::map<string, int> seen;
    for (auto & c : crown_stack_candidates(p, p.carrier(), false))
        for_each_retraction_map(p, p.carrier(), c.points, [&] (const vector<int> & m) {
            ++seen[cut_levels(p, make_witness(p, p.carrier(), c.points, m))];
            return true;
        });
    CHECK(seen["d0d2u1u3"] == 48);
}

TEST_CASE("identity on a 4-crown stack splits with nothing removed")
{
    auto q = ordinal_sum(ordinal_sum(Poset::antichain(2), Poset::antichain(2)), Poset::antichain(2));
    vector<int> id(q.size());
    std::iota(id.begin(), id.end(), 0);
    auto w = make_witness(q, q.carrier(), q.carrier(), id);
    auto split = split_from_retraction(q, w);
    std::visit([] (auto & s) { CHECK(s.removed.empty()); }, split);
    CHECK(is_matching(q, w, split));
}

TEST_CASE("gap stack on code 10111 at level 1")
{
    auto g = build_from_code(SectionCode{"10111"});
    auto & p = g.poset();
    SearchStats stats;

    RetractQuery lower;
    lower.allow_stack = false;
    lower.singleton_end = Extreme::Top;
    lower.antichain_shortcut = false;
    auto s = find_retract(p, g.level(0), lower, stats);
    REQUIRE(s);
    CHECK(s->retract_class == RetractClass::TwoAntichain);

    RetractQuery upper;
    upper.singleton_end = Extreme::Bottom;
    auto t = find_retract(p, p.levels_between(2, 5), upper, stats);
    REQUIRE(t);

    auto split = gap_stack_split(g, 1, *s, *t);
    REQUIRE(split);
    auto r = build_retraction(p, *split);
    CHECK(is_valid_witness(p, r));
    CHECK(r.retract_class == RetractClass::FourCrownStack);
}

TEST_CASE("gap stack refuses a 6-crown stack across the gap")
{
    auto g = build_from_code(SectionCode{"10111"});
    auto & p = g.poset();
    SearchStats stats;
    RetractQuery any;
    any.antichain_shortcut = false;
    auto s = find_retract(p, p.levels_between(0, 2), any, stats);
    REQUIRE(s);
    auto t = find_retract(p, p.levels_between(4, 5), any, stats);
    CHECK_THROWS_AS(gap_stack_split(g, 3, *s, t ? *t : *s), PreconditionError);
}

TEST_CASE("exhaustive split search agrees with the oracle")
{
    for (int h = 1 ; h <= 5 ; ++h)
        for (auto & c : table_codes(h)) {
            auto g = build_from_code(c);
            SplitSearchLog log;
            auto split = find_split_exhaustive(g.poset(), log);
            CHECK_MESSAGE(bool(split) == bool(has_4crownstack_retract(g, OracleMode::Spanning)), c.str());
            if (split)
                CHECK(is_valid_witness(g.poset(), build_retraction(g.poset(), *split)));
        }
}

TEST_CASE("up-splits mirror down-splits of the dual")
{
    for (auto & c : testing::crowned_codes(4)) {
        auto p = build_from_code(c).poset();
        SplitSearchLog log;
        search_down_splits(p.dual(), log, [&] (const DownSplit & d) {
            auto u = up_split_from_dual(p, d);
            CHECK(u.k == c.height() - d.k);
            CHECK(check_up_condition(p, u));
            return true;
        });
    }
}
