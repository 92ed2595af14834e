/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/errors.hh>
#include <nicesec/splits.hh>

#include "generators.hh"

#include <doctest.h>

#include <map>

using namespace nicesec;

namespace
{
    auto oracle_answer(const SectionCode & c) -> bool
    {
        if (c.height() == 0)
            return true;
        return bool(has_4crownstack_retract(build_from_code(c), OracleMode::Spanning));
    }

    auto bottom_pair(int k) -> PointSet
    {
        return PointSet{GridPoset::point(k, 0), GridPoset::point(k, 1)};
    }
}

TEST_CASE("criterion 5 prunes the upper part of 1111")
{
    SectionCode c{"1111"};
    CHECK(criterion(c, 5, {Side::Down, 0, {}}, oracle_answer) == Verdict::Prune);
    CHECK(criterion(c, 5, {Side::Down, 0, PointSet::single(GridPoset::point(1, 0))}, oracle_answer) == Verdict::Prune);
}

TEST_CASE("criterion 3 prunes the top pair of 1011")
{
    SectionCode c{"1011"};
    CHECK(criterion(c, 3, {Side::Down, 2, bottom_pair(3)}, oracle_answer) == Verdict::Prune);
    // 1001 has a 3C pair below its top pair
    CHECK(criterion(SectionCode{"1001"}, 3, {Side::Down, 2, bottom_pair(3)}, oracle_answer) == Verdict::NoPrune);
}

TEST_CASE("criteria 2 and 4 look at the size of the removed set")
{
    SectionCode c{"1001"};
    CHECK(criterion(c, 2, {Side::Down, 2, PointSet::single(GridPoset::point(3, 0))}, oracle_answer) == Verdict::Prune);
    CHECK(criterion(c, 2, {Side::Down, 2, bottom_pair(3)}, oracle_answer) == Verdict::NoPrune);
    CHECK(criterion(c, 4, {Side::Down, 0, bottom_pair(1)}, oracle_answer) == Verdict::Prune);
    CHECK(criterion(c, 4, {Side::Down, 0, PointSet::single(GridPoset::point(1, 0))}, oracle_answer) == Verdict::NoPrune);
}

TEST_CASE("criterion 1 follows the prefix three levels shorter")
{
    // prefix "1" has no retract, prefix "10" has
    CHECK(criterion(SectionCode{"1011"}, 1, {Side::Down, 3, {}}, oracle_answer) == Verdict::Prune);
    CHECK(criterion(SectionCode{"10011"}, 1, {Side::Down, 4, {}}, oracle_answer) == Verdict::NoPrune);
}

TEST_CASE("no criterion prunes the successful splits of 1001")
{
    SectionCode c{"1001"};
    SplitSearchLog log;
    auto splits = all_splits_exhaustive(build_from_code(c).poset(), log);
    REQUIRE(! splits.empty());
    for (auto & split : splits)
        CHECK(! any_criterion_prunes(c, context_of(split), oracle_answer));
}

TEST_CASE("code 1001 needs both crown hypotheses")
{
    SectionCode c{"1001"};
    SplitSearchLog log;
    auto splits = all_splits_exhaustive(build_from_code(c).poset(), log);
    CriteriaOptions drop3, drop5;
    drop3.drop_crown_hypothesis_3 = true;
    drop5.drop_crown_hypothesis_5 = true;
    int pruned3 = 0, pruned5 = 0;
    for (auto & split : splits) {
        pruned3 += any_criterion_prunes(c, context_of(split), oracle_answer, drop3);
        pruned5 += any_criterion_prunes(c, context_of(split), oracle_answer, drop5);
    }
    CHECK(pruned3 > 0);
    CHECK(pruned5 > 0);
}

TEST_CASE("criteria reject contexts they do not speak about")
{
    SectionCode c{"1001"};
    CHECK_THROWS_AS(criterion(c, 1, {Side::Down, 0, {}}, oracle_answer), ContextError);
    CHECK_THROWS_AS(criterion(c, 4, {Side::Down, 2, {}}, oracle_answer), ContextError);
    CHECK_THROWS_AS(criterion(SectionCode{"1000"}, 4, {Side::Down, 0, {}}, oracle_answer), ContextError);
    CHECK_THROWS_AS(criterion(SectionCode{"11"}, 4, {Side::Down, 0, {}}, oracle_answer), ContextError);
    CHECK_THROWS_AS(criterion(c, 6, {Side::Down, 0, {}}, oracle_answer), ContextError);
}

TEST_CASE("inverted criteria flip every verdict")
{
    CriteriaOptions invert;
    invert.invert = true;
    SectionCode c{"1011"};
    CriterionContext context{Side::Down, 2, bottom_pair(3)};
    CHECK(criterion(c, 3, context, oracle_answer, invert) == Verdict::NoPrune);
    CHECK(criterion(c, 2, context, oracle_answer, invert) == Verdict::Prune);
}

TEST_CASE("up contexts are answered on the reversed code")
{
    // an up-split of 1101 at k = 1 is a down-split of 1011 at k = 3
    SectionCode c{"1101"};
    CHECK(criterion(c, 1, {Side::Up, 1, {}}, oracle_answer)
            == criterion(c.reversed(), 1, {Side::Down, 3, {}}, oracle_answer));
}

TEST_CASE("criteria 1, 2, 4 and 5 never prune a passing split up to height 5")
{
    for (int h = 3 ; h <= 5 ; ++h)
        for (auto & c : testing::crowned_codes(h)) {
            SplitSearchLog log;
            for (auto & split : all_splits_exhaustive(build_from_code(c).poset(), log))
                for (int which : {1, 2, 4, 5}) {
                    Verdict v;
                    try {
                        v = criterion(c, which, context_of(split), oracle_answer);
                    }
                    catch (const ContextError &) {
                        continue;
                    }
                    CHECK_MESSAGE(v == Verdict::NoPrune, c.str() << " criterion " << which);
                }
        }
}

TEST_CASE("criterion 3 prunes passing splits of 10111 and 11101")
{
    // T's top lies in P(3) while t sends the third point of P(3) further
    // down, so both removed points find a witness
    std::map<std::string, int> pruned;
    for (int h = 3 ; h <= 5 ; ++h)
        for (auto & c : testing::crowned_codes(h)) {
            auto g = build_from_code(c);
            SplitSearchLog log;
            for (auto & split : all_splits_exhaustive(g.poset(), log)) {
                Verdict v;
                try {
                    v = criterion(c, 3, context_of(split), oracle_answer);
                }
                catch (const ContextError &) {
                    continue;
                }
                if (v == Verdict::Prune) {
                    ++pruned[c.str()];
                    CHECK(is_valid_witness(g.poset(), build_retraction(g.poset(), split)));
                }
            }
        }
    CHECK(pruned == std::map<std::string, int>{{"10111", 18}, {"11101", 18}});
    // both are still Yes through other splits
    CHECK(oracle_answer(SectionCode{"10111"}));
    CHECK(oracle_answer(SectionCode{"11101"}));
}
