/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/errors.hh>
#include <nicesec/retraction.hh>
#include <nicesec/sections.hh>

#include "generators.hh"

#include <doctest.h>

#include <numeric>

using namespace nicesec;
using std::vector;

namespace
{
    auto oracle(const char * code, OracleMode mode = OracleMode::Spanning)
    {
        return has_4crownstack_retract(build_from_code(SectionCode{code}), mode);
    }

    /// Checks a witness against the order rebuilt from the bits.
    auto independently_valid(const std::string & bits, const RetractWitness & w) -> bool
    {
        int n = 3 * (int(bits.size()) + 1);
        for (int a = 0 ; a < n ; ++a) {
            if (w.map[w.map[a]] != w.map[a] || ! w.retract.contains(w.map[a]))
                return false;
            for (int b = 0 ; b < n ; ++b)
                if (testing::grid_less(bits, a, b) && w.map[a] != w.map[b]
                        && ! testing::grid_less(bits, w.map[a], w.map[b]))
                    return false;
        }
        return true;
    }
}

TEST_CASE("retraction onto the whole poset is the identity")
{
    auto g = build_from_code(SectionCode{"101"});
    auto & p = g.poset();
    auto w = retraction_exists(p, p.carrier(), p.carrier());
    REQUIRE(w);
    for (int x : p.carrier())
        CHECK(w->map[x] == x);
}

TEST_CASE("a 6-crown has no 4-crown stack retract")
{
    auto g = build_from_code(SectionCode{"1"});
    CHECK(enumerate_4crownstack_candidates(g, true).empty());
    CHECK(enumerate_4crownstack_candidates(g, false).empty());
    CHECK(! oracle("1"));
    CHECK(! oracle("1", OracleMode::Unconstrained));
}

TEST_CASE("candidate 4-crowns of code 11 agree with brute force")
{
    auto g = build_from_code(SectionCode{"11"});
    auto & p = g.poset();
    int brute = 0;
    for (std::uint64_t m = 0 ; m < (1u << 9) ; ++m) {
        PointSet s(m);
        if (s.size() != 4)
            continue;
        // two minimal, two maximal, every bottom below every top
        auto lo = p.induced(s).minimal(), hi = p.induced(s).maximal();
        if (lo.size() == 2 && hi.size() == 2 && ! lo.intersects(hi) && p.all_below(lo, hi))
            ++brute;
    }
    CHECK(brute == 15);
    CHECK(crown_stack_candidates(p, p.carrier(), false).size() == 15);
}

TEST_CASE("the stack itself is among its candidates")
{
    // a 4-crown stack of height 2, bottoms first
    auto q = ordinal_sum(ordinal_sum(Poset::antichain(2), Poset::antichain(2)), Poset::antichain(2));
    bool found = false;
    for (auto & c : crown_stack_candidates(q, q.carrier(), true))
        found = found || c.points == q.carrier();
    CHECK(found);
}

TEST_CASE("oracle answers on small codes")
{
    CHECK(oracle("10"));
    CHECK(oracle("1001"));
    CHECK(! oracle("1011"));
    CHECK(oracle("111"));
    for (auto * code : {"10", "1001", "111", "101", "10011"}) {
        auto w = oracle(code);
        REQUIRE(w);
        CHECK(is_valid_witness(build_from_code(SectionCode{code}).poset(), *w));
        CHECK(independently_valid(code, *w));
    }
}

TEST_CASE("code 10 has a retract with a singleton preimage on top")
{
    auto g = build_from_code(SectionCode{"10"});
    RetractQuery q;
    q.singleton_end = Extreme::Top;
    SearchStats stats;
    auto w = find_retract(g.poset(), g.poset().carrier(), q, stats);
    REQUIRE(w);
    auto singles = singleton_preimage_points(g.poset(), *w, Extreme::Top);
    REQUIRE(! singles.empty());
    for (int v : singles)
        CHECK(w->preimage(v) == PointSet::single(v));
}

TEST_CASE("identity retraction: every extreme point has a singleton preimage")
{
    auto q = ordinal_sum(Poset::antichain(2), Poset::antichain(2));
    vector<int> id(4);
    std::iota(id.begin(), id.end(), 0);
    auto w = make_witness(q, q.carrier(), q.carrier(), id);
    CHECK(singleton_preimage_points(q, w, Extreme::Bottom) == q.level(0));
    CHECK(singleton_preimage_points(q, w, Extreme::Top) == q.level(1));
}

TEST_CASE("code 111 has a retract with a singleton preimage at the bottom")
{
    auto g = build_from_code(SectionCode{"111"});
    RetractQuery q;
    q.singleton_end = Extreme::Bottom;
    SearchStats stats;
    auto w = find_retract(g.poset(), g.poset().carrier(), q, stats);
    REQUIRE(w);
    CHECK(! singleton_preimage_points(g.poset(), *w, Extreme::Bottom).empty());
}

TEST_CASE("retracts after removing bottom points")
{
    auto q011 = build_from_code(SectionCode{"011"});
    for (int j = 0 ; j < 3 ; ++j)
        CHECK(! has_class_retract_minus(q011, PointSet::single(GridPoset::point(0, j)), Side::Down));

    auto q001 = build_from_code(SectionCode{"001"});
    auto w = has_class_retract_minus(q001, PointSet::single(GridPoset::point(0, 0)), Side::Down);
    REQUIRE(w);
    CHECK(w->retract_class == RetractClass::FourCrownStack);
    CHECK(w->retract_height == 1);

    // nothing removed: same answer as the oracle
    for (auto * code : {"1", "10", "111", "1011", "1001"}) {
        auto g = build_from_code(SectionCode{code});
        CHECK(bool(has_class_retract_minus(g, PointSet{}, Side::Down)) == bool(has_4crownstack_retract(g, OracleMode::Unconstrained)));
    }

    // not a down-set
    CHECK_THROWS_AS(has_class_retract_minus(q011, PointSet::single(GridPoset::point(1, 0)), Side::Down), SideError);
}

TEST_CASE("code 011: removing one bottom point is never enough")
{
    auto g = build_from_code(SectionCode{"011"});
    auto & p = g.poset();
    int tried = 0;
    for (std::uint64_t m = 0 ; m < (std::uint64_t{1} << p.size()) ; ++m) {
        PointSet d(m);
        if (d == p.carrier() || ! p.is_down_set(d) || (d & g.level(0)).size() > 1)
            continue;
        ++tried;
        CHECK(! has_class_retract_minus(g, d, Side::Down));
    }
    CHECK(tried == 7);
}

TEST_CASE("witness validation catches broken maps")
{
    auto g = build_from_code(SectionCode{"10"});
    auto w = *has_4crownstack_retract(g, OracleMode::Spanning);
    CHECK(! witness_problem(g.poset(), w));

    auto broken = w;
    int moved = -1;
    for (int x : broken.domain)
        if (! broken.retract.contains(x)) {
            moved = x;
            break;
        }
    REQUIRE(moved >= 0);
    broken.map[moved] = moved;
    CHECK(witness_problem(g.poset(), broken));

    auto not_idempotent = w;
    int a = w.retract.front(), b = -1;
    for (int x : w.retract)
        if (x != a && b < 0)
            b = x;
    not_idempotent.map[a] = b;
    CHECK(witness_problem(g.poset(), not_idempotent));
}

TEST_CASE("node budget turns into an explicit error")
{
    auto g = build_from_code(SectionCode{"1011"});
    RetractQuery q;
    q.budget = 1;
    SearchStats stats;
    CHECK_THROWS_AS(find_retract(g.poset(), g.poset().carrier(), q, stats), UndecidedError);
}

TEST_CASE("spanning and unconstrained oracles agree up to height 4")
{
    for (int h = 1 ; h <= 4 ; ++h)
        for (auto & c : table_codes(h)) {
            auto g = build_from_code(c);
            CHECK_MESSAGE(bool(has_4crownstack_retract(g, OracleMode::Spanning))
                    == bool(has_4crownstack_retract(g, OracleMode::Unconstrained)), c.str());
        }
}

TEST_CASE("6-crown stacks have a retract iff the height is divisible by three")
{
    for (int h = 1 ; h <= 6 ; ++h)
        CHECK(bool(oracle(std::string(h, '1').c_str())) == (h % 3 == 0));
}

TEST_CASE("bottom level of a retract meets the bottom of the section")
{
    for (int h = 2 ; h <= 5 ; ++h)
        for (auto & c : testing::crowned_codes(h)) {
            auto g = build_from_code(c);
            if (auto w = has_4crownstack_retract(g, OracleMode::Spanning))
                CHECK(retract_levels(g.poset(), *w).front().intersects(g.level(0)));
            if (auto w = has_4crownstack_retract(g, OracleMode::Unconstrained))
                CHECK(retract_levels(g.poset(), *w).front().intersects(g.level(0) | g.level(1)));
        }
}

TEST_CASE("random codes: witnesses validate against the bit rule")
{
    std::mt19937 rng(12345);
    for (int round = 0 ; round < 30 ; ++round) {
        auto c = testing::random_code(rng, 2 + int(rng() % 4));
        auto g = build_from_code(c);
        if (auto w = has_4crownstack_retract(g, OracleMode::Unconstrained))
            CHECK_MESSAGE(independently_valid(c.str(), *w), c.str());
    }
}
