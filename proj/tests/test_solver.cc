/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/errors.hh>
#include <nicesec/report.hh>
#include <nicesec/solver.hh>
#include <nicesec/verify.hh>

#include "generators.hh"

#include <doctest.h>

#include <map>
#include <string>

using namespace nicesec;
using std::string;
using std::vector;

namespace
{
    auto answers(const vector<SegmentEntry> & entries) -> string
    {
        string result;
        for (auto & e : entries)
            result += e.answer ? 'y' : 'n';
        return result;
    }
}

TEST_CASE("single codes")
{
    RecursiveSolver solver;
    auto & ten = solver.solve(SectionCode{"10"});
    CHECK(ten.answer);
    REQUIRE(ten.witness());
    CHECK(is_valid_witness(build_from_code(ten.code).poset(), *ten.witness()));

    CHECK(! solver.answer(SectionCode{"11011"}));
    CHECK(solver.answer(SectionCode{"100101"}));
    CHECK(solver.answer(SectionCode{"101001"}));
}

TEST_CASE("solver needs a lower segment code")
{
    RecursiveSolver solver;
    CHECK_THROWS(solver.solve(SectionCode{"011"}));
}

TEST_CASE("small tables")
{
    RecursiveSolver solver;
    auto table = solver.build_table(4);
    REQUIRE(table.size() == 15);
    CHECK(table[0].code.str() == "1");
    CHECK(answers(table) == string("n") + "ny" + "yynn" + "nnnynnyy");
}

TEST_CASE("t-base levels")
{
    RecursiveSolver solver;
    CHECK(solver.solve(SectionCode{"10101"}).tbase_levels == vector<int>{0, 2, 3, 4});
    CHECK(solver.solve(SectionCode{"1011"}).tbase_levels == vector<int>{0, 2, 3});
    CHECK(solver.solve(SectionCode{"101011"}).tbase_levels == vector<int>{0, 2, 3, 4, 5});
    auto by_oracle = [] (const SectionCode & c) { return decide_by_oracle(c).answer; };
    CHECK(tbase_levels_from(SectionCode{"101101"}, by_oracle) == vector<int>{0, 2, 3, 5});
}

TEST_CASE("the published table up to height 6")
{
    RecursiveSolver solver;
    auto table = solver.build_table(6);
    auto & published = published_table();
    REQUIRE(table.size() == 63);
    REQUIRE(published.size() == 63);
    for (std::size_t i = 0 ; i < table.size() ; ++i) {
        CHECK(table[i].code.str() == published[i].code);
        CHECK_MESSAGE(table[i].answer == published[i].answer, published[i].code);
        auto levels = published_levels(published[i]);
        if (! levels.empty())
            CHECK_MESSAGE(table[i].tbase_levels == levels, published[i].code);
    }
}

TEST_CASE("three methods agree")
{
    RecursiveSolver solver;
    for (auto * code : {"1001", "110011", "101101"}) {
        auto report = cross_validate(SectionCode{code}, solver);
        CHECK(report.agree());
    }
    CHECK(cross_validate(SectionCode{"1001"}, solver).oracle.answer);
    CHECK(! cross_validate(SectionCode{"110011"}, solver).splits.answer);
    CHECK(cross_validate(SectionCode{"101101"}, solver).recursive.answer);
}

TEST_CASE("height-6 negatives and their duals")
{
    for (auto * code : {"111011", "111001", "101011", "110001", "110011", "110111", "100111", "110101", "100011"}) {
        SectionCode c{code};
        CHECK_MESSAGE(! decide_by_oracle(c).answer, code);
        CHECK_MESSAGE(! decide_by_splits(c).answer, code);
    }
}

TEST_CASE("answers agree with reversed codes")
{
    RecursiveSolver solver;
    for (int h = 1 ; h <= 6 ; ++h)
        for (auto & c : table_codes(h))
            if (c.reversed().is_table_code())
                CHECK_MESSAGE(solver.answer(c) == solver.answer(c.reversed()), c.str());
}

TEST_CASE("codes ending in 0 follow their prefix")
{
    for (int h = 2 ; h <= 6 ; ++h)
        for (auto & c : table_codes(h))
            if (! c.bit(h - 1))
                CHECK_MESSAGE(decide_by_oracle(c).answer == (h == 2 || decide_by_oracle(c.prefix(h - 2)).answer), c.str());
}

TEST_CASE("parallel and serial tables are identical")
{
    SolverOptions serial, parallel;
    parallel.workers = 4;
    RecursiveSolver a(serial), b(parallel);
    CHECK(table_to_json_lines(a.build_table(6)) == table_to_json_lines(b.build_table(6)));
}

TEST_CASE("criteria change no answers")
{
    SolverOptions without;
    without.use_criteria = false;
    RecursiveSolver a, b(without);
    CHECK(answers(a.build_table(6)) == answers(b.build_table(6)));
}

TEST_CASE("random codes: recursive answer matches the oracle")
{
    std::mt19937 rng(99);
    RecursiveSolver solver;
    for (int round = 0 ; round < 20 ; ++round) {
        auto c = testing::random_code(rng, 1 + int(rng() % 6));
        CHECK_MESSAGE(solver.answer(c) == decide_by_oracle(c).answer, c.str());
    }
}
