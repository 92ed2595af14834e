/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/errors.hh>
#include <nicesec/sections.hh>

#include "generators.hh"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace nicesec;
using std::string;
using std::vector;

TEST_CASE("section codes")
{
    CHECK_THROWS_AS(SectionCode{"2x1"}, ParseError);
    SectionCode c{"10011"};
    CHECK(c.height() == 5);
    CHECK(c.reversed().str() == "11001");
    CHECK(c.slice(1, 4).str() == "001");
    CHECK(c.prefix(2).str() == "10");
    CHECK(c.is_table_code());
    CHECK(c.is_nice_section_code());
    CHECK(! SectionCode{"10"}.is_nice_section_code());
    CHECK(! SectionCode{"01"}.is_table_code());
}

TEST_CASE("table order")
{
    vector<string> got;
    for (auto & c : table_codes(4))
        got.push_back(c.str());
    CHECK(got == vector<string>{"1111", "1101", "1011", "1001", "1110", "1100", "1010", "1000"});

    got.clear();
    for (auto & c : table_codes(3))
        got.push_back(c.str());
    CHECK(got == vector<string>{"111", "101", "110", "100"});

    for (int h = 1 ; h <= 6 ; ++h)
        CHECK(table_codes(h).size() == std::size_t{1} << (h - 1));
}

TEST_CASE("build from code")
{
    auto one = build_from_code(SectionCode{"1"});
    CHECK(one.poset().point_count() == 6);
    int pairs = 0;
    for (int x : one.poset().carrier())
        pairs += one.poset().above(x).size();
    CHECK(pairs == 6);

    auto ten = build_from_code(SectionCode{"10"});
    pairs = 0;
    for (int x : ten.poset().carrier())
        pairs += ten.poset().above(x).size();
    CHECK(pairs == 18);

    auto eleven = build_from_code(SectionCode{"11"});
    CHECK(eleven.poset().point_count() == 9);
    CHECK(is_crown_stack(eleven.poset(), 3));

    CHECK(point_name(2, 1) == "c2,1");
    CHECK(eleven.poset().label(GridPoset::point(2, 1)) == "c2,1");
}

TEST_CASE("construction matches the bit rule")
{
    std::mt19937 rng(7);
    for (int round = 0 ; round < 50 ; ++round) {
        auto c = testing::random_code(rng, 1 + int(rng() % 7), false);
        auto g = build_from_code(c);
        int n = 3 * (c.height() + 1);
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                REQUIRE(g.poset().less(a, b) == testing::grid_less(c.str(), a, b));
        CHECK(code_of(g) == c);
        CHECK(code_of(g.poset()) == c);
    }
}

TEST_CASE("dual codes")
{
    SectionCode c{"10011"};
    CHECK(dual_code(c).str() == "11001");
    auto g = build_from_code(c);
    CHECK(is_isomorphic(g.poset().dual(), build_from_code(dual_code(c)).poset()));
}

TEST_CASE("horizon")
{
    CHECK(horizon(build_from_code(SectionCode{"11"})) == 2);
    CHECK(horizon(build_from_code(SectionCode{"1011"})) == 2);
    CHECK_THROWS_AS(horizon(build_from_code(SectionCode{"1"})), HeightError);
}

TEST_CASE("section predicates")
{
    auto g = build_from_code(SectionCode{"101"});
    CHECK(is_section(g));
    CHECK(is_nice_section(g));
    CHECK(is_crowned_section(g));

    auto ten = build_from_code(SectionCode{"10"});
    CHECK(is_section(ten));
    CHECK(! is_crowned_section(ten));
    CHECK(! is_nice_section(ten));

    CHECK(is_section(Poset::antichain(2)));
    CHECK(! is_section(Poset::chain(3)));
}

TEST_CASE("segments")
{
    auto g = build_from_code(SectionCode{"10101"});
    CHECK(segment(g, 0, 2).code().str() == "10");
    CHECK(segment(build_from_code(SectionCode{"1011"}), 1, 4).code().str() == "011");
    CHECK(segment(g, 2, 5).poset().point_count() == 12);
}

TEST_CASE("base permutations extend to automorphisms")
{
    auto g = build_from_code(SectionCode{"11"});
    int n = g.poset().size();

    vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(extend_base_permutation(g, identity) == identity);

    // rotating the bottom level rotates every level
    vector<int> cycle = identity;
    for (int j = 0 ; j < 3 ; ++j)
        cycle[GridPoset::point(0, j)] = GridPoset::point(0, (j + 1) % 3);
    auto rotation = extend_base_permutation(g, cycle);
    for (int k = 0 ; k <= 2 ; ++k)
        for (int j = 0 ; j < 3 ; ++j)
            CHECK(rotation[GridPoset::point(k, j)] == GridPoset::point(k, (j + 1) % 3));

    auto h = build_from_code(SectionCode{"101"});
    auto autos = base_automorphisms(h);
    CHECK(autos.size() == 6);
    CHECK(std::set<vector<int>>(autos.begin(), autos.end()).size() == 6);
    auto brute = all_automorphisms(h.poset());
    CHECK(std::set<vector<int>>(brute.begin(), brute.end()) == std::set<vector<int>>(autos.begin(), autos.end()));
}

TEST_CASE("isomorphism types of crowned sections")
{
    for (int n = 2 ; n <= 5 ; ++n) {
        auto codes = testing::crowned_codes(n);
        CHECK(codes.size() == std::size_t{1} << (n - 2));
        for (std::size_t i = 0 ; i < codes.size() ; ++i) {
            auto a = build_from_code(codes[i]);
            CHECK(all_automorphisms(a.poset()).size() == 6);
            for (std::size_t j = i + 1 ; j < codes.size() ; ++j)
                CHECK(! is_isomorphic(a.poset(), build_from_code(codes[j]).poset()));
        }
    }
}

TEST_CASE("crowned sections are nice")
{
    for (int h = 2 ; h <= 6 ; ++h)
        for (auto & c : testing::crowned_codes(h)) {
            auto g = build_from_code(c);
            CHECK(irreducible_points(g.poset()).empty());
            CHECK(is_nice_section(g));
        }
}
