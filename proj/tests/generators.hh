/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef NICESEC_GUARD_TESTS_GENERATORS_HH
#define NICESEC_GUARD_TESTS_GENERATORS_HH 1

#include <nicesec/poset.hh>
#include <nicesec/sections.hh>

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace nicesec::testing
{
    /// A random order on n points: each pair i < j is related with
    /// probability density, then closed transitively.
    inline auto random_poset(std::mt19937 & rng, int n, double density) -> Poset
    {
        std::bernoulli_distribution coin(density);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (coin(rng))
                    pairs.emplace_back(i, j);
        return Poset::from_pairs(n, pairs);
    }

    inline auto random_code(std::mt19937 & rng, int height, bool table_code = true) -> SectionCode
    {
        std::bernoulli_distribution coin(0.5);
        std::string bits;
        for (int i = 0 ; i < height ; ++i)
            bits += coin(rng) ? '1' : '0';
        if (table_code)
            bits[0] = '1';
        return SectionCode{bits};
    }

    /// Every code of the given height with first and last bit 1.
    inline auto crowned_codes(int height) -> std::vector<SectionCode>
    {
        std::vector<SectionCode> result;
        for (auto & c : table_codes(height))
            if (c.is_nice_section_code())
                result.push_back(c);
        return result;
    }

    /// Independent of the library: the order of the grid construction read
    /// straight off the bits.
    inline auto grid_less(const std::string & bits, int a, int b) -> bool
    {
        int ka = a / 3, ja = a % 3, kb = b / 3, jb = b % 3;
        if (kb - ka >= 2)
            return true;
        if (kb - ka != 1)
            return false;
        return jb == ja || (bits[ka] == '1' && jb == (ja + 1) % 3);
    }
}

#endif
