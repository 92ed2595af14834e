/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/sections.hh>

#include <algorithm>
#include <bit>
#include <numeric>

using std::array;
using std::optional;
using std::pair;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace nicesec
{
    using std::to_string;

    SectionCode::SectionCode(string_view bits) :
        _bits(bits)
    {
        for (char c : _bits)
            if (c != '0' && c != '1')
                throw ParseError{"section code '" + _bits + "' contains a character other than 0 and 1"};
        if (_bits.size() > std::size_t(max_points / 3 - 1))
            throw ParseError{"section code '" + _bits + "' is too long"};
    }

    auto SectionCode::reversed() const -> SectionCode
    {
        return SectionCode{string(_bits.rbegin(), _bits.rend())};
    }

    auto SectionCode::slice(int from, int to) const -> SectionCode
    {
        if (from < 0 || to > height() || from > to)
            throw LevelError{"code slice [" + to_string(from) + ", " + to_string(to) + ") out of range"};
        return SectionCode{string_view{_bits}.substr(from, to - from)};
    }

    auto dual_code(const SectionCode & code) -> SectionCode
    {
        return code.reversed();
    }

    auto table_codes(int height) -> vector<SectionCode>
    {
        vector<SectionCode> result;
        if (height < 1)
            return result;

        vector<unsigned> values;
        for (unsigned v = 0 ; v < (1u << (height - 1)) ; ++v)
            values.push_back((1u << (height - 1)) | v);
        // the value of the code read backwards
        auto backwards = [height] (unsigned v) {
            unsigned r = 0;
            for (int i = 0 ; i < height ; ++i)
                r |= ((v >> i) & 1) << (height - 1 - i);
            return r;
        };
        std::sort(values.begin(), values.end(), [&] (unsigned a, unsigned b) {
                if ((a & 1) != (b & 1))
                    return (a & 1) > (b & 1);
                if (std::popcount(a) != std::popcount(b))
                    return std::popcount(a) > std::popcount(b);
                return backwards(a) < backwards(b);
                });

        for (unsigned v : values) {
            string bits;
            for (int i = height - 1 ; i >= 0 ; --i)
                bits.push_back((v >> i) & 1 ? '1' : '0');
            result.emplace_back(bits);
        }
        return result;
    }

    GridPoset::GridPoset(Poset poset, SectionCode code) :
        _poset(std::move(poset)),
        _code(std::move(code))
    {
        if (_poset.size() != 3 * (_code.height() + 1) || _poset.height() != _code.height())
            throw StructureError{"grid poset does not match its code '" + _code.str() + "'"};
        for (int k = 0 ; k <= _code.height() ; ++k)
            if (_poset.level(k) != PointSet{point(k, 0), point(k, 1), point(k, 2)})
                throw StructureError{"level " + to_string(k) + " is not {c" + to_string(k) + ",*}"};
    }

    auto point_name(int k, int j) -> string
    {
        return "c" + to_string(k) + "," + to_string(j);
    }

    auto build_from_code(const SectionCode & code) -> GridPoset
    {
        int h = code.height(), n = 3 * (h + 1);
        vector<pair<int, int>> pairs;
        vector<string> labels;
        for (int k = 0 ; k <= h ; ++k)
            for (int j = 0 ; j < 3 ; ++j)
                labels.push_back(point_name(k, j));

        for (int k = 0 ; k < h ; ++k)
            for (int j = 0 ; j < 3 ; ++j) {
                pairs.emplace_back(GridPoset::point(k, j), GridPoset::point(k + 1, j));
                if (code.bit(k))
                    pairs.emplace_back(GridPoset::point(k, j), GridPoset::point(k + 1, (j + 1) % 3));
            }

        for (int k = 0 ; k <= h ; ++k)
            for (int l = k + 2 ; l <= h ; ++l)
                for (int j = 0 ; j < 3 ; ++j)
                    for (int i = 0 ; i < 3 ; ++i)
                        pairs.emplace_back(GridPoset::point(k, j), GridPoset::point(l, i));

        return GridPoset{Poset::from_pairs(n, pairs, std::move(labels)), code};
    }

    auto code_of(const Poset & p) -> SectionCode
    {
        string bits;
        for (int k = 0 ; k < p.level_count() ; ++k)
            if (p.level(k).size() != 3)
                throw StructureError{"level " + to_string(k) + " does not have three points"};
        for (int k = 0 ; k < p.height() ; ++k) {
            switch (classify_level_pair(p, k, k + 1)) {
                case LevelPairType::SixCrown: bits.push_back('1'); break;
                case LevelPairType::ThreeC:   bits.push_back('0'); break;
                case LevelPairType::ThreeThree:
                    throw StructureError{"consecutive level pair " + to_string(k) + " is of type 33"};
                case LevelPairType::Other:
                    throw StructureError{"consecutive level pair " + to_string(k) + " is neither 6-crown nor 3C"};
            }
        }
        return SectionCode{bits};
    }

    auto code_of(const GridPoset & p) -> SectionCode
    {
        return code_of(p.poset());
    }

    auto horizon(const Poset & p) -> int
    {
        int h = p.height();
        if (h < 2)
            throw HeightError{"horizon needs height at least two, got " + to_string(h)};
        for (int eta = 1 ; eta <= h ; ++eta) {
            bool all = true;
            for (int k = 0 ; all && k + eta <= h ; ++k)
                all = classify_level_pair(p, k, k + eta) == LevelPairType::ThreeThree;
            if (all)
                return eta;
        }
        throw StructureError{"no level distance gives type 33"};
    }

    auto horizon(const GridPoset & p) -> int
    {
        return horizon(p.poset());
    }

    auto is_section(const Poset & p, const GridCoords & coords) -> bool
    {
        int h = p.height();
        if (int(coords.size()) != p.size() || p.point_count() != 3 * (h + 1))
            return false;

        vector<array<int, 3>> at(h + 1, array<int, 3>{-1, -1, -1});
        for (int x : p.carrier()) {
            auto [k, j] = coords[x];
            if (k < 0 || k > h || j < 0 || j > 2 || at[k][j] != -1)
                return false;
            at[k][j] = x;
        }

        for (int k = 0 ; k <= h ; ++k) {
            PointSet row{at[k][0], at[k][1], at[k][2]};
            if (! p.is_antichain(row))
                return false;
            if (k < h)
                for (int j = 0 ; j < 3 ; ++j)
                    if (! p.less(at[k][j], at[k + 1][j]))
                        return false;
        }

        vector<int> rotation(p.size(), -1);
        for (int x : p.carrier()) {
            auto [k, j] = coords[x];
            rotation[x] = at[k][(j + 1) % 3];
        }
        if (! is_isomorphism(p, p, rotation))
            return false;

        for (int k = 0 ; k < h ; ++k)
            if (classify_level_pair(p, k, k + 1) == LevelPairType::ThreeThree)
                return false;
        return true;
    }

    auto find_section_coords(const Poset & p) -> optional<GridCoords>
    {
        int h = p.height();
        if (h < 0 || p.point_count() != 3 * (h + 1))
            return std::nullopt;
        for (int k = 0 ; k <= h ; ++k)
            if (p.level(k).size() != 3)
                return std::nullopt;

        // rows[k][j] is the point at c_{k,j}; try all orderings level by
        // level, keeping the main chains increasing
        vector<array<int, 3>> rows(h + 1);
        optional<GridCoords> result;

        auto to_coords = [&] {
            GridCoords coords(p.size(), array<int, 2>{-1, -1});
            for (int k = 0 ; k <= h ; ++k)
                for (int j = 0 ; j < 3 ; ++j)
                    coords[rows[k][j]] = {k, j};
            return coords;
        };

        auto search = [&] (auto & self, int k) -> bool {
            if (k > h) {
                auto coords = to_coords();
                if (is_section(p, coords)) {
                    result = std::move(coords);
                    return true;
                }
                return false;
            }
            array<int, 3> row;
            auto members = p.level(k).to_vector();
            std::copy(members.begin(), members.end(), row.begin());
            std::sort(row.begin(), row.end());
            do {
                bool ok = true;
                for (int j = 0 ; ok && j < 3 && k > 0 ; ++j)
                    ok = p.less(rows[k - 1][j], row[j]);
                if (! ok)
                    continue;
                rows[k] = row;
                if (self(self, k + 1))
                    return true;
            } while (std::next_permutation(row.begin(), row.end()));
            return false;
        };

        search(search, 0);
        return result;
    }

    auto is_section(const Poset & p) -> bool
    {
        if (p.point_count() == 2 && p.is_antichain(p.carrier()))
            return true;
        if (p.height() < 1)
            return false;
        return find_section_coords(p).has_value();
    }

    auto is_section(const GridPoset & p) -> bool
    {
        if (p.height() < 1)
            return false;
        GridCoords coords(p.poset().size());
        for (int x : p.poset().carrier())
            coords[x] = {GridPoset::level_index(x), GridPoset::chain_index(x)};
        return is_section(p.poset(), coords);
    }

    auto is_nice_section(const Poset & p) -> bool
    {
        return is_section(p) && irreducible_points(p).empty();
    }

    auto is_nice_section(const GridPoset & p) -> bool
    {
        return is_section(p) && irreducible_points(p.poset()).empty();
    }

    namespace
    {
        auto crowned_ends(const Poset & p) -> bool
        {
            int h = p.height();
            return h >= 1 && width(p) == 3
                && classify_level_pair(p, 0, 1) == LevelPairType::SixCrown
                && classify_level_pair(p, h - 1, h) == LevelPairType::SixCrown;
        }
    }

    auto is_crowned_section(const Poset & p) -> bool
    {
        return crowned_ends(p) && is_section(p);
    }

    auto is_crowned_section(const GridPoset & p) -> bool
    {
        return crowned_ends(p.poset()) && is_section(p);
    }

    auto segment(const GridPoset & p, int k, int l) -> GridPoset
    {
        if (k < 0 || l > p.height() || k > l)
            throw LevelError{"segment levels " + to_string(k) + ".." + to_string(l) + " out of range [0, "
                + to_string(p.height()) + "]"};

        Poset compact = p.poset().induced_compact(p.poset().levels_between(k, l));
        vector<PointSet> below(compact.size());
        vector<string> labels;
        for (int x = 0 ; x < compact.size() ; ++x) {
            below[x] = compact.below(x);
            labels.push_back(point_name(GridPoset::level_index(x), GridPoset::chain_index(x)));
        }
        return GridPoset{Poset{compact.size(), compact.carrier(), std::move(below), std::move(labels)},
            p.code().slice(k, l)};
    }

    auto extend_base_bijection(const Poset & a, const Poset & b, span<const int> base) -> vector<int>
    {
        if (a.level_count() != b.level_count() || a.point_count() != b.point_count())
            throw ExtensionError{"posets differ in height or size"};

        vector<int> map(a.size(), -1);
        PointSet image;
        for (int x : a.minimal()) {
            int y = base[x];
            if (y < 0 || ! b.minimal().contains(y) || image.contains(y))
                throw ExtensionError{"base map is not a bijection of the bottom levels"};
            map[x] = y;
            image.insert(y);
        }
        if (image != b.minimal())
            throw ExtensionError{"base map is not onto the bottom level"};

        for (int k = 0 ; k + 1 < a.level_count() ; ++k) {
            PointSet next_image;
            for (int y : a.level(k + 1)) {
                PointSet wanted;
                for (int x : a.below(y) & a.level(k))
                    wanted.insert(map[x]);
                int found = -1;
                for (int y2 : b.level(k + 1))
                    if ((b.below(y2) & b.level(k)) == wanted) {
                        if (found != -1)
                            throw ExtensionError{"extension is not unique at " + a.label(y)};
                        found = y2;
                    }
                if (found == -1 || next_image.contains(found))
                    throw ExtensionError{"no extension at " + a.label(y)};
                map[y] = found;
                next_image.insert(found);
            }
        }

        if (! is_isomorphism(a, b, map))
            throw ExtensionError{"level-wise extension is not an isomorphism"};
        return map;
    }

    auto extend_base_permutation(const GridPoset & p, span<const int> permutation) -> vector<int>
    {
        return extend_base_bijection(p.poset(), p.poset(), permutation);
    }

    auto base_automorphisms(const GridPoset & p) -> vector<vector<int>>
    {
        vector<vector<int>> result;
        array<int, 3> perm{0, 1, 2};
        do {
            vector<int> base(p.poset().size(), -1);
            for (int j = 0 ; j < 3 ; ++j)
                base[j] = perm[j];
            result.push_back(extend_base_permutation(p, base));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return result;
    }

    auto segment_isomorphism(const Poset & a, const Poset & b) -> vector<int>
    {
        vector<int> base(a.size(), -1);
        auto from = a.minimal().to_vector(), to = b.minimal().to_vector();
        if (from.size() != to.size())
            throw ExtensionError{"bottom levels differ in size"};
        for (std::size_t i = 0 ; i < from.size() ; ++i)
            base[from[i]] = to[i];
        return extend_base_bijection(a, b, base);
    }
}
