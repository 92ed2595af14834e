/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef NICESEC_GUARD_SECTIONS_HH
#define NICESEC_GUARD_SECTIONS_HH 1

#include <nicesec/poset.hh>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nicesec
{
    /**
     * The binary code of a horizon-two segment: bit k says whether the level
     * pair (k, k + 1) is a 6-crown ('1') or of type 3C ('0'). The empty code
     * is a single 3-antichain.
     */
    class SectionCode
    {
        private:
            std::string _bits;

        public:
            SectionCode() = default;

            /// Throws ParseError on anything but '0' and '1'.
            explicit SectionCode(std::string_view bits);

            auto str() const -> const std::string &
            {
                return _bits;
            }

            auto height() const -> int
            {
                return int(_bits.size());
            }

            auto bit(int k) const -> bool
            {
                return _bits.at(k) == '1';
            }

            auto reversed() const -> SectionCode;

            /// Bits [from, to), i.e. the code of levels from..to.
            auto slice(int from, int to) const -> SectionCode;

            auto prefix(int length) const -> SectionCode
            {
                return slice(0, length);
            }

            /// Starts with '1': a lower segment of a nice section.
            auto is_table_code() const -> bool
            {
                return ! _bits.empty() && _bits.front() == '1';
            }

            /// Length >= 2 with first and last bit 1: a full nice section of
            /// horizon two.
            auto is_nice_section_code() const -> bool
            {
                return _bits.size() >= 2 && _bits.front() == '1' && _bits.back() == '1';
            }

            auto operator<=> (const SectionCode &) const = default;
    };

    auto dual_code(const SectionCode & code) -> SectionCode;

    /// Every code of the given height that starts with '1', in the order
    /// used by the published table: codes ending in 1 first, then those
    /// ending in 0, each group by decreasing number of ones and then by
    /// increasing binary value of the code read backwards.
    auto table_codes(int height) -> std::vector<SectionCode>;

    /**
     * A poset whose points are the grid points c_{k,j}, k in [0, h], j in
     * {0, 1, 2}, with index 3k + j. Level k is {c_{k,0}, c_{k,1}, c_{k,2}}
     * and C_j = c_{0,j} < ... < c_{h,j} are the main chains.
     */
    class GridPoset
    {
        private:
            Poset _poset;
            SectionCode _code;

        public:
            GridPoset(Poset poset, SectionCode code);

            auto poset() const -> const Poset &
            {
                return _poset;
            }

            auto code() const -> const SectionCode &
            {
                return _code;
            }

            auto height() const -> int
            {
                return _code.height();
            }

            static constexpr auto point(int k, int j) -> int
            {
                return 3 * k + j;
            }

            /// The level index lambda.
            static constexpr auto level_index(int p) -> int
            {
                return p / 3;
            }

            /// The chain index gamma.
            static constexpr auto chain_index(int p) -> int
            {
                return p % 3;
            }

            auto level(int k) const -> PointSet
            {
                return _poset.level(k);
            }
    };

    auto point_name(int k, int j) -> std::string;

    auto build_from_code(const SectionCode & code) -> GridPoset;

    /// Reads the consecutive level-pair types. Throws StructureError when a
    /// level pair is 33 or of another type, or a level is not of size three.
    auto code_of(const Poset & p) -> SectionCode;
    auto code_of(const GridPoset & p) -> SectionCode;

    /// Smallest eta with P(k, k + eta) of type 33 for all k. Throws
    /// HeightError below height two.
    auto horizon(const Poset & p) -> int;
    auto horizon(const GridPoset & p) -> int;

    /// A labelling coordinate (k, j) for every point, indexed by point.
    using GridCoords = std::vector<std::array<int, 2>>;

    /// Finds coordinates c_{k,j} satisfying the section axioms, if any.
    auto find_section_coords(const Poset & p) -> std::optional<GridCoords>;

    auto is_section(const Poset & p, const GridCoords & coords) -> bool;
    auto is_section(const Poset & p) -> bool;
    auto is_section(const GridPoset & p) -> bool;
    auto is_nice_section(const Poset & p) -> bool;
    auto is_nice_section(const GridPoset & p) -> bool;
    auto is_crowned_section(const Poset & p) -> bool;
    auto is_crowned_section(const GridPoset & p) -> bool;

    /// The segment on levels k..l, renumbered so that level k becomes 0.
    auto segment(const GridPoset & p, int k, int l) -> GridPoset;

    /// Extends a bijection from a's level 0 onto b's level 0 (given as a
    /// map indexed by a's points) along the pairs of consecutive-level
    /// comparabilities. Throws ExtensionError if the extension is not
    /// unique or the result is not an isomorphism.
    auto extend_base_bijection(const Poset & a, const Poset & b, std::span<const int> base) -> std::vector<int>;

    /// The unique automorphism of p restricting to the given permutation of
    /// P(0). The permutation is indexed by point (only level-0 entries read).
    auto extend_base_permutation(const GridPoset & p, std::span<const int> permutation) -> std::vector<int>;

    /// The six automorphisms, one per permutation of P(0), identity first.
    auto base_automorphisms(const GridPoset & p) -> std::vector<std::vector<int>>;

    /// An isomorphism between two horizon-two segments with matching codes,
    /// extending the increasing bijection between their bottom levels.
    auto segment_isomorphism(const Poset & a, const Poset & b) -> std::vector<int>;
}

#endif
