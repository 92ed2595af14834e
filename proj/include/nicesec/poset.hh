/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef NICESEC_GUARD_POSET_HH
#define NICESEC_GUARD_POSET_HH 1

#include <nicesec/errors.hh>
#include <nicesec/point_set.hh>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nicesec
{
    /**
     * An immutable finite poset on the points 0, ..., n - 1, stored as a
     * strict order. Each point carries the set of points strictly below and
     * strictly above it. Level sets (repeatedly stripping minimal points) are
     * computed once at construction.
     *
     * Sub-posets keep the indices of the poset they came from: an induced
     * poset on Y has size() equal to the parent's, with carrier() == Y. This
     * keeps witnesses on segments and on reduced posets directly comparable
     * with the ambient poset.
     */
    class Poset
    {
        private:
            int _size = 0;
            PointSet _carrier;
            std::vector<PointSet> _below, _above;
            std::vector<std::string> _labels;
            std::vector<PointSet> _levels;
            std::vector<int> _level_of;

            auto compute_levels() -> void;

        public:
            Poset() = default;

            /// Takes a strict order that has already been closed and
            /// checked. Throws InvariantError if it is not irreflexive and
            /// transitive on the carrier.
            Poset(int size, PointSet carrier, std::vector<PointSet> below, std::vector<std::string> labels = {});

            /// The transitive closure of the given pairs (a, b), read as a < b.
            static auto from_pairs(int n, std::span<const std::pair<int, int>> pairs,
                    std::vector<std::string> labels = {}) -> Poset;

            static auto antichain(int n) -> Poset;
            static auto chain(int n) -> Poset;

            /// The 2n-crown: bottoms 0..n-1, tops n..2n-1, bottom i below tops
            /// i and (i + 1) mod n.
            static auto crown(int n) -> Poset;

            auto size() const -> int
            {
                return _size;
            }

            auto carrier() const -> PointSet
            {
                return _carrier;
            }

            auto point_count() const -> int
            {
                return _carrier.size();
            }

            auto less(int a, int b) const -> bool
            {
                return _below[b].contains(a);
            }

            auto less_equal(int a, int b) const -> bool
            {
                return a == b || _below[b].contains(a);
            }

            auto comparable(int a, int b) const -> bool
            {
                return a == b || _below[b].contains(a) || _above[b].contains(a);
            }

            auto below(int p) const -> PointSet
            {
                return _below[p];
            }

            auto above(int p) const -> PointSet
            {
                return _above[p];
            }

            auto label(int p) const -> std::string;

            auto labels() const -> const std::vector<std::string> &
            {
                return _labels;
            }

            auto levels() const -> const std::vector<PointSet> &
            {
                return _levels;
            }

            auto level_count() const -> int
            {
                return int(_levels.size());
            }

            /// Height h_P; -1 for the empty poset.
            auto height() const -> int
            {
                return int(_levels.size()) - 1;
            }

            auto level(int k) const -> PointSet;

            /// Points of levels k..l inclusive.
            auto levels_between(int k, int l) const -> PointSet;

            auto level_of(int p) const -> int
            {
                return _level_of[p];
            }

            auto minimal() const -> PointSet
            {
                return _levels.empty() ? PointSet{} : _levels.front();
            }

            auto maximal() const -> PointSet;

            /// Points x in the set with nothing from the set above (below) x.
            auto maximal_in(PointSet set) const -> PointSet;
            auto minimal_in(PointSet set) const -> PointSet;

            auto is_antichain(PointSet set) const -> bool;

            /// Every member of a is below every member of b.
            auto all_below(PointSet a, PointSet b) const -> bool;

            auto is_down_set(PointSet set) const -> bool;
            auto is_up_set(PointSet set) const -> bool;

            /// Connected components of the comparability graph restricted to
            /// the carrier.
            auto components() const -> std::vector<PointSet>;

            auto connected() const -> bool
            {
                return components().size() <= 1;
            }

            /// The induced sub-poset on y, same indices.
            auto induced(PointSet y) const -> Poset;

            /// The induced sub-poset on y, renumbered 0..|y|-1 in increasing
            /// index order, keeping labels.
            auto induced_compact(PointSet y) const -> Poset;

            auto dual() const -> Poset;

            auto operator== (const Poset & other) const -> bool;
    };

    /// P + Q with every point of P below every point of Q; Q's points are
    /// renumbered after P's. Both operands must have compact carriers.
    auto ordinal_sum(const Poset & p, const Poset & q) -> Poset;

    auto width(const Poset & p) -> int;

    /// Pairs (x, y) with x covered by y.
    auto covers(const Poset & p) -> std::vector<std::pair<int, int>>;
    auto lower_covers(const Poset & p, int x) -> PointSet;
    auto upper_covers(const Poset & p, int x) -> PointSet;

    /// Points with exactly one lower cover or exactly one upper cover.
    auto irreducible_points(const Poset & p) -> PointSet;

    auto is_crown(const Poset & p, int n) -> bool;
    auto is_crown_stack(const Poset & p, int n) -> bool;

    enum class LevelPairType
    {
        SixCrown,
        ThreeC,
        ThreeThree,
        Other
    };

    auto to_string(LevelPairType t) -> std::string;

    auto classify_level_pair(const Poset & p, int k, int l) -> LevelPairType;

    /// An isomorphism from p onto q as a vector indexed by p's points, if any.
    auto find_isomorphism(const Poset & p, const Poset & q) -> std::optional<std::vector<int>>;
    auto is_isomorphic(const Poset & p, const Poset & q) -> bool;

    /// Every automorphism of p by exhaustive level-preserving search.
    auto all_automorphisms(const Poset & p) -> std::vector<std::vector<int>>;

    /// Checks that the map (indexed by p's points, -1 outside the carrier)
    /// is an isomorphism from p onto q.
    auto is_isomorphism(const Poset & p, const Poset & q, std::span<const int> map) -> bool;
}

#endif
