/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef NICESEC_GUARD_POINT_SET_HH
#define NICESEC_GUARD_POINT_SET_HH 1

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace nicesec
{
    /// Maximum number of points in any poset handled by this library.
    inline constexpr int max_points = 64;

    /// A set of point indices in [0, 64), stored as a bitmask.
    class PointSet
    {
        private:
            std::uint64_t _bits = 0;

        public:
            constexpr PointSet() = default;

            constexpr explicit PointSet(std::uint64_t bits) : _bits(bits)
            {
            }

            constexpr PointSet(std::initializer_list<int> points)
            {
                for (int p : points)
                    _bits |= std::uint64_t{1} << p;
            }

            static constexpr auto single(int p) -> PointSet
            {
                return PointSet(std::uint64_t{1} << p);
            }

            /// The set {0, ..., n - 1}.
            static constexpr auto first(int n) -> PointSet
            {
                return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
            }

            constexpr auto bits() const -> std::uint64_t
            {
                return _bits;
            }

            constexpr auto contains(int p) const -> bool
            {
                return (_bits >> p) & 1;
            }

            constexpr auto empty() const -> bool
            {
                return 0 == _bits;
            }

            constexpr auto size() const -> int
            {
                return std::popcount(_bits);
            }

            /// Smallest member; undefined on the empty set.
            constexpr auto front() const -> int
            {
                return std::countr_zero(_bits);
            }

            constexpr auto insert(int p) -> void
            {
                _bits |= std::uint64_t{1} << p;
            }

            constexpr auto erase(int p) -> void
            {
                _bits &= ~(std::uint64_t{1} << p);
            }

            constexpr auto subset_of(PointSet o) const -> bool
            {
                return 0 == (_bits & ~o._bits);
            }

            constexpr auto intersects(PointSet o) const -> bool
            {
                return 0 != (_bits & o._bits);
            }

            constexpr auto operator| (PointSet o) const -> PointSet
            {
                return PointSet(_bits | o._bits);
            }

            constexpr auto operator& (PointSet o) const -> PointSet
            {
                return PointSet(_bits & o._bits);
            }

            /// Set difference.
            constexpr auto operator- (PointSet o) const -> PointSet
            {
                return PointSet(_bits & ~o._bits);
            }

            constexpr auto operator|= (PointSet o) -> PointSet &
            {
                _bits |= o._bits;
                return *this;
            }

            constexpr auto operator&= (PointSet o) -> PointSet &
            {
                _bits &= o._bits;
                return *this;
            }

            constexpr auto operator-= (PointSet o) -> PointSet &
            {
                _bits &= ~o._bits;
                return *this;
            }

            constexpr auto operator== (const PointSet &) const -> bool = default;

            /// Lexicographic order on the ascending member lists, so that
            /// {0, 5} < {1} and {0} < {0, 1}.
            auto lex_less(PointSet o) const -> bool
            {
                std::uint64_t a = _bits, b = o._bits;
                while (a && b) {
                    int x = std::countr_zero(a), y = std::countr_zero(b);
                    if (x != y)
                        return x < y;
                    a &= a - 1;
                    b &= b - 1;
                }
                return b != 0;
            }

            auto to_vector() const -> std::vector<int>
            {
                std::vector<int> result;
                for (int p : *this)
                    result.push_back(p);
                return result;
            }

            class Iterator
            {
                private:
                    std::uint64_t _rest;

                public:
                    constexpr explicit Iterator(std::uint64_t rest) : _rest(rest)
                    {
                    }

                    constexpr auto operator* () const -> int
                    {
                        return std::countr_zero(_rest);
                    }

                    constexpr auto operator++ () -> Iterator &
                    {
                        _rest &= _rest - 1;
                        return *this;
                    }

                    constexpr auto operator== (const Iterator &) const -> bool = default;
            };

            constexpr auto begin() const -> Iterator
            {
                return Iterator(_bits);
            }

            constexpr auto end() const -> Iterator
            {
                return Iterator{0};
            }
    };

    /// Calls f on every subset of the given set, in increasing order of the
    /// underlying bitmask.
    template <typename F_>
    auto for_each_subset(PointSet of, F_ && f) -> void
    {
        std::uint64_t full = of.bits(), sub = 0;
        while (true) {
            f(PointSet(sub));
            if (sub == full)
                break;
            sub = (sub - full) & full;
        }
    }
}

#endif
