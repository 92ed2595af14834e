/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/poset.hh>

#include <algorithm>
#include <functional>
#include <numeric>

using std::pair;
using std::optional;
using std::span;
using std::string;
using std::vector;

namespace nicesec
{
    using std::to_string;

    Poset::Poset(int size, PointSet carrier, vector<PointSet> below, vector<string> labels) :
        _size(size),
        _carrier(carrier),
        _below(std::move(below)),
        _above(size),
        _labels(std::move(labels))
    {
        if (size < 0 || size > max_points)
            throw IndexError{"poset size " + to_string(size) + " out of range"};
        if (! carrier.subset_of(PointSet::first(size)))
            throw IndexError{"carrier exceeds poset size"};
        if (int(_below.size()) != size)
            throw InvariantError{"relation has wrong number of rows"};
        if (! _labels.empty() && int(_labels.size()) != size)
            throw InvariantError{"label count does not match poset size"};

        for (int x = 0 ; x < size ; ++x) {
            if (! carrier.contains(x)) {
                if (! _below[x].empty())
                    throw InvariantError{"relation row outside the carrier"};
                continue;
            }
            if (! _below[x].subset_of(carrier))
                throw InvariantError{"relation leaves the carrier"};
            if (_below[x].contains(x))
                throw InvariantError{"relation is not irreflexive at " + label(x)};
            for (int y : _below[x]) {
                if (! _below[y].subset_of(_below[x]))
                    throw InvariantError{"relation is not transitive at " + label(x)};
                _above[y].insert(x);
            }
        }

        compute_levels();
    }

    auto Poset::compute_levels() -> void
    {
        _level_of.assign(_size, -1);
        vector<int> order = _carrier.to_vector();
        // a < b implies below(a) is a proper subset of below(b)
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) {
                return _below[a].size() < _below[b].size();
                });

        int height = -1;
        for (int x : order) {
            int l = 0;
            for (int y : _below[x])
                l = std::max(l, _level_of[y] + 1);
            _level_of[x] = l;
            height = std::max(height, l);
        }

        _levels.assign(height + 1, PointSet{});
        for (int x : _carrier)
            _levels[_level_of[x]].insert(x);
    }

    auto Poset::from_pairs(int n, span<const pair<int, int>> pairs, vector<string> labels) -> Poset
    {
        if (n < 0 || n > max_points)
            throw IndexError{"poset size " + to_string(n) + " out of range"};

        vector<PointSet> below(n);
        for (auto & [a, b] : pairs) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw IndexError{"pair (" + to_string(a) + ", " + to_string(b) + ") out of range"};
            below[b].insert(a);
        }

        for (int k = 0 ; k < n ; ++k)
            for (int i = 0 ; i < n ; ++i)
                if (below[i].contains(k))
                    below[i] |= below[k];

        for (int x = 0 ; x < n ; ++x)
            if (below[x].contains(x))
                throw CycleError{"relation contains a cycle through point " + to_string(x)};

        return Poset{n, PointSet::first(n), std::move(below), std::move(labels)};
    }

    auto Poset::antichain(int n) -> Poset
    {
        return from_pairs(n, {});
    }

    auto Poset::chain(int n) -> Poset
    {
        vector<pair<int, int>> pairs;
        for (int i = 0 ; i + 1 < n ; ++i)
            pairs.emplace_back(i, i + 1);
        return from_pairs(n, pairs);
    }

    auto Poset::crown(int n) -> Poset
    {
        vector<pair<int, int>> pairs;
        for (int i = 0 ; i < n ; ++i) {
            pairs.emplace_back(i, n + i);
            pairs.emplace_back(i, n + (i + 1) % n);
        }
        return from_pairs(2 * n, pairs);
    }

    auto Poset::label(int p) const -> string
    {
        if (p >= 0 && p < int(_labels.size()))
            return _labels[p];
        return to_string(p);
    }

    auto Poset::level(int k) const -> PointSet
    {
        if (k < 0 || k >= int(_levels.size()))
            throw LevelError{"level " + to_string(k) + " out of range [0, " + to_string(height()) + "]"};
        return _levels[k];
    }

    auto Poset::levels_between(int k, int l) const -> PointSet
    {
        if (k < 0 || l >= int(_levels.size()) || k > l + 1)
            throw LevelError{"levels " + to_string(k) + ".." + to_string(l) + " out of range"};
        PointSet result;
        for (int i = k ; i <= l ; ++i)
            result |= _levels[i];
        return result;
    }

    auto Poset::maximal() const -> PointSet
    {
        return maximal_in(_carrier);
    }

    auto Poset::maximal_in(PointSet set) const -> PointSet
    {
        PointSet result;
        for (int x : set)
            if (! _above[x].intersects(set))
                result.insert(x);
        return result;
    }

    auto Poset::minimal_in(PointSet set) const -> PointSet
    {
        PointSet result;
        for (int x : set)
            if (! _below[x].intersects(set))
                result.insert(x);
        return result;
    }

    auto Poset::is_antichain(PointSet set) const -> bool
    {
        for (int x : set)
            if (_below[x].intersects(set))
                return false;
        return true;
    }

    auto Poset::all_below(PointSet a, PointSet b) const -> bool
    {
        for (int y : b)
            if (! a.subset_of(_below[y]))
                return false;
        return true;
    }

    auto Poset::is_down_set(PointSet set) const -> bool
    {
        for (int x : set)
            if (! _below[x].subset_of(set))
                return false;
        return true;
    }

    auto Poset::is_up_set(PointSet set) const -> bool
    {
        for (int x : set)
            if (! _above[x].subset_of(set))
                return false;
        return true;
    }

    auto Poset::components() const -> vector<PointSet>
    {
        vector<PointSet> result;
        PointSet todo = _carrier;
        while (! todo.empty()) {
            PointSet component = PointSet::single(todo.front()), frontier = component;
            while (! frontier.empty()) {
                PointSet next;
                for (int x : frontier)
                    next |= _below[x] | _above[x];
                frontier = next - component;
                component |= next;
            }
            result.push_back(component);
            todo -= component;
        }
        return result;
    }

    auto Poset::induced(PointSet y) const -> Poset
    {
        if (! y.subset_of(_carrier))
            throw IndexError{"induced set is not a subset of the carrier"};
        vector<PointSet> below(_size);
        for (int x : y)
            below[x] = _below[x] & y;
        return Poset{_size, y, std::move(below), _labels};
    }

    auto Poset::induced_compact(PointSet y) const -> Poset
    {
        if (! y.subset_of(_carrier))
            throw IndexError{"induced set is not a subset of the carrier"};
        vector<int> members = y.to_vector(), index(_size, -1);
        for (int i = 0 ; i < int(members.size()) ; ++i)
            index[members[i]] = i;

        vector<PointSet> below(members.size());
        vector<string> labels;
        for (int i = 0 ; i < int(members.size()) ; ++i) {
            for (int z : _below[members[i]] & y)
                below[i].insert(index[z]);
            if (! _labels.empty())
                labels.push_back(_labels[members[i]]);
        }
        return Poset{int(members.size()), PointSet::first(members.size()), std::move(below), std::move(labels)};
    }

    auto Poset::dual() const -> Poset
    {
        return Poset{_size, _carrier, _above, _labels};
    }

    auto Poset::operator== (const Poset & other) const -> bool
    {
        return _size == other._size && _carrier == other._carrier && _below == other._below;
    }

    auto ordinal_sum(const Poset & p, const Poset & q) -> Poset
    {
        if (p.carrier() != PointSet::first(p.size()) || q.carrier() != PointSet::first(q.size()))
            throw IndexError{"ordinal_sum needs compact operands"};
        int n = p.size() + q.size();
        if (n > max_points)
            throw IndexError{"ordinal sum too large"};

        vector<PointSet> below(n);
        for (int x = 0 ; x < p.size() ; ++x)
            below[x] = p.below(x);
        for (int y = 0 ; y < q.size() ; ++y) {
            below[p.size() + y] = PointSet::first(p.size());
            for (int z : q.below(y))
                below[p.size() + y].insert(p.size() + z);
        }

        vector<string> labels;
        if (! p.labels().empty() || ! q.labels().empty()) {
            for (int x = 0 ; x < p.size() ; ++x)
                labels.push_back(p.label(x));
            for (int y = 0 ; y < q.size() ; ++y)
                labels.push_back(q.label(y));
        }
        return Poset{n, PointSet::first(n), std::move(below), std::move(labels)};
    }

    namespace
    {
        auto max_antichain(const Poset & p, PointSet candidates, int size, int & best) -> void
        {
            if (candidates.empty()) {
                best = std::max(best, size);
                return;
            }
            if (size + candidates.size() <= best)
                return;
            int v = candidates.front();
            max_antichain(p, candidates - p.below(v) - p.above(v) - PointSet::single(v), size + 1, best);
            max_antichain(p, candidates - PointSet::single(v), size, best);
        }
    }

    auto width(const Poset & p) -> int
    {
        int best = 0;
        max_antichain(p, p.carrier(), 0, best);
        return best;
    }

    auto lower_covers(const Poset & p, int x) -> PointSet
    {
        PointSet result;
        for (int y : p.below(x))
            if (! p.above(y).intersects(p.below(x)))
                result.insert(y);
        return result;
    }

    auto upper_covers(const Poset & p, int x) -> PointSet
    {
        PointSet result;
        for (int y : p.above(x))
            if (! p.below(y).intersects(p.above(x)))
                result.insert(y);
        return result;
    }

    auto covers(const Poset & p) -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (int x : p.carrier())
            for (int y : upper_covers(p, x))
                result.emplace_back(x, y);
        return result;
    }

    auto irreducible_points(const Poset & p) -> PointSet
    {
        PointSet result;
        for (int x : p.carrier())
            if (lower_covers(p, x).size() == 1 || upper_covers(p, x).size() == 1)
                result.insert(x);
        return result;
    }

    auto is_crown(const Poset & p, int n) -> bool
    {
        if (n < 2 || p.point_count() != 2 * n || p.height() != 1)
            return false;
        if (p.level(0).size() != n || p.level(1).size() != n)
            return false;
        for (int x : p.carrier())
            if ((p.below(x) | p.above(x)).size() != 2)
                return false;
        return p.connected();
    }

    auto is_crown_stack(const Poset & p, int n) -> bool
    {
        if (p.height() < 1)
            return false;
        for (int k = 0 ; k < p.height() ; ++k)
            if (! is_crown(p.induced(p.level(k) | p.level(k + 1)), n))
                return false;

        // everything else must follow by transitivity from consecutive levels
        vector<pair<int, int>> pairs;
        for (int y : p.carrier())
            for (int x : p.below(y))
                if (p.level_of(y) == p.level_of(x) + 1)
                    pairs.emplace_back(x, y);
        Poset generated = Poset::from_pairs(p.size(), pairs);
        for (int y : p.carrier())
            if (generated.below(y) != p.below(y))
                return false;
        return true;
    }

    auto to_string(LevelPairType t) -> string
    {
        switch (t) {
            case LevelPairType::SixCrown:   return "6-crown";
            case LevelPairType::ThreeC:     return "3C";
            case LevelPairType::ThreeThree: return "33";
            case LevelPairType::Other:      return "other";
        }
        return "other";
    }

    auto classify_level_pair(const Poset & p, int k, int l) -> LevelPairType
    {
        if (k < 0 || k >= l || l > p.height())
            throw LevelError{"level pair (" + to_string(k) + ", " + to_string(l) + ") invalid for height "
                + to_string(p.height())};

        PointSet lower = p.level(k), upper = p.level(l);
        if (lower.size() != 3 || upper.size() != 3)
            return LevelPairType::Other;

        if (p.all_below(lower, upper))
            return LevelPairType::ThreeThree;

        Poset pair = p.induced(lower | upper);
        if (is_crown(pair, 3))
            return LevelPairType::SixCrown;

        bool matching = true;
        for (int x : lower)
            matching = matching && (p.above(x) & upper).size() == 1;
        for (int y : upper)
            matching = matching && (p.below(y) & lower).size() == 1;
        if (matching)
            return LevelPairType::ThreeC;

        return LevelPairType::Other;
    }

    namespace
    {
        /// Level-preserving backtracking over candidate lists refined by
        /// level and up/down degree. Calls found() on each isomorphism;
        /// stops when it returns false.
        class IsomorphismSearch
        {
            private:
                const Poset & _p;
                const Poset & _q;
                vector<int> _order, _map;
                vector<PointSet> _candidates;
                PointSet _used;
                std::function<auto (const vector<int> &) -> bool> _found;

                auto compatible(int x, int y) const -> bool
                {
                    for (int i = 0 ; i < int(_order.size()) ; ++i) {
                        int x2 = _order[i], y2 = _map[x2];
                        if (y2 < 0)
                            break;
                        if (_p.less(x2, x) != _q.less(y2, y) || _p.less(x, x2) != _q.less(y, y2))
                            return false;
                    }
                    return true;
                }

                auto search(int depth) -> bool
                {
                    if (depth == int(_order.size()))
                        return _found(_map);
                    int x = _order[depth];
                    for (int y : _candidates[x] - _used) {
                        if (! compatible(x, y))
                            continue;
                        _map[x] = y;
                        _used.insert(y);
                        bool keep_going = search(depth + 1);
                        _used.erase(y);
                        _map[x] = -1;
                        if (! keep_going)
                            return false;
                    }
                    return true;
                }

            public:
                IsomorphismSearch(const Poset & p, const Poset & q, std::function<auto (const vector<int> &) -> bool> found) :
                    _p(p), _q(q), _map(p.size(), -1), _candidates(p.size()), _found(std::move(found))
                {
                }

                auto run() -> void
                {
                    if (_p.point_count() != _q.point_count() || _p.level_count() != _q.level_count())
                        return;
                    for (int k = 0 ; k < _p.level_count() ; ++k)
                        if (_p.level(k).size() != _q.level(k).size())
                            return;

                    for (int x : _p.carrier()) {
                        for (int y : _q.level(_p.level_of(x)))
                            if (_p.below(x).size() == _q.below(y).size() && _p.above(x).size() == _q.above(y).size())
                                _candidates[x].insert(y);
                        if (_candidates[x].empty())
                            return;
                    }

                    _order = _p.carrier().to_vector();
                    std::stable_sort(_order.begin(), _order.end(), [&] (int a, int b) {
                            return _p.level_of(a) < _p.level_of(b);
                            });
                    search(0);
                }
        };
    }

    auto find_isomorphism(const Poset & p, const Poset & q) -> optional<vector<int>>
    {
        optional<vector<int>> result;
        IsomorphismSearch{p, q, [&] (const vector<int> & m) {
            result = m;
            return false;
        }}.run();
        return result;
    }

    auto is_isomorphic(const Poset & p, const Poset & q) -> bool
    {
        return find_isomorphism(p, q).has_value();
    }

    auto all_automorphisms(const Poset & p) -> vector<vector<int>>
    {
        vector<vector<int>> result;
        IsomorphismSearch{p, p, [&] (const vector<int> & m) {
            result.push_back(m);
            return true;
        }}.run();
        return result;
    }

    auto is_isomorphism(const Poset & p, const Poset & q, span<const int> map) -> bool
    {
        if (int(map.size()) != p.size() || p.point_count() != q.point_count())
            return false;
        PointSet image;
        for (int x : p.carrier()) {
            int y = map[x];
            if (y < 0 || y >= q.size() || ! q.carrier().contains(y) || image.contains(y))
                return false;
            image.insert(y);
        }
        for (int x : p.carrier())
            for (int x2 : p.carrier())
                if (p.less(x, x2) != q.less(map[x], map[x2]))
                    return false;
        return true;
    }
}
