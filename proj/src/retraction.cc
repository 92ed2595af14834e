/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/retraction.hh>

#include <algorithm>
#include <cstdlib>
#include <string>

using std::function;
using std::optional;
using std::span;
using std::string;
using std::vector;

namespace nicesec
{
    using std::to_string;

    auto to_string(RetractClass c) -> string
    {
        switch (c) {
            case RetractClass::TwoAntichain:   return "2-antichain";
            case RetractClass::FourCrownStack: return "4-crown-stack";
        }
        return "?";
    }

    auto RetractWitness::preimage(int a) const -> PointSet
    {
        PointSet result;
        for (int x : domain)
            if (map[x] == a)
                result.insert(x);
        return result;
    }

    auto RetractWitness::image(PointSet points) const -> PointSet
    {
        PointSet result;
        for (int x : points)
            if (map[x] >= 0)
                result.insert(map[x]);
        return result;
    }

    auto retract_levels(const Poset & p, const RetractWitness & w) -> vector<PointSet>
    {
        return p.induced(w.retract).levels();
    }

    auto witness_problem(const Poset & p, const RetractWitness & w) -> optional<string>
    {
        if (int(w.map.size()) != p.size())
            return "map has the wrong size";
        if (! w.domain.subset_of(p.carrier()))
            return "domain leaves the poset";
        if (! w.retract.subset_of(w.domain))
            return "retract is not inside the domain";

        for (int x = 0 ; x < p.size() ; ++x) {
            if (! w.domain.contains(x)) {
                if (w.map[x] != -1)
                    return "map defined outside the domain at " + p.label(x);
            }
            else if (w.map[x] < 0 || ! w.retract.contains(w.map[x]))
                return "point " + p.label(x) + " is not mapped into the retract";
        }

        for (int a : w.retract)
            if (w.map[a] != a)
                return "retract point " + p.label(a) + " is not fixed";

        for (int y : w.domain)
            for (int x : p.below(y) & w.domain)
                if (! p.less_equal(w.map[x], w.map[y]))
                    return "order not preserved on " + p.label(x) + " < " + p.label(y);

        Poset r = p.induced(w.retract);
        switch (w.retract_class) {
            case RetractClass::TwoAntichain:
                if (w.retract.size() != 2 || ! p.is_antichain(w.retract) || w.retract_height != 0)
                    return "retract is not a 2-antichain";
                break;
            case RetractClass::FourCrownStack:
                if (! is_crown_stack(r, 2))
                    return "retract is not a 4-crown stack";
                if (r.height() != w.retract_height)
                    return "retract height mismatch";
                break;
        }
        return std::nullopt;
    }

    auto is_valid_witness(const Poset & p, const RetractWitness & w) -> bool
    {
        return ! witness_problem(p, w).has_value();
    }

    auto transport(const RetractWitness & w, span<const int> alpha) -> RetractWitness
    {
        RetractWitness result;
        result.retract_class = w.retract_class;
        result.retract_height = w.retract_height;
        result.map.assign(alpha.size(), -1);
        for (int x : w.domain) {
            result.domain.insert(alpha[x]);
            result.map[alpha[x]] = alpha[w.map[x]];
        }
        for (int a : w.retract)
            result.retract.insert(alpha[a]);
        return result;
    }

    auto default_node_budget() -> long long
    {
        if (const char * env = std::getenv("NICESEC_NODE_BUDGET")) {
            char * end = nullptr;
            long long value = std::strtoll(env, &end, 10);
            if (end != env && *end == '\0' && value > 0)
                return value;
        }
        return 20'000'000;
    }

    namespace
    {
        class MapSearch
        {
            private:
                const Poset & _p;
                PointSet _target;
                vector<int> _vars;
                vector<PointSet> _up, _down;

                // for var position i, the later positions above and below it
                vector<vector<int>> _later_above, _later_below;

                vector<vector<PointSet>> _domains;
                vector<int> _map;
                long long _budget;
                SearchStats & _stats;
                long long _nodes = 0;

                auto search(std::size_t depth, const function<auto (const vector<int> &) -> bool> & f) -> bool
                {
                    if (depth == _vars.size())
                        return f(_map);

                    if (++_nodes > _budget)
                        throw UndecidedError{"map search exceeded its node budget of " + to_string(_budget)};

                    int x = _vars[depth];
                    auto & current = _domains[depth];
                    auto & next = _domains[depth + 1];
                    for (int v : current[depth]) {
                        bool wiped = false;
                        for (std::size_t j = depth + 1 ; j < _vars.size() ; ++j)
                            next[j] = current[j];
                        for (int j : _later_above[depth]) {
                            next[j] &= _up[v];
                            wiped = wiped || next[j].empty();
                        }
                        for (int j : _later_below[depth]) {
                            next[j] &= _down[v];
                            wiped = wiped || next[j].empty();
                        }
                        if (wiped)
                            continue;
                        _map[x] = v;
                        if (! search(depth + 1, f))
                            return false;
                    }
                    _map[x] = -1;
                    return true;
                }

            public:
                MapSearch(const Poset & p, PointSet domain, PointSet target, span<const PointSet> allowed,
                        long long budget, SearchStats & stats) :
                    _p(p),
                    _target(target),
                    _up(p.size()),
                    _down(p.size()),
                    _map(p.size(), -1),
                    _budget(budget),
                    _stats(stats)
                {
                    for (int a : target) {
                        _up[a] = (p.above(a) & target) | PointSet::single(a);
                        _down[a] = (p.below(a) & target) | PointSet::single(a);
                        _map[a] = a;
                    }
                    _vars = (domain - target).to_vector();

                    std::size_t n = _vars.size();
                    _later_above.resize(n);
                    _later_below.resize(n);
                    _domains.assign(n + 1, vector<PointSet>(n));
                    for (std::size_t i = 0 ; i < n ; ++i) {
                        int x = _vars[i];
                        PointSet values = target;
                        for (int a : p.below(x) & target)
                            values &= _up[a];
                        for (int a : p.above(x) & target)
                            values &= _down[a];
                        if (! allowed.empty())
                            values &= allowed[x];
                        _domains[0][i] = values;
                        for (std::size_t j = i + 1 ; j < n ; ++j) {
                            if (p.less(x, _vars[j]))
                                _later_above[i].push_back(int(j));
                            else if (p.less(_vars[j], x))
                                _later_below[i].push_back(int(j));
                        }
                    }
                }

                auto run(const function<auto (const vector<int> &) -> bool> & f) -> void
                {
                    ++_stats.map_searches;
                    bool feasible = true;
                    for (auto & d : _domains[0])
                        feasible = feasible && ! d.empty();
                    if (feasible) {
                        try {
                            search(0, f);
                        }
                        catch (...) {
                            _stats.nodes += _nodes;
                            throw;
                        }
                    }
                    _stats.nodes += _nodes;
                }
        };
    }

    auto find_retraction_map(const Poset & p, PointSet domain, PointSet target,
            span<const PointSet> allowed, long long budget, SearchStats & stats) -> optional<vector<int>>
    {
        optional<vector<int>> result;
        MapSearch{p, domain, target, allowed, budget, stats}.run([&] (const vector<int> & m) {
            result = m;
            return false;
        });
        if (result)
            for (int x = 0 ; x < p.size() ; ++x)
                if (! domain.contains(x))
                    (*result)[x] = -1;
        return result;
    }

    auto for_each_retraction_map(const Poset & p, PointSet domain, PointSet target,
            const function<auto (const vector<int> &) -> bool> & f) -> void
    {
        SearchStats stats;
        MapSearch{p, domain, target, {}, default_node_budget(), stats}.run(f);
    }

    auto make_witness(const Poset & p, PointSet domain, PointSet target, vector<int> map) -> RetractWitness
    {
        RetractWitness w;
        w.domain = domain;
        w.retract = target;
        w.map = std::move(map);
        int h = p.induced(target).height();
        if (h == 0 && target.size() == 2) {
            w.retract_class = RetractClass::TwoAntichain;
            w.retract_height = 0;
        }
        else {
            w.retract_class = RetractClass::FourCrownStack;
            w.retract_height = h;
        }
        return w;
    }

    auto retraction_exists(const Poset & p, PointSet domain, PointSet target) -> optional<RetractWitness>
    {
        SearchStats stats;
        auto map = find_retraction_map(p, domain, target, {}, default_node_budget(), stats);
        if (! map)
            return std::nullopt;
        return make_witness(p, domain, target, std::move(*map));
    }

    auto antichain_candidates(const Poset & p, PointSet domain) -> vector<Candidate>
    {
        vector<Candidate> result;
        for (int a : domain)
            for (int b : domain - p.below(a) - p.above(a))
                if (a < b)
                    result.push_back(Candidate{PointSet{a, b}, {PointSet{a, b}}});
        std::sort(result.begin(), result.end(), [] (const Candidate & x, const Candidate & y) {
                return x.points.lex_less(y.points);
                });
        return result;
    }

    auto crown_stack_candidates(const Poset & p, PointSet domain, bool spanning) -> vector<Candidate>
    {
        PointSet bottoms = p.minimal_in(domain), tops = p.maximal_in(domain);
        vector<PointSet> pairs;
        for (auto & c : antichain_candidates(p, domain))
            pairs.push_back(c.points);

        vector<vector<int>> successors(pairs.size());
        for (std::size_t i = 0 ; i < pairs.size() ; ++i)
            for (std::size_t j = 0 ; j < pairs.size() ; ++j)
                if (p.all_below(pairs[i], pairs[j]))
                    successors[i].push_back(int(j));

        vector<Candidate> result;
        vector<PointSet> path;
        auto extend = [&] (auto & self, int last) -> void {
            if (path.size() >= 2 && (! spanning || path.back().subset_of(tops))) {
                PointSet points;
                for (auto & level : path)
                    points |= level;
                result.push_back(Candidate{points, path});
            }
            for (int next : successors[last]) {
                path.push_back(pairs[next]);
                self(self, next);
                path.pop_back();
            }
        };

        for (std::size_t i = 0 ; i < pairs.size() ; ++i) {
            if (spanning && ! pairs[i].subset_of(bottoms))
                continue;
            path.assign(1, pairs[i]);
            extend(extend, int(i));
        }

        std::sort(result.begin(), result.end(), [] (const Candidate & x, const Candidate & y) {
                return x.points.lex_less(y.points);
                });
        return result;
    }

    auto enumerate_4crownstack_candidates(const GridPoset & p, bool spanning) -> vector<Candidate>
    {
        auto result = crown_stack_candidates(p.poset(), p.poset().carrier(), spanning);
        // antichains of a horizon-two segment sit inside two consecutive levels
        for (auto & c : result)
            for (auto & level : c.levels) {
                int lo = GridPoset::level_index(level.front()), hi = lo;
                for (int x : level)
                    hi = std::max(hi, GridPoset::level_index(x));
                if (hi - lo > 1)
                    throw InvariantError{"candidate level spans more than two consecutive levels"};
            }
        return result;
    }

    auto find_retract(const Poset & p, PointSet domain, const RetractQuery & query, SearchStats & stats)
        -> optional<RetractWitness>
    {
        vector<Candidate> candidates;
        if (query.allow_antichain && ! (query.antichain_shortcut && p.induced(domain).connected()))
            candidates = antichain_candidates(p, domain);
        if (query.allow_stack) {
            auto stacks = crown_stack_candidates(p, domain, query.spanning);
            candidates.insert(candidates.end(), stacks.begin(), stacks.end());
            std::stable_sort(candidates.begin(), candidates.end(), [] (const Candidate & x, const Candidate & y) {
                    return x.points.lex_less(y.points);
                    });
        }

        vector<PointSet> allowed;
        for (auto & c : candidates) {
            if (query.accept && ! query.accept(c))
                continue;
            ++stats.candidates;

            if (! query.singleton_end) {
                if (auto map = find_retraction_map(p, domain, c.points, {}, query.budget, stats))
                    return make_witness(p, domain, c.points, std::move(*map));
                continue;
            }

            PointSet end = *query.singleton_end == Extreme::Bottom ? c.levels.front() : c.levels.back();
            for (int a : end) {
                allowed.assign(p.size(), c.points - PointSet::single(a));
                if (auto map = find_retraction_map(p, domain, c.points, allowed, query.budget, stats))
                    return make_witness(p, domain, c.points, std::move(*map));
            }
        }
        return std::nullopt;
    }

    auto has_4crownstack_retract(const GridPoset & p, OracleMode mode, SearchStats & stats) -> optional<RetractWitness>
    {
        RetractQuery query;
        query.spanning = mode == OracleMode::Spanning;
        query.allow_antichain = false;
        return find_retract(p.poset(), p.poset().carrier(), query, stats);
    }

    auto has_4crownstack_retract(const GridPoset & p, OracleMode mode) -> optional<RetractWitness>
    {
        SearchStats stats;
        return has_4crownstack_retract(p, mode, stats);
    }

    auto has_class_retract_minus(const Poset & p, PointSet removed, Side side) -> optional<RetractWitness>
    {
        if (! removed.subset_of(p.carrier()))
            throw IndexError{"removed set is not inside the poset"};
        if (side == Side::Down && ! p.is_down_set(removed))
            throw SideError{"removed set is not a down-set"};
        if (side == Side::Up && ! p.is_up_set(removed))
            throw SideError{"removed set is not an up-set"};
        PointSet domain = p.carrier() - removed;
        if (domain.empty())
            throw PreconditionError{"nothing left after removal"};

        SearchStats stats;
        return find_retract(p, domain, RetractQuery{}, stats);
    }

    auto has_class_retract_minus(const GridPoset & p, PointSet removed, Side side) -> optional<RetractWitness>
    {
        return has_class_retract_minus(p.poset(), removed, side);
    }

    auto singleton_preimage_points(const Poset & p, const RetractWitness & w, Extreme end) -> PointSet
    {
        auto levels = retract_levels(p, w);
        if (levels.empty())
            return PointSet{};
        PointSet result;
        for (int a : end == Extreme::Bottom ? levels.front() : levels.back())
            if (w.preimage(a) == PointSet::single(a))
                result.insert(a);
        return result;
    }
}
