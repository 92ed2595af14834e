/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/splits.hh>
#include <nicesec/errors.hh>

#include <algorithm>
#include <map>
#include <tuple>
#include <type_traits>
#include <variant>

using std::function;
using std::map;
using std::optional;
using std::string;
using std::tuple;
using std::vector;

namespace nicesec
{
    using std::to_string;

    namespace
    {
        auto names(const Poset & p, PointSet set) -> string
        {
            string result = "{";
            for (int x : set) {
                if (result.size() > 1)
                    result += " ";
                result += p.label(x);
            }
            return result + "}";
        }

        auto bottom_level(const Poset & p, const RetractWitness & w) -> PointSet
        {
            return retract_levels(p, w).front();
        }

        auto top_level(const Poset & p, const RetractWitness & w) -> PointSet
        {
            return retract_levels(p, w).back();
        }

        auto other(PointSet pair, int a) -> int
        {
            return (pair - PointSet::single(a)).front();
        }

        auto restrict_witness(const Poset & p, const RetractWitness & r, PointSet domain, PointSet retract) -> RetractWitness
        {
            vector<int> m(p.size(), -1);
            for (int x : domain)
                m[x] = r.map[x];
            return make_witness(p, domain, retract, std::move(m));
        }

        auto extend_constant(const Poset & p, const RetractWitness & w, PointSet extra, int target) -> RetractWitness
        {
            auto m = w.map;
            for (int x : extra)
                m[x] = target;
            return make_witness(p, w.domain | extra, w.retract, std::move(m));
        }

        /// The least v in T(h_T) none of whose t-preimages is below d.
        auto tau_down(const Poset & p, const RetractWitness & t, PointSet t_top, int d) -> optional<int>
        {
            for (int v : t_top)
                if (! t.preimage(v).intersects(p.below(d)))
                    return v;
            return std::nullopt;
        }

        /// The least v in T(0) none of whose t-preimages is above u.
        auto tau_up(const Poset & p, const RetractWitness & t, PointSet t_bottom, int u) -> optional<int>
        {
            for (int v : t_bottom)
                if (! t.preimage(v).intersects(p.above(u)))
                    return v;
            return std::nullopt;
        }

        auto candidates_for(const Poset & p, PointSet domain) -> vector<Candidate>
        {
            auto result = crown_stack_candidates(p, domain, false);
            if (! p.induced(domain).connected()) {
                auto pairs = antichain_candidates(p, domain);
                result.insert(result.end(), pairs.begin(), pairs.end());
                std::stable_sort(result.begin(), result.end(), [] (const Candidate & x, const Candidate & y) {
                        return x.points.lex_less(y.points);
                        });
            }
            return result;
        }

        /// Subsets of a level by increasing cardinality, then lexicographically.
        auto ordered_subsets(PointSet of) -> vector<PointSet>
        {
            vector<PointSet> result;
            for_each_subset(of, [&] (PointSet s) { result.push_back(s); });
            std::stable_sort(result.begin(), result.end(), [] (PointSet a, PointSet b) {
                    if (a.size() != b.size())
                        return a.size() < b.size();
                    return a.lex_less(b);
                    });
            return result;
        }
    }

    auto describe(const Poset & p, const Split & split) -> string
    {
        return std::visit([&] (const auto & s) -> string {
                bool down = std::is_same_v<std::decay_t<decltype(s)>, DownSplit>;
                return string(down ? "down-split" : "up-split") + " k=" + to_string(s.k)
                    + (down ? " D=" : " U=") + names(p, s.removed)
                    + " T=" + names(p, s.t.retract) + " S=" + names(p, s.s.retract);
                }, split);
    }

    auto check_split_shape(const Poset & p, const DownSplit & split) -> void
    {
        int h = p.height();
        if (split.k < 0 || split.k > h - 1)
            throw InvariantError{"down-split level " + to_string(split.k) + " out of range"};

        PointSet lower = p.levels_between(0, split.k), upper = p.levels_between(split.k + 1, h);
        if (! split.removed.subset_of(upper))
            throw InvariantError{"D is not inside P(k+1 -> h)"};
        for (int d : split.removed)
            if (! (p.below(d) & upper).subset_of(split.removed))
                throw InvariantError{"D is not a down-set"};
        if (split.k == h - 1 && split.removed.size() > 1)
            throw InvariantError{"D has more than one point at k = h - 1"};
        if (split.t.domain != lower)
            throw InvariantError{"t is not defined on P(0 -> k)"};
        if (split.s.domain != upper - split.removed || split.s.domain.empty())
            throw InvariantError{"s is not defined on P(k+1 -> h) minus D"};
        if (auto why = witness_problem(p, split.t))
            throw InvariantError{"t: " + *why};
        if (auto why = witness_problem(p, split.s))
            throw InvariantError{"s: " + *why};
    }

    auto check_split_shape(const Poset & p, const UpSplit & split) -> void
    {
        int h = p.height();
        if (split.k < 1 || split.k > h)
            throw InvariantError{"up-split level " + to_string(split.k) + " out of range"};

        PointSet lower = p.levels_between(0, split.k - 1), upper = p.levels_between(split.k, h);
        if (! split.removed.subset_of(lower))
            throw InvariantError{"U is not inside P(0 -> k-1)"};
        for (int u : split.removed)
            if (! (p.above(u) & lower).subset_of(split.removed))
                throw InvariantError{"U is not an up-set"};
        if (split.k == 1 && split.removed.size() > 1)
            throw InvariantError{"U has more than one point at k = 1"};
        if (split.t.domain != upper)
            throw InvariantError{"t is not defined on P(k -> h)"};
        if (split.s.domain != lower - split.removed || split.s.domain.empty())
            throw InvariantError{"s is not defined on P(0 -> k-1) minus U"};
        if (auto why = witness_problem(p, split.t))
            throw InvariantError{"t: " + *why};
        if (auto why = witness_problem(p, split.s))
            throw InvariantError{"s: " + *why};
    }

    auto check_down_condition(const Poset & p, const DownSplit & split) -> bool
    {
        check_split_shape(p, split);
        if (! split.removed.subset_of(p.level(split.k + 1)))
            throw InvariantError{"D is not inside P(k+1)"};

        PointSet t_top = top_level(p, split.t);
        if (! p.all_below(t_top, bottom_level(p, split.s)))
            return false;
        for (int d : split.removed)
            if (! tau_down(p, split.t, t_top, d))
                return false;
        return true;
    }

    auto check_up_condition(const Poset & p, const UpSplit & split) -> bool
    {
        check_split_shape(p, split);
        if (! split.removed.subset_of(p.level(split.k - 1)))
            throw InvariantError{"U is not inside P(k-1)"};

        PointSet t_bottom = bottom_level(p, split.t);
        if (! p.all_below(top_level(p, split.s), t_bottom))
            return false;
        for (int u : split.removed)
            if (! tau_up(p, split.t, t_bottom, u))
                return false;
        return true;
    }

    namespace
    {
        template <typename Split_, typename Tau_>
        auto paste(const Poset & p, const Split_ & split, PointSet t_end, Tau_ tau) -> RetractWitness
        {
            vector<int> m(p.size(), -1);
            for (int x : split.t.domain)
                m[x] = split.t.map[x];
            for (int x : split.s.domain)
                m[x] = split.s.map[x];
            for (int x : split.removed)
                m[x] = other(t_end, *tau(p, split.t, t_end, x));

            auto r = make_witness(p, split.t.domain | split.s.domain | split.removed, split.t.retract | split.s.retract, std::move(m));
            if (auto why = witness_problem(p, r))
                throw InvariantError{"pasted retraction is invalid: " + *why};
            if (r.retract_class != RetractClass::FourCrownStack)
                throw InvariantError{"pasted retract is not a 4-crown stack"};
            return r;
        }
    }

    auto build_retraction_from_down_split(const Poset & p, const DownSplit & split) -> RetractWitness
    {
        if (! check_down_condition(p, split))
            throw PreconditionError{"split fails the down condition"};
        return paste(p, split, top_level(p, split.t), tau_down);
    }

    auto build_retraction_from_up_split(const Poset & p, const UpSplit & split) -> RetractWitness
    {
        if (! check_up_condition(p, split))
            throw PreconditionError{"split fails the up condition"};
        return paste(p, split, bottom_level(p, split.t), tau_up);
    }

    auto build_retraction(const Poset & p, const Split & split) -> RetractWitness
    {
        if (auto d = std::get_if<DownSplit>(&split))
            return build_retraction_from_down_split(p, *d);
        return build_retraction_from_up_split(p, std::get<UpSplit>(split));
    }

    auto is_matching(const Poset & p, const RetractWitness & r, const Split & split) -> bool
    {
        return std::visit([&] (const auto & s) -> bool {
                bool down = std::is_same_v<std::decay_t<decltype(s)>, DownSplit>;
                if (r.domain != p.carrier() || r.retract != (s.t.retract | s.s.retract))
                    return false;
                if (down ? ! p.all_below(s.t.retract, s.s.retract) : ! p.all_below(s.s.retract, s.t.retract))
                    return false;
                for (int x : s.t.domain)
                    if (r.map[x] != s.t.map[x])
                        return false;
                for (int x : s.s.domain)
                    if (r.map[x] != s.s.map[x])
                        return false;
                return r.image(s.removed).subset_of(s.t.retract);
                }, split);
    }

    auto cut_down_split(const Poset & p, const RetractWitness & r, int k) -> optional<DownSplit>
    {
        int h = p.height();
        if (k < 0 || k > h - 1)
            return std::nullopt;

        auto levels = retract_levels(p, r);
        PointSet lower = p.levels_between(0, k), upper = p.levels_between(k + 1, h);
        PointSet image = r.image(lower);
        if (! image.subset_of(lower))
            return std::nullopt;

        PointSet prefix;
        bool found = false;
        for (std::size_t i = 0 ; i + 1 < levels.size() && ! found ; ++i) {
            prefix |= levels[i];
            found = prefix == image;
        }
        if (! found)
            return std::nullopt;

        PointSet removed;
        for (int x : upper)
            if (image.contains(r.map[x]))
                removed.insert(x);

        DownSplit split{k, removed,
            restrict_witness(p, r, upper - removed, r.retract - image),
            restrict_witness(p, r, lower, image)};
        try {
            check_split_shape(p, split);
        }
        catch (const InvariantError &) {
            return std::nullopt;
        }
        return split;
    }

    auto cut_up_split(const Poset & p, const RetractWitness & r, int k) -> optional<UpSplit>
    {
        int h = p.height();
        if (k < 1 || k > h)
            return std::nullopt;

        auto levels = retract_levels(p, r);
        PointSet lower = p.levels_between(0, k - 1), upper = p.levels_between(k, h);
        PointSet image = r.image(upper);
        if (! image.subset_of(upper))
            return std::nullopt;

        PointSet suffix;
        bool found = false;
        for (std::size_t i = levels.size() - 1 ; i >= 1 && ! found ; --i) {
            suffix |= levels[i];
            found = suffix == image;
        }
        if (! found)
            return std::nullopt;

        PointSet removed;
        for (int x : lower)
            if (image.contains(r.map[x]))
                removed.insert(x);

        UpSplit split{k, removed,
            restrict_witness(p, r, lower - removed, r.retract - image),
            restrict_witness(p, r, upper, image)};
        try {
            check_split_shape(p, split);
        }
        catch (const InvariantError &) {
            return std::nullopt;
        }
        return split;
    }

    auto split_from_retraction(const Poset & p, const RetractWitness & r) -> Split
    {
        if (auto why = witness_problem(p, r))
            throw PreconditionError{"not a retraction: " + *why};
        if (r.domain != p.carrier() || r.retract_class != RetractClass::FourCrownStack)
            throw PreconditionError{"need a 4-crown stack retraction of the whole poset"};

        auto levels = retract_levels(p, r);
        int h_r = int(levels.size()) - 1;

        auto finish = [&] (const Split & split) -> Split {
            if (! is_matching(p, r, split))
                throw InvariantError{"cut does not match the retraction"};
            return split;
        };

        // a level set R(l) inside a single level P(k): the point z of P(k)
        // outside R(l) decides which side of k the cut goes
        for (int l = 0 ; l <= h_r ; ++l) {
            int k = p.level_of(levels[l].front());
            if (! levels[l].subset_of(p.level(k)))
                continue;
            int z = (p.level(k) - levels[l]).front();
            PointSet lower_part;
            for (int i = 0 ; i <= l ; ++i)
                lower_part |= levels[i];

            if (lower_part.contains(r.map[z])) {
                if (auto s = cut_down_split(p, r, k))
                    return finish(*s);
                if (auto s = cut_up_split(p, r, k + 1))
                    return finish(*s);
            }
            else {
                if (auto s = cut_up_split(p, r, k))
                    return finish(*s);
                if (auto s = cut_down_split(p, r, k - 1))
                    return finish(*s);
            }
        }

        // every level set spread over two levels of P
        auto all = matching_splits(p, r);
        if (all.empty())
            throw InvariantError{"no matching split for the retraction"};
        return finish(all.front());
    }

    auto matching_splits(const Poset & p, const RetractWitness & r) -> vector<Split>
    {
        vector<Split> result;
        for (int k = 0 ; k < p.height() ; ++k)
            if (auto s = cut_down_split(p, r, k))
                result.push_back(*s);
        for (int k = 1 ; k <= p.height() ; ++k)
            if (auto s = cut_up_split(p, r, k))
                result.push_back(*s);
        return result;
    }

    auto gap_stack_split(const GridPoset & g, int k, const RetractWitness & s, const RetractWitness & t) -> optional<Split>
    {
        const Poset & p = g.poset();
        int h = g.height();
        if (k < 1 || k > h - 1)
            throw PreconditionError{"gap level out of range"};
        if (g.code().bit(k - 1) && g.code().bit(k))
            throw PreconditionError{"P(k-1 -> k+1) is a 6-crown stack"};
        if (s.domain != p.levels_between(0, k - 1) || t.domain != p.levels_between(k + 1, h))
            throw PreconditionError{"s and t must live on P(0 -> k-1) and P(k+1 -> h)"};
        if (singleton_preimage_points(p, s, Extreme::Top).empty())
            throw PreconditionError{"s has no top point with a singleton preimage"};
        if (singleton_preimage_points(p, t, Extreme::Bottom).empty())
            throw PreconditionError{"t has no bottom point with a singleton preimage"};

        auto automorphisms = base_automorphisms(g);

        if (! g.code().bit(k)) {
            for (auto & alpha : automorphisms) {
                auto s1 = transport(s, alpha);
                PointSet top = top_level(p, s1);
                for (int a : singleton_preimage_points(p, s1, Extreme::Top)) {
                    PointSet removed = p.above(a) & g.level(k);
                    auto s2 = extend_constant(p, s1, g.level(k) - removed, other(top, a));
                    if (witness_problem(p, s2))
                        continue;
                    UpSplit split{k + 1, removed, s2, t};
                    if (check_up_condition(p, split))
                        return split;
                }
            }
        }

        if (! g.code().bit(k - 1)) {
            for (auto & alpha : automorphisms) {
                auto t1 = transport(t, alpha);
                PointSet bottom = bottom_level(p, t1);
                for (int v : singleton_preimage_points(p, t1, Extreme::Bottom)) {
                    PointSet removed = p.below(v) & g.level(k);
                    auto t2 = extend_constant(p, t1, g.level(k) - removed, other(bottom, v));
                    if (witness_problem(p, t2))
                        continue;
                    DownSplit split{k - 1, removed, t2, s};
                    if (check_down_condition(p, split))
                        return split;
                }
            }
        }

        return std::nullopt;
    }

    auto SplitSearchLog::operator+= (const SplitSearchLog & o) -> SplitSearchLog &
    {
        levels += o.levels;
        removed_sets += o.removed_sets;
        t_candidates += o.t_candidates;
        s_bottoms += o.s_bottoms;
        rejected_first_condition += o.rejected_first_condition;
        rejected_second_condition += o.rejected_second_condition;
        rejected_no_s += o.rejected_no_s;
        pruned_by_criteria += o.pruned_by_criteria;
        passed += o.passed;
        stats += o.stats;
        return *this;
    }

    auto search_down_splits(const Poset & p, SplitSearchLog & log, const DownSplitCallback & found,
            const function<auto (int, PointSet) -> bool> & skip) -> void
    {
        int h = p.height();
        long long budget = default_node_budget();

        for (int k = 0 ; k < h ; ++k) {
            ++log.levels;
            PointSet lower = p.levels_between(0, k), upper = p.levels_between(k + 1, h);

            struct Retract
            {
                Candidate candidate;
                vector<int> map;
            };

            vector<Retract> ts;
            for (auto & c : candidates_for(p, lower)) {
                ++log.stats.candidates;
                if (auto m = find_retraction_map(p, lower, c.points, {}, budget, log.stats))
                    ts.push_back(Retract{c, std::move(*m)});
            }

            // lex-least map onto T(i) avoiding the given values below the
            // given points
            map<tuple<std::size_t, std::uint64_t, std::uint64_t>, optional<vector<int>>> t_memo;
            vector<PointSet> allowed;
            auto t_with = [&] (std::size_t i, PointSet forbid0, PointSet forbid1) -> const optional<vector<int>> & {
                auto key = tuple{i, forbid0.bits(), forbid1.bits()};
                auto it = t_memo.find(key);
                if (it != t_memo.end())
                    return it->second;
                if (forbid0.empty() && forbid1.empty())
                    return t_memo.emplace(key, ts[i].map).first->second;

                PointSet top = ts[i].candidate.levels.back();
                int v0 = top.front(), v1 = other(top, v0);
                allowed.assign(p.size(), ts[i].candidate.points);
                for (int x : forbid0)
                    allowed[x].erase(v0);
                for (int x : forbid1)
                    allowed[x].erase(v1);
                return t_memo.emplace(key, find_retraction_map(p, lower, ts[i].candidate.points, allowed, budget, log.stats)).first->second;
            };

            for (PointSet removed : ordered_subsets(p.level(k + 1))) {
                if (k == h - 1 && removed.size() > 1)
                    continue;
                PointSet s_domain = upper - removed;
                if (s_domain.empty())
                    continue;
                if (skip && skip(k, removed)) {
                    ++log.pruned_by_criteria;
                    continue;
                }
                ++log.removed_sets;

                auto s_candidates = candidates_for(p, s_domain);
                vector<PointSet> bottoms;
                for (auto & c : s_candidates)
                    if (bottoms.end() == std::find(bottoms.begin(), bottoms.end(), c.levels.front()))
                        bottoms.push_back(c.levels.front());
                std::sort(bottoms.begin(), bottoms.end(), [] (PointSet a, PointSet b) { return a.lex_less(b); });

                map<std::uint64_t, optional<RetractWitness>> s_memo;
                auto s_with_bottom = [&] (PointSet bottom) -> const optional<RetractWitness> & {
                    auto it = s_memo.find(bottom.bits());
                    if (it != s_memo.end())
                        return it->second;
                    optional<RetractWitness> result;
                    for (auto & c : s_candidates) {
                        if (c.levels.front() != bottom)
                            continue;
                        ++log.stats.candidates;
                        if (auto m = find_retraction_map(p, s_domain, c.points, {}, budget, log.stats)) {
                            result = make_witness(p, s_domain, c.points, std::move(*m));
                            break;
                        }
                    }
                    return s_memo.emplace(bottom.bits(), std::move(result)).first->second;
                };

                auto d_points = removed.to_vector();
                for (std::size_t i = 0 ; i < ts.size() ; ++i) {
                    ++log.t_candidates;
                    PointSet top = ts[i].candidate.levels.back();
                    int v0 = top.front(), v1 = other(top, v0);

                    PointSet common_above = s_domain;
                    for (int v : top)
                        common_above &= p.above(v);
                    vector<PointSet> reachable;
                    for (PointSet b : bottoms)
                        if (b.subset_of(common_above))
                            reachable.push_back(b);
                    if (reachable.empty()) {
                        ++log.rejected_first_condition;
                        continue;
                    }

                    // pick the witness v in T(h_T) for every d, then look for
                    // t keeping v's preimage away from below d
                    const optional<vector<int>> * t_map = nullptr;
                    for (unsigned choice = 0 ; choice < (1u << d_points.size()) && ! t_map ; ++choice) {
                        PointSet forbid0, forbid1;
                        bool possible = true;
                        for (std::size_t j = 0 ; j < d_points.size() ; ++j) {
                            int v = ((choice >> j) & 1) ? v1 : v0;
                            PointSet under = p.below(d_points[j]) & lower;
                            if (under.contains(v))
                                possible = false;
                            (v == v0 ? forbid0 : forbid1) |= under;
                        }
                        if (! possible)
                            continue;
                        auto & m = t_with(i, forbid0, forbid1);
                        if (m)
                            t_map = &m;
                    }
                    if (! t_map) {
                        ++log.rejected_second_condition;
                        continue;
                    }

                    bool any = false;
                    for (PointSet b : reachable) {
                        ++log.s_bottoms;
                        auto & s = s_with_bottom(b);
                        if (! s)
                            continue;
                        any = true;
                        DownSplit split{k, removed, *s, make_witness(p, lower, ts[i].candidate.points, **t_map)};
                        if (! check_down_condition(p, split))
                            throw InvariantError{"search produced a split failing the down condition"};
                        ++log.passed;
                        if (! found(split))
                            return;
                    }
                    if (! any)
                        ++log.rejected_no_s;
                }
            }
        }
    }

    auto up_split_from_dual(const Poset & p, const DownSplit & dual_split) -> UpSplit
    {
        int h = p.height();
        Poset d = p.dual();
        if (d.height() != h)
            throw InvariantError{"dual has a different height"};
        for (int i = 0 ; i <= h ; ++i)
            if (d.level(i) != p.level(h - i))
                throw InvariantError{"dual levels are not the reversed levels"};

        UpSplit split{h - dual_split.k, dual_split.removed, dual_split.s, dual_split.t};
        if (! check_up_condition(p, split))
            throw InvariantError{"mirrored split fails the up condition"};
        return split;
    }

    auto find_split_exhaustive(const Poset & p, SplitSearchLog & log, const SplitSkip & skip) -> optional<Split>
    {
        optional<Split> result;
        int h = p.height();

        function<auto (int, PointSet) -> bool> skip_down, skip_up;
        if (skip) {
            skip_down = [&] (int k, PointSet d) { return skip(Side::Down, k, d); };
            skip_up = [&] (int k, PointSet u) { return skip(Side::Up, h - k, u); };
        }

        search_down_splits(p, log, [&] (const DownSplit & s) {
                result = s;
                return false;
                }, skip_down);
        if (result)
            return result;

        search_down_splits(p.dual(), log, [&] (const DownSplit & s) {
                result = up_split_from_dual(p, s);
                return false;
                }, skip_up);
        return result;
    }

    auto all_splits_exhaustive(const Poset & p, SplitSearchLog & log) -> vector<Split>
    {
        vector<Split> result;
        search_down_splits(p, log, [&] (const DownSplit & s) {
                result.push_back(s);
                return true;
                });
        search_down_splits(p.dual(), log, [&] (const DownSplit & s) {
                result.push_back(up_split_from_dual(p, s));
                return true;
                });
        return result;
    }

    auto context_of(const Split & split) -> CriterionContext
    {
        if (auto d = std::get_if<DownSplit>(&split))
            return CriterionContext{Side::Down, d->k, d->removed};
        auto & u = std::get<UpSplit>(split);
        return CriterionContext{Side::Up, u.k, u.removed};
    }
}
