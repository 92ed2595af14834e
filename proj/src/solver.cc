/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/solver.hh>

#include <algorithm>
#include <atomic>
#include <thread>

using std::function;
using std::optional;
using std::string;
using std::vector;

namespace nicesec
{
    using std::to_string;

    auto to_string(Method m) -> string
    {
        switch (m) {
            case Method::Oracle:        return "oracle";
            case Method::SplitComplete: return "splits";
            case Method::RecursiveRule: return "recursive";
        }
        return "?";
    }

    auto SegmentEntry::witness() const -> const RetractWitness *
    {
        for (auto & w : witnesses)
            if (0 == w.removed_count)
                return &w.witness;
        return nullptr;
    }

    auto tbase_levels_from(const SectionCode & code, const function<auto (const SectionCode &) -> bool> & answer) -> vector<int>
    {
        vector<int> result{0};
        for (int k = 1 ; k < code.height() ; ++k)
            if (answer(code.prefix(k)))
                result.push_back(k);
        return result;
    }

    namespace
    {
        /// Moves a witness on a segment into the ambient grid, where the
        /// segment's level 0 is the ambient level offset / 3.
        auto shift(const RetractWitness & w, int offset, int size) -> RetractWitness
        {
            RetractWitness r;
            r.retract_class = w.retract_class;
            r.retract_height = w.retract_height;
            r.map.assign(size, -1);
            for (int x : w.domain) {
                r.domain.insert(x + offset);
                r.map[x + offset] = w.map[x] + offset;
            }
            for (int a : w.retract)
                r.retract.insert(a + offset);
            return r;
        }

        auto shift_set(PointSet s, int offset) -> PointSet
        {
            return PointSet(s.bits() << offset);
        }

        auto first_points(PointSet level, int count) -> PointSet
        {
            PointSet result;
            for (int x : level)
                if (result.size() < count)
                    result.insert(x);
            return result;
        }

        auto nice_for_criteria(const SectionCode & code) -> bool
        {
            return code.is_nice_section_code() && code.height() >= 3;
        }
    }

    auto decide_by_oracle(const SectionCode & code) -> MethodResult
    {
        auto g = build_from_code(code);
        MethodResult result;
        result.method = Method::Oracle;
        result.witness = has_4crownstack_retract(g, OracleMode::Spanning, result.log.stats);
        result.answer = result.witness.has_value();
        return result;
    }

    auto decide_by_splits(const SectionCode & code) -> MethodResult
    {
        auto g = build_from_code(code);
        MethodResult result;
        result.method = Method::SplitComplete;
        if (auto split = find_split_exhaustive(g.poset(), result.log)) {
            result.answer = true;
            result.witness = build_retraction(g.poset(), *split);
        }
        return result;
    }

    RecursiveSolver::RecursiveSolver(SolverOptions options) :
        _options(std::move(options))
    {
    }

    auto RecursiveSolver::lookup(const SectionCode & code) const -> const SegmentEntry &
    {
        auto it = _table.find(code);
        if (it == _table.end())
            throw InvariantError{"segment '" + code.str() + "' is not in the table yet"};
        return it->second;
    }

    auto RecursiveSolver::variant(const SectionCode & code, Side side, int removed_count, optional<Extreme> singleton)
        -> optional<RetractWitness>
    {
        std::lock_guard<std::mutex> guard(_variants_mutex);
        auto key = std::tuple{code.str(), int(side), removed_count, singleton ? int(*singleton) : -1};
        auto it = _variants.find(key);
        if (it != _variants.end())
            return it->second;

        auto g = build_from_code(code);
        const Poset & p = g.poset();
        PointSet removed = first_points(side == Side::Down ? p.level(0) : p.level(g.height()), removed_count);
        PointSet domain = p.carrier() - removed;

        optional<RetractWitness> result;
        if (domain.size() >= 2) {
            RetractQuery query;
            query.spanning = false;
            query.singleton_end = singleton;
            SearchStats stats;
            result = find_retract(p, domain, query, stats);
        }
        return _variants.emplace(key, std::move(result)).first->second;
    }

    auto RecursiveSolver::solve_final_zero(SegmentEntry & entry) -> void
    {
        const SectionCode & code = entry.code;
        int h = code.height();
        auto g = build_from_code(code);
        const Poset & p = g.poset();
        entry.method = Method::RecursiveRule;

        SectionCode prefix = code.prefix(h - 2);
        optional<RetractWitness> base;
        if (0 == prefix.height())
            base = variant(prefix, Side::Down, 0);
        else if (auto w = lookup(prefix).witness())
            base = *w;

        if (! base) {
            entry.answer = false;
            entry.notes.push_back("ends in 0: follows prefix '" + prefix.str() + "', which has no retract");
            if (auto split = find_split_exhaustive(p, entry.log))
                throw InvariantError{"final-0 rule contradicted by " + describe(p, *split)};
            entry.notes.push_back("exhaustive split search agrees");
            return;
        }

        // keep the prefix retraction below, send the two top levels to a
        // fresh top pair {a, b}
        int a = GridPoset::point(h, 0), b = GridPoset::point(h, 1);
        vector<int> m(p.size(), -1);
        for (int x : base->domain)
            m[x] = base->map[x];
        for (int j = 0 ; j < 3 ; ++j)
            m[GridPoset::point(h - 1, j)] = m[GridPoset::point(h, j)] = 0 == j ? a : b;

        auto w = make_witness(p, p.carrier(), base->retract | PointSet{a, b}, std::move(m));
        if (auto why = witness_problem(p, w))
            throw InvariantError{"lifted witness for '" + code.str() + "' is invalid: " + *why};

        entry.answer = true;
        entry.witnesses.push_back(TaggedWitness{std::move(w), 0, Side::Down});
        entry.notes.push_back("ends in 0: lifted from prefix '" + prefix.str() + "'");
    }

    auto RecursiveSolver::solve_by_rule(SegmentEntry & entry) -> bool
    {
        const SectionCode & code = entry.code;
        int h = code.height();
        auto g = build_from_code(code);
        const Poset & p = g.poset();
        int n = p.size();

        auto answer = [&] (const SectionCode & c) { return lookup(c).answer; };
        auto pruned = [&] (Side side, int k, PointSet removed) {
            return _options.use_criteria && nice_for_criteria(code)
                && any_criterion_prunes(code, CriterionContext{side, k, removed}, answer, _options.criteria);
        };

        auto transports = [&] (const RetractWitness & w, const SectionCode & segment_code, int offset) {
            vector<RetractWitness> result;
            for (auto & alpha : base_automorphisms(build_from_code(segment_code))) {
                auto moved = shift(transport(w, alpha), offset, n);
                if (result.end() == std::find(result.begin(), result.end(), moved))
                    result.push_back(std::move(moved));
            }
            return result;
        };

        auto accept = [&] (const Split & split) {
            entry.answer = true;
            entry.method = Method::RecursiveRule;
            entry.witnesses.push_back(TaggedWitness{build_retraction(p, split), 0, Side::Down});
            entry.notes.push_back("assembled from stored witnesses: " + describe(p, split));
            entry.split = split;
            return true;
        };

        for (int k : entry.tbase_levels) {
            SectionCode lower_code = code.prefix(k), upper_code = code.slice(k + 1, h);
            auto t0 = 0 == k ? variant(lower_code, Side::Down, 0) : optional<RetractWitness>{*lookup(lower_code).witness()};
            auto ts = transports(*t0, lower_code, 0);
            int offset = 3 * (k + 1);
            PointSet segment_carrier = PointSet::first(3 * (upper_code.height() + 1));

            for (int size = 0 ; size <= 2 ; ++size) {
                if (k == h - 1 && size > 1)
                    break;
                auto s0 = variant(upper_code, Side::Down, size);
                vector<RetractWitness> ss;
                if (s0)
                    ss = transports(*s0, upper_code, offset);

                for_each_subset(p.level(k + 1), [&] (PointSet removed) {
                        if (removed.size() != size || entry.split)
                            return;
                        if (pruned(Side::Down, k, removed)) {
                            ++entry.log.pruned_by_criteria;
                            return;
                        }
                        ++entry.log.removed_sets;
                        for (auto & s : ss) {
                            if (s.domain != shift_set(segment_carrier, offset) - removed)
                                continue;
                            for (auto & t : ts) {
                                ++entry.log.t_candidates;
                                DownSplit split{k, removed, s, t};
                                if (check_down_condition(p, split)) {
                                    accept(split);
                                    return;
                                }
                                ++entry.log.rejected_second_condition;
                            }
                        }
                        });
                if (entry.split)
                    return true;
            }
        }

        for (int k_reversed : tbase_levels_from(code.reversed(), answer)) {
            int k = h - k_reversed;
            SectionCode upper_code = code.slice(k, h), lower_code = code.prefix(k - 1);
            auto t0 = variant(upper_code, Side::Down, 0);
            if (! t0)
                throw InvariantError{"t-base '" + upper_code.str() + "' lost its retract"};
            auto ts = transports(*t0, upper_code, 3 * k);
            PointSet segment_carrier = PointSet::first(3 * k);

            for (int size = 0 ; size <= 2 ; ++size) {
                if (k == 1 && size > 1)
                    break;
                auto s0 = variant(lower_code, Side::Up, size);
                vector<RetractWitness> ss;
                if (s0)
                    ss = transports(*s0, lower_code, 0);

                for_each_subset(p.level(k - 1), [&] (PointSet removed) {
                        if (removed.size() != size || entry.split)
                            return;
                        if (pruned(Side::Up, k, removed)) {
                            ++entry.log.pruned_by_criteria;
                            return;
                        }
                        ++entry.log.removed_sets;
                        for (auto & s : ss) {
                            if (s.domain != segment_carrier - removed)
                                continue;
                            for (auto & t : ts) {
                                ++entry.log.t_candidates;
                                UpSplit split{k, removed, s, t};
                                if (check_up_condition(p, split)) {
                                    accept(split);
                                    return;
                                }
                                ++entry.log.rejected_second_condition;
                            }
                        }
                        });
                if (entry.split)
                    return true;
            }
        }

        return false;
    }

    auto RecursiveSolver::solve_by_gap_stack(SegmentEntry & entry) -> bool
    {
        const SectionCode & code = entry.code;
        int h = code.height();
        auto g = build_from_code(code);
        const Poset & p = g.poset();

        for (int k = 1 ; k < h ; ++k) {
            if (code.bit(k - 1) && code.bit(k))
                continue;
            auto s = variant(code.prefix(k - 1), Side::Down, 0, Extreme::Top);
            auto t = variant(code.slice(k + 1, h), Side::Down, 0, Extreme::Bottom);
            if (! s || ! t)
                continue;

            optional<Split> split;
            try {
                split = gap_stack_split(g, k, shift(*s, 0, p.size()), shift(*t, 3 * (k + 1), p.size()));
            }
            catch (const PreconditionError &) {
                continue;
            }
            if (split) {
                entry.answer = true;
                entry.method = Method::RecursiveRule;
                entry.witnesses.push_back(TaggedWitness{build_retraction(p, *split), 0, Side::Down});
                entry.notes.push_back("gap stack at level " + to_string(k) + ": " + describe(p, *split));
                entry.split = split;
                return true;
            }
        }
        return false;
    }

    auto RecursiveSolver::compute(const SectionCode & code) -> SegmentEntry
    {
        if (! code.is_table_code())
            throw PreconditionError{"table codes start with 1, got '" + code.str() + "'"};

        SegmentEntry entry;
        entry.code = code;
        entry.tbase_levels = tbase_levels_from(code, [&] (const SectionCode & c) { return lookup(c).answer; });

        if (! code.bit(code.height() - 1)) {
            solve_final_zero(entry);
            return entry;
        }

        if (solve_by_rule(entry) || solve_by_gap_stack(entry))
            return entry;

        auto g = build_from_code(code);
        SplitSkip skip;
        auto answer = [&] (const SectionCode & c) { return lookup(c).answer; };
        if (_options.use_criteria && nice_for_criteria(code))
            skip = [&] (Side side, int k, PointSet removed) {
                return any_criterion_prunes(code, CriterionContext{side, k, removed}, answer, _options.criteria);
            };

        entry.method = Method::SplitComplete;
        if (auto split = find_split_exhaustive(g.poset(), entry.log, skip)) {
            entry.answer = true;
            entry.witnesses.push_back(TaggedWitness{build_retraction(g.poset(), *split), 0, Side::Down});
            entry.notes.push_back("exhaustive split search: " + describe(g.poset(), *split));
            entry.split = split;
        }
        else {
            entry.answer = false;
            entry.notes.push_back("exhaustive split search found no split");
        }
        return entry;
    }

    auto RecursiveSolver::ensure_dependencies(const SectionCode & code) -> void
    {
        SectionCode reversed = code.reversed();
        for (int k = 1 ; k < code.height() ; ++k) {
            solve(code.prefix(k));
            if (reversed.is_table_code())
                solve(reversed.prefix(k));
        }
    }

    auto RecursiveSolver::solve(const SectionCode & code) -> const SegmentEntry &
    {
        auto it = _table.find(code);
        if (it != _table.end())
            return it->second;
        ensure_dependencies(code);
        auto entry = compute(code);
        return _table.emplace(code, std::move(entry)).first->second;
    }

    auto RecursiveSolver::answer(const SectionCode & code) -> bool
    {
        return solve(code).answer;
    }

    auto RecursiveSolver::build_table(int max_height) -> vector<SegmentEntry>
    {
        if (max_height < 1)
            throw PreconditionError{"table height must be at least one"};

        vector<SegmentEntry> result;
        for (int h = 1 ; h <= max_height ; ++h) {
            auto codes = table_codes(h);
            vector<SectionCode> todo;
            for (auto & c : codes)
                if (! _table.contains(c))
                    todo.push_back(c);

            // every dependency has smaller height and is already in the table
            vector<optional<SegmentEntry>> computed(todo.size());
            std::atomic<std::size_t> next{0};
            auto work = [&] {
                for (std::size_t i ; (i = next++) < todo.size() ; )
                    computed[i] = compute(todo[i]);
            };

            int workers = std::max(1, std::min<int>(_options.workers, int(todo.size())));
            if (workers == 1)
                work();
            else {
                vector<std::thread> threads;
                std::vector<std::exception_ptr> errors(workers);
                for (int w = 0 ; w < workers ; ++w)
                    threads.emplace_back([&, w] {
                            try {
                                work();
                            }
                            catch (...) {
                                errors[w] = std::current_exception();
                            }
                            });
                for (auto & t : threads)
                    t.join();
                for (auto & e : errors)
                    if (e)
                        std::rethrow_exception(e);
            }

            for (std::size_t i = 0 ; i < todo.size() ; ++i)
                _table.emplace(todo[i], std::move(*computed[i]));
            for (auto & c : codes)
                result.push_back(_table.at(c));
        }
        return result;
    }

    DiscrepancyError::DiscrepancyError(CrossReport report) :
        NicesecError("methods disagree on '" + report.code.str() + "': oracle "
                + (report.oracle.answer ? "y" : "n") + ", splits " + (report.splits.answer ? "y" : "n")
                + ", recursive " + (report.recursive.answer ? "y" : "n")),
        _report(std::move(report))
    {
    }

    auto cross_validate(const SectionCode & code, RecursiveSolver & solver) -> CrossReport
    {
        CrossReport report;
        report.code = code;
        report.oracle = decide_by_oracle(code);
        report.splits = decide_by_splits(code);

        auto & entry = solver.solve(code);
        report.recursive.method = entry.method;
        report.recursive.answer = entry.answer;
        report.recursive.log = entry.log;
        if (auto w = entry.witness())
            report.recursive.witness = *w;

        auto g = build_from_code(code);
        for (auto * r : {&report.oracle, &report.splits, &report.recursive}) {
            if (r->answer != r->witness.has_value())
                throw InvariantError{to_string(r->method) + " answer and witness disagree on '" + code.str() + "'"};
            if (r->witness)
                if (auto why = witness_problem(g.poset(), *r->witness))
                    throw InvariantError{to_string(r->method) + " witness for '" + code.str() + "' is invalid: " + *why};
        }

        if (! report.agree())
            throw DiscrepancyError{report};
        return report;
    }
}
