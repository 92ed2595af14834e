/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/verify.hh>
#include <nicesec/report.hh>
#include <nicesec/solver.hh>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

using nlohmann::json;

using std::function;
using std::map;
using std::string;
using std::vector;

namespace nicesec
{
    using std::to_string;

    auto published_table() -> const vector<PublishedRow> &
    {
        static const vector<PublishedRow> rows{
            {"1", "", false},
            {"11", "", false}, {"10", "", true},
            {"111", "", true}, {"101", "", true}, {"110", "", false}, {"100", "", false},
            {"1111", "0,3", false}, {"1101", "0", false}, {"1011", "0,2,3", false}, {"1001", "0,2", true},
            {"1110", "", false}, {"1100", "", false}, {"1010", "", true}, {"1000", "", true},
            {"11111", "0,3", false}, {"11101", "0,3", true}, {"11011", "0", false}, {"10111", "0,2,3", true},
            {"11001", "0", true}, {"10101", "0,2,3,4", true}, {"10011", "0,2,4", true}, {"10001", "0,2,4", true},
            {"11110", "", true}, {"11100", "", true}, {"11010", "", false}, {"10110", "", true},
            {"11000", "", false}, {"10100", "", true}, {"10010", "", false}, {"10000", "", false},
            {"111111", "0,3", true}, {"111101", "0,3,5", true}, {"111011", "0,3,5", false}, {"110111", "0", false},
            {"101111", "0,2,3,5", true}, {"111001", "0,3,5", false}, {"110101", "0", false}, {"101101", "0,2,3,5", true},
            {"110011", "0,5", false}, {"101011", "0,2,3,4,5", false}, {"100111", "0,2,4,5", false}, {"110001", "0", false},
            {"101001", "0,2,3,4,5", true}, {"100101", "0,2,4", true}, {"100011", "0,2,4,5", false}, {"100001", "0,2,4", true},
            {"111110", "", false}, {"111100", "", false}, {"111010", "", false}, {"110110", "", false},
            {"101110", "", false}, {"111000", "", false}, {"110100", "", false}, {"101100", "", false},
            {"110010", "", false}, {"101010", "", true}, {"100110", "", true}, {"110000", "", false},
            {"101000", "", true}, {"100100", "", true}, {"100010", "", true}, {"100000", "", true}};
        return rows;
    }

    auto published_levels(const PublishedRow & row) -> vector<int>
    {
        vector<int> result;
        std::istringstream in(row.levels);
        for (string item ; std::getline(in, item, ',') ; )
            result.push_back(std::stoi(item));
        return result;
    }

    auto to_string(ClaimStatus s) -> string
    {
        switch (s) {
            case ClaimStatus::Pass:    return "PASS";
            case ClaimStatus::Fail:    return "FAIL";
            case ClaimStatus::Skipped: return "SKIP";
        }
        return "?";
    }

    auto VerifyResult::passed() const -> bool
    {
        return std::none_of(claims.begin(), claims.end(), [] (const ClaimResult & c) {
                return c.gating && c.status == ClaimStatus::Fail; });
    }

    auto VerifyResult::failed_properties() const -> vector<string>
    {
        vector<string> result;
        for (auto & c : claims)
            if (! c.gating && c.status == ClaimStatus::Fail)
                result.push_back(c.id);
        return result;
    }

    auto format_claim(const ClaimResult & claim) -> string
    {
        bool numbered = ! claim.id.empty() && std::all_of(claim.id.begin(), claim.id.end(), [] (char c) { return c >= '0' && c <= '9'; });
        string result = to_string(claim.status) + (numbered ? " criterion " : " property ") + claim.id + ": " + claim.title;
        if (! claim.detail.empty())
            result += " (" + claim.detail + ")";
        if (! claim.timing.empty())
            result += " [" + claim.timing + "]";
        for (auto & w : claim.warnings)
            result += "\n    warning: " + w;
        return result;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto seconds_since(Clock::time_point start) -> double
        {
            return std::chrono::duration<double>(Clock::now() - start).count();
        }

        auto seconds_string(double s) -> string
        {
            std::ostringstream out;
            out.precision(2);
            out << std::fixed << s << " s";
            return out.str();
        }

        auto yn(bool b) -> string
        {
            return b ? "yes" : "no";
        }

        auto join(const vector<string> & items, std::size_t limit = 8) -> string
        {
            string result;
            for (std::size_t i = 0 ; i < items.size() && i < limit ; ++i)
                result += (i ? ", " : "") + items[i];
            if (items.size() > limit)
                result += ", ...";
            return result;
        }

        auto all_codes(int height) -> vector<SectionCode>
        {
            vector<SectionCode> result;
            for (int bits = 0 ; bits < (1 << height) ; ++bits) {
                string s;
                for (int k = height - 1 ; k >= 0 ; --k)
                    s += ((bits >> k) & 1) ? '1' : '0';
                result.emplace_back(s);
            }
            return result;
        }

        auto crowned_codes(int height) -> vector<SectionCode>
        {
            vector<SectionCode> result;
            for (auto & c : all_codes(height))
                if (c.bit(0) && c.bit(height - 1))
                    result.push_back(c);
            return result;
        }

        struct Context
        {
            const VerifyOptions & options;
            int cap;
            vector<SegmentEntry> table;
            map<SectionCode, SegmentEntry> by_code;
            map<SectionCode, MethodResult> oracle, splits;
            double small_seconds = 0, large_seconds = 0;
            string table_error;

            auto oracle_answer(const SectionCode & c) -> bool
            {
                if (0 == c.height())
                    return true;
                auto it = oracle.find(c);
                if (it == oracle.end())
                    it = oracle.emplace(c, decide_by_oracle(c)).first;
                return it->second.answer;
            }
        };

        auto solver_options(const VerifyOptions & options, int workers) -> SolverOptions
        {
            SolverOptions result;
            result.workers = workers;
            result.criteria.invert = options.invert_criteria;
            return result;
        }

        auto verdict_lines(Context & ctx) -> string
        {
            string result;
            for (auto & e : ctx.table) {
                json j{
                    {"schema", schema_version},
                    {"kind", "verdicts"},
                    {"code", e.code.str()},
                    {"oracle", yn(ctx.oracle.at(e.code).answer)},
                    {"splits", yn(ctx.splits.at(e.code).answer)},
                    {"recursive", yn(e.answer)}};
                result += j.dump() + "\n";
            }
            return result;
        }

        auto prepare(Context & ctx) -> void
        {
            // heights up to five get all three methods on the clock, height
            // six the oracle and the split search
            RecursiveSolver solver(solver_options(ctx.options, ctx.options.workers));
            try {
                for (int h = 1 ; h <= ctx.cap ; ++h) {
                    auto start = Clock::now();
                    auto rows = solver.build_table(h);
                    if (h <= 5)
                        ctx.small_seconds += seconds_since(start);

                    start = Clock::now();
                    for (auto & c : table_codes(h)) {
                        ctx.oracle.emplace(c, decide_by_oracle(c));
                        ctx.splits.emplace(c, decide_by_splits(c));
                    }
                    (h <= 5 ? ctx.small_seconds : ctx.large_seconds) += seconds_since(start);

                    if (h == ctx.cap)
                        ctx.table = std::move(rows);
                }
            }
            catch (const std::exception & e) {
                ctx.table_error = e.what();
                ctx.table.clear();
            }
            for (auto & e : ctx.table)
                ctx.by_code.emplace(e.code, e);
        }

        auto criterion_table(Context & ctx, ClaimResult & claim) -> void
        {
            if (! ctx.table_error.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail = "table construction failed: " + ctx.table_error;
                return;
            }
            vector<string> wrong;
            int compared = 0;
            for (auto & row : published_table()) {
                SectionCode c{row.code};
                if (c.height() > ctx.cap)
                    continue;
                ++compared;
                bool rec = ctx.by_code.at(c).answer, orc = ctx.oracle.at(c).answer, spl = ctx.splits.at(c).answer;
                if (rec != row.answer || orc != row.answer || spl != row.answer)
                    wrong.push_back(c.str() + " published " + (row.answer ? "y" : "n") + " got "
                            + (orc ? "y" : "n") + (spl ? "y" : "n") + (rec ? "y" : "n"));
            }
            claim.detail = to_string(compared) + " codes, oracle/splits/recursive";
            if (! wrong.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; mismatches: " + join(wrong);
            }
            claim.timing = "heights 1-5 " + seconds_string(ctx.small_seconds) + ", height 6 " + seconds_string(ctx.large_seconds);
            if (ctx.small_seconds > 300 || ctx.large_seconds > 3600) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; over the time limit";
            }
            if (ctx.cap < 6)
                claim.warnings.push_back("heights " + to_string(ctx.cap + 1) + "-6 skipped (table cap " + to_string(ctx.cap) + ")");
        }

        auto criterion_tbase(Context & ctx, ClaimResult & claim) -> void
        {
            if (! ctx.table_error.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail = "table construction failed";
                return;
            }
            vector<string> wrong;
            int compared = 0;
            for (auto & row : published_table()) {
                SectionCode c{row.code};
                if (c.height() > ctx.cap || string(row.levels).empty())
                    continue;
                ++compared;
                if (ctx.by_code.at(c).tbase_levels != published_levels(row))
                    wrong.push_back(c.str());
            }
            claim.detail = to_string(compared) + " published lists compared";
            if (! wrong.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; differ on " + join(wrong);
            }
            if (ctx.cap < 6)
                claim.warnings.push_back("height 6 lists skipped (table cap " + to_string(ctx.cap) + ")");
        }

        auto criterion_isomorphism(Context &, ClaimResult & claim) -> void
        {
            vector<string> problems;
            string counts;
            for (int n = 2 ; n <= 5 ; ++n) {
                auto codes = crowned_codes(n);
                vector<GridPoset> posets;
                for (auto & c : codes)
                    posets.push_back(build_from_code(c));
                for (std::size_t i = 0 ; i < posets.size() ; ++i) {
                    if (! is_nice_section(posets[i]))
                        problems.push_back(codes[i].str() + " is not a nice section");
                    if (all_automorphisms(posets[i].poset()).size() != 6)
                        problems.push_back(codes[i].str() + " does not have 6 automorphisms");
                    for (std::size_t j = 0 ; j < i ; ++j)
                        if (is_isomorphic(posets[i].poset(), posets[j].poset()))
                            problems.push_back(codes[i].str() + " ~ " + codes[j].str());
                }
                if (int(codes.size()) != (1 << (n - 2)))
                    problems.push_back("height " + to_string(n) + " count");
                counts += (counts.empty() ? "" : ", ") + to_string(codes.size());
            }
            claim.detail = "types per height 2-5: " + counts;
            if (! problems.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; " + join(problems);
            }
        }

        auto criterion_niceness(Context &, ClaimResult & claim) -> void
        {
            vector<string> bad;
            int checked = 0;
            for (int h = 1 ; h <= 6 ; ++h)
                for (auto & c : crowned_codes(h)) {
                    ++checked;
                    if (! irreducible_points(build_from_code(c).poset()).empty())
                        bad.push_back(c.str());
                }
            claim.detail = to_string(checked) + " crowned codes";
            if (! bad.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; irreducible points in " + join(bad);
            }
        }

        auto criterion_round_trip(Context &, ClaimResult & claim) -> void
        {
            long long splits = 0, witnesses = 0;
            vector<string> problems;
            for (int h = 1 ; h <= 4 ; ++h)
                for (auto & c : all_codes(h)) {
                    auto g = build_from_code(c);
                    const Poset & p = g.poset();
                    SplitSearchLog log;
                    for (auto & split : all_splits_exhaustive(p, log)) {
                        ++splits;
                        try {
                            auto r = build_retraction(p, split);
                            if (! is_matching(p, r, split))
                                problems.push_back(c.str() + ": built retraction does not match " + describe(p, split));
                        }
                        catch (const NicesecError & e) {
                            problems.push_back(c.str() + ": " + e.what());
                        }
                    }

                    if (! c.is_nice_section_code() && c.str() != "1")
                        continue;
                    for (auto & cand : crown_stack_candidates(p, p.carrier(), true))
                        for_each_retraction_map(p, p.carrier(), cand.points, [&] (const vector<int> & m) {
                                ++witnesses;
                                auto w = make_witness(p, p.carrier(), cand.points, m);
                                try {
                                    auto split = split_from_retraction(p, w);
                                    if (! is_matching(p, w, split))
                                        problems.push_back(c.str() + ": split does not match");
                                }
                                catch (const NicesecError & e) {
                                    problems.push_back(c.str() + ": " + e.what());
                                }
                                return true;
                                });
                }
            claim.detail = to_string(splits) + " passing splits rebuilt, " + to_string(witnesses) + " spanning witnesses split";
            if (! problems.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; " + join(problems, 4);
            }
        }

        auto criterion_q011(Context &, ClaimResult & claim) -> void
        {
            auto g = build_from_code(SectionCode{"011"});
            const Poset & p = g.poset();
            int checked = 0;
            vector<string> found;
            for_each_subset(p.carrier(), [&] (PointSet d) {
                    if (! p.is_down_set(d) || (d & p.level(0)).size() > 1 || d == p.carrier())
                        return;
                    ++checked;
                    if (auto w = has_class_retract_minus(p, d, Side::Down)) {
                        string names;
                        for (int x : d)
                            names += (names.empty() ? "" : " ") + p.label(x);
                        found.push_back("{" + names + "}");
                    }
                    });
            claim.detail = to_string(checked) + " down-sets with at most one bottom point";
            if (! found.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; retract found after removing " + join(found);
            }
        }

        auto criterion_height_six_negatives(Context & ctx, ClaimResult & claim) -> void
        {
            if (ctx.cap < 6) {
                claim.status = ClaimStatus::Skipped;
                claim.warnings.push_back("needs height 6 (table cap " + to_string(ctx.cap) + ")");
                return;
            }
            if (! ctx.table_error.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail = "table construction failed";
                return;
            }
            vector<string> bad;
            for (auto * code : {"111011", "111001", "101011", "110001", "110011", "110111", "100111", "110101", "100011"}) {
                SectionCode c{code};
                int no = (! ctx.oracle.at(c).answer) + (! ctx.splits.at(c).answer)
                    + (ctx.by_code.contains(c) && ! ctx.by_code.at(c).answer);
                if (no < 2)
                    bad.push_back(c.str());
            }
            claim.detail = "9 codes, oracle and split search";
            if (! bad.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; not refuted twice: " + join(bad);
            }
        }

        auto criterion_all_ones(Context & ctx, ClaimResult & claim) -> void
        {
            string got;
            bool ok = true;
            int top = std::min(ctx.cap, 6);
            for (int h = 1 ; h <= top ; ++h) {
                SectionCode c{string(h, '1')};
                bool expected = h % 3 == 0;
                bool answer = ctx.oracle_answer(c);
                if (ctx.by_code.contains(c))
                    ok = ok && ctx.by_code.at(c).answer == expected;
                ok = ok && answer == expected;
                got += answer ? 'y' : 'n';
            }
            claim.detail = "heights 1-" + to_string(top) + ": " + got;
            if (! ctx.table_error.empty())
                claim.detail += "; table construction failed";
            if (! ok || ! ctx.table_error.empty())
                claim.status = ClaimStatus::Fail;
            if (ctx.cap < 6)
                claim.warnings.push_back("heights above " + to_string(ctx.cap) + " skipped");
        }

        auto criterion_duality(Context & ctx, ClaimResult & claim) -> void
        {
            vector<string> bad;
            int checked = 0;
            int top = std::min(ctx.cap, 6);
            for (int h = 1 ; h <= top ; ++h)
                for (auto & c : table_codes(h)) {
                    if (! c.reversed().is_table_code())
                        continue;
                    ++checked;
                    bool same = ctx.oracle_answer(c) == ctx.oracle_answer(c.reversed());
                    if (ctx.by_code.contains(c) && ctx.by_code.contains(c.reversed()))
                        same = same && ctx.by_code.at(c).answer == ctx.by_code.at(c.reversed()).answer;
                    if (! same)
                        bad.push_back(c.str());
                }
            claim.detail = to_string(checked) + " codes";
            if (! bad.empty() || ! ctx.table_error.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += bad.empty() ? "; table construction failed" : "; differ from reverse: " + join(bad);
            }
            if (ctx.cap < 6)
                claim.warnings.push_back("heights above " + to_string(ctx.cap) + " skipped");
        }

        auto criterion_determinism(Context & ctx, ClaimResult & claim) -> void
        {
            if (! ctx.table_error.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail = "table construction failed";
                return;
            }
            string reference = table_to_json_lines(ctx.table) + verdict_lines(ctx);
            int top = std::min(ctx.cap, 6);
            vector<string> runs;
            for (int workers : {1, 4}) {
                RecursiveSolver solver(solver_options(ctx.options, workers));
                Context again{ctx.options, ctx.cap, solver.build_table(top), {}, {}, {}, 0, 0, {}};
                for (auto & e : again.table) {
                    again.oracle.emplace(e.code, decide_by_oracle(e.code));
                    again.splits.emplace(e.code, decide_by_splits(e.code));
                }
                runs.push_back(table_to_json_lines(again.table) + verdict_lines(again));
            }
            claim.detail = "serial and 4-worker reruns, " + to_string(reference.size()) + " bytes";
            if (runs[0] != reference || runs[1] != reference) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; outputs differ";
            }
        }

        auto extra_criteria_soundness(Context & ctx, ClaimResult & claim) -> void
        {
            CriteriaOptions options;
            options.invert = ctx.options.invert_criteria;
            auto answer = [&] (const SectionCode & c) { return ctx.oracle_answer(c); };
            long long checked = 0;
            std::map<int, long long> pruned;
            std::map<int, vector<string>> codes, examples;
            for (int h = 3 ; h <= 5 ; ++h)
                for (auto & c : crowned_codes(h)) {
                    auto g = build_from_code(c);
                    SplitSearchLog log;
                    for (auto & split : all_splits_exhaustive(g.poset(), log)) {
                        ++checked;
                        auto context = context_of(split);
                        for (int which = 1 ; which <= 5 ; ++which) {
                            Verdict v;
                            try {
                                v = criterion(c, which, context, answer, options);
                            }
                            catch (const ContextError &) {
                                continue;
                            }
                            if (v != Verdict::Prune)
                                continue;
                            ++pruned[which];
                            if (codes[which].empty() || codes[which].back() != c.str())
                                codes[which].push_back(c.str());
                            if (examples[which].size() < 1)
                                examples[which].push_back(c.str() + " " + describe(g.poset(), split));
                        }
                    }
                }
            claim.detail = to_string(checked) + " passing splits on heights 3-5";
            if (! pruned.empty()) {
                claim.status = ClaimStatus::Fail;
                for (auto & [which, n] : pruned)
                    claim.detail += "; criterion " + to_string(which) + " prunes " + to_string(n)
                        + " of them, on " + join(codes[which], 4) + ", e.g. " + examples[which].front();
            }
        }

        auto extra_cautionary(Context & ctx, ClaimResult & claim) -> void
        {
            SectionCode c{"1001"};
            auto g = build_from_code(c);
            auto answer = [&] (const SectionCode & s) { return ctx.oracle_answer(s); };
            SplitSearchLog log;
            auto splits = all_splits_exhaustive(g.poset(), log);

            int strict = 0, relaxed3 = 0, relaxed5 = 0;
            CriteriaOptions drop3, drop5;
            drop3.drop_crown_hypothesis_3 = true;
            drop5.drop_crown_hypothesis_5 = true;
            for (auto & split : splits) {
                auto context = context_of(split);
                strict += any_criterion_prunes(c, context, answer);
                relaxed3 += any_criterion_prunes(c, context, answer, drop3);
                relaxed5 += any_criterion_prunes(c, context, answer, drop5);
            }
            claim.detail = to_string(splits.size()) + " passing splits; pruned with hypotheses " + to_string(strict)
                + ", without the one of criterion 3 " + to_string(relaxed3)
                + ", without the one of criterion 5 " + to_string(relaxed5);
            if (strict != 0 || relaxed3 == 0 || relaxed5 == 0)
                claim.status = ClaimStatus::Fail;
        }

        auto extra_final_zero(Context & ctx, ClaimResult & claim) -> void
        {
            vector<string> bad;
            int checked = 0;
            for (int h = 2 ; h <= std::min(ctx.cap, 6) ; ++h)
                for (auto & c : table_codes(h)) {
                    if (c.bit(h - 1))
                        continue;
                    ++checked;
                    if (ctx.oracle_answer(c) != ctx.oracle_answer(c.prefix(h - 2)))
                        bad.push_back(c.str());
                }
            claim.detail = to_string(checked) + " codes ending in 0, oracle on both sides";
            if (! bad.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; " + join(bad);
            }
        }

        auto extra_json(Context & ctx, ClaimResult & claim) -> void
        {
            int checked = 0;
            vector<string> bad;
            for (auto & e : ctx.table) {
                auto w = e.witness();
                if (! w)
                    continue;
                ++checked;
                auto g = build_from_code(e.code);
                try {
                    auto text = witness_to_json(g.poset(), *w).dump();
                    if (witness_from_json(g.poset(), json::parse(text)) != *w)
                        bad.push_back(e.code.str());
                }
                catch (const std::exception &) {
                    bad.push_back(e.code.str());
                }
            }
            claim.detail = to_string(checked) + " witnesses";
            if (! bad.empty() || ! ctx.table_error.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; " + join(bad);
            }
        }

        auto extra_acceleration(Context & ctx, ClaimResult & claim) -> void
        {
            if (! ctx.table_error.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail = "table construction failed";
                return;
            }
            SolverOptions plain;
            plain.use_criteria = false;
            RecursiveSolver solver(plain);
            auto table = solver.build_table(std::min(ctx.cap, 6));
            long long with = 0, without = 0;
            vector<string> bad;
            for (std::size_t i = 0 ; i < table.size() ; ++i) {
                if (table[i].answer != ctx.table[i].answer)
                    bad.push_back(table[i].code.str());
                with += ctx.table[i].log.stats.nodes;
                without += table[i].log.stats.nodes;
            }
            claim.detail = "search nodes with criteria " + to_string(with) + ", without " + to_string(without);
            if (! bad.empty()) {
                claim.status = ClaimStatus::Fail;
                claim.detail += "; answers change on " + join(bad);
            }
        }
    }

    auto run_verification(const VerifyOptions & options) -> VerifyResult
    {
        Context ctx{options, std::clamp(options.table_cap, 1, 6), {}, {}, {}, {}, 0, 0, {}};
        prepare(ctx);

        VerifyResult result;
        auto run = [&] (string id, string title, const function<auto (Context &, ClaimResult &) -> void> & f) {
            ClaimResult claim;
            claim.id = std::move(id);
            claim.title = std::move(title);
            claim.gating = std::all_of(claim.id.begin(), claim.id.end(), [] (char c) { return c >= '0' && c <= '9'; });
            auto start = Clock::now();
            try {
                f(ctx, claim);
            }
            catch (const std::exception & e) {
                claim.status = ClaimStatus::Fail;
                claim.detail += (claim.detail.empty() ? "" : "; ") + string("error: ") + e.what();
            }
            if (claim.timing.empty())
                claim.timing = seconds_string(seconds_since(start));
            result.claims.push_back(std::move(claim));
        };

        run("1", "table of lower segments reproduced", criterion_table);
        run("2", "t-base level lists", criterion_tbase);
        run("3", "isomorphism types and automorphisms", criterion_isomorphism);
        run("4", "crowned codes have no irreducible points", criterion_niceness);
        run("5", "splits and retractions convert both ways", criterion_round_trip);
        run("6", "code 011 needs two bottom points removed", criterion_q011);
        run("7", "height-6 negatives refuted twice", criterion_height_six_negatives);
        run("8", "6-crown stacks: retract iff height divisible by three", criterion_all_ones);
        run("9", "answers agree with reversed codes", criterion_duality);
        run("10", "reruns are byte-identical", criterion_determinism);

        if (options.extras) {
            run("criteria-soundness", "no passing split is pruned by a criterion", extra_criteria_soundness);
            run("criteria-hypotheses", "code 1001 needs the crown hypotheses of criteria 3 and 5", extra_cautionary);
            run("criteria-acceleration", "criteria change no answers", extra_acceleration);
            run("final-zero", "codes ending in 0 follow their prefix", extra_final_zero);
            run("witness-json", "witnesses survive a JSON round trip", extra_json);
        }

        result.machine_output = table_to_json_lines(ctx.table);
        if (ctx.table_error.empty())
            result.machine_output += verdict_lines(ctx);
        for (auto & c : result.claims) {
            json j{
                {"schema", schema_version},
                {"kind", "claim"},
                {"id", c.id},
                {"status", to_string(c.status)},
                {"detail", c.detail}};
            if (! c.warnings.empty())
                j["warnings"] = c.warnings;
            result.machine_output += j.dump() + "\n";
        }
        return result;
    }
}
