/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/errors.hh>
#include <nicesec/report.hh>
#include <nicesec/solver.hh>
#include <nicesec/verify.hh>

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <thread>

using namespace nicesec;

using std::cerr;
using std::cout;
using std::string;

namespace
{
    /// Highest table height the CLI will build.
    constexpr int max_table_height = 7;

    auto default_workers() -> int
    {
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto yes_no(bool b) -> string
    {
        return b ? "yes" : "no";
    }

    auto fill_from(AnalysisReport & report, const MethodResult & result) -> void
    {
        report.answer = yes_no(result.answer);
        report.method = to_string(result.method);
        report.witness = result.witness;
        report.search_stats = stats_to_map(result.log);
    }

    auto cmd_decide(const string & text, const string & method, bool as_json, bool timing) -> int
    {
        SectionCode code;
        try {
            code = SectionCode{text};
        }
        catch (const ParseError & e) {
            cerr << "nicesec: " << e.what() << "\n";
            return 1;
        }
        if (code.height() < 1) {
            cerr << "nicesec: the code must have at least one bit\n";
            return 1;
        }

        AnalysisReport report;
        report.code = code.str();
        report.height = code.height();
        if (! code.is_table_code())
            report.warnings.push_back("code does not start with 1, so it is not a lower segment of the table");
        if ((method == "recursive" || method == "all") && ! code.is_table_code()) {
            cerr << "nicesec: the recursive method needs a code starting with 1\n";
            return 1;
        }

        auto start = std::chrono::steady_clock::now();
        int status = 0;
        try {
            if (method == "oracle")
                fill_from(report, decide_by_oracle(code));
            else if (method == "splits")
                fill_from(report, decide_by_splits(code));
            else if (method == "recursive") {
                RecursiveSolver solver;
                auto & entry = solver.solve(code);
                report.answer = yes_no(entry.answer);
                report.method = to_string(entry.method);
                if (auto w = entry.witness())
                    report.witness = *w;
                report.search_stats = stats_to_map(entry.log);
            }
            else {
                RecursiveSolver solver;
                try {
                    auto cross = cross_validate(code, solver);
                    fill_from(report, cross.recursive);
                    report.method = "all";
                    report.verdicts = {{"oracle", yes_no(cross.oracle.answer)}, {"splits", yes_no(cross.splits.answer)},
                        {"recursive", yes_no(cross.recursive.answer)}};
                }
                catch (const DiscrepancyError & e) {
                    auto & cross = e.report();
                    report.answer = "undecided";
                    report.method = "all";
                    report.verdicts = {{"oracle", yes_no(cross.oracle.answer)}, {"splits", yes_no(cross.splits.answer)},
                        {"recursive", yes_no(cross.recursive.answer)}};
                    report.warnings.push_back(e.what());
                    status = 3;
                }
            }
        }
        catch (const UndecidedError & e) {
            report.answer = "undecided";
            report.method = method;
            report.warnings.push_back(e.what());
            status = 2;
        }

        if (timing)
            report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start).count();

        if (as_json)
            cout << report_to_json(report).dump() << "\n";
        else
            cout << format_report(report);
        return status;
    }

    auto cmd_table(int height, bool as_json, int workers, bool criteria) -> int
    {
        if (height < 1 || height > max_table_height) {
            cerr << "nicesec: table height must be between 1 and " << max_table_height << "\n";
            return 1;
        }
        SolverOptions options;
        options.workers = workers;
        options.use_criteria = criteria;
        RecursiveSolver solver(options);
        try {
            auto entries = solver.build_table(height);
            cout << (as_json ? table_to_json_lines(entries) : format_table(entries));
        }
        catch (const UndecidedError & e) {
            cerr << "nicesec: " << e.what() << "\n";
            return 2;
        }
        return 0;
    }

    auto cmd_dot(const string & text, bool with_witness) -> int
    {
        SectionCode code;
        try {
            code = SectionCode{text};
        }
        catch (const ParseError & e) {
            cerr << "nicesec: " << e.what() << "\n";
            return 1;
        }
        auto g = build_from_code(code);
        if (! with_witness) {
            cout << to_dot(g);
            return 0;
        }
        auto w = has_4crownstack_retract(g, OracleMode::Spanning);
        if (! w)
            cerr << "nicesec: '" << code.str() << "' has no 4-crown stack retract, drawing the poset alone\n";
        cout << to_dot(g, w ? &*w : nullptr);
        return 0;
    }

    auto cmd_verify(int cap, bool as_json, bool invert, int workers, bool extras) -> int
    {
        VerifyOptions options;
        options.table_cap = cap;
        options.invert_criteria = invert;
        options.workers = workers;
        options.extras = extras;
        auto result = run_verification(options);

        if (as_json)
            cout << result.machine_output;
        else
            for (auto & claim : result.claims)
                cout << format_claim(claim) << "\n";

        if (cap < 6)
            cerr << "nicesec: warning: table cap " << cap << ", height-6 claims skipped\n";

        if (auto failed = result.failed_properties() ; ! failed.empty()) {
            cerr << "nicesec: warning: property checks failed:";
            for (auto & id : failed)
                cerr << " " << id;
            cerr << "\n";
        }

        if (! result.passed()) {
            cerr << "nicesec: failed claims:";
            for (auto & claim : result.claims)
                if (claim.gating && claim.status == ClaimStatus::Fail)
                    cerr << " " << claim.id;
            cerr << "\n";
            return 1;
        }
        return 0;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Retracts of nice sections of width three and horizon two onto 4-crown stacks"};
    app.require_subcommand(1);

    string code, method = "recursive";
    bool as_json = false, timing = false, with_witness = false, invert = false, no_extras = false, no_criteria = false;
    int height = 0, cap = 6, workers = default_workers();

    auto decide = app.add_subcommand("decide", "Decide one lower segment code");
    decide->add_option("code", code, "binary code, e.g. 1001")->required();
    decide->add_option("--method", method, "oracle, splits, recursive or all")
        ->check(CLI::IsMember({"oracle", "splits", "recursive", "all"}));
    decide->add_flag("--json", as_json, "one machine-readable record");
    decide->add_flag("--timing", timing, "include elapsed time");

    auto table = app.add_subcommand("table", "Build the table of lower segments");
    table->add_option("height", height, "largest height")->required();
    table->add_flag("--json", as_json, "one record per line");
    table->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    table->add_flag("--no-criteria", no_criteria, "do not prune with the five criteria");

    auto dot = app.add_subcommand("dot", "Hasse diagram in DOT");
    dot->add_option("code", code, "binary code")->required();
    dot->add_flag("--witness", with_witness, "mark a 4-crown stack retract");

    auto verify = app.add_subcommand("verify", "Check the published results");
    verify->add_option("--cap", cap, "largest table height to compute")->check(CLI::Range(1, 6));
    verify->add_flag("--json", as_json, "machine-readable records");
    verify->add_flag("--invert-criteria", invert, "fault injection: flip every criterion");
    verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--no-extras", no_extras, "only the ten acceptance criteria");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*decide)
            return cmd_decide(code, method, as_json, timing);
        if (*table)
            return cmd_table(height, as_json, workers, ! no_criteria);
        if (*dot)
            return cmd_dot(code, with_witness);
        if (*verify)
            return cmd_verify(cap, as_json, invert, workers, ! no_extras);
    }
    catch (const UndecidedError & e) {
        cerr << "nicesec: " << e.what() << "\n";
        return 2;
    }
    catch (const DiscrepancyError & e) {
        cerr << "nicesec: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception & e) {
        cerr << "nicesec: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
