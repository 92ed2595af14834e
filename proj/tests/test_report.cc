/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/errors.hh>
#include <nicesec/report.hh>
#include <nicesec/solver.hh>
#include <nicesec/verify.hh>

#include <doctest.h>

#include <regex>
#include <string>

using namespace nicesec;
using nlohmann::json;
using std::string;

namespace
{
    auto count(const string & text, const string & what) -> int
    {
        int n = 0;
        for (auto pos = text.find(what) ; pos != string::npos ; pos = text.find(what, pos + 1))
            ++n;
        return n;
    }

    auto node_count(const string & dot) -> int
    {
        std::regex node(R"(^    "c\d+,\d" \[)");
        int n = 0;
        std::istringstream lines(dot);
        for (string line ; std::getline(lines, line) ; )
            n += std::regex_search(line, node);
        return n;
    }
}

TEST_CASE("witnesses survive a JSON round trip")
{
    RecursiveSolver solver;
    int checked = 0;
    for (auto & entry : solver.build_table(6)) {
        auto w = entry.witness();
        if (! w)
            continue;
        auto g = build_from_code(entry.code);
        auto text = witness_to_json(g.poset(), *w).dump();
        auto back = witness_from_json(g.poset(), json::parse(text));
        CHECK(back == *w);
        ++checked;
    }
    CHECK(checked == 29);
}

TEST_CASE("bad witness JSON")
{
    auto g = build_from_code(SectionCode{"10"});
    auto w = *has_4crownstack_retract(g, OracleMode::Spanning);
    auto j = witness_to_json(g.poset(), w);

    auto unknown = j;
    unknown["map"][0][1] = "c9,9";
    CHECK_THROWS_AS(witness_from_json(g.poset(), unknown), ParseError);

    auto missing = j;
    missing.erase("class");
    CHECK_THROWS_AS(witness_from_json(g.poset(), missing), ParseError);

    // send a retract point somewhere else
    auto broken = j;
    for (auto & pair : broken["map"])
        if (pair[0] == pair[1]) {
            pair[1] = pair[0] == "c0,0" ? "c0,1" : "c0,0";
            break;
        }
    CHECK_THROWS_AS(witness_from_json(g.poset(), broken), InvariantError);
}

TEST_CASE("DOT output")
{
    auto one = to_dot(build_from_code(SectionCode{"1"}));
    CHECK(node_count(one) == 6);
    CHECK(count(one, "arrowhead=none") == 6);
    CHECK(count(one, "rank=same") == 2);

    auto ten = to_dot(build_from_code(SectionCode{"10"}));
    CHECK(node_count(ten) == 9);
    CHECK(count(ten, "arrowhead=none") == 12);

    auto g = build_from_code(SectionCode{"111"});
    auto w = has_4crownstack_retract(g, OracleMode::Spanning);
    REQUIRE(w);
    auto marked = to_dot(g, &*w);
    CHECK(count(marked, "fillcolor=white") == 6);
    CHECK(count(marked, "style=dashed") == 6);

    CHECK(to_dot(g, &*w) == marked);
    CHECK(to_dot(build_from_code(SectionCode{"10"})) == ten);
}

TEST_CASE("analysis records")
{
    AnalysisReport report;
    report.code = "1001";
    report.height = 4;
    report.answer = "yes";
    report.method = "oracle";
    auto j = report_to_json(report);
    CHECK(j["schema"] == schema_version);
    CHECK(! j.contains("elapsed_ms"));
    report.elapsed_ms = 5;
    CHECK(report_to_json(report).contains("elapsed_ms"));

    auto r = decide_by_oracle(SectionCode{"1001"});
    report.witness = r.witness;
    auto with_witness = report_to_json(report);
    REQUIRE(with_witness.contains("witness"));
    CHECK(with_witness["witness"]["class"] == "4-crown-stack");
    CHECK(format_report(report).find("answer    yes") != string::npos);
}

TEST_CASE("table text")
{
    RecursiveSolver solver;
    auto text = format_table(solver.build_table(1));
    CHECK(text == string(96, '-') + "\n1                   n\n" + string(96, '-') + "\n");

    auto four = format_table(solver.build_table(4));
    CHECK(four.find("1011    0,2,3       n") != string::npos);
    CHECK(four.find(" \n") == string::npos);
}

TEST_CASE("table records")
{
    RecursiveSolver solver;
    auto lines = table_to_json_lines(solver.build_table(6));
    CHECK(count(lines, "\n") == 63);
    auto first = json::parse(lines.substr(0, lines.find('\n')));
    CHECK(first["code"] == "1");
    CHECK(first["answer"] == "no");
    CHECK(first["schema"] == schema_version);
}

TEST_CASE("claim lines")
{
    ClaimResult claim;
    claim.id = "4";
    claim.title = "title";
    claim.detail = "detail";
    CHECK(format_claim(claim).rfind("PASS criterion 4: title (detail)", 0) == 0);
    claim.id = "final-zero";
    claim.status = ClaimStatus::Fail;
    CHECK(format_claim(claim).rfind("FAIL property final-zero: title", 0) == 0);
}

TEST_CASE("verification with fault injection fails")
{
    VerifyOptions options;
    options.extras = false;
    options.invert_criteria = true;
    options.table_cap = 5;
    CHECK(! run_verification(options).passed());
}

TEST_CASE("verification with a lower table cap skips height 6")
{
    VerifyOptions options;
    options.extras = false;
    options.table_cap = 5;
    auto result = run_verification(options);
    CHECK(result.passed());
    bool skipped = false;
    for (auto & claim : result.claims)
        skipped = skipped || claim.status == ClaimStatus::Skipped;
    CHECK(skipped);
}
