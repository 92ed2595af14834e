/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef NICESEC_GUARD_REPORT_HH
#define NICESEC_GUARD_REPORT_HH 1

#include <nicesec/retraction.hh>
#include <nicesec/sections.hh>
#include <nicesec/solver.hh>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nicesec
{
    /// Bumped whenever a machine-readable record changes shape.
    inline constexpr int schema_version = 1;

    struct AnalysisReport
    {
        std::string code;
        int height = 0;
        std::string answer = "undecided";
        std::string method;
        std::optional<RetractWitness> witness;

        /// Only filled in when timing is asked for, so that records stay
        /// byte-identical across runs otherwise.
        std::optional<long long> elapsed_ms;

        std::map<std::string, long long> search_stats;

        /// For method "all": the answer of each method.
        std::map<std::string, std::string> verdicts;

        std::vector<std::string> warnings;
    };

    auto witness_to_json(const Poset & p, const RetractWitness & w) -> nlohmann::json;

    /// Reads a witness back by point name and re-validates it. Throws
    /// ParseError on malformed input and InvariantError if it does not
    /// validate.
    auto witness_from_json(const Poset & p, const nlohmann::json & j) -> RetractWitness;

    auto stats_to_map(const SplitSearchLog & log) -> std::map<std::string, long long>;

    auto report_to_json(const AnalysisReport & report) -> nlohmann::json;

    auto format_report(const AnalysisReport & report) -> std::string;

    /// One record per table entry; the witness is included for Yes entries.
    auto entry_to_json(const SegmentEntry & entry) -> nlohmann::json;

    /// Line-delimited records, one per entry.
    auto table_to_json_lines(const std::vector<SegmentEntry> & entries) -> std::string;

    /// Below this height the text table leaves the t-base column empty.
    inline constexpr int min_listed_height = 4;

    /// Four entries per row, grouped by height: code, t-base levels (for
    /// codes ending in 1), y or n.
    auto format_table(const std::vector<SegmentEntry> & entries) -> std::string;

    /// Cover graph ranked by level. With a witness, retract points are drawn
    /// hollow and every other point gets a dashed edge to its image.
    auto to_dot(const GridPoset & p, const RetractWitness * witness = nullptr) -> std::string;
}

#endif
