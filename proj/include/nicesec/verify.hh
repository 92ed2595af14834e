/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef NICESEC_GUARD_VERIFY_HH
#define NICESEC_GUARD_VERIFY_HH 1

#include <nicesec/splits.hh>

#include <string>
#include <vector>

namespace nicesec
{
    /// A row of the published table of lower segments: the code, the listed
    /// t-base levels (empty where none are printed) and the y/n answer.
    struct PublishedRow
    {
        const char * code;
        const char * levels;
        bool answer;
    };

    auto published_table() -> const std::vector<PublishedRow> &;

    /// The published t-base list as integers; nothing if the row prints none.
    auto published_levels(const PublishedRow & row) -> std::vector<int>;

    enum class ClaimStatus
    {
        Pass,
        Fail,
        Skipped
    };

    auto to_string(ClaimStatus s) -> std::string;

    struct ClaimResult
    {
        /// "1" to "10" for the acceptance criteria, a short name otherwise.
        std::string id;
        std::string title;
        ClaimStatus status = ClaimStatus::Pass;
        std::string detail;
        std::vector<std::string> warnings;

        /// Wall-clock notes; kept out of machine output.
        std::string timing;

        /// Only the ten acceptance criteria decide the exit status; property
        /// checks are reported alongside.
        bool gating = true;
    };

    struct VerifyOptions
    {
        /// Highest table height to compute; claims about larger heights are
        /// skipped with a warning.
        int table_cap = 6;

        /// Parallel workers for the table.
        int workers = 1;

        /// Fault injection: every criterion verdict is flipped.
        bool invert_criteria = false;

        /// Also run the property claims beyond the ten acceptance criteria.
        bool extras = true;
    };

    struct VerifyResult
    {
        std::vector<ClaimResult> claims;

        /// Line-delimited records: table entries, three-method verdicts and
        /// claim statuses. Deterministic.
        std::string machine_output;

        /// True when no acceptance criterion failed.
        auto passed() const -> bool;

        auto failed_properties() const -> std::vector<std::string>;
    };

    auto run_verification(const VerifyOptions & options) -> VerifyResult;

    /// "PASS criterion 3: title (detail)".
    auto format_claim(const ClaimResult & claim) -> std::string;
}

#endif
