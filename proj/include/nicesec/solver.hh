/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef NICESEC_GUARD_SOLVER_HH
#define NICESEC_GUARD_SOLVER_HH 1

#include <nicesec/errors.hh>
#include <nicesec/retraction.hh>
#include <nicesec/sections.hh>
#include <nicesec/splits.hh>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace nicesec
{
    enum class Method
    {
        Oracle,
        SplitComplete,
        RecursiveRule
    };

    /// "oracle", "splits", "recursive".
    auto to_string(Method m) -> std::string;

    /// A witness on a segment, possibly with some points of its bottom
    /// (Side::Down) or top (Side::Up) level removed.
    struct TaggedWitness
    {
        RetractWitness witness;
        int removed_count = 0;
        Side side = Side::Down;
    };

    struct SegmentEntry
    {
        SectionCode code;
        bool answer = false;
        std::vector<TaggedWitness> witnesses;
        std::vector<int> tbase_levels;
        Method method = Method::RecursiveRule;

        /// The split that decided a Yes, when one did.
        std::optional<Split> split;

        /// How the answer was reached, one line per step.
        std::vector<std::string> notes;

        SplitSearchLog log;

        /// The witness with nothing removed, if the answer is Yes.
        auto witness() const -> const RetractWitness *;
    };

    /// {0} plus every k in [1, h-1] whose prefix of length k is a Yes.
    auto tbase_levels_from(const SectionCode & code, const std::function<auto (const SectionCode &) -> bool> & answer)
        -> std::vector<int>;

    struct MethodResult
    {
        Method method = Method::Oracle;
        bool answer = false;
        std::optional<RetractWitness> witness;
        SplitSearchLog log;
    };

    /// The spanning 4-crown stack oracle (segments of height at least one are
    /// connected, so no 2-antichain retract exists).
    auto decide_by_oracle(const SectionCode & code) -> MethodResult;

    /// Exhaustive split enumeration; the witness is built from the split.
    auto decide_by_splits(const SectionCode & code) -> MethodResult;

    struct SolverOptions
    {
        /// Skip split contexts pruned by the five criteria.
        bool use_criteria = true;
        CriteriaOptions criteria;

        /// Worker threads across codes of the same height.
        int workers = 1;
    };

    /**
     * Builds the table of lower segments height by height. Codes ending in 0
     * follow their prefix two levels shorter; codes ending in 1 are decided
     * by splits assembled from stored segment witnesses, then by gap stacks,
     * and only then by the exhaustive split search.
     */
    class RecursiveSolver
    {
        private:
            SolverOptions _options;
            std::map<SectionCode, SegmentEntry> _table;

            std::mutex _variants_mutex;
            std::map<std::tuple<std::string, int, int, int>, std::optional<RetractWitness>> _variants;

            auto compute(const SectionCode & code) -> SegmentEntry;
            auto lookup(const SectionCode & code) const -> const SegmentEntry &;
            auto variant(const SectionCode & code, Side side, int removed_count, std::optional<Extreme> singleton = std::nullopt)
                -> std::optional<RetractWitness>;
            auto solve_final_zero(SegmentEntry & entry) -> void;
            auto solve_by_rule(SegmentEntry & entry) -> bool;
            auto solve_by_gap_stack(SegmentEntry & entry) -> bool;
            auto ensure_dependencies(const SectionCode & code) -> void;

        public:
            explicit RecursiveSolver(SolverOptions options = {});

            /// Memoized; codes must start with '1'.
            auto solve(const SectionCode & code) -> const SegmentEntry &;

            auto answer(const SectionCode & code) -> bool;

            /// Entries for every code of height 1..max_height, in table order.
            auto build_table(int max_height) -> std::vector<SegmentEntry>;
    };

    struct CrossReport
    {
        SectionCode code;
        MethodResult oracle, splits, recursive;

        auto agree() const -> bool
        {
            return oracle.answer == splits.answer && splits.answer == recursive.answer;
        }
    };

    class DiscrepancyError : public NicesecError
    {
        private:
            CrossReport _report;

        public:
            explicit DiscrepancyError(CrossReport report);

            auto report() const -> const CrossReport &
            {
                return _report;
            }
    };

    /// Runs all three methods. Throws DiscrepancyError on disagreement and
    /// InvariantError if a Yes comes with an invalid witness.
    auto cross_validate(const SectionCode & code, RecursiveSolver & solver) -> CrossReport;
}

#endif
