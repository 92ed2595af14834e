/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef NICESEC_GUARD_SPLITS_HH
#define NICESEC_GUARD_SPLITS_HH 1

#include <nicesec/retraction.hh>
#include <nicesec/sections.hh>

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nicesec
{
    /**
     * A retractive down-split (k, D, s, t): t retracts the lower segment
     * P(0 -> k) onto T, s retracts P(k+1 -> h) minus the down-set D onto S,
     * with S and T 2-antichains or 4-crown stacks.
     */
    struct DownSplit
    {
        int k = 0;
        PointSet removed;
        RetractWitness s;
        RetractWitness t;
    };

    /**
     * A retractive up-split (k, U, s, t): t retracts the upper segment
     * P(k -> h) onto T, s retracts P(0 -> k-1) minus the up-set U onto S.
     */
    struct UpSplit
    {
        int k = 0;
        PointSet removed;
        RetractWitness s;
        RetractWitness t;
    };

    using Split = std::variant<DownSplit, UpSplit>;

    auto describe(const Poset & p, const Split & split) -> std::string;

    /// Throws InvariantError unless the split has the shape of a retractive
    /// down-split (up-split) of p.
    auto check_split_shape(const Poset & p, const DownSplit & split) -> void;
    auto check_split_shape(const Poset & p, const UpSplit & split) -> void;

    /// T(h_T) < S(0), and every d in D has some v in T(h_T) none of whose
    /// t-preimages is below d. Throws InvariantError for malformed splits,
    /// including D outside P(k+1).
    auto check_down_condition(const Poset & p, const DownSplit & split) -> bool;

    /// S(h_S) < T(0), and every u in U has some v in T(0) with u below none
    /// of v's t-preimages. Throws InvariantError for malformed splits,
    /// including U outside P(k-1).
    auto check_up_condition(const Poset & p, const UpSplit & split) -> bool;

    /// The retraction onto T + S pasted from t, s and, on D, the point of
    /// T(h_T) other than the least witness tau(d). Throws PreconditionError
    /// if the condition fails, InvariantError if the result does not
    /// validate.
    auto build_retraction_from_down_split(const Poset & p, const DownSplit & split) -> RetractWitness;
    auto build_retraction_from_up_split(const Poset & p, const UpSplit & split) -> RetractWitness;
    auto build_retraction(const Poset & p, const Split & split) -> RetractWitness;

    /// Do r and the split satisfy the coupling: R = T + S (or S + T), r
    /// agrees with t and s on their domains, and r sends D (U) into T?
    auto is_matching(const Poset & p, const RetractWitness & r, const Split & split) -> bool;

    /// The matching down-split at k when r[P(0 -> k)] = R(0 -> l) inside
    /// P(0 -> k) for some l < h_R, and its mirror image for up-splits.
    auto cut_down_split(const Poset & p, const RetractWitness & r, int k) -> std::optional<DownSplit>;
    auto cut_up_split(const Poset & p, const RetractWitness & r, int k) -> std::optional<UpSplit>;

    /// A matching split for a retraction of a crowned section onto a
    /// 4-crown stack, found through a level set of R lying in a single level
    /// of P or spread over two consecutive levels. Throws InvariantError if
    /// no case yields one.
    auto split_from_retraction(const Poset & p, const RetractWitness & r) -> Split;

    /// Every matching split obtained by cutting at some level.
    auto matching_splits(const Poset & p, const RetractWitness & r) -> std::vector<Split>;

    /**
     * Joins s on P(0 -> k-1) and t on P(k+1 -> h) across level k when both
     * have a singleton preimage at the facing ends and P(k-1 -> k+1) is not a
     * 6-crown stack. Tries the six base-permutation transports and returns
     * the first split that passes its condition. Throws PreconditionError
     * when the hypotheses fail.
     */
    auto gap_stack_split(const GridPoset & p, int k, const RetractWitness & s, const RetractWitness & t)
        -> std::optional<Split>;

    struct SplitSearchLog
    {
        long long levels = 0;
        long long removed_sets = 0;
        long long t_candidates = 0;
        long long s_bottoms = 0;
        long long rejected_first_condition = 0;
        long long rejected_second_condition = 0;
        long long rejected_no_s = 0;
        long long pruned_by_criteria = 0;
        long long passed = 0;
        SearchStats stats;

        auto operator+= (const SplitSearchLog & o) -> SplitSearchLog &;
    };

    /// Called for every passing down-split found; return false to stop.
    using DownSplitCallback = std::function<auto (const DownSplit &) -> bool>;

    /**
     * Exhaustive search for retractive down-splits of a horizon-two segment
     * satisfying the down condition: every k, every D inside P(k+1), every
     * retract T of the lower part with every choice of witnesses v for D,
     * and every reachable bottom S(0) of a retract of the upper part. One
     * split is reported per (k, D, T, S(0)) combination that works. If
     * skip is given, (k, D) pairs for which it returns true are skipped and
     * counted as pruned.
     */
    auto search_down_splits(const Poset & p, SplitSearchLog & log, const DownSplitCallback & found,
            const std::function<auto (int, PointSet) -> bool> & skip = {}) -> void;

    /// Mirrors a down-split of p.dual() into an up-split of p.
    auto up_split_from_dual(const Poset & p, const DownSplit & dual_split) -> UpSplit;

    /// Skips (side, k, removed) combinations during exhaustive search.
    using SplitSkip = std::function<auto (Side, int, PointSet) -> bool>;

    /// First passing down-split, or failing that up-split, found by
    /// exhaustive search.
    auto find_split_exhaustive(const Poset & p, SplitSearchLog & log, const SplitSkip & skip = {})
        -> std::optional<Split>;

    /// All passing splits (one per combination), both directions.
    auto all_splits_exhaustive(const Poset & p, SplitSearchLog & log) -> std::vector<Split>;

    /// Which segment is the s-base in a down-split at k with removed set D.
    struct CriterionContext
    {
        Side side = Side::Down;
        int k = 0;
        PointSet removed;
    };

    enum class Verdict
    {
        Prune,
        NoPrune
    };

    /// Answers whether the segment with the given code (a lower segment, or
    /// the dual of an upper segment) has a 2-antichain or a 4-crown stack as
    /// retract.
    using SegmentAnswer = std::function<auto (const SectionCode &) -> bool>;

    struct CriteriaOptions
    {
        /// Drop the 6-crown hypothesis of criterion 3 (respectively 5). Used
        /// only to show the hypotheses are needed.
        bool drop_crown_hypothesis_3 = false;
        bool drop_crown_hypothesis_5 = false;

        /// Fault injection: report the opposite verdict.
        bool invert = false;
    };

    /**
     * The five pruning criteria for P in N_2 of height at least three, in
     * down-split form; up-split contexts are answered by the dual form on
     * the reversed code. Throws ContextError when the context is not the
     * one the criterion speaks about.
     */
    auto criterion(const SectionCode & code, int which, const CriterionContext & context,
            const SegmentAnswer & answer, const CriteriaOptions & options = {}) -> Verdict;

    /// Applies every criterion whose context matches; Prune if any prunes.
    auto any_criterion_prunes(const SectionCode & code, const CriterionContext & context,
            const SegmentAnswer & answer, const CriteriaOptions & options = {}) -> bool;

    /// The context of a split, for criteria checks.
    auto context_of(const Split & split) -> CriterionContext;
}

#endif
