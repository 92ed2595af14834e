/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef NICESEC_GUARD_RETRACTION_HH
#define NICESEC_GUARD_RETRACTION_HH 1

#include <nicesec/poset.hh>
#include <nicesec/sections.hh>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nicesec
{
    enum class RetractClass
    {
        TwoAntichain,
        FourCrownStack
    };

    auto to_string(RetractClass c) -> std::string;

    /**
     * An order-preserving map from domain onto retract that fixes retract
     * pointwise. Indices are those of the ambient poset; map[x] is -1 for x
     * outside the domain.
     */
    struct RetractWitness
    {
        PointSet domain;
        PointSet retract;
        std::vector<int> map;
        RetractClass retract_class = RetractClass::FourCrownStack;

        /// Height of the retract: 0 for a 2-antichain.
        int retract_height = 0;

        auto preimage(int a) const -> PointSet;

        /// r[points], the image of a subset of the domain.
        auto image(PointSet points) const -> PointSet;

        auto operator== (const RetractWitness &) const -> bool = default;
    };

    /// Level sets of the retract, bottom first.
    auto retract_levels(const Poset & p, const RetractWitness & w) -> std::vector<PointSet>;

    /// Returns a description of the first violated witness property (order
    /// preservation, idempotence, image, class), or nothing if valid.
    auto witness_problem(const Poset & p, const RetractWitness & w) -> std::optional<std::string>;

    auto is_valid_witness(const Poset & p, const RetractWitness & w) -> bool;

    /// Wraps a map onto target, reading the class and height off the target.
    auto make_witness(const Poset & p, PointSet domain, PointSet target, std::vector<int> map) -> RetractWitness;

    /// Conjugates by a bijection: the witness x -> alpha(w(alpha^-1(x))).
    auto transport(const RetractWitness & w, std::span<const int> alpha) -> RetractWitness;

    /// The node budget for a single map search; NICESEC_NODE_BUDGET
    /// overrides the default.
    auto default_node_budget() -> long long;

    struct SearchStats
    {
        long long candidates = 0;
        long long map_searches = 0;
        long long nodes = 0;

        auto operator+= (const SearchStats & o) -> SearchStats &
        {
            candidates += o.candidates;
            map_searches += o.map_searches;
            nodes += o.nodes;
            return *this;
        }
    };

    /**
     * Backtracking search for an order-preserving map from the domain onto
     * the target that fixes the target. Points are decided in increasing
     * index order with values tried in increasing order, so the first map
     * found is the lexicographically least. If allowed is nonempty, allowed[x]
     * further restricts the values of each non-fixed point x.
     *
     * Throws UndecidedError once more than budget nodes are visited.
     */
    auto find_retraction_map(const Poset & p, PointSet domain, PointSet target,
            std::span<const PointSet> allowed, long long budget, SearchStats & stats) -> std::optional<std::vector<int>>;

    auto retraction_exists(const Poset & p, PointSet domain, PointSet target) -> std::optional<RetractWitness>;

    /// Calls f on every retraction of the domain onto the target until f
    /// returns false.
    auto for_each_retraction_map(const Poset & p, PointSet domain, PointSet target,
            const std::function<auto (const std::vector<int> &) -> bool> & f) -> void;

    /// An induced 4-crown stack (levels bottom first) or a 2-antichain (one
    /// level).
    struct Candidate
    {
        PointSet points;
        std::vector<PointSet> levels;
    };

    /// Induced sub-posets of the domain that are 4-crown stacks, sorted by
    /// lex_less of their point sets. When spanning, the bottom level lies in
    /// min and the top level in max of the domain.
    auto crown_stack_candidates(const Poset & p, PointSet domain, bool spanning) -> std::vector<Candidate>;

    /// Two-element antichains of the domain, sorted by lex_less.
    auto antichain_candidates(const Poset & p, PointSet domain) -> std::vector<Candidate>;

    auto enumerate_4crownstack_candidates(const GridPoset & p, bool spanning) -> std::vector<Candidate>;

    enum class Extreme
    {
        Bottom,
        Top
    };

    struct RetractQuery
    {
        bool spanning = true;
        bool allow_antichain = true;
        bool allow_stack = true;

        /// Skip 2-antichain candidates when the domain is connected; a map
        /// onto an antichain is constant on components.
        bool antichain_shortcut = true;

        /// Require a point a in this extreme level of the retract whose
        /// preimage is exactly {a}.
        std::optional<Extreme> singleton_end;

        /// Extra filter on candidates; empty accepts all.
        std::function<auto (const Candidate &) -> bool> accept;

        long long budget = default_node_budget();
    };

    /// The witness with the lexicographically least candidate, then the
    /// least map, among those matching the query.
    auto find_retract(const Poset & p, PointSet domain, const RetractQuery & query, SearchStats & stats)
        -> std::optional<RetractWitness>;

    enum class OracleMode
    {
        Spanning,
        Unconstrained
    };

    auto has_4crownstack_retract(const GridPoset & p, OracleMode mode) -> std::optional<RetractWitness>;
    auto has_4crownstack_retract(const GridPoset & p, OracleMode mode, SearchStats & stats) -> std::optional<RetractWitness>;

    enum class Side
    {
        Down,
        Up
    };

    /// Does P minus a removed down-set (Side::Down) or up-set (Side::Up)
    /// have a 2-antichain or a 4-crown stack as retract? The witness lives
    /// on the reduced domain. Throws SideError if the removed set is not of
    /// the claimed kind.
    auto has_class_retract_minus(const Poset & p, PointSet removed, Side side) -> std::optional<RetractWitness>;
    auto has_class_retract_minus(const GridPoset & p, PointSet removed, Side side) -> std::optional<RetractWitness>;

    /// Points a of the bottom or top level of the retract with preimage {a}.
    auto singleton_preimage_points(const Poset & p, const RetractWitness & w, Extreme end) -> PointSet;
}

#endif
