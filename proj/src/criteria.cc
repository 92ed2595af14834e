/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/splits.hh>
#include <nicesec/errors.hh>

#include <string>

using std::string;

namespace nicesec
{
    using std::to_string;

    namespace
    {
        /// The level k at which a down-split context must sit for each
        /// criterion: s-bases P(h), P(h-1, h), P(h-1, h), P(1 -> h), P(1 -> h).
        auto expected_level(int which, int h) -> int
        {
            switch (which) {
                case 1: return h - 1;
                case 2: return h - 2;
                case 3: return h - 2;
                case 4: return 0;
                case 5: return 0;
            }
            throw ContextError{"no criterion " + to_string(which)};
        }

        auto answer_or_antichain(const SectionCode & code, const SegmentAnswer & answer) -> bool
        {
            // a single 3-antichain retracts onto a 2-antichain
            return code.height() == 0 || answer(code);
        }

        auto down_verdict(const SectionCode & code, int which, int removed_count,
                const SegmentAnswer & answer, const CriteriaOptions & options) -> bool
        {
            int h = code.height();
            switch (which) {
                case 1:
                    return ! answer_or_antichain(code.prefix(h - 3), answer);
                case 2:
                    return removed_count < 2;
                case 3:
                    return options.drop_crown_hypothesis_3 || code.bit(h - 2);
                case 4:
                    return removed_count > 1;
                case 5:
                    if (! options.drop_crown_hypothesis_5 && ! code.bit(1))
                        return false;
                    return ! answer_or_antichain(code.slice(3, h).reversed(), answer);
            }
            throw ContextError{"no criterion " + to_string(which)};
        }
    }

    auto criterion(const SectionCode & code, int which, const CriterionContext & context,
            const SegmentAnswer & answer, const CriteriaOptions & options) -> Verdict
    {
        if (! code.is_nice_section_code() || code.height() < 3)
            throw ContextError{"criteria need a nice section code of height at least three, got '" + code.str() + "'"};

        int h = code.height();
        SectionCode down_code = context.side == Side::Down ? code : code.reversed();
        int k = context.side == Side::Down ? context.k : h - context.k;
        if (k != expected_level(which, h))
            throw ContextError{"criterion " + to_string(which) + " does not speak about a split at level "
                + to_string(context.k)};

        bool prune = down_verdict(down_code, which, context.removed.size(), answer, options);
        if (options.invert)
            prune = ! prune;
        return prune ? Verdict::Prune : Verdict::NoPrune;
    }

    auto any_criterion_prunes(const SectionCode & code, const CriterionContext & context,
            const SegmentAnswer & answer, const CriteriaOptions & options) -> bool
    {
        int h = code.height();
        int k = context.side == Side::Down ? context.k : h - context.k;
        for (int which = 1 ; which <= 5 ; ++which)
            if (k == expected_level(which, h) && Verdict::Prune == criterion(code, which, context, answer, options))
                return true;
        return false;
    }
}
