/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/report.hh>
#include <nicesec/errors.hh>

#include <iomanip>
#include <sstream>

using nlohmann::json;

using std::map;
using std::string;
using std::vector;

namespace nicesec
{
    using std::to_string;

    namespace
    {
        auto point_by_name(const Poset & p, const string & name) -> int
        {
            for (int x = 0 ; x < p.size() ; ++x)
                if (p.label(x) == name)
                    return x;
            throw ParseError{"unknown point '" + name + "'"};
        }

        auto level_string(const vector<int> & levels) -> string
        {
            string result;
            for (int k : levels)
                result += (result.empty() ? "" : ",") + to_string(k);
            return result;
        }
    }

    auto witness_to_json(const Poset & p, const RetractWitness & w) -> json
    {
        json points = json::array(), pairs = json::array();
        for (int a : w.retract)
            points.push_back(p.label(a));
        for (int x : w.domain)
            pairs.push_back(json::array({p.label(x), p.label(w.map[x])}));
        return json{
            {"class", to_string(w.retract_class)},
            {"retract_height", w.retract_height},
            {"retract_points", points},
            {"map", pairs}};
    }

    auto witness_from_json(const Poset & p, const json & j) -> RetractWitness
    {
        RetractWitness w;
        try {
            string cls = j.at("class").get<string>();
            if (cls == to_string(RetractClass::TwoAntichain))
                w.retract_class = RetractClass::TwoAntichain;
            else if (cls == to_string(RetractClass::FourCrownStack))
                w.retract_class = RetractClass::FourCrownStack;
            else
                throw ParseError{"unknown retract class '" + cls + "'"};

            w.retract_height = j.at("retract_height").get<int>();
            w.map.assign(p.size(), -1);
            for (auto & name : j.at("retract_points"))
                w.retract.insert(point_by_name(p, name.get<string>()));
            for (auto & pair : j.at("map")) {
                if (! pair.is_array() || pair.size() != 2)
                    throw ParseError{"map entries are [from, to] pairs"};
                int from = point_by_name(p, pair[0].get<string>()), to = point_by_name(p, pair[1].get<string>());
                if (w.domain.contains(from))
                    throw ParseError{"point '" + p.label(from) + "' mapped twice"};
                w.domain.insert(from);
                w.map[from] = to;
            }
        }
        catch (const json::exception & e) {
            throw ParseError{string("malformed witness: ") + e.what()};
        }

        if (auto why = witness_problem(p, w))
            throw InvariantError{"loaded witness is invalid: " + *why};
        return w;
    }

    auto stats_to_map(const SplitSearchLog & log) -> map<string, long long>
    {
        return {
            {"candidates", log.stats.candidates},
            {"map_searches", log.stats.map_searches},
            {"nodes", log.stats.nodes},
            {"split_levels", log.levels},
            {"removed_sets", log.removed_sets},
            {"t_candidates", log.t_candidates},
            {"s_bottoms", log.s_bottoms},
            {"rejected_first_condition", log.rejected_first_condition},
            {"rejected_second_condition", log.rejected_second_condition},
            {"rejected_no_s", log.rejected_no_s},
            {"pruned_by_criteria", log.pruned_by_criteria},
            {"passed", log.passed}};
    }

    auto report_to_json(const AnalysisReport & report) -> json
    {
        json j{
            {"schema", schema_version},
            {"code", report.code},
            {"height", report.height},
            {"answer", report.answer},
            {"method", report.method},
            {"search_stats", report.search_stats}};
        if (report.witness) {
            auto g = build_from_code(SectionCode{report.code});
            j["witness"] = witness_to_json(g.poset(), *report.witness);
        }
        if (! report.verdicts.empty())
            j["verdicts"] = report.verdicts;
        if (report.elapsed_ms)
            j["elapsed_ms"] = *report.elapsed_ms;
        if (! report.warnings.empty())
            j["warnings"] = report.warnings;
        return j;
    }

    auto format_report(const AnalysisReport & report) -> string
    {
        std::ostringstream out;
        out << "code      " << report.code << " (height " << report.height << ")\n";
        out << "answer    " << report.answer << "\n";
        out << "method    " << report.method << "\n";
        for (auto & [method, verdict] : report.verdicts)
            out << "  " << std::left << std::setw(10) << method << verdict << "\n";
        if (report.witness) {
            auto g = build_from_code(SectionCode{report.code});
            const Poset & p = g.poset();
            out << "retract   " << to_string(report.witness->retract_class)
                << " of height " << report.witness->retract_height << ":";
            for (int a : report.witness->retract)
                out << " " << p.label(a);
            out << "\nmap      ";
            for (int x : report.witness->domain)
                if (report.witness->map[x] != x)
                    out << " " << p.label(x) << "->" << p.label(report.witness->map[x]);
            out << "\n";
        }
        if (report.elapsed_ms)
            out << "elapsed   " << *report.elapsed_ms << " ms\n";
        for (auto & w : report.warnings)
            out << "warning   " << w << "\n";
        return out.str();
    }

    auto entry_to_json(const SegmentEntry & entry) -> json
    {
        json j{
            {"schema", schema_version},
            {"code", entry.code.str()},
            {"height", entry.code.height()},
            {"answer", entry.answer ? "yes" : "no"},
            {"method", to_string(entry.method)},
            {"tbase_levels", entry.tbase_levels},
            {"notes", entry.notes},
            {"search_stats", stats_to_map(entry.log)}};
        if (auto w = entry.witness()) {
            auto g = build_from_code(entry.code);
            j["witness"] = witness_to_json(g.poset(), *w);
        }
        return j;
    }

    auto table_to_json_lines(const vector<SegmentEntry> & entries) -> string
    {
        string result;
        for (auto & e : entries)
            result += entry_to_json(e).dump() + "\n";
        return result;
    }

    auto format_table(const vector<SegmentEntry> & entries) -> string
    {
        std::ostringstream out;
        int current = -1, in_row = 0;
        auto rule = string(4 * 24, '-') + "\n";
        for (auto & e : entries) {
            if (e.code.height() != current) {
                if (in_row)
                    out << "\n";
                out << rule;
                current = e.code.height();
                in_row = 0;
            }
            else if (in_row == 4) {
                out << "\n";
                in_row = 0;
            }
            bool listed = e.code.height() >= min_listed_height && e.code.bit(e.code.height() - 1);
            out << std::left << std::setw(8) << e.code.str()
                << std::setw(12) << (listed ? level_string(e.tbase_levels) : "")
                << (e.answer ? "y" : "n");
            if (++in_row < 4)
                out << "   ";
        }
        if (in_row)
            out << "\n";
        out << rule;

        // trailing blanks from padding are noise in diffs
        string text = out.str(), result;
        std::istringstream lines(text);
        for (string line ; std::getline(lines, line) ; ) {
            line.erase(line.find_last_not_of(' ') + 1);
            result += line + "\n";
        }
        return result;
    }

    auto to_dot(const GridPoset & g, const RetractWitness * witness) -> string
    {
        const Poset & p = g.poset();
        std::ostringstream out;
        out << "digraph \"" << g.code().str() << "\" {\n";
        out << "    rankdir=BT;\n";
        out << "    node [shape=circle, width=0.3, fixedsize=true, fontsize=8];\n";

        for (int k = 0 ; k <= g.height() ; ++k) {
            out << "    { rank=same;";
            for (int x : p.level(k))
                out << " \"" << p.label(x) << "\";";
            out << " }\n";
        }

        for (int x = 0 ; x < p.size() ; ++x) {
            out << "    \"" << p.label(x) << "\"";
            if (witness && witness->retract.contains(x))
                out << " [style=filled, fillcolor=white]";
            else
                out << " [style=filled, fillcolor=black, fontcolor=white]";
            out << ";\n";
        }

        for (auto & [a, b] : covers(p))
            out << "    \"" << p.label(a) << "\" -> \"" << p.label(b) << "\" [arrowhead=none];\n";

        if (witness)
            for (int x : witness->domain)
                if (witness->map[x] != x)
                    out << "    \"" << p.label(x) << "\" -> \"" << p.label(witness->map[x])
                        << "\" [style=dashed, constraint=false, color=gray40];\n";

        out << "}\n";
        return out.str();
    }
}
