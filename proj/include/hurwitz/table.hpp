#ifndef HURWITZ_TABLE_HPP
#define HURWITZ_TABLE_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "branch_data.hpp"
#include "closed_form.hpp"
#include "golden_data.hpp"
#include "realizations.hpp"
#include "record.hpp"

namespace hurwitz {

/// Genus-0, h=2 rows for a given k: every pi of length 3 with total 2k in
/// descending order, with case, nu and realizations.
inline std::vector<OutputRecord> table_rows(Int k)
{
    if (k < 3)
        throw Error(Errc::degree_too_small, "table needs k >= 3");
    std::vector<OutputRecord> rows;
    for (auto& fd : family_data(0, 2, k)) {
        OutputRecord r{fd, nu(fd), std::nullopt, classify_g0h2(k, fd.pi()), std::nullopt, Status::oracle_skipped};
        const auto set = realizations_g0h2(k, fd.pi());
        r.realizations.emplace(set.begin(), set.end());
        rows.push_back(std::move(r));
    }
    return rows;
}

struct GoldenRow {
    Partition pi;
    CaseLabel case_label;
    Int nu = 0;
    RealizationSet realizations;
    std::optional<std::string> erratum;
};

struct GoldenTable {
    Int k = 0;
    std::vector<GoldenRow> rows;
};

inline GoldenTable parse_golden(std::string_view text)
{
    GoldenTable t;
    try {
        const auto j = json::parse(text);
        t.k = j.at("k").get<Int>();
        for (const auto& row : j.at("rows")) {
            GoldenRow g;
            g.pi = Partition(row.at("pi").get<std::vector<Int>>());
            g.case_label.tag = g0h2_case_from_string(row.at("case").get<std::string>());
            g.case_label.params = row.at("params").get<std::map<std::string, Int>>();
            g.nu = row.at("nu").get<Int>();
            // printed descriptors are canonicalized on parse
            for (const auto& s : row.at("realizations"))
                g.realizations.insert(parse_descriptor(s.get<std::string>()));
            if (row.contains("erratum"))
                g.erratum = row.at("erratum").get<std::string>();
            t.rows.push_back(std::move(g));
        }
    } catch (const json::exception& e) {
        throw Error(Errc::parse, std::string("golden table: ") + e.what());
    }
    return t;
}

/// Embedded copies of the printed k=6 and k=7 tables.
inline std::optional<GoldenTable> golden_table(Int k)
{
    if (k == 6)
        return parse_golden(golden::table_k6);
    if (k == 7)
        return parse_golden(golden::table_k7);
    return std::nullopt;
}

struct CellCheck {
    Partition pi;
    Status status = Status::ok;
    std::string detail;
};

struct TableCheck {
    std::vector<CellCheck> cells;

    bool passed() const
    {
        return std::none_of(cells.begin(), cells.end(), [](const auto& c) { return c.status == Status::mismatch; });
    }

    int errata() const
    {
        return static_cast<int>(
            std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.status == Status::erratum; }));
    }
};

/// Compares computed rows against a golden table cell by cell. A nu cell
/// that differs only on a registered erratum row, where the computed nu
/// equals the size of the row's own printed realization list, is reported
/// as an erratum. The golden data are never corrected.
inline TableCheck check_table(const std::vector<OutputRecord>& rows, const GoldenTable& golden)
{
    TableCheck out;
    std::set<Partition> printed;
    for (const auto& g : golden.rows) {
        printed.insert(g.pi);
        CellCheck cell{g.pi, Status::ok, {}};
        auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.datum.pi() == g.pi; });
        if (it == rows.end()) {
            cell.status = Status::mismatch;
            cell.detail = "row missing from computed table";
            out.cells.push_back(std::move(cell));
            continue;
        }
        const RealizationSet computed(it->realizations->begin(), it->realizations->end());
        std::vector<std::string> problems;
        if (it->case_label != g.case_label)
            problems.push_back("case " + it->case_label->str() + " vs printed " + g.case_label.str());
        if (computed != g.realizations)
            problems.push_back("realizations differ");
        const bool nu_ok = it->nu_formula == g.nu;
        if (!problems.empty()) {
            cell.status = Status::mismatch;
        } else if (!nu_ok) {
            const bool excused = g.erratum && *it->nu_formula == static_cast<Int>(g.realizations.size());
            cell.status = excused ? Status::erratum : Status::mismatch;
            problems.push_back("nu " + std::to_string(*it->nu_formula) + " vs printed " + std::to_string(g.nu));
        }
        for (std::size_t i = 0; i < problems.size(); ++i)
            cell.detail += (i ? "; " : "") + problems[i];
        if (cell.status == Status::erratum)
            cell.detail += " (registered erratum: " + *g.erratum + ")";
        out.cells.push_back(std::move(cell));
    }
    for (const auto& r : rows)
        if (!printed.count(r.datum.pi()))
            out.cells.push_back({r.datum.pi(), Status::mismatch, "row not in printed table"});
    return out;
}

} // namespace hurwitz

#endif
