#ifndef HURWITZ_TOOLS_CLI_HPP
#define HURWITZ_TOOLS_CLI_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hurwitz/hurwitz.hpp"

namespace hurwitz::cli {

enum ExitCode { exit_ok = 0, exit_mismatch = 1, exit_parse = 2, exit_domain = 3 };

enum class Format { text, json, csv, md };

struct Options {
    bool oracle = false;
    bool no_mirror = false;
    bool no_relabel = false;
    int degree_limit = OracleConfig{}.degree_limit;
    std::string format = "text";
    std::string cache_path;
    bool check = false;
    int jobs = 0;

    MoveSet moves() const { return {!no_mirror, !no_relabel}; }

    OracleConfig oracle_config() const
    {
        OracleConfig cfg;
        cfg.degree_limit = degree_limit;
        return cfg;
    }

    Format fmt() const
    {
        if (format == "json")
            return Format::json;
        if (format == "csv")
            return Format::csv;
        if (format == "md")
            return Format::md;
        return Format::text;
    }

    /// HURWITZ_CACHE overrides --cache.
    OracleCache open_cache() const
    {
        if (const char* env = std::getenv("HURWITZ_CACHE"); env && *env)
            return OracleCache(env);
        if (!cache_path.empty())
            return OracleCache(cache_path);
        return {};
    }
};

/// "(iii)-(c)" style label.
inline std::string printed_case(const CaseLabel& c)
{
    std::string tag(to_string(c.tag));
    auto dash = tag.find('-');
    if (dash == std::string::npos)
        return "(" + tag + ")";
    return "(" + tag.substr(0, dash) + ")-(" + tag.substr(dash + 1) + ")";
}

inline std::string md_header()
{
    return "| g | h | k | pi | nu | oracle | case | realizations | status |\n"
           "|---|---|---|----|----|--------|------|--------------|--------|";
}

inline std::string record_to_md(const OutputRecord& r)
{
    auto opt = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string(); };
    std::ostringstream os;
    os << "| " << r.datum.g() << " | " << r.datum.h() << " | " << r.datum.k() << " | " << r.datum.pi().str() << " | "
       << opt(r.nu_formula) << " | " << opt(r.nu_oracle) << " | " << (r.case_label ? printed_case(*r.case_label) : "")
       << " | " << (r.realizations ? join_descriptors(*r.realizations, ", ") : "") << " | " << to_string(r.status)
       << " |";
    return os.str();
}

class Printer {
public:
    Printer(std::ostream& out, Format fmt) : out_(out), fmt_(fmt) {}

    void record(const OutputRecord& r)
    {
        switch (fmt_) {
        case Format::json: out_ << record_to_json(r).dump() << '\n'; break;
        case Format::csv:
            if (!header_done_)
                out_ << csv_header() << '\n';
            out_ << record_to_csv(r) << '\n';
            break;
        case Format::md:
            if (!header_done_)
                out_ << md_header() << '\n';
            out_ << record_to_md(r) << '\n';
            break;
        case Format::text: out_ << record_to_text(r) << '\n'; break;
        }
        header_done_ = true;
    }

private:
    std::ostream& out_;
    Format fmt_;
    bool header_done_ = false;
};

/// Formula, case and realizations (when defined), plus the oracle count
/// when requested. Uncovered families need the oracle.
inline OutputRecord evaluate(const FamilyDatum& fd, const Options& opt, OracleCache& cache, std::mutex* cache_mutex = nullptr)
{
    OutputRecord r{fd, std::nullopt, std::nullopt, std::nullopt, std::nullopt, Status::oracle_skipped};
    if (covered(fd.g(), fd.h())) {
        r.nu_formula = nu(fd);
        if (fd.g() == 0 && fd.h() == 2)
            r.case_label = classify_g0h2(fd.k(), fd.pi());
        if (auto set = realizations(fd))
            r.realizations.emplace(set->begin(), set->end());
    } else if (!opt.oracle) {
        throw Error(Errc::out_of_covered_family,
                    "no closed form for g=" + std::to_string(fd.g()) + ", h=" + std::to_string(fd.h())
                        + " (use --oracle)");
    }
    if (opt.oracle) {
        const auto datum = expand(fd);
        std::optional<OracleCounts> counts;
        if (cache_mutex) {
            std::lock_guard lock(*cache_mutex);
            counts = cache.lookup(datum, opt.moves());
        } else {
            counts = cache.lookup(datum, opt.moves());
        }
        if (!counts) {
            counts = weak_hurwitz_counts(datum, opt.moves(), opt.oracle_config());
            if (cache_mutex) {
                std::lock_guard lock(*cache_mutex);
                cache.store(datum, opt.moves(), *counts);
            } else {
                cache.store(datum, opt.moves(), *counts);
            }
        }
        r.nu_oracle = counts->weak;
    }
    r.status = compare_counts(r.nu_formula, r.nu_oracle);
    return r;
}

/// Parses "3" or "1..6" into an inclusive range.
inline std::pair<Int, Int> parse_range(const std::string& text)
{
    try {
        auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const Int v = std::stoll(text, &used);
            if (used != text.size())
                throw Error(Errc::parse, "bad range '" + text + "'");
            return {v, v};
        }
        const auto lo_s = text.substr(0, dots), hi_s = text.substr(dots + 2);
        const Int lo = std::stoll(lo_s, &used);
        if (used != lo_s.size())
            throw Error(Errc::parse, "bad range '" + text + "'");
        const Int hi = std::stoll(hi_s, &used);
        if (used != hi_s.size())
            throw Error(Errc::parse, "bad range '" + text + "'");
        if (lo > hi)
            throw Error(Errc::parse, "empty range '" + text + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw Error(Errc::parse, "bad range '" + text + "'");
    }
}

inline int cmd_nu(const std::string& datum_text, const Options& opt, std::ostream& out)
{
    const auto fd = parse_datum(datum_text);
    auto cache = opt.open_cache();
    const auto r = evaluate(fd, opt, cache);
    Printer(out, opt.fmt()).record(r);
    return r.status == Status::mismatch ? exit_mismatch : exit_ok;
}

inline int cmd_realizations(const std::string& datum_text, const Options& opt, std::ostream& out)
{
    const auto fd = parse_datum(datum_text);
    if (!covered(fd.g(), fd.h()))
        throw Error(Errc::out_of_covered_family, "no realization families for g=" + std::to_string(fd.g())
                                                     + ", h=" + std::to_string(fd.h()));
    const auto set = realizations(fd);
    if (!set)
        throw Error(Errc::out_of_range, "decorated realizations exist only for h >= 2");
    switch (opt.fmt()) {
    case Format::json: {
        json list = json::array();
        for (const auto& d : *set)
            list.push_back(d.str());
        out << json{{"datum", datum_to_json(fd)}, {"count", set->size()}, {"realizations", list}}.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "family,decorations\n";
        for (const auto& d : *set) {
            out << info(d.family()).name << ",\"";
            for (std::size_t i = 0; i < d.decorations().size(); ++i)
                out << (i ? " " : "") << d.decorations()[i];
            out << "\"\n";
        }
        break;
    case Format::md:
        out << "| realization |\n|---|\n";
        for (const auto& d : *set)
            out << "| " << d.str() << " |\n";
        break;
    case Format::text:
        for (const auto& d : *set)
            out << d.str() << '\n';
        out << "total " << set->size() << '\n';
        break;
    }
    return exit_ok;
}

inline int cmd_table(Int k, const Options& opt, std::ostream& out, std::ostream& err)
{
    auto rows = table_rows(k);
    std::optional<GoldenTable> golden;
    if (opt.check) {
        golden = golden_table(k);
        if (!golden)
            throw Error(Errc::out_of_range, "no printed table for k=" + std::to_string(k) + " (have 6 and 7)");
    }
    if (opt.oracle) {
        auto cache = opt.open_cache();
        for (auto& r : rows)
            r = evaluate(r.datum, opt, cache);
    }
    switch (opt.fmt()) {
    case Format::json:
        for (const auto& r : rows)
            out << record_to_json(r).dump() << '\n';
        break;
    case Format::csv: {
        Printer p(out, Format::csv);
        for (const auto& r : rows)
            p.record(r);
        break;
    }
    case Format::md:
        out << "| pi | Case | nu | Realizations |\n|----|------|----|--------------|\n";
        for (const auto& r : rows)
            out << "| " << r.datum.pi().str() << " | " << printed_case(*r.case_label) << " | " << *r.nu_formula
                << " | " << join_descriptors(*r.realizations, ", ") << " |\n";
        break;
    case Format::text:
        for (const auto& r : rows) {
            out << r.datum.pi().str() << ", " << printed_case(*r.case_label) << ", " << *r.nu_formula << ", "
                << join_descriptors(*r.realizations, " ");
            if (r.nu_oracle)
                out << "  oracle=" << *r.nu_oracle << " " << to_string(r.status);
            out << '\n';
        }
        break;
    }
    int code = exit_ok;
    if (std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.status == Status::mismatch; }))
        code = exit_mismatch;
    if (golden) {
        const auto check = check_table(rows, *golden);
        for (const auto& c : check.cells)
            if (c.status != Status::ok)
                err << "check " << c.pi.str() << ": " << to_string(c.status) << ": " << c.detail << '\n';
        err << "check k=" << k << ": " << check.cells.size() << " cells, "
            << std::count_if(check.cells.begin(), check.cells.end(),
                             [](const auto& c) { return c.status == Status::mismatch; })
            << " mismatches, " << check.errata() << " errata: " << (check.passed() ? "pass" : "FAIL") << '\n';
        if (!check.passed())
            code = exit_mismatch;
    }
    return code;
}

inline int cmd_verify(const std::string& g_range, const std::string& h_range, const std::string& k_range, Options opt,
                      std::ostream& out, std::ostream& err)
{
    opt.oracle = true;
    const auto [g_lo, g_hi] = parse_range(g_range);
    const auto [h_lo, h_hi] = parse_range(h_range);
    const auto [k_lo, k_hi] = parse_range(k_range);
    std::vector<FamilyDatum> data;
    for (Int g = g_lo; g <= g_hi; ++g)
        for (Int h = h_lo; h <= h_hi; ++h)
            for (Int k = k_lo; k <= k_hi; ++k)
                for (auto& fd : family_data(g, h, k)) {
                    if (fd.degree() > opt.degree_limit)
                        throw Error(Errc::degree_limit_exceeded,
                                    fd.str() + " has degree " + std::to_string(fd.degree()) + " > limit "
                                        + std::to_string(opt.degree_limit));
                    data.push_back(fd);
                }

    auto cache = opt.open_cache();
    std::mutex cache_mutex;
    std::vector<std::optional<OutputRecord>> results(data.size());
    std::vector<std::string> failures(data.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < data.size();) {
            try {
                results[i] = evaluate(data[i], opt, cache, &cache_mutex);
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        }
    };
    unsigned jobs = opt.jobs > 0 ? static_cast<unsigned>(opt.jobs) : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(data.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    Printer printer(out, opt.fmt());
    std::size_t ok = 0, mismatch = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!failures[i].empty())
            throw Error(Errc::internal, data[i].str() + ": " + failures[i]);
        printer.record(*results[i]);
        (results[i]->status == Status::mismatch ? mismatch : ok) += 1;
    }
    err << "verify: " << data.size() << " data, " << ok << " ok, " << mismatch << " mismatch" << '\n';
    return mismatch ? exit_mismatch : exit_ok;
}

inline int cmd_octagons(const Options& opt, std::ostream& out)
{
    const auto classes = octagon_pairings();
    switch (opt.fmt()) {
    case Format::json:
        for (const auto& c : classes)
            out << json{{"class", octagon_class_name(c.representative)},
                        {"pairing", to_string(c.representative)},
                        {"orbit_size", c.orbit_size},
                        {"stabilizer_order", c.stabilizer_order}}
                       .dump()
                << '\n';
        break;
    case Format::csv:
        out << "class,pairing,orbit_size,stabilizer_order\n";
        for (const auto& c : classes)
            out << octagon_class_name(c.representative) << ",\"" << to_string(c.representative) << "\","
                << c.orbit_size << "," << c.stabilizer_order << '\n';
        break;
    case Format::md:
        out << "| class | pairing | orbit | stabilizer |\n|---|---|---|---|\n";
        for (const auto& c : classes)
            out << "| " << octagon_class_name(c.representative) << " | " << to_string(c.representative) << " | "
                << c.orbit_size << " | " << c.stabilizer_order << " |\n";
        break;
    case Format::text:
        for (const auto& c : classes)
            out << octagon_class_name(c.representative) << "  " << to_string(c.representative)
                << "  orbit=" << c.orbit_size << "  stabilizer=" << c.stabilizer_order << '\n';
        out << classes.size() << " classes\n";
        break;
    }
    return exit_ok;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weak Hurwitz numbers of (2,...,2), (2h+1,1,2,...,2), pi branch data"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv", "md"}));
    };
    auto oracle_flags = [&](CLI::App* sub) {
        sub->add_flag("--oracle", opt.oracle, "Also run the brute-force oracle");
        sub->add_flag("--no-mirror", opt.no_mirror, "Disable the orientation-reversal move");
        sub->add_flag("--no-relabel", opt.no_relabel, "Disable branch-point relabelling moves");
        sub->add_option("--degree-limit", opt.degree_limit, "Largest degree handed to the oracle")
            ->check(CLI::Range(1, max_points));
        sub->add_option("--cache", opt.cache_path, "JSON-lines oracle cache (HURWITZ_CACHE overrides)");
    };

    std::string datum_text;
    auto* nu_cmd = app.add_subcommand("nu", "Weak Hurwitz number of one datum");
    nu_cmd->add_option("datum", datum_text, R"(e.g. '{"g":0,"h":2,"k":6,"pi":[9,2,1]}')")->required();
    common(nu_cmd);
    oracle_flags(nu_cmd);

    Int table_k = 0;
    auto* table_cmd = app.add_subcommand("table", "Genus-0, h=2 table for one k");
    table_cmd->add_option("--k", table_k, "Half degree")->required();
    table_cmd->add_flag("--check", opt.check, "Compare against the printed k=6 or k=7 table");
    common(table_cmd);
    oracle_flags(table_cmd);

    auto* real_cmd = app.add_subcommand("realizations", "Explicit dessins realizing one datum");
    real_cmd->add_option("datum", datum_text, "Datum JSON")->required();
    common(real_cmd);

    std::string g_range = "0", h_range, k_range;
    auto* verify_cmd = app.add_subcommand("verify", "Formula against oracle over a range of data");
    verify_cmd->set_help_flag("--help", "Print this help message and exit");
    verify_cmd->add_option("--g", g_range, "Genus or range a..b");
    verify_cmd->add_option("--h", h_range, "h or range a..b")->required();
    verify_cmd->add_option("--k", k_range, "k or range a..b")->required();
    verify_cmd->add_option("--jobs", opt.jobs, "Worker threads (default: all cores)");
    common(verify_cmd);
    oracle_flags(verify_cmd);

    auto* oct_cmd = app.add_subcommand("octagons", "Genus-2 edge pairings of the octagon");
    common(oct_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }

    try {
        if (*nu_cmd)
            return cmd_nu(datum_text, opt, out);
        if (*table_cmd)
            return cmd_table(table_k, opt, out, err);
        if (*real_cmd)
            return cmd_realizations(datum_text, opt, out);
        if (*verify_cmd)
            return cmd_verify(g_range, h_range, k_range, opt, out, err);
        if (*oct_cmd)
            return cmd_octagons(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::parse ? exit_parse : exit_domain;
    }
    return exit_ok;
}

} // namespace hurwitz::cli

#endif
