#ifndef HURWITZ_RECORD_HPP
#define HURWITZ_RECORD_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "branch_data.hpp"
#include "closed_form.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "realizations.hpp"

namespace hurwitz {

using json = nlohmann::json;

enum class Status { ok, mismatch, erratum, oracle_skipped };

constexpr std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::ok: return "ok";
    case Status::mismatch: return "mismatch";
    case Status::erratum: return "erratum";
    case Status::oracle_skipped: return "oracle-skipped";
    }
    return "?";
}

inline Status status_from_string(std::string_view s)
{
    for (auto st : {Status::ok, Status::mismatch, Status::erratum, Status::oracle_skipped})
        if (to_string(st) == s)
            return st;
    throw Error(Errc::parse, "unknown status '" + std::string(s) + "'");
}

/// mismatch iff both counts are present, differ, and the cell is not a
/// registered erratum.
inline Status compare_counts(std::optional<Int> formula, std::optional<Int> oracle, bool registered_erratum = false)
{
    if (!oracle)
        return Status::oracle_skipped;
    if (!formula || *formula == *oracle)
        return Status::ok;
    return registered_erratum ? Status::erratum : Status::mismatch;
}

/// One line of CLI output: a datum with whatever was computed for it.
struct OutputRecord {
    FamilyDatum datum;
    std::optional<Int> nu_formula;
    std::optional<Int> nu_oracle;
    std::optional<CaseLabel> case_label;
    std::optional<std::vector<RealizationDescriptor>> realizations;
    Status status = Status::oracle_skipped;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

// --- JSON ------------------------------------------------------------------

inline json datum_to_json(const FamilyDatum& fd)
{
    return json{{"g", fd.g()}, {"h", fd.h()}, {"k", fd.k()},
                {"pi", std::vector<Int>(fd.pi().parts().begin(), fd.pi().parts().end())}};
}

/// Parses {"g":int,"h":int,"k":int,"pi":[int,...]}. Shape problems raise
/// Errc::parse; a well-formed but invalid datum raises the validation code.
inline FamilyDatum datum_from_json(const json& j)
{
    if (!j.is_object())
        throw Error(Errc::parse, "datum must be a JSON object");
    auto int_field = [&](const char* key) -> Int {
        if (!j.contains(key) || !j.at(key).is_number_integer())
            throw Error(Errc::parse, std::string("missing integer field '") + key + "'");
        return j.at(key).get<Int>();
    };
    const Int g = int_field("g"), h = int_field("h"), k = int_field("k");
    if (!j.contains("pi") || !j.at("pi").is_array())
        throw Error(Errc::parse, "missing array field 'pi'");
    std::vector<Int> pi;
    for (const auto& v : j.at("pi")) {
        if (!v.is_number_integer())
            throw Error(Errc::parse, "'pi' entries must be integers");
        pi.push_back(v.get<Int>());
    }
    return make_family_datum(g, h, k, std::move(pi));
}

inline FamilyDatum parse_datum(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::parse, e.what());
    }
    return datum_from_json(j);
}

inline json case_to_json(const CaseLabel& c)
{
    return json{{"tag", std::string(to_string(c.tag))}, {"params", c.params}};
}

inline CaseLabel case_from_json(const json& j)
{
    CaseLabel c;
    c.tag = g0h2_case_from_string(j.at("tag").get<std::string>());
    c.params = j.at("params").get<std::map<std::string, Int>>();
    return c;
}

inline json record_to_json(const OutputRecord& r)
{
    json j{{"datum", datum_to_json(r.datum)}, {"status", std::string(to_string(r.status))}};
    j["nu_formula"] = r.nu_formula ? json(*r.nu_formula) : json(nullptr);
    j["nu_oracle"] = r.nu_oracle ? json(*r.nu_oracle) : json(nullptr);
    j["case"] = r.case_label ? case_to_json(*r.case_label) : json(nullptr);
    if (r.realizations) {
        json list = json::array();
        for (const auto& d : *r.realizations)
            list.push_back(d.str());
        j["realizations"] = std::move(list);
    } else {
        j["realizations"] = nullptr;
    }
    return j;
}

inline OutputRecord record_from_json(const json& j)
{
    try {
        OutputRecord r;
        r.datum = datum_from_json(j.at("datum"));
        if (!j.at("nu_formula").is_null())
            r.nu_formula = j.at("nu_formula").get<Int>();
        if (!j.at("nu_oracle").is_null())
            r.nu_oracle = j.at("nu_oracle").get<Int>();
        if (!j.at("case").is_null())
            r.case_label = case_from_json(j.at("case"));
        if (!j.at("realizations").is_null()) {
            r.realizations.emplace();
            for (const auto& s : j.at("realizations"))
                r.realizations->push_back(parse_descriptor(s.get<std::string>()));
        }
        r.status = status_from_string(j.at("status").get<std::string>());
        return r;
    } catch (const json::exception& e) {
        throw Error(Errc::parse, e.what());
    }
}

// --- text and CSV ------------------------------------------------------------

inline std::string join_descriptors(const std::vector<RealizationDescriptor>& list, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i)
            out += sep;
        out += list[i].str();
    }
    return out;
}

inline std::string record_to_text(const OutputRecord& r)
{
    std::string out = r.datum.str();
    out += "  nu=" + (r.nu_formula ? std::to_string(*r.nu_formula) : std::string("-"));
    if (r.nu_oracle)
        out += "  oracle=" + std::to_string(*r.nu_oracle);
    if (r.case_label)
        out += "  case=" + r.case_label->str();
    if (r.realizations)
        out += "  [" + join_descriptors(*r.realizations, ", ") + "]";
    out += "  " + std::string(to_string(r.status));
    return out;
}

inline std::string csv_header() { return "g,h,k,pi,nu_formula,nu_oracle,case,realizations,status"; }

inline std::string record_to_csv(const OutputRecord& r)
{
    auto opt = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string(); };
    std::string pi;
    for (std::size_t i = 0; i < r.datum.pi().parts().size(); ++i)
        pi += (i ? " " : "") + std::to_string(r.datum.pi()[i]);
    std::string out = std::to_string(r.datum.g()) + "," + std::to_string(r.datum.h()) + ","
                      + std::to_string(r.datum.k()) + "," + pi + "," + opt(r.nu_formula) + ","
                      + opt(r.nu_oracle) + ",";
    out += r.case_label ? r.case_label->str() : "";
    out += ",";
    if (r.realizations)
        out += "\"" + join_descriptors(*r.realizations, " ") + "\"";
    out += "," + std::string(to_string(r.status));
    return out;
}

// --- oracle cache ------------------------------------------------------------

/// Canonical serialization of a branch datum, used as the cache key.
inline json branch_datum_key(const BranchDatum& datum)
{
    json parts = json::array();
    for (const auto& p : datum.partitions)
        parts.push_back(std::vector<Int>(p.parts().begin(), p.parts().end()));
    return json{{"g", datum.source_genus}, {"d", datum.degree}, {"partitions", std::move(parts)}};
}

inline json moves_to_json(const MoveSet& m) { return json{{"mirror", m.use_mirror}, {"relabel", m.use_relabel}}; }

/// One JSONL cache line: {"datum":..., "conj_orbits":n, "weak":n, "flags":...}.
inline json cache_line(const BranchDatum& datum, const MoveSet& moves, const OracleCounts& counts)
{
    return json{{"datum", branch_datum_key(datum)},
                {"conj_orbits", counts.conj_orbits},
                {"weak", counts.weak},
                {"flags", moves_to_json(moves)}};
}

} // namespace hurwitz

#endif
