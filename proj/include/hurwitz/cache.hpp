#ifndef HURWITZ_CACHE_HPP
#define HURWITZ_CACHE_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "oracle.hpp"
#include "record.hpp"

namespace hurwitz {

/// Append-only JSON-lines store of oracle results keyed by datum and move
/// flags. Unreadable lines are skipped; the last line for a key wins.
class OracleCache {
public:
    OracleCache() = default;

    explicit OracleCache(std::filesystem::path path) : path_(std::move(path))
    {
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            try {
                const auto j = json::parse(line);
                entries_[key(j.at("datum"), j.at("flags"))] =
                    OracleCounts{j.at("conj_orbits").get<std::int64_t>(), j.at("weak").get<std::int64_t>()};
            } catch (const json::exception&) {
                continue;
            }
        }
    }

    bool enabled() const noexcept { return !path_.empty(); }

    std::optional<OracleCounts> lookup(const BranchDatum& datum, const MoveSet& moves) const
    {
        auto it = entries_.find(key(branch_datum_key(datum), moves_to_json(moves)));
        if (it == entries_.end())
            return std::nullopt;
        return it->second;
    }

    void store(const BranchDatum& datum, const MoveSet& moves, const OracleCounts& counts)
    {
        const auto line = cache_line(datum, moves, counts);
        entries_[key(line.at("datum"), line.at("flags"))] = counts;
        if (!enabled())
            return;
        std::ofstream out(path_, std::ios::app);
        if (!out)
            throw Error(Errc::internal, "cannot write cache " + path_.string());
        out << line.dump() << '\n';
    }

    std::size_t size() const noexcept { return entries_.size(); }

private:
    static std::string key(const json& datum, const json& flags) { return datum.dump() + "|" + flags.dump(); }

    std::filesystem::path path_;
    std::map<std::string, OracleCounts> entries_;
};

/// weak_hurwitz_counts with a cache in front.
inline OracleCounts cached_weak_hurwitz(const BranchDatum& datum, const MoveSet& moves, const OracleConfig& cfg,
                                        OracleCache& cache)
{
    if (auto hit = cache.lookup(datum, moves))
        return *hit;
    const auto counts = weak_hurwitz_counts(datum, moves, cfg);
    cache.store(datum, moves, counts);
    return counts;
}

} // namespace hurwitz

#endif
