#ifndef HURWITZ_ORACLE_HPP
#define HURWITZ_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "branch_data.hpp"
#include "error.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "triple.hpp"

namespace hurwitz {

// Brute-force weak Hurwitz numbers from monodromy triples.
//
// alpha is pinned to one member of the class of pi1 and beta runs over the
// class of pi2, assigned point by point (beta(0), beta(1), ...). Partial
// cycle structures of beta and of gamma^-1 = x -> beta(alpha(x)) are kept
// so that branches which cannot reach the target cycle types are cut.
// Conjugation by the centralizer of alpha is broken by rejecting any
// partial beta that a known centralizer element maps to a lexicographically
// smaller one; the surviving leaves still contain the lexicographic minimum
// of every centralizer orbit, and fingerprints merge the rest.

struct OracleConfig {
    int degree_limit = 16;
    bool prune_centralizer = true;
    bool prune_third = true;
    std::optional<Perm> alpha; // defaults to canonical_perm(pi1)
};

struct MoveSet {
    bool use_mirror = true;
    bool use_relabel = true;

    friend bool operator==(const MoveSet&, const MoveSet&) = default;
};

struct OracleCounts {
    std::int64_t conj_orbits = 0;
    std::int64_t weak = 0;

    friend bool operator==(const OracleCounts&, const OracleCounts&) = default;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
};

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    std::size_t components() const noexcept { return components_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t components_;
};

namespace detail {

/// Elements of the centralizer of `alpha`: single-cycle rotations and
/// shifted swaps of equal-length cycles. Not a full generating set for
/// every use; only ever used for sound rejection.
inline std::vector<std::vector<int>> centralizer_elements(const Perm& alpha)
{
    const int d = alpha.degree();
    const auto cycles = alpha.cycles();
    std::vector<std::vector<int>> out;
    auto identity = [d] {
        std::vector<int> v(static_cast<std::size_t>(d));
        std::iota(v.begin(), v.end(), 0);
        return v;
    };
    for (const auto& c : cycles) {
        const std::size_t len = c.size();
        for (std::size_t s = 1; s < len; ++s) {
            auto img = identity();
            for (std::size_t i = 0; i < len; ++i)
                img[static_cast<std::size_t>(c[i])] = c[(i + s) % len];
            out.push_back(std::move(img));
        }
    }
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            const auto& a = cycles[i];
            const auto& b = cycles[j];
            if (a.size() != b.size())
                continue;
            const std::size_t len = a.size();
            for (std::size_t s = 0; s < len; ++s) {
                auto img = identity();
                for (std::size_t t = 0; t < len; ++t) {
                    img[static_cast<std::size_t>(a[t])] = b[(t + s) % len];
                    img[static_cast<std::size_t>(b[(t + s) % len])] = a[t];
                }
                out.push_back(std::move(img));
            }
        }
    return out;
}

/// Incrementally maintained path decomposition of a partial permutation,
/// with a budget of cycle lengths still to be closed.
class PathTracker {
public:
    PathTracker() = default;

    PathTracker(int d, const std::optional<Partition>& type)
        : start_(static_cast<std::size_t>(d)), end_(static_cast<std::size_t>(d)),
          len_(static_cast<std::size_t>(d), 1), budget_(static_cast<std::size_t>(d) + 1, 0),
          constrained_(type.has_value())
    {
        std::iota(start_.begin(), start_.end(), 0);
        std::iota(end_.begin(), end_.end(), 0);
        if (type)
            for (Int p : type->parts())
                ++budget_[static_cast<std::size_t>(p)];
        max_len_ = d;
        refresh_max();
    }

    /// Adds the edge x -> y (x a path end, y a path start). Returns false if
    /// the result cannot complete to the target type; the change is applied
    /// either way and must be undone with `undo`.
    bool link(int x, int y)
    {
        const int s = start_[static_cast<std::size_t>(x)];
        Undo u{s, y, end_[static_cast<std::size_t>(s)], start_[static_cast<std::size_t>(end_[static_cast<std::size_t>(y)])],
               len_[static_cast<std::size_t>(s)], 0, max_len_};
        const int l1 = len_[static_cast<std::size_t>(s)];
        bool ok = true;
        if (s == y) {
            u.closed = l1;
            if (constrained_) {
                if (budget_[static_cast<std::size_t>(l1)] == 0)
                    ok = false;
                --budget_[static_cast<std::size_t>(l1)];
                if (budget_[static_cast<std::size_t>(l1)] == 0 && l1 == max_len_)
                    refresh_max();
            }
            ++closed_cycles_;
        } else {
            const int e = end_[static_cast<std::size_t>(y)];
            const int l = l1 + len_[static_cast<std::size_t>(y)];
            end_[static_cast<std::size_t>(s)] = e;
            start_[static_cast<std::size_t>(e)] = s;
            len_[static_cast<std::size_t>(s)] = l;
            if (constrained_ && l > max_len_)
                ok = false;
        }
        stack_.push_back(u);
        return ok;
    }

    void undo()
    {
        const Undo u = stack_.back();
        stack_.pop_back();
        if (u.closed) {
            --closed_cycles_;
            if (constrained_)
                ++budget_[static_cast<std::size_t>(u.closed)];
            max_len_ = u.max_len;
        } else {
            const int e = end_[static_cast<std::size_t>(u.s)];
            end_[static_cast<std::size_t>(u.s)] = u.old_end;
            start_[static_cast<std::size_t>(e)] = u.old_start_of_e;
            len_[static_cast<std::size_t>(u.s)] = u.old_len;
        }
    }

    int closed_cycles() const noexcept { return closed_cycles_; }

private:
    struct Undo {
        int s, y, old_end, old_start_of_e, old_len, closed, max_len;
    };

    void refresh_max()
    {
        while (max_len_ > 0 && budget_[static_cast<std::size_t>(max_len_)] == 0)
            --max_len_;
    }

    std::vector<int> start_, end_, len_;
    std::vector<int> budget_;
    bool constrained_ = false;
    int max_len_ = 0;
    int closed_cycles_ = 0;
    std::vector<Undo> stack_;
};

class BetaSearch {
public:
    BetaSearch(const Perm& alpha, const Partition& beta_type, const std::optional<Partition>& gamma_type,
               bool prune_centralizer)
        : d_(alpha.degree()), alpha_(alpha), beta_type_(beta_type),
          beta_paths_(d_, beta_type), gamma_paths_(d_, gamma_type),
          beta_(static_cast<std::size_t>(d_), -1), used_(static_cast<std::size_t>(d_), false)
    {
        ainv_.resize(static_cast<std::size_t>(d_));
        for (int x = 0; x < d_; ++x)
            ainv_[static_cast<std::size_t>(alpha(x))] = x;
        if (prune_centralizer)
            for (auto& c : centralizer_elements(alpha)) {
                std::vector<int> inv(c.size());
                for (std::size_t i = 0; i < c.size(); ++i)
                    inv[static_cast<std::size_t>(c[i])] = static_cast<int>(i);
                cent_.push_back(std::move(c));
                cent_inv_.push_back(std::move(inv));
            }
    }

    /// Calls leaf(beta) for every surviving complete beta of the target
    /// cycle type (and gamma type, when constrained).
    template <typename Leaf>
    void run(Leaf&& leaf)
    {
        step(0, leaf);
    }

    const SearchStats& stats() const noexcept { return stats_; }

private:
    template <typename Leaf>
    void step(int x, Leaf& leaf)
    {
        ++stats_.nodes;
        if (x == d_) {
            ++stats_.leaves;
            if (beta_paths_.closed_cycles() != beta_type_.length())
                return;
            leaf(Perm::from_images(beta_));
            return;
        }
        const int z = ainv_[static_cast<std::size_t>(x)];
        for (int y = 0; y < d_; ++y) {
            if (used_[static_cast<std::size_t>(y)])
                continue;
            used_[static_cast<std::size_t>(y)] = true;
            beta_[static_cast<std::size_t>(x)] = y;
            const bool ok_b = beta_paths_.link(x, y);
            const bool ok_g = gamma_paths_.link(z, y);
            if (ok_b && ok_g && !dominated(x))
                step(x + 1, leaf);
            gamma_paths_.undo();
            beta_paths_.undo();
            beta_[static_cast<std::size_t>(x)] = -1;
            used_[static_cast<std::size_t>(y)] = false;
        }
    }

    /// True if some centralizer element conjugates the partial beta
    /// (defined on 0..last) to something lexicographically smaller.
    bool dominated(int last) const
    {
        for (std::size_t i = 0; i < cent_.size(); ++i) {
            const auto& c = cent_[i];
            const auto& cinv = cent_inv_[i];
            for (int y = 0; y <= last; ++y) {
                const int z = cinv[static_cast<std::size_t>(y)];
                if (z > last)
                    break;
                const int v = c[static_cast<std::size_t>(beta_[static_cast<std::size_t>(z)])];
                const int w = beta_[static_cast<std::size_t>(y)];
                if (v < w)
                    return true;
                if (v > w)
                    break;
            }
        }
        return false;
    }

    int d_;
    Perm alpha_;
    Partition beta_type_;
    PathTracker beta_paths_, gamma_paths_;
    std::vector<int> beta_;
    std::vector<bool> used_;
    std::vector<int> ainv_;
    std::vector<std::vector<int>> cent_, cent_inv_;
    SearchStats stats_;
};

inline void check_searchable(const BranchDatum& datum, const OracleConfig& cfg)
{
    if (datum.degree > cfg.degree_limit)
        throw Error(Errc::degree_limit_exceeded, "degree " + std::to_string(datum.degree) + " > limit "
                                                     + std::to_string(cfg.degree_limit));
    if (datum.degree > max_points)
        throw Error(Errc::degree_limit_exceeded, "degree " + std::to_string(datum.degree));
    for (const auto& p : datum.partitions)
        if (p.total() != datum.degree)
            throw Error(Errc::incompatible_datum, "partition " + p.str() + " does not sum to d");
    if (!riemann_hurwitz_check(datum))
        throw Error(Errc::incompatible_datum, datum.str() + " fails Riemann-Hurwitz");
}

inline Perm search_alpha(const Partition& type, const OracleConfig& cfg)
{
    if (!cfg.alpha)
        return canonical_perm(type);
    if (cfg.alpha->cycle_type() != type)
        throw Error(Errc::incompatible_datum, "configured alpha has the wrong cycle type");
    return *cfg.alpha;
}

} // namespace detail

/// Streams one representative per conjugation orbit of transitive triples
/// with the datum's cycle types, in the order first met by the search.
template <typename F>
SearchStats enumerate_triples(const BranchDatum& datum, const OracleConfig& cfg, F&& yield)
{
    detail::check_searchable(datum, cfg);
    const Perm alpha = detail::search_alpha(datum.partitions[0], cfg);
    const auto& gamma_type = datum.partitions[2];
    std::optional<Partition> constraint;
    if (cfg.prune_third)
        constraint = gamma_type;
    detail::BetaSearch search(alpha, datum.partitions[1], constraint, cfg.prune_centralizer);
    std::unordered_set<std::string> seen;
    search.run([&](Perm beta) {
        if (!is_transitive(alpha, beta))
            return;
        auto t = complete_triple(alpha, std::move(beta));
        if (!cfg.prune_third && t.gamma.cycle_type() != gamma_type)
            return;
        if (seen.insert(orbit_fingerprint(t)).second)
            yield(std::move(t));
    });
    return search.stats();
}

inline std::vector<MonodromyTriple> enumerate_triples(const BranchDatum& datum, const OracleConfig& cfg = {})
{
    std::vector<MonodromyTriple> out;
    enumerate_triples(datum, cfg, [&](MonodromyTriple t) { out.push_back(std::move(t)); });
    return out;
}

/// Orbits of `reps` (one per conjugation orbit of the datum) under the
/// moves allowed by `moves`. Relabel moves apply only for branch-point
/// transpositions that fix the partition triple.
inline OracleCounts count_weak_orbits(const std::vector<MonodromyTriple>& reps,
                                      const std::array<Partition, 3>& types, const MoveSet& moves)
{
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (!index.emplace(orbit_fingerprint(reps[i]), i).second)
            throw Error(Errc::internal, "duplicate conjugation representative");
    DisjointSets sets(reps.size());
    auto join = [&](std::size_t i, const MonodromyTriple& moved) {
        auto it = index.find(orbit_fingerprint(moved));
        if (it == index.end())
            throw Error(Errc::internal, "move left the enumerated set; enumeration incomplete");
        sets.unite(i, it->second);
    };
    const bool swap12 = types[0] == types[1];
    const bool swap23 = types[1] == types[2];
    const bool swap13 = types[0] == types[2];
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& t = reps[i];
        if (moves.use_mirror)
            join(i, mirror(t));
        if (moves.use_relabel) {
            if (swap12)
                join(i, relabel_12(t));
            if (swap23)
                join(i, relabel_23(t));
            if (swap13)
                join(i, relabel_13(t));
        }
    }
    return {static_cast<std::int64_t>(reps.size()), static_cast<std::int64_t>(sets.components())};
}

/// Number of weak equivalence classes of covers realizing `datum` (with
/// both moves enabled), together with the conjugation-orbit count.
inline OracleCounts weak_hurwitz_counts(const BranchDatum& datum, const MoveSet& moves = {},
                                        const OracleConfig& cfg = {})
{
    const auto reps = enumerate_triples(datum, cfg);
    return count_weak_orbits(reps, datum.partitions, moves);
}

inline std::int64_t weak_hurwitz(const BranchDatum& datum, const MoveSet& moves = {},
                                 const OracleConfig& cfg = {})
{
    return weak_hurwitz_counts(datum, moves, cfg).weak;
}

/// Runs one search for the first two partitions and buckets the
/// conjugation representatives by the cycle type of gamma. Only triples of
/// the given source genus are kept. Equivalent to calling
/// enumerate_triples for every third partition, at the cost of one search.
inline std::map<Partition, std::vector<MonodromyTriple>>
enumerate_by_third(const Partition& first, const Partition& second, Int source_genus, const OracleConfig& cfg = {})
{
    if (first.total() != second.total())
        throw Error(Errc::incompatible_datum, "partitions of different totals");
    const int d = static_cast<int>(first.total());
    if (d > cfg.degree_limit)
        throw Error(Errc::degree_limit_exceeded, "degree " + std::to_string(d) + " > limit "
                                                     + std::to_string(cfg.degree_limit));
    const Perm alpha = detail::search_alpha(first, cfg);
    // length of gamma's type fixed by the genus
    const Int third_length = d + 2 - 2 * source_genus - first.length() - second.length();
    std::map<Partition, std::vector<MonodromyTriple>> out;
    if (third_length < 1)
        return out;
    detail::BetaSearch search(alpha, second, std::nullopt, cfg.prune_centralizer);
    std::unordered_set<std::string> seen;
    search.run([&](Perm beta) {
        if (!is_transitive(alpha, beta))
            return;
        auto t = complete_triple(alpha, std::move(beta));
        if (t.gamma.cycle_count() != third_length)
            return;
        if (seen.insert(orbit_fingerprint(t)).second) {
            auto type = t.gamma.cycle_type();
            out[type].push_back(std::move(t));
        }
    });
    return out;
}

} // namespace hurwitz

#endif
