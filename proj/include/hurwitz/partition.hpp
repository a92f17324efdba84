#ifndef HURWITZ_PARTITION_HPP
#define HURWITZ_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace hurwitz {

/// A partition of a positive integer, stored weakly decreasing.
///
/// Inputs in any order are accepted and sorted on construction, so two
/// partitions compare equal iff they are equal as multisets.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<Int> parts) : parts_(std::move(parts))
    {
        if (parts_.empty())
            throw Error(Errc::invalid_partition, "no parts");
        for (Int p : parts_) {
            if (p < 1)
                throw Error(Errc::invalid_partition, "part " + std::to_string(p) + " < 1");
            total_ = add(total_, p);
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>{});
    }

    Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

    /// (value, ..., value) with `count` parts.
    static Partition repeated(Int value, Int count)
    {
        if (count < 1)
            throw Error(Errc::invalid_partition, "empty repeated partition");
        return Partition(std::vector<Int>(static_cast<std::size_t>(count), value));
    }

    std::span<const Int> parts() const noexcept { return parts_; }
    Int total() const noexcept { return total_; }
    Int length() const noexcept { return static_cast<Int>(parts_.size()); }
    Int operator[](std::size_t i) const { return parts_.at(i); }
    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Orders by total, then reverse-lexicographically on parts, so that
    /// (10,1,1) sorts before (9,2,1).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        if (auto c = a.total_ <=> b.total_; c != 0)
            return c;
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                      a.parts_.begin(), a.parts_.end());
    }

    std::string str() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

private:
    std::vector<Int> parts_;
    Int total_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

/// All partitions of `n` into exactly `parts` parts, in descending
/// lexicographic order ((10,1,1) first for n=12).
inline std::vector<Partition> partitions_with_length(Int n, Int parts)
{
    std::vector<Partition> out;
    if (n < 1 || parts < 1 || parts > n)
        return out;
    std::vector<Int> cur;
    std::function<void(Int, Int, Int)> rec = [&](Int remaining, Int slots, Int max_part) {
        if (slots == 0) {
            if (remaining == 0)
                out.emplace_back(cur);
            return;
        }
        // every remaining slot needs at least 1
        Int hi = std::min(max_part, remaining - (slots - 1));
        for (Int p = hi; p >= 1; --p) {
            if (p * slots < remaining)
                break;
            cur.push_back(p);
            rec(remaining - p, slots - 1, p);
            cur.pop_back();
        }
    };
    rec(n, parts, n);
    return out;
}

/// All partitions of `n`, descending lexicographic order.
inline std::vector<Partition> partitions_of(Int n)
{
    std::vector<Partition> out;
    for (Int len = 1; len <= n; ++len) {
        auto part = partitions_with_length(n, len);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hurwitz

#endif
