#ifndef HURWITZ_BRANCH_DATA_HPP
#define HURWITZ_BRANCH_DATA_HPP

#include <array>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "partition.hpp"

namespace hurwitz {

/// Branch datum over the sphere with three branching points and an
/// orientable source of genus `source_genus`.
struct BranchDatum {
    Int source_genus = 0;
    Int degree = 0;
    std::array<Partition, 3> partitions;

    friend bool operator==(const BranchDatum&, const BranchDatum&) = default;

    std::string str() const
    {
        return "(g=" + std::to_string(source_genus) + ", d=" + std::to_string(degree) + ", "
               + partitions[0].str() + "," + partitions[1].str() + "," + partitions[2].str() + ")";
    }
};

/// Builds a datum after checking every partition sums to the degree.
inline BranchDatum make_branch_datum(Int source_genus, Partition p1, Partition p2, Partition p3)
{
    if (source_genus < 0)
        throw Error(Errc::incompatible_datum, "negative genus");
    const Int d = p1.total();
    if (p2.total() != d || p3.total() != d)
        throw Error(Errc::wrong_total, "partitions of different totals");
    return BranchDatum{source_genus, d, {std::move(p1), std::move(p2), std::move(p3)}};
}

/// chi(source) - (l1 + l2 + l3) == d * (chi(S) - 3)
inline bool riemann_hurwitz_check(const BranchDatum& datum)
{
    const Int chi = sub(2, mul(2, datum.source_genus));
    Int lengths = 0;
    for (const auto& p : datum.partitions)
        lengths = add(lengths, p.length());
    return sub(chi, lengths) == mul(datum.degree, -1);
}

/// The tuple (g, h, k, pi) describing a datum of shape
///   d = 2k, (2,...,2), (2h+1,1,2,...,2), pi
/// over the sphere, with pi of length h - 2g + 1.
class FamilyDatum {
public:
    Int g() const noexcept { return g_; }
    Int h() const noexcept { return h_; }
    Int k() const noexcept { return k_; }
    Int degree() const noexcept { return 2 * k_; }
    const Partition& pi() const noexcept { return pi_; }

    /// For length-2 pi = (q, 2k-q), the part p <= k.
    Int p() const
    {
        if (pi_.length() != 2)
            throw Error(Errc::out_of_range, "pi has no p");
        return pi_[1];
    }

    friend bool operator==(const FamilyDatum&, const FamilyDatum&) = default;

    std::string str() const
    {
        return "g=" + std::to_string(g_) + " h=" + std::to_string(h_) + " k=" + std::to_string(k_)
               + " pi=" + pi_.str();
    }

private:
    friend FamilyDatum make_family_datum(Int g, Int h, Int k, Partition pi);
    Int g_ = 0, h_ = 0, k_ = 1;
    Partition pi_;
};

/// The second partition of the family, (2h+1, 1, 2, ..., 2) sorted.
/// For h = 0 this is (2,...,2,1,1).
inline Partition family_second_partition(Int h, Int k)
{
    std::vector<Int> parts{2 * h + 1, 1};
    for (Int i = 0; i < k - h - 1; ++i)
        parts.push_back(2);
    return Partition(std::move(parts));
}

inline BranchDatum expand(const FamilyDatum& fd)
{
    return BranchDatum{fd.g(), fd.degree(),
                       {Partition::repeated(2, fd.k()), family_second_partition(fd.h(), fd.k()), fd.pi()}};
}

inline FamilyDatum make_family_datum(Int g, Int h, Int k, Partition pi)
{
    if (g < 0 || h < 0)
        throw Error(Errc::out_of_range, "g and h must be nonnegative");
    if (h < 2 * g)
        throw Error(Errc::genus_too_large, "h=" + std::to_string(h) + " < 2g=" + std::to_string(2 * g));
    if (k < h + 1)
        throw Error(Errc::degree_too_small, "k=" + std::to_string(k) + " < h+1=" + std::to_string(h + 1));
    if (pi.total() != mul(2, k))
        throw Error(Errc::wrong_total, pi.str() + " does not sum to 2k=" + std::to_string(2 * k));
    if (pi.length() != h - 2 * g + 1)
        throw Error(Errc::wrong_length,
                    pi.str() + " has length " + std::to_string(pi.length()) + ", expected "
                        + std::to_string(h - 2 * g + 1));
    FamilyDatum fd;
    fd.g_ = g;
    fd.h_ = h;
    fd.k_ = k;
    fd.pi_ = std::move(pi);
    if (!riemann_hurwitz_check(expand(fd)))
        throw Error(Errc::internal, "family datum fails Riemann-Hurwitz: " + fd.str());
    return fd;
}

inline FamilyDatum make_family_datum(Int g, Int h, Int k, std::vector<Int> pi)
{
    if (pi.empty())
        throw Error(Errc::wrong_length, "empty pi");
    for (Int p : pi)
        if (p < 1)
            throw Error(Errc::invalid_partition, "part " + std::to_string(p) + " < 1");
    return make_family_datum(g, h, k, Partition(std::move(pi)));
}

inline FamilyDatum make_family_datum(Int g, Int h, Int k, std::initializer_list<Int> pi)
{
    return make_family_datum(g, h, k, std::vector<Int>(pi));
}

/// Pairs (i, j), 1-based, of positions among (pi1, pi2, pi3) holding equal
/// partitions. pi1 = pi2 never happens. The length conditions (g = 0,
/// k = h+1 for pi1 = pi3; k = 2h-2g, h >= 2g+1 for pi2 = pi3) are
/// necessary; pi must then also be the matching partition itself.
inline std::set<std::pair<int, int>> repeated_partitions(const FamilyDatum& fd)
{
    std::set<std::pair<int, int>> out;
    const Int g = fd.g(), h = fd.h(), k = fd.k();
    if (g == 0 && k == h + 1 && fd.pi() == Partition::repeated(2, k))
        out.emplace(1, 3);
    if (k == 2 * h - 2 * g && h >= 2 * g + 1 && fd.pi() == family_second_partition(h, k))
        out.emplace(2, 3);
    return out;
}

/// Every valid family datum with the given (g, h, k).
inline std::vector<FamilyDatum> family_data(Int g, Int h, Int k)
{
    std::vector<FamilyDatum> out;
    if (h < 2 * g || k < h + 1)
        return out;
    for (auto& pi : partitions_with_length(2 * k, h - 2 * g + 1))
        out.push_back(make_family_datum(g, h, k, pi));
    return out;
}

} // namespace hurwitz

#endif
