#ifndef HURWITZ_REALIZATIONS_HPP
#define HURWITZ_REALIZATIONS_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "branch_data.hpp"
#include "closed_form.hpp"
#include "error.hpp"
#include "partition.hpp"

namespace hurwitz {

// Explicit dessins realizing the family data. Each one is a graph family
// with integer edge decorations: a decoration a means the edge carries a
// black and a-1 white valence-2 vertices.

enum class Family {
    // genus 0, h = 2: the two (5,1) graphs in the sphere
    g0_I,
    g0_II,
    // genus 1, h = 2: the (5,1) graph in the torus
    g1_h2,
    // genus 1, h = 3: the (7,1) graphs in the torus
    g1_I,
    g1_II,
    g1_III,
    g1_IV,
    g1_V,
    g1_VI,
    g1_VII,
    // genus 2, h = 4: the (9,1) graphs, from the four octagon pairings
    g2_I1,
    g2_I2,
    g2_I3,
    g2_II1,
    g2_II2,
    g2_II3,
    g2_II4,
    g2_II5,
    g2_III1,
    g2_III2,
    g2_III3,
    g2_III4,
    g2_IV,
};

/// Coordinate permutation generating a family's symmetry, if any.
enum class Symmetry { none, swap_bc, swap_ab, swap_ab_cd, reverse_abcd };

struct FamilyInfo {
    Family family;
    std::string_view name;
    int arity;
    Symmetry symmetry;
};

inline constexpr std::array<FamilyInfo, 23> family_table{{
    {Family::g0_I, "I", 3, Symmetry::swap_bc},
    {Family::g0_II, "II", 3, Symmetry::none},
    {Family::g1_h2, "g1-h2", 3, Symmetry::swap_bc},
    {Family::g1_I, "I", 4, Symmetry::swap_ab},
    {Family::g1_II, "II", 4, Symmetry::swap_ab},
    {Family::g1_III, "III", 4, Symmetry::none},
    {Family::g1_IV, "IV", 4, Symmetry::swap_ab},
    {Family::g1_V, "V", 4, Symmetry::swap_ab},
    {Family::g1_VI, "VI", 4, Symmetry::none},
    {Family::g1_VII, "VII", 4, Symmetry::none},
    {Family::g2_I1, "I.1", 5, Symmetry::swap_ab_cd},
    {Family::g2_I2, "I.2", 5, Symmetry::none},
    {Family::g2_I3, "I.3", 5, Symmetry::reverse_abcd},
    {Family::g2_II1, "II.1", 5, Symmetry::reverse_abcd},
    {Family::g2_II2, "II.2", 5, Symmetry::none},
    {Family::g2_II3, "II.3", 5, Symmetry::none},
    {Family::g2_II4, "II.4", 5, Symmetry::none},
    {Family::g2_II5, "II.5", 5, Symmetry::reverse_abcd},
    {Family::g2_III1, "III.1", 5, Symmetry::none},
    {Family::g2_III2, "III.2", 5, Symmetry::none},
    {Family::g2_III3, "III.3", 5, Symmetry::none},
    {Family::g2_III4, "III.4", 5, Symmetry::none},
    {Family::g2_IV, "IV", 5, Symmetry::reverse_abcd},
}};

inline const FamilyInfo& info(Family f) { return family_table.at(static_cast<std::size_t>(f)); }

inline std::vector<Int> apply_symmetry(Symmetry s, const std::vector<Int>& x)
{
    switch (s) {
    case Symmetry::none: return x;
    case Symmetry::swap_bc: return {x[0], x[2], x[1]};
    case Symmetry::swap_ab: return {x[1], x[0], x[2], x[3]};
    case Symmetry::swap_ab_cd: return {x[1], x[0], x[3], x[2], x[4]};
    case Symmetry::reverse_abcd: return {x[3], x[2], x[1], x[0], x[4]};
    }
    return x;
}

class RealizationDescriptor {
public:
    RealizationDescriptor(Family family, std::vector<Int> decorations)
        : family_(family), decorations_(std::move(decorations))
    {
        const auto& fi = info(family_);
        if (static_cast<int>(decorations_.size()) != fi.arity)
            throw Error(Errc::invalid_partition, std::string(fi.name) + " takes "
                                                     + std::to_string(fi.arity) + " decorations");
        for (Int x : decorations_)
            if (x < 1)
                throw Error(Errc::invalid_partition, "decorations must be positive");
        // canonical form: lexicographically smallest image under the symmetry
        decorations_ = std::min(decorations_, apply_symmetry(fi.symmetry, decorations_));
    }

    Family family() const noexcept { return family_; }
    const std::vector<Int>& decorations() const noexcept { return decorations_; }

    std::string str() const
    {
        std::string out(info(family_).name);
        out += '(';
        for (std::size_t i = 0; i < decorations_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(decorations_[i]);
        }
        return out + ')';
    }

    friend bool operator==(const RealizationDescriptor&, const RealizationDescriptor&) = default;
    friend auto operator<=>(const RealizationDescriptor&, const RealizationDescriptor&) = default;

private:
    Family family_;
    std::vector<Int> decorations_;
};

/// Parses "II(3,1,2)" and friends. The family is resolved from its name and
/// the number of decorations, so "I(1,2,3)" is the genus-0 family and
/// "I(1,2,3,4)" the genus-1 one.
inline RealizationDescriptor parse_descriptor(std::string_view text)
{
    auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')')
        throw Error(Errc::parse, "bad descriptor '" + std::string(text) + "'");
    const auto name = text.substr(0, open);
    std::vector<Int> decorations;
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    while (!body.empty()) {
        auto comma = body.find(',');
        auto tok = body.substr(0, comma);
        try {
            std::size_t used = 0;
            decorations.push_back(std::stoll(std::string(tok), &used));
            if (used != tok.size())
                throw Error(Errc::parse, "trailing characters");
        } catch (const std::logic_error&) {
            throw Error(Errc::parse, "bad decoration '" + std::string(tok) + "'");
        }
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    }
    for (const auto& fi : family_table)
        if (fi.name == name && fi.arity == static_cast<int>(decorations.size()))
            return RealizationDescriptor(fi.family, std::move(decorations));
    throw Error(Errc::parse, "unknown family '" + std::string(text) + "'");
}

using RealizationSet = std::set<RealizationDescriptor>;

/// Calls f(x) for every composition x of n into `parts` positive parts, in
/// lexicographic order.
template <typename F>
void for_each_composition(Int n, int parts, F&& f)
{
    if (parts < 1 || n < parts)
        return;
    std::vector<Int> x(static_cast<std::size_t>(parts), 1);
    auto rec = [&](auto& self, Int remaining, int idx) -> void {
        if (idx == parts - 1) {
            x[static_cast<std::size_t>(idx)] = remaining;
            f(std::as_const(x));
            return;
        }
        for (Int v = 1; v <= remaining - (parts - 1 - idx); ++v) {
            x[static_cast<std::size_t>(idx)] = v;
            self(self, remaining - v, idx + 1);
        }
    };
    rec(rec, n, 0);
}

namespace detail {

// Parts of the realized partition, unsorted; returns how many there are.
inline int realized_parts(Family f, const std::vector<Int>& x, std::array<Int, 3>& out)
{
    switch (f) {
    case Family::g0_I: out = {2 * x[0] + x[1] + x[2], x[1], x[2]}; return 3;
    case Family::g0_II: out = {2 * x[0] + x[1], x[1] + x[2], x[2]}; return 3;
    case Family::g1_I: out = {x[0] + x[1] + x[2] + 2 * x[3], x[0] + x[1] + x[2], 0}; return 2;
    case Family::g1_II: out = {x[0] + x[1] + 2 * x[2], x[0] + x[1] + 2 * x[3], 0}; return 2;
    case Family::g1_III: out = {x[0] + x[1] + 2 * x[2] + 2 * x[3], x[0] + x[1], 0}; return 2;
    case Family::g1_IV: out = {2 * x[0] + 2 * x[1] + x[2], x[2] + 2 * x[3], 0}; return 2;
    case Family::g1_V:
    case Family::g1_VI:
    case Family::g1_VII: out = {2 * x[0] + 2 * x[1] + x[2] + 2 * x[3], x[2], 0}; return 2;
    default: {
        Int sum = 0;
        for (Int v : x)
            sum += v;
        out = {2 * sum, 0, 0};
        return 1;
    }
    }
}

} // namespace detail

/// The partition pi realized by a family with the given decorations; for
/// the one-region families (genus-1 h=2, genus 2) this is (2k).
inline Partition realized_partition(Family f, const std::vector<Int>& x)
{
    std::array<Int, 3> parts{};
    const int n = detail::realized_parts(f, x, parts);
    return Partition(std::vector<Int>(parts.begin(), parts.begin() + n));
}

namespace detail {

template <typename Range>
RealizationSet enumerate_families(Int k, const Partition& pi, const Range& families)
{
    RealizationSet out;
    const auto target = pi.parts();
    std::array<Int, 3> parts{};
    for (Family f : families) {
        const auto sym = info(f).symmetry;
        // compositions arrive in lex order and families in enum order, so
        // canonical representatives append at the end of the set
        for_each_composition(k, info(f).arity, [&](const std::vector<Int>& x) {
            const int n = realized_parts(f, x, parts);
            if (n != static_cast<int>(target.size()))
                return;
            std::sort(parts.begin(), parts.begin() + n, std::greater<>{});
            if (!std::equal(parts.begin(), parts.begin() + n, target.begin()))
                return;
            if (sym != Symmetry::none && apply_symmetry(sym, x) < x)
                return;
            out.emplace_hint(out.end(), f, x);
        });
    }
    return out;
}

} // namespace detail

inline constexpr std::array<Family, 2> g0h2_families{Family::g0_I, Family::g0_II};
inline constexpr std::array<Family, 7> g1h3_families{Family::g1_I,  Family::g1_II, Family::g1_III,
                                                     Family::g1_IV, Family::g1_V,  Family::g1_VI,
                                                     Family::g1_VII};
inline constexpr std::array<Family, 13> g2h4_families{
    Family::g2_I1,  Family::g2_I2,   Family::g2_I3,   Family::g2_II1,  Family::g2_II2,
    Family::g2_II3, Family::g2_II4,  Family::g2_II5,  Family::g2_III1, Family::g2_III2,
    Family::g2_III3, Family::g2_III4, Family::g2_IV};

/// I(a,b,c) realizing (2a+b+c, b, c) and II(a,b,c) realizing (2a+b, b+c, c),
/// with a+b+c = k.
inline RealizationSet realizations_g0h2(Int k, const Partition& pi)
{
    if (pi.length() != 3 || pi.total() != 2 * k)
        throw Error(Errc::out_of_range, "realizations_g0h2 needs a length-3 partition of 2k");
    return detail::enumerate_families(k, pi, g0h2_families);
}

/// Genus-1 realizations. For h = 2 `p` is ignored; for h = 3 it is the
/// smaller part of pi = (2k-p, p).
inline RealizationSet realizations_g1(Int k, Int h, std::optional<Int> p = std::nullopt)
{
    if (h == 2) {
        if (k < 3)
            throw Error(Errc::out_of_range, "g=1, h=2 needs k >= 3");
        RealizationSet out;
        for_each_composition(k, 3, [&](const std::vector<Int>& x) { out.emplace(Family::g1_h2, x); });
        return out;
    }
    if (h != 3)
        throw Error(Errc::out_of_range, "g=1 covers h in {2,3}");
    if (k < 4)
        throw Error(Errc::out_of_range, "g=1, h=3 needs k >= 4");
    if (!p || *p < 1 || *p > k)
        throw Error(Errc::out_of_range, "g=1, h=3 needs 1 <= p <= k");
    return detail::enumerate_families(k, Partition{2 * k - *p, *p}, g1h3_families);
}

inline RealizationSet realizations_g2(Int k)
{
    if (k < 5)
        throw Error(Errc::out_of_range, "g=2, h=4 needs k >= 5");
    return detail::enumerate_families(k, Partition{2 * k}, g2h4_families);
}

/// Realizations for any covered family datum with h >= 2. Data with h < 2
/// have no decorated descriptors and yield nullopt.
inline std::optional<RealizationSet> realizations(const FamilyDatum& fd)
{
    const Int g = fd.g(), h = fd.h(), k = fd.k();
    if (g == 0 && h == 2)
        return realizations_g0h2(k, fd.pi());
    if (g == 1 && h == 2)
        return realizations_g1(k, 2);
    if (g == 1 && h == 3)
        return realizations_g1(k, 3, fd.p());
    if (g == 2 && h == 4)
        return realizations_g2(k);
    return std::nullopt;
}

inline std::size_t count_family(const RealizationSet& set, Family f)
{
    return static_cast<std::size_t>(
        std::count_if(set.begin(), set.end(), [f](const auto& r) { return r.family() == f; }));
}

} // namespace hurwitz

#endif
