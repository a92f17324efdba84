#ifndef HURWITZ_CLOSED_FORM_HPP
#define HURWITZ_CLOSED_FORM_HPP

#include <map>
#include <string>
#include <string_view>

#include "arith.hpp"
#include "branch_data.hpp"
#include "error.hpp"
#include "partition.hpp"

namespace hurwitz {

// Closed-form weak Hurwitz numbers for the (2,...,2), (2h+1,1,2,...,2), pi
// family. Brackets [x] are floors; every rational intermediate is carried as
// an integer numerator over a fixed denominator and divided exactly.

/// sum_{j=1}^{x} [j/2] == [x^2/4]
inline Int floor_half_sum(Int x)
{
    if (x < 0)
        throw Error(Errc::out_of_range, "floor_half_sum of negative");
    return mul(x, x) / 4;
}

enum class G0H2Case { i, ii, iii_a, iii_b, iii_c, iv, v, vi_a, vi_b };

constexpr std::string_view to_string(G0H2Case c) noexcept
{
    switch (c) {
    case G0H2Case::i: return "i";
    case G0H2Case::ii: return "ii";
    case G0H2Case::iii_a: return "iii-a";
    case G0H2Case::iii_b: return "iii-b";
    case G0H2Case::iii_c: return "iii-c";
    case G0H2Case::iv: return "iv";
    case G0H2Case::v: return "v";
    case G0H2Case::vi_a: return "vi-a";
    case G0H2Case::vi_b: return "vi-b";
    }
    return "?";
}

inline G0H2Case g0h2_case_from_string(std::string_view s)
{
    for (auto c : {G0H2Case::i, G0H2Case::ii, G0H2Case::iii_a, G0H2Case::iii_b, G0H2Case::iii_c,
                   G0H2Case::iv, G0H2Case::v, G0H2Case::vi_a, G0H2Case::vi_b})
        if (to_string(c) == s)
            return c;
    throw Error(Errc::parse, "unknown case label '" + std::string(s) + "'");
}

/// A case of the genus-0, h=2 classification together with the witnessing
/// parameters, all referring to the sorted partition. Keys used: "m" for
/// (i)/(ii), "t" for (iii), "r" for (iv), "q","r" for (v)/(vi).
struct CaseLabel {
    G0H2Case tag = G0H2Case::i;
    std::map<std::string, Int> params;

    friend bool operator==(const CaseLabel&, const CaseLabel&) = default;

    std::string str() const
    {
        std::string out(to_string(tag));
        for (const auto& [name, value] : params)
            out += " " + name + "=" + std::to_string(value);
        return out;
    }
};

inline Int nu_of_case(G0H2Case c) noexcept
{
    switch (c) {
    case G0H2Case::i:
    case G0H2Case::ii: return 0;
    case G0H2Case::iii_a:
    case G0H2Case::iii_b:
    case G0H2Case::iii_c:
    case G0H2Case::iv: return 1;
    case G0H2Case::v: return 2;
    case G0H2Case::vi_a:
    case G0H2Case::vi_b: return 3;
    }
    return 0;
}

/// Checks that `label` satisfies the defining inequalities of its case for
/// the given k. All comparisons against k/2, k/3, 2k/3 are done in integers.
inline bool case_parameters_valid(Int k, const CaseLabel& label)
{
    auto get = [&](const char* key) -> Int {
        auto it = label.params.find(key);
        return it == label.params.end() ? -1 : it->second;
    };
    const Int m = get("m"), t = get("t"), q = get("q"), r = get("r");
    switch (label.tag) {
    case G0H2Case::i: return m >= 1 && k == 3 * m;
    case G0H2Case::ii: return m >= 1 && k == 2 * m;
    case G0H2Case::iii_a: return 1 <= t && 3 * t < k;
    case G0H2Case::iii_b: return k < 3 * t && 2 * t < k;
    case G0H2Case::iii_c: return k < 2 * t && t < k;
    case G0H2Case::iv: return 1 <= r && 2 * r < k;
    case G0H2Case::v: return 1 <= r && 2 * r < k && r < q && q < k - r;
    case G0H2Case::vi_a: return 1 <= r && 2 * r < k && k - r < q && 2 * q < 2 * k - r;
    case G0H2Case::vi_b: return k <= 2 * r && 3 * r < 2 * k && r < q && 2 * q < 2 * k - r;
    }
    return false;
}

/// Classifies pi = (p, q, r), p >= q >= r, p+q+r = 2k, into exactly one case.
inline CaseLabel classify_g0h2(Int k, const Partition& pi)
{
    if (pi.length() != 3)
        throw Error(Errc::wrong_length, "classify_g0h2 needs a length-3 partition");
    if (pi.total() != 2 * k)
        throw Error(Errc::wrong_total, "classify_g0h2 needs total 2k");
    const Int p = pi[0], q = pi[1], r = pi[2];
    CaseLabel out;
    if (p == q && q == r) {
        out.tag = G0H2Case::i;
        out.params["m"] = p / 2;
    } else if (p == q || q == r) {
        // (2t, k-t, k-t) in some order; the odd one out is 2t
        const Int t = (p == q ? r : p) / 2;
        if (2 * t == k) {
            out.tag = G0H2Case::ii;
            out.params["m"] = t;
        } else {
            out.tag = 3 * t < k ? G0H2Case::iii_a : (2 * t < k ? G0H2Case::iii_b : G0H2Case::iii_c);
            out.params["t"] = t;
        }
    } else if (2 * r < k) {
        if (q < k - r) {
            out.tag = G0H2Case::v;
            out.params["q"] = q;
        } else if (q == k - r) {
            out.tag = G0H2Case::iv;
        } else {
            out.tag = G0H2Case::vi_a;
            out.params["q"] = q;
        }
        out.params["r"] = r;
    } else {
        out.tag = G0H2Case::vi_b;
        out.params["q"] = q;
        out.params["r"] = r;
    }
    if (!case_parameters_valid(k, out))
        throw Error(Errc::internal, "classification of " + pi.str() + " produced " + out.str());
    return out;
}

/// h=3, g=1, pi = (2k-p, p) with 1 <= p <= k.
inline Int nu_g1_h3(Int k, Int p)
{
    if (k < 4)
        throw Error(Errc::out_of_range, "nu_g1_h3 needs k >= 4");
    if (p < 1 || p > k)
        throw Error(Errc::out_of_range, "nu_g1_h3 needs 1 <= p <= k");
    if (p == k) {
        const Int half = k / 2;
        return exact_div(mul(half, half - 1), 2, "nu_g1_h3") + floor_half_sum((k - 1) / 2);
    }
    const Int half_p = p / 2;
    Int nu = floor_half_sum(p - 1);
    nu = add(nu, mul(half_p, half_p - 1));
    nu = add(nu, mul(k - 3, k - p - 1));
    nu = add(nu, floor_half_sum(k - half_p - 1));
    nu = sub(nu, (k - p) / 2);
    nu = add(nu, floor_half_sum((p - 1) / 2));
    return nu;
}

/// h=2, g=1: [(k-1)^2 / 4].
inline Int nu_g1_h2(Int k)
{
    if (k < 3)
        throw Error(Errc::out_of_range, "nu_g1_h2 needs k >= 3");
    return floor_half_sum(k - 1);
}

/// h=4, g=2:
///   (k-1)/16 (7k^3 - 63k^2 + 197k - 208) + 5/8 (5-2k) [k/2]
/// evaluated as a single numerator over 16.
inline Int nu_g2_h4(Int k)
{
    if (k < 5)
        throw Error(Errc::out_of_range, "nu_g2_h4 needs k >= 5");
    Int cubic = mul(7, k, k, k);
    cubic = sub(cubic, mul(63, k, k));
    cubic = add(cubic, mul(197, k));
    cubic = sub(cubic, 208);
    const Int numerator = add(mul(k - 1, cubic), mul(10, 5 - 2 * k, k / 2));
    const Int nu = exact_div(numerator, 16, "nu_g2_h4");
    if (nu < 0)
        throw Error(Errc::internal, "negative nu_g2_h4");
    return nu;
}

/// Number of 5-tuples of positive integers with sum k up to
/// (a,b,c,d,e) <-> (b,a,d,c,e): the sum of
///   (k^4 - 12k^3 + 50k^2 - 84k + x) / 48   (x = 48 even, 45 odd)
///   (k^3 - 6k^2 + yk + z) / 24             (y,z = 8,0 even; 11,-6 odd)
inline Int symmetric_family_count_S(Int k)
{
    if (k < 5)
        throw Error(Errc::out_of_range, "symmetric_family_count_S needs k >= 5");
    const bool even = k % 2 == 0;
    Int quartic = mul(k, k, k, k);
    quartic = sub(quartic, mul(12, k, k, k));
    quartic = add(quartic, mul(50, k, k));
    quartic = sub(quartic, mul(84, k));
    quartic = add(quartic, even ? 48 : 45);
    Int cubic = mul(k, k, k);
    cubic = sub(cubic, mul(6, k, k));
    cubic = add(cubic, mul(even ? 8 : 11, k));
    cubic = add(cubic, even ? 0 : -6);
    return add(exact_div(quartic, 48, "S quartic"), exact_div(cubic, 24, "S cubic"));
}

/// (g, h) pairs with a closed form.
inline bool covered(Int g, Int h) noexcept
{
    return (g == 0 && h <= 2) || (g == 1 && (h == 2 || h == 3)) || (g == 2 && h == 4);
}

/// Weak Hurwitz number of a family datum.
inline Int nu(const FamilyDatum& fd)
{
    const Int g = fd.g(), h = fd.h(), k = fd.k();
    if (!covered(g, h))
        throw Error(Errc::out_of_covered_family,
                    "no closed form for g=" + std::to_string(g) + ", h=" + std::to_string(h));
    if (g == 0) {
        if (h == 0)
            return 1;
        if (h == 1)
            return fd.p() < k ? 1 : 0;
        return nu_of_case(classify_g0h2(k, fd.pi()).tag);
    }
    if (g == 1)
        return h == 2 ? nu_g1_h2(k) : nu_g1_h3(k, fd.p());
    return nu_g2_h4(k);
}

} // namespace hurwitz

#endif
