#ifndef HURWITZ_ARITH_HPP
#define HURWITZ_ARITH_HPP

#include <cstdint>
#include <string>

#include "error.hpp"

namespace hurwitz {

using Int = std::int64_t;

// Checked 64-bit arithmetic. Overflow is a hard error rather than UB.
inline Int add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::overflow, std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline Int sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(Errc::overflow, std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline Int mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::overflow, std::to_string(a) + " * " + std::to_string(b));
    return r;
}

template <typename... Rest>
Int mul(Int a, Int b, Int c, Rest... rest)
{
    return mul(mul(a, b), c, rest...);
}

/// Floor division, rounding toward negative infinity (the [x] bracket).
constexpr Int floor_div(Int num, Int den) noexcept
{
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

/// Exact division; the remainder must vanish.
inline Int exact_div(Int num, Int den, const char* what)
{
    if (den == 0 || num % den != 0)
        throw Error(Errc::internal, std::string("non-integral value in ") + what + ": "
                                        + std::to_string(num) + "/" + std::to_string(den));
    return num / den;
}

inline Int binomial(Int n, Int r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    if (r > n - r)
        r = n - r;
    Int out = 1;
    for (Int i = 1; i <= r; ++i)
        out = exact_div(mul(out, n - r + i), i, "binomial");
    return out;
}

} // namespace hurwitz

#endif
