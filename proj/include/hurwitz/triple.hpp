#ifndef HURWITZ_TRIPLE_HPP
#define HURWITZ_TRIPLE_HPP

#include <array>
#include <string>
#include <vector>

#include "error.hpp"
#include "partition.hpp"
#include "perm.hpp"

namespace hurwitz {

/// Monodromy of a three-point cover of the sphere: alpha * beta * gamma = 1
/// with <alpha, beta> transitive. Cycles of alpha are the black vertices of
/// the dessin, cycles of beta the white ones and cycles of gamma its regions.
struct MonodromyTriple {
    Perm alpha, beta, gamma;

    int degree() const noexcept { return alpha.degree(); }

    std::array<Partition, 3> cycle_types() const
    {
        return {alpha.cycle_type(), beta.cycle_type(), gamma.cycle_type()};
    }

    friend bool operator==(const MonodromyTriple&, const MonodromyTriple&) = default;
};

inline bool is_transitive(const Perm& a, const Perm& b)
{
    const int d = a.degree();
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : {a(x), b(x)})
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == d;
}

/// gamma = (alpha * beta)^-1
inline MonodromyTriple complete_triple(Perm alpha, Perm beta)
{
    Perm gamma = (alpha * beta).inverse();
    return {std::move(alpha), std::move(beta), std::move(gamma)};
}

/// Throws unless t satisfies the product relation and is transitive.
inline void validate(const MonodromyTriple& t)
{
    const int d = t.degree();
    if (t.beta.degree() != d || t.gamma.degree() != d)
        throw Error(Errc::internal, "triple with mixed degrees");
    if (!(t.alpha * t.beta * t.gamma).is_identity())
        throw Error(Errc::internal, "alpha*beta*gamma != 1");
    if (!is_transitive(t.alpha, t.beta))
        throw Error(Errc::internal, "intransitive triple");
}

/// 2 - 2g = c(alpha) + c(beta) + c(gamma) - d
inline int genus_of_triple(const MonodromyTriple& t)
{
    const int euler = t.alpha.cycle_count() + t.beta.cycle_count() + t.gamma.cycle_count() - t.degree();
    if (euler > 2 || (2 - euler) % 2 != 0)
        throw Error(Errc::internal, "corrupted triple: Euler characteristic " + std::to_string(euler));
    return (2 - euler) / 2;
}

// Moves generating weak equivalence beyond conjugation. Each returns a
// triple satisfying the product relation again.

/// Orientation reversal: invert alpha and beta, recompute gamma.
inline MonodromyTriple mirror(const MonodromyTriple& t)
{
    return complete_triple(t.alpha.inverse(), t.beta.inverse());
}

/// Swaps branch points 1 and 2: (alpha beta alpha^-1, alpha, gamma).
inline MonodromyTriple relabel_12(const MonodromyTriple& t)
{
    return {t.alpha * t.beta * t.alpha.inverse(), t.alpha, t.gamma};
}

/// Swaps branch points 2 and 3: (alpha, beta gamma beta^-1, beta).
inline MonodromyTriple relabel_23(const MonodromyTriple& t)
{
    return {t.alpha, t.beta * t.gamma * t.beta.inverse(), t.beta};
}

/// Swaps branch points 1 and 3, as the composite (1 2)(2 3)(1 2).
inline MonodromyTriple relabel_13(const MonodromyTriple& t)
{
    return relabel_12(relabel_23(relabel_12(t)));
}

/// Conjugation-invariant canonical form of a transitive triple.
///
/// For every start point the points are relabelled in breadth-first order
/// along alpha then beta; the serialized (alpha, beta) tables are compared
/// and the lexicographic minimum kept. Two transitive triples share a
/// fingerprint iff they are simultaneously conjugate.
inline std::string orbit_fingerprint(const MonodromyTriple& t)
{
    const int d = t.degree();
    const auto a = t.alpha.images();
    const auto b = t.beta.images();
    std::string best;
    std::string cur(static_cast<std::size_t>(2 * d + 1), '\0');
    std::vector<int> label(static_cast<std::size_t>(d));
    std::vector<int> order(static_cast<std::size_t>(d));
    cur[0] = static_cast<char>(d);
    for (int s = 0; s < d; ++s) {
        std::fill(label.begin(), label.end(), -1);
        label[static_cast<std::size_t>(s)] = 0;
        order[0] = s;
        int assigned = 1;
        // compare as we go; abandon once strictly greater than best
        bool smaller = best.empty();
        bool abandoned = false;
        for (int i = 0; i < d && !abandoned; ++i) {
            if (i >= assigned)
                throw Error(Errc::internal, "fingerprint of intransitive triple");
            const int x = order[static_cast<std::size_t>(i)];
            for (int which = 0; which < 2; ++which) {
                const int y = which == 0 ? a[static_cast<std::size_t>(x)] : b[static_cast<std::size_t>(x)];
                if (label[static_cast<std::size_t>(y)] < 0) {
                    label[static_cast<std::size_t>(y)] = assigned;
                    order[static_cast<std::size_t>(assigned++)] = y;
                }
                const std::size_t pos = static_cast<std::size_t>(1 + 2 * i + which);
                cur[pos] = static_cast<char>(label[static_cast<std::size_t>(y)]);
                if (!smaller) {
                    const auto c = static_cast<unsigned char>(cur[pos]);
                    const auto o = static_cast<unsigned char>(best[pos]);
                    if (c < o)
                        smaller = true;
                    else if (c > o) {
                        abandoned = true;
                        break;
                    }
                }
            }
        }
        if (!abandoned && smaller)
            best = cur;
    }
    return best;
}

} // namespace hurwitz

#endif
