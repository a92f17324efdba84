#ifndef HURWITZ_OCTAGON_HPP
#define HURWITZ_OCTAGON_HPP

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

// Edge pairings of an octagon whose quotient is the genus-2 surface.
//
// Edges carry labels in Z/8; edge i runs from vertex i to vertex i+1. Two
// paired edges are glued orientably (with opposite boundary orientation),
// so {i, j} identifies vertex i with j+1 and vertex i+1 with j. The quotient
// has 4 edges and 1 face, hence genus 2 exactly when all 8 vertices fall in
// one class.

using EdgePairing = std::array<std::pair<int, int>, 4>;

struct PairingClass {
    EdgePairing representative;  // lexicographically smallest member
    int orbit_size = 0;          // under the dihedral group of order 16
    int stabilizer_order = 0;    // 16 / orbit_size
};

namespace detail {

inline EdgePairing normalize(EdgePairing p)
{
    for (auto& e : p)
        if (e.first > e.second)
            std::swap(e.first, e.second);
    std::sort(p.begin(), p.end());
    return p;
}

inline int find_root(std::array<int, 8>& parent, int x)
{
    while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
}

/// Image of the pairing under the dihedral element i -> sign*i + shift.
inline EdgePairing transform(const EdgePairing& p, int sign, int shift)
{
    EdgePairing out;
    for (std::size_t k = 0; k < 4; ++k) {
        auto map = [&](int e) {
            // on edges, the reflection of vertices v -> -v sends edge i to -i-1
            const int img = sign > 0 ? e + shift : -e - 1 + shift;
            return ((img % 8) + 8) % 8;
        };
        out[k] = {map(p[k].first), map(p[k].second)};
    }
    return normalize(out);
}

} // namespace detail

/// Number of vertex classes after gluing.
inline int vertex_classes(const EdgePairing& pairing)
{
    std::array<int, 8> parent{0, 1, 2, 3, 4, 5, 6, 7};
    auto unite = [&](int a, int b) {
        a = detail::find_root(parent, a);
        b = detail::find_root(parent, b);
        if (a != b)
            parent[static_cast<std::size_t>(a)] = b;
    };
    for (auto [i, j] : pairing) {
        unite(i, (j + 1) % 8);
        unite((i + 1) % 8, j);
    }
    int classes = 0;
    for (int v = 0; v < 8; ++v)
        classes += detail::find_root(parent, v) == v;
    return classes;
}

/// All 105 perfect matchings of Z/8, normalized.
inline std::vector<EdgePairing> all_pairings()
{
    std::vector<EdgePairing> out;
    EdgePairing cur{};
    std::array<bool, 8> used{};
    auto rec = [&](auto& self, std::size_t slot) -> void {
        if (slot == 4) {
            out.push_back(cur);
            return;
        }
        int first = 0;
        while (used[static_cast<std::size_t>(first)])
            ++first;
        used[static_cast<std::size_t>(first)] = true;
        for (int second = first + 1; second < 8; ++second) {
            if (used[static_cast<std::size_t>(second)])
                continue;
            used[static_cast<std::size_t>(second)] = true;
            cur[slot] = {first, second};
            self(self, slot + 1);
            used[static_cast<std::size_t>(second)] = false;
        }
        used[static_cast<std::size_t>(first)] = false;
    };
    rec(rec, 0);
    return out;
}

inline bool is_genus_two(const EdgePairing& p) { return vertex_classes(p) == 1; }

/// Genus-2 pairings up to the dihedral group of the octagon.
inline std::vector<PairingClass> octagon_pairings()
{
    std::set<EdgePairing> genus_two;
    for (const auto& p : all_pairings())
        if (is_genus_two(p))
            genus_two.insert(p);
    std::vector<PairingClass> out;
    std::set<EdgePairing> done;
    for (const auto& p : genus_two) {
        if (done.count(p))
            continue;
        std::set<EdgePairing> orbit;
        for (int sign : {1, -1})
            for (int shift = 0; shift < 8; ++shift)
                orbit.insert(detail::transform(p, sign, shift));
        done.insert(orbit.begin(), orbit.end());
        const int size = static_cast<int>(orbit.size());
        out.push_back({*orbit.begin(), size, 16 / size});
    }
    return out;
}

inline std::string to_string(const EdgePairing& p)
{
    std::string out = "{";
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k)
            out += ",";
        out += "{" + std::to_string(p[k].first) + "," + std::to_string(p[k].second) + "}";
    }
    return out + "}";
}

/// Name of the class in the usual picture: I = {0,2},{1,3},{4,6},{5,7};
/// II = {0,2},{1,4},{3,6},{5,7}; III = {0,2},{1,5},{3,6},{4,7};
/// IV = {0,4},{1,5},{2,6},{3,7}.
inline std::string octagon_class_name(const EdgePairing& p)
{
    static const std::array<std::pair<const char*, EdgePairing>, 4> named{{
        {"I", {{{0, 2}, {1, 3}, {4, 6}, {5, 7}}}},
        {"II", {{{0, 2}, {1, 4}, {3, 6}, {5, 7}}}},
        {"III", {{{0, 2}, {1, 5}, {3, 6}, {4, 7}}}},
        {"IV", {{{0, 4}, {1, 5}, {2, 6}, {3, 7}}}},
    }};
    const auto q = detail::normalize(p);
    for (const auto& [name, rep] : named)
        for (int sign : {1, -1})
            for (int shift = 0; shift < 8; ++shift)
                if (detail::transform(rep, sign, shift) == q)
                    return name;
    return "?";
}

} // namespace hurwitz

#endif
