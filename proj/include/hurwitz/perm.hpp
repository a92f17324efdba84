#ifndef HURWITZ_PERM_HPP
#define HURWITZ_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "partition.hpp"

namespace hurwitz {

using Point = std::uint8_t;
inline constexpr int max_points = 255;

/// A permutation of {0, ..., d-1}, stored as its image table.
///
/// Products are left to right: (a * b)(x) = b(a(x)).
class Perm {
public:
    Perm() = default;

    static Perm identity(int d)
    {
        check_degree(d);
        Perm p;
        p.images_.resize(static_cast<std::size_t>(d));
        std::iota(p.images_.begin(), p.images_.end(), Point{0});
        return p;
    }

    /// Validates bijectivity.
    static Perm from_images(std::span<const int> images)
    {
        check_degree(static_cast<int>(images.size()));
        Perm p;
        std::vector<bool> seen(images.size(), false);
        for (int x : images) {
            if (x < 0 || x >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(x)])
                throw Error(Errc::invalid_partition, "not a bijection");
            seen[static_cast<std::size_t>(x)] = true;
            p.images_.push_back(static_cast<Point>(x));
        }
        return p;
    }

    static Perm from_images(std::initializer_list<int> images)
    {
        return from_images(std::span<const int>(images.begin(), images.size()));
    }

    /// Builds from disjoint cycles; points not mentioned are fixed.
    static Perm from_cycles(int d, const std::vector<std::vector<int>>& cycles)
    {
        Perm p = identity(d);
        std::vector<bool> seen(static_cast<std::size_t>(d), false);
        for (const auto& c : cycles)
            for (std::size_t i = 0; i < c.size(); ++i) {
                const int x = c[i];
                if (x < 0 || x >= d || seen[static_cast<std::size_t>(x)])
                    throw Error(Errc::invalid_partition, "cycles are not disjoint");
                seen[static_cast<std::size_t>(x)] = true;
                p.images_[static_cast<std::size_t>(x)] = static_cast<Point>(c[(i + 1) % c.size()]);
            }
        return p;
    }

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    std::span<const Point> images() const noexcept { return images_; }

    Perm inverse() const
    {
        Perm out = *this;
        for (std::size_t x = 0; x < images_.size(); ++x)
            out.images_[images_[x]] = static_cast<Point>(x);
        return out;
    }

    friend Perm operator*(const Perm& a, const Perm& b)
    {
        if (a.degree() != b.degree())
            throw Error(Errc::internal, "degree mismatch in product");
        Perm out = a;
        for (auto& img : out.images_)
            img = b.images_[img];
        return out;
    }

    /// x^-1 * this * x, i.e. the permutation acting as `this` on relabelled
    /// points x(i).
    Perm conjugated_by(const Perm& x) const { return x.inverse() * *this * x; }

    bool is_identity() const noexcept
    {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i)
                return false;
        return true;
    }

    std::vector<std::vector<int>> cycles() const
    {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t s = 0; s < images_.size(); ++s) {
            if (seen[s])
                continue;
            auto& c = out.emplace_back();
            for (std::size_t x = s; !seen[x]; x = images_[x]) {
                seen[x] = true;
                c.push_back(static_cast<int>(x));
            }
        }
        return out;
    }

    int cycle_count() const
    {
        int n = 0;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t s = 0; s < images_.size(); ++s) {
            if (seen[s])
                continue;
            ++n;
            for (std::size_t x = s; !seen[x]; x = images_[x])
                seen[x] = true;
        }
        return n;
    }

    Partition cycle_type() const
    {
        std::vector<Int> lengths;
        for (const auto& c : cycles())
            lengths.push_back(static_cast<Int>(c.size()));
        return Partition(std::move(lengths));
    }

    std::string str() const
    {
        std::string out;
        for (const auto& c : cycles()) {
            if (c.size() == 1)
                continue;
            out += '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i)
                    out += ' ';
                out += std::to_string(c[i]);
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    static void check_degree(int d)
    {
        if (d < 1 || d > max_points)
            throw Error(Errc::degree_limit_exceeded, "degree " + std::to_string(d));
    }

    std::vector<Point> images_;
};

/// The canonical member of a conjugacy class: cycles in decreasing length
/// filling consecutive points, each cycle i -> i+1 -> ... -> first.
inline Perm canonical_perm(const Partition& type)
{
    Perm p = Perm::identity(static_cast<int>(type.total()));
    std::vector<std::vector<int>> cycles;
    int next = 0;
    for (Int len : type.parts()) {
        auto& c = cycles.emplace_back();
        for (Int i = 0; i < len; ++i)
            c.push_back(next++);
    }
    return Perm::from_cycles(static_cast<int>(type.total()), cycles);
}

template <typename Rng>
Perm random_perm(int d, Rng& rng)
{
    std::vector<int> img(static_cast<std::size_t>(d));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm::from_images(img);
}

/// |class of cycle type lambda| = d! / prod_i (i^{m_i} m_i!).
inline Int conjugacy_class_size(const Partition& type)
{
    Int size = 1;
    for (Int i = 2; i <= type.total(); ++i)
        size = mul(size, i);
    Int z = 1;
    const auto parts = type.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        for (std::size_t m = 1; m <= j - i; ++m)
            z = mul(z, parts[i], static_cast<Int>(m));
        i = j;
    }
    return exact_div(size, z, "conjugacy_class_size");
}

/// Streams every permutation of the given cycle type exactly once. Each
/// cycle starts at the smallest point not yet used; its length is chosen
/// among the remaining distinct lengths and its other points in every order.
template <typename F>
void for_each_perm_of_type(const Partition& type, F&& f)
{
    const int d = static_cast<int>(type.total());
    if (d > max_points)
        throw Error(Errc::degree_limit_exceeded, "degree " + std::to_string(d));
    std::vector<int> lengths;
    std::vector<int> remaining;
    for (Int len : type.parts()) {
        if (lengths.empty() || lengths.back() != len) {
            lengths.push_back(static_cast<int>(len));
            remaining.push_back(0);
        }
        ++remaining.back();
    }
    std::vector<int> img(static_cast<std::size_t>(d), -1);
    std::vector<bool> used(static_cast<std::size_t>(d), false);

    auto fill = [&](auto& self, int start, int prev, int left, auto&& next_cycle) -> void {
        if (left == 0) {
            img[static_cast<std::size_t>(prev)] = start;
            next_cycle();
            return;
        }
        for (int x = start + 1; x < d; ++x) {
            if (used[static_cast<std::size_t>(x)])
                continue;
            used[static_cast<std::size_t>(x)] = true;
            img[static_cast<std::size_t>(prev)] = x;
            self(self, start, x, left - 1, next_cycle);
            used[static_cast<std::size_t>(x)] = false;
        }
    };

    auto place = [&](auto& self) -> void {
        int start = 0;
        while (start < d && used[static_cast<std::size_t>(start)])
            ++start;
        if (start == d) {
            f(Perm::from_images(img));
            return;
        }
        used[static_cast<std::size_t>(start)] = true;
        for (std::size_t li = 0; li < lengths.size(); ++li) {
            if (remaining[li] == 0)
                continue;
            --remaining[li];
            fill(fill, start, start, lengths[li] - 1, [&] { self(self); });
            ++remaining[li];
        }
        used[static_cast<std::size_t>(start)] = false;
    };
    place(place);
}

} // namespace hurwitz

#endif
