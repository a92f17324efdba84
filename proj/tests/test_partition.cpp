#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <map>

#include "hurwitz/arith.hpp"
#include "hurwitz/partition.hpp"

using namespace hurwitz;

namespace {

// Partition counts p(n, parts) from the recurrence p(n,k) = p(n-1,k-1) + p(n-k,k).
Int partition_count(Int n, Int k)
{
    static std::map<std::pair<Int, Int>, Int> memo;
    if (n == 0 && k == 0)
        return 1;
    if (n <= 0 || k <= 0)
        return 0;
    auto key = std::make_pair(n, k);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    return memo[key] = partition_count(n - 1, k - 1) + partition_count(n - k, k);
}

} // namespace

TEST(Partition, SortsAndSums)
{
    Partition p{1, 9, 2};
    EXPECT_EQ(p.str(), "(9,2,1)");
    EXPECT_EQ(p.total(), 12);
    EXPECT_EQ(p.length(), 3);
    EXPECT_EQ(p, (Partition{2, 1, 9}));
}

TEST(Partition, RejectsNonPositiveParts)
{
    EXPECT_THROW(Partition({3, 0}), Error);
    EXPECT_THROW(Partition(std::vector<Int>{}), Error);
    try {
        Partition({2, -1});
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_partition);
    }
}

TEST(Partition, Repeated)
{
    EXPECT_EQ(Partition::repeated(2, 4).str(), "(2,2,2,2)");
    EXPECT_THROW(Partition::repeated(2, 0), Error);
}

TEST(Partition, OrderIsDescendingLexWithinTotal)
{
    EXPECT_LT((Partition{10, 1, 1}), (Partition{9, 2, 1}));
    EXPECT_LT((Partition{5, 4, 3}), (Partition{4, 4, 4}));
    EXPECT_LT((Partition{4}), (Partition{3, 2}));
}

TEST(Partition, WithLengthFirstRowsAndCounts)
{
    auto twelve = partitions_with_length(12, 3);
    ASSERT_EQ(twelve.size(), 12u);
    EXPECT_EQ(twelve.front().str(), "(10,1,1)");
    EXPECT_EQ(twelve.back().str(), "(4,4,4)");
    EXPECT_EQ(partitions_with_length(14, 3).size(), 16u);
    for (Int n = 1; n <= 30; ++n)
        for (Int k = 1; k <= n; ++k) {
            auto parts = partitions_with_length(n, k);
            ASSERT_EQ(static_cast<Int>(parts.size()), partition_count(n, k)) << n << "," << k;
            ASSERT_TRUE(std::is_sorted(parts.begin(), parts.end()));
            for (const auto& p : parts) {
                ASSERT_EQ(p.total(), n);
                ASSERT_EQ(p.length(), k);
            }
        }
    EXPECT_TRUE(partitions_with_length(3, 4).empty());
}

TEST(Partition, AllPartitionsCount)
{
    const Int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (Int n = 1; n <= 10; ++n)
        EXPECT_EQ(static_cast<Int>(partitions_of(n).size()), p[n]);
}

TEST(Arith, CheckedOverflow)
{
    const Int big = std::numeric_limits<Int>::max();
    EXPECT_THROW(add(big, 1), Error);
    EXPECT_THROW(sub(-big, 2), Error);
    EXPECT_THROW(mul(big / 2, 3), Error);
    EXPECT_EQ(mul(2, 3, 4, 5), 120);
}

TEST(Arith, FloorDivAndExactDiv)
{
    EXPECT_EQ(floor_div(7, 2), 3);
    EXPECT_EQ(floor_div(-7, 2), -4);
    EXPECT_EQ(floor_div(-8, 2), -4);
    EXPECT_EQ(exact_div(12, 4, "t"), 3);
    EXPECT_THROW(exact_div(13, 4, "t"), Error);
}

TEST(Arith, BinomialMatchesPascal)
{
    std::vector<std::vector<Int>> row{{1}};
    for (Int n = 1; n <= 60; ++n) {
        std::vector<Int> next(static_cast<std::size_t>(n + 1), 1);
        for (Int r = 1; r < n; ++r)
            next[static_cast<std::size_t>(r)] = row.back()[static_cast<std::size_t>(r - 1)] + row.back()[static_cast<std::size_t>(r)];
        row.push_back(next);
        for (Int r = 0; r <= n; ++r)
            ASSERT_EQ(binomial(n, r), next[static_cast<std::size_t>(r)]);
    }
    EXPECT_EQ(binomial(4, 5), 0);
}
