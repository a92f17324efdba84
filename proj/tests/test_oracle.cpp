#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hurwitz/closed_form.hpp"
#include "hurwitz/oracle.hpp"
#include "properties.hpp"

using namespace hurwitz;

namespace {

BranchDatum datum(Int g, Partition a, Partition b, Partition c)
{
    return make_branch_datum(g, std::move(a), std::move(b), std::move(c));
}

// Conjugation orbits by exhaustive beta enumeration over the whole class,
// with no pruning and no search tree: an independent count.
Int brute_conj_orbits(const BranchDatum& d)
{
    const auto alpha = canonical_perm(d.partitions[0]);
    std::set<std::string> seen;
    for_each_perm_of_type(d.partitions[1], [&](const Perm& beta) {
        if (!is_transitive(alpha, beta))
            return;
        auto t = complete_triple(alpha, beta);
        if (t.gamma.cycle_type() == d.partitions[2])
            seen.insert(orbit_fingerprint(t));
    });
    return static_cast<Int>(seen.size());
}

} // namespace

TEST(Oracle, SmallExamples)
{
    EXPECT_EQ(enumerate_triples(datum(0, {2}, {1, 1}, {2})).size(), 1u);
    EXPECT_EQ(enumerate_triples(datum(0, {2, 2}, {3, 1}, {2, 2})).size(), 0u);
    const auto torus = datum(1, {2, 2, 2, 2}, {7, 1}, {7, 1});
    const auto reps = enumerate_triples(torus);
    EXPECT_GE(reps.size(), 3u);
    std::set<std::string> fps;
    for (const auto& t : reps) {
        validate(t);
        EXPECT_EQ(genus_of_triple(t), 1);
        fps.insert(orbit_fingerprint(t));
    }
    EXPECT_EQ(fps.size(), reps.size());
    EXPECT_EQ(weak_hurwitz(torus), 3);
}

TEST(Oracle, WeakExamples)
{
    EXPECT_EQ(weak_hurwitz(datum(0, Partition::repeated(2, 6), {5, 2, 2, 2, 1}, {9, 2, 1})), 2);
    EXPECT_EQ(weak_hurwitz(datum(0, {2, 2, 2, 2}, {5, 2, 1}, {5, 2, 1})), 2);
}

TEST(Oracle, Errors)
{
    OracleConfig cfg;
    cfg.degree_limit = 8;
    try {
        enumerate_triples(datum(0, Partition::repeated(2, 6), {5, 2, 2, 2, 1}, {9, 2, 1}), cfg);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::degree_limit_exceeded);
    }
    try {
        enumerate_triples(datum(0, {2, 2}, {2, 2}, {4}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::incompatible_datum);
    }
    cfg = {};
    cfg.alpha = Perm::from_cycles(4, {{0, 1, 2}});
    EXPECT_THROW(enumerate_triples(datum(0, {2, 2}, {3, 1}, {2, 2}), cfg), Error);
}

TEST(Oracle, ConjugationOrbitsMatchBruteForce)
{
    for (Int k = 1; k <= 4; ++k)
        for (Int g = 0; g <= 1; ++g)
            for (Int h = 2 * g; h < k; ++h)
                for (const auto& fd : family_data(g, h, k)) {
                    const auto d = expand(fd);
                    ASSERT_EQ(static_cast<Int>(enumerate_triples(d).size()), brute_conj_orbits(d)) << d.str();
                }
    // data outside the family
    for (const auto& d : {datum(0, {3, 1, 1}, {2, 2, 1}, {5}), datum(0, {3, 3}, {2, 2, 2}, {4, 1, 1}),
                          datum(1, {4, 2}, {3, 3}, {5, 1}), datum(0, {2, 2, 1, 1}, {3, 3}, {4, 2})})
        ASSERT_EQ(static_cast<Int>(enumerate_triples(d).size()), brute_conj_orbits(d)) << d.str();
}

TEST(Oracle, MonotoneInMoves)
{
    for (Int k = 2; k <= 5; ++k)
        for (Int g = 0; g <= 1; ++g)
            for (Int h = 2 * g; h < k; ++h)
                for (const auto& fd : family_data(g, h, k)) {
                    const auto d = expand(fd);
                    const auto all = weak_hurwitz_counts(d, {true, true});
                    for (MoveSet m : {MoveSet{false, false}, MoveSet{true, false}, MoveSet{false, true}}) {
                        const auto c = weak_hurwitz_counts(d, m);
                        ASSERT_EQ(c.conj_orbits, all.conj_orbits);
                        ASSERT_LE(c.weak, c.conj_orbits);
                        ASSERT_GE(c.weak, all.weak);
                    }
                    ASSERT_EQ(weak_hurwitz_counts(d, {false, false}).weak, all.conj_orbits);
                }
}

TEST(Oracle, DistinctPartitionsIgnoreRelabel)
{
    int checked = 0;
    for (Int k = 3; k <= 5; ++k)
        for (const auto& fd : family_data(0, 2, k)) {
            if (!repeated_partitions(fd).empty())
                continue;
            ++checked;
            const auto d = expand(fd);
            ASSERT_NE(d.partitions[0], d.partitions[2]);
            ASSERT_NE(d.partitions[1], d.partitions[2]);
            ASSERT_EQ(weak_hurwitz(d, {true, true}), weak_hurwitz(d, {true, false})) << d.str();
            ASSERT_EQ(weak_hurwitz(d, {false, true}), weak_hurwitz(d, {false, false})) << d.str();
        }
    EXPECT_GT(checked, 5);
}

TEST(Oracle, CanonicalAlphaIndependence)
{
    std::mt19937 rng(5);
    for (Int k = 2; k <= 4; ++k)
        for (Int g = 0; g <= 1; ++g)
            for (Int h = 2 * g; h < k; ++h)
                for (const auto& fd : family_data(g, h, k)) {
                    const auto d = expand(fd);
                    const auto base = weak_hurwitz_counts(d);
                    for (int trial = 0; trial < 3; ++trial) {
                        OracleConfig cfg;
                        cfg.alpha = canonical_perm(d.partitions[0]).conjugated_by(random_perm(static_cast<int>(d.degree), rng));
                        cfg.prune_centralizer = trial != 1;
                        cfg.prune_third = trial != 2;
                        ASSERT_EQ(weak_hurwitz_counts(d, {}, cfg), base) << d.str();
                    }
                }
}

TEST(Oracle, PruningDoesNotChangeCounts)
{
    for (Int k = 3; k <= 5; ++k)
        for (const auto& fd : family_data(0, 2, k)) {
            const auto d = expand(fd);
            OracleConfig plain;
            plain.prune_centralizer = false;
            plain.prune_third = false;
            ASSERT_EQ(weak_hurwitz_counts(d, {}, plain), weak_hurwitz_counts(d)) << d.str();
        }
}

TEST(Oracle, ByThirdAgreesWithPerDatum)
{
    for (Int k = 3; k <= 6; ++k)
        for (Int g = 0; g <= 1; ++g)
            for (Int h = std::max<Int>(2 * g, 1); h < k && h <= 3; ++h) {
                const auto bucketed = enumerate_by_third(Partition::repeated(2, k), family_second_partition(h, k), g);
                std::size_t seen = 0;
                for (const auto& fd : family_data(g, h, k)) {
                    const auto reps = enumerate_triples(expand(fd));
                    auto it = bucketed.find(fd.pi());
                    const std::size_t got = it == bucketed.end() ? 0 : it->second.size();
                    ASSERT_EQ(got, reps.size()) << fd.str();
                    seen += got;
                }
                std::size_t total = 0;
                for (const auto& [type, reps] : bucketed)
                    total += reps.size();
                ASSERT_EQ(total, seen);
            }
}

TEST(Oracle, FormulaOnSmallFamily)
{
    for (Int k = 1; k <= 5; ++k)
        for (Int h = 0; h <= 2 && h < k; ++h)
            for (const auto& fd : family_data(0, h, k))
                ASSERT_EQ(weak_hurwitz(expand(fd)), nu(fd)) << fd.str();
    for (Int k = 3; k <= 5; ++k)
        for (Int h = 2; h <= 3 && h < k; ++h)
            for (const auto& fd : family_data(1, h, k))
                ASSERT_EQ(weak_hurwitz(expand(fd)), nu(fd)) << fd.str();
}

TEST(DisjointSets, Components)
{
    DisjointSets s(5);
    EXPECT_EQ(s.components(), 5u);
    EXPECT_TRUE(s.unite(0, 1));
    EXPECT_FALSE(s.unite(1, 0));
    s.unite(3, 4);
    EXPECT_EQ(s.components(), 3u);
    EXPECT_EQ(s.find(4), s.find(3));
}

TEST(Oracle, RandomizedMoveProperties)
{
    const auto report = proptest::run_property_suite(300, 10, 2024);
    EXPECT_EQ(report.cases, 300);
    EXPECT_EQ(report.failures, 0) << report.first_failure;
}
