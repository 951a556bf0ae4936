#include <gtest/gtest.h>

#include "convex/conical_laws.hpp"
#include "convex/multiary_laws.hpp"
#include "oracles.hpp"

using namespace convex;

namespace {

FiniteDist fd(std::initializer_list<Rat> w) { return FiniteDist(std::vector<Rat>(w)); }

std::vector<RatPoint> pts(std::initializer_list<Rat> v) {
    std::vector<RatPoint> out;
    for (const auto& r : v) out.push_back({r});
    return out;
}

template <class Sampler>
void expect_suite_passes(const Sampler& s, std::uint64_t seed, std::size_t cases) {
    const auto r = check_multiary_laws(s, seed, cases);
    ASSERT_EQ(r.laws.size(), 10u);
    for (const auto& l : r.laws) EXPECT_TRUE(l.ok()) << l.law;
}

}  // namespace

TEST(PartitionLaw, WorkedExample) {
    const FiniteDist lam = fd({Rat(1, 4), Rat(1, 4), Rat(1, 2)});
    const PartitionMap k({0, 0, 1}, 2);
    const auto x = pts({0, 1, 2});
    const FiniteDist rho = rho_dist(lam, k);
    std::vector<RatPoint> blocks;
    for (std::size_t j = 0; j < 2; ++j) blocks.push_back(convn(partition_inner(j, lam, k), x));
    EXPECT_EQ(convn(lam, x), RatPoint{Rat(5, 4)});
    EXPECT_EQ(convn(rho, blocks), RatPoint{Rat(5, 4)});
}

TEST(PartitionLaw, EmptyBlockContributesNothing) {
    const FiniteDist lam = fd({Rat(1, 3), Rat(2, 3)});
    const PartitionMap k({0, 2}, 3);  // block 1 empty
    const auto x = pts({3, 6});
    const FiniteDist rho = rho_dist(lam, k);
    EXPECT_TRUE(rho[1].is_zero());
    std::vector<RatPoint> blocks;
    for (std::size_t j = 0; j < 3; ++j) blocks.push_back(convn(partition_inner(j, lam, k), x));
    EXPECT_EQ(blocks[1], RatPoint{Rat(9, 2)});  // uniform inner combination
    EXPECT_EQ(convn(rho, blocks), convn(lam, x));
}

TEST(PartitionLaw, SamplesEnoughEmptyBlocks) {
    const auto r = check_partition_law(RatSampler{}, 42, 500);
    EXPECT_TRUE(r.ok());
    EXPECT_GE(r.special, 50u);
}

TEST(IdemLaw, OffSupportPointsAreIgnored) {
    const RatPoint a{2}, b{17};
    EXPECT_EQ(convn(fd({Rat(1, 2), 0, Rat(1, 2)}), std::vector<RatPoint>{a, b, a}), a);
    EXPECT_TRUE(check_idem_law(VectorSampler{2}, 1, 500).ok());
}

TEST(BarycenterLaw, IdentityMatrix) {
    const FiniteDist d = fd({Rat(1, 6), Rat(1, 3), Rat(1, 2)});
    const auto x = pts({1, 5, -2});
    EXPECT_EQ(mix_rows(d, StochasticMatrix::identity(3)), d);
    std::vector<RatPoint> inner;
    for (std::size_t i = 0; i < 3; ++i) inner.push_back(convn(StochasticMatrix::identity(3).row(i), x));
    EXPECT_EQ(convn(d, inner), convn(d, x));
}

// Independent oracle: both sides against sum_j (sum_i d_i e_ij) x_j.
TEST(BarycenterLaw, CrossCheckedAgainstWeightedSum) {
    Gen g(77);
    const VectorSampler sample{2};
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = g.range(1, 6), m = g.range(1, 6);
        const FiniteDist d = g.dist(n);
        std::vector<FiniteDist> rows;
        std::vector<std::vector<Rat>> raw;
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(g.dist(m));
            raw.push_back(oracle::weights(rows.back()));
        }
        std::vector<RatVector> x;
        for (std::size_t j = 0; j < m; ++j) x.push_back(sample(g));
        const RatVector expected = oracle::weighted_sum(oracle::mixed(oracle::weights(d), raw), x);
        std::vector<RatVector> inner;
        for (const auto& row : rows) inner.push_back(convn(row, x));
        ASSERT_EQ(convn(d, inner), expected);
        ASSERT_EQ(convn(mix_rows(d, StochasticMatrix(rows)), x), expected);
    }
}

TEST(MapLaws, ConstantAndIdentityMaps) {
    const FiniteDist d = fd({Rat(1, 4), Rat(3, 4)});
    const auto gpts = pts({8, 9, 10});
    // constant map: left side combines copies of g_1
    const IndexMap u({1, 1}, 3);
    EXPECT_EQ(convn(d, pts({9, 9})), RatPoint{9});
    EXPECT_EQ(convn(pushforward(d, u), gpts), RatPoint{9});
    EXPECT_EQ(convn(pushforward(d, IndexMap::identity(2)), pts({8, 9})), convn(d, pts({8, 9})));
}

TEST(PermLaw, SwapOfEqualWeights) {
    const FiniteDist d = fd({Rat(1, 2), Rat(1, 2)});
    const Permutation s({1, 0});
    EXPECT_EQ(permute(d, s), d);
    EXPECT_EQ(convn(d, pts({1, 3})), convn(d, pts({3, 1})));
}

TEST(MultiarySuite, AllInstances) {
    expect_suite_passes(RatSampler{}, 1, 500);
    for (std::size_t dim = 1; dim <= 3; ++dim) expect_suite_passes(VectorSampler{dim}, 2, 300);
    for (std::size_t k = 2; k <= 4; ++k) expect_suite_passes(FdistSampler{k}, 3, 300);
    expect_suite_passes(DominatedPairSampler{3}, 4, 300);
    expect_suite_passes(ScaledSampler<RatSampler>{}, 5, 300);
}

// Partition + idempotence, then the derived laws in the order they are
// obtained from one another, each checked on its own.
TEST(MultiarySuite, DerivationChainOnVectors) {
    const VectorSampler s{2};
    EXPECT_TRUE(check_partition_law(s, 9, 500).ok());
    EXPECT_TRUE(check_idem_law(s, 9, 500).ok());
    EXPECT_TRUE(check_partition_barycenter_law(s, 9, 500).ok());
    EXPECT_TRUE(check_inj_map_law(s, 9, 500).ok());
    EXPECT_TRUE(check_barycenter_law(s, 9, 500).ok());
    EXPECT_TRUE(check_map_law(s, 9, 500).ok());
}

TEST(MultiarySuite, BrokenBinaryOperatorBreaksPermutation) {
    const auto r = check_perm_law(BrokenSampler{}, 1, 500);
    EXPECT_FALSE(r.ok());
    ASSERT_TRUE(r.counterexample.has_value());
}
