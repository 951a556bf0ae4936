#include <gtest/gtest.h>

#include "convex/distribution.hpp"
#include "convex/random.hpp"
#include "oracles.hpp"

using namespace convex;

namespace {

FiniteDist fd(std::initializer_list<Rat> w) { return FiniteDist(std::vector<Rat>(w)); }

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::ParseError;
}

}  // namespace

TEST(FiniteDist, RejectsInvalidWeights) {
    EXPECT_EQ(kind_of([] { fd({Rat(1, 2), Rat(1, 3)}); }), ErrorKind::InvalidDistribution);
    EXPECT_EQ(kind_of([] { fd({Rat(3, 2), Rat(-1, 2)}); }), ErrorKind::InvalidDistribution);
    EXPECT_EQ(kind_of([] { FiniteDist(std::vector<Rat>{}); }), ErrorKind::InvalidDistribution);
}

TEST(FiniteDist, SumMessageNamesTheSum) {
    try {
        fd({Rat(1, 2), Rat(1, 3)});
    } catch (const error& e) {
        EXPECT_NE(std::string(e.what()).find("5/6"), std::string::npos);
    }
}

TEST(FiniteDist, SupportAndSpecialForms) {
    EXPECT_EQ(fd({Rat(1, 2), Rat(0), Rat(1, 2)}).support(), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(FiniteDist::uniform(4), fd({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}));
    EXPECT_EQ(FiniteDist::point_mass(3, 1), fd({Rat(0), Rat(1), Rat(0)}));
    EXPECT_EQ(FiniteDist::binary(prob_new(1, 3)), fd({Rat(1, 3), Rat(2, 3)}));
}

TEST(MixRows, Examples) {
    const StochasticMatrix e({fd({Rat(1, 3), Rat(2, 3)}), fd({Rat(1, 2), Rat(1, 2)})});
    EXPECT_EQ(mix_rows(FiniteDist::point_mass(2, 0), e), e.row(0));
    EXPECT_EQ(mix_rows(fd({Rat(1, 2), Rat(1, 2)}), StochasticMatrix::identity(2)),
              fd({Rat(1, 2), Rat(1, 2)}));
    const FiniteDist f = fd({Rat(1, 5), Rat(3, 5), Rat(1, 5)});
    const StochasticMatrix same({f, f, f});
    EXPECT_EQ(mix_rows(fd({Rat(1, 7), Rat(2, 7), Rat(4, 7)}), same), f);
    EXPECT_EQ(kind_of([&] { mix_rows(FiniteDist::uniform(3), e); }), ErrorKind::ArityMismatch);
}

TEST(MixRows, MatchesBruteForceSum) {
    Gen g(7);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = g.range(1, 6), m = g.range(1, 6);
        const FiniteDist d = g.dist(n);
        std::vector<FiniteDist> rows;
        std::vector<std::vector<Rat>> raw;
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(g.dist(m));
            raw.push_back(oracle::weights(rows.back()));
        }
        EXPECT_EQ(oracle::weights(mix_rows(d, StochasticMatrix(rows))),
                  oracle::mixed(oracle::weights(d), raw));
    }
}

TEST(Pushforward, Examples) {
    const FiniteDist d = fd({Rat(1, 4), Rat(1, 4), Rat(1, 2)});
    EXPECT_EQ(pushforward(d, IndexMap::identity(3)), d);
    EXPECT_EQ(pushforward(d, IndexMap({0, 0, 0}, 2)), FiniteDist::point_mass(2, 0));
    EXPECT_EQ(pushforward(d, IndexMap({0, 0, 1}, 2)), fd({Rat(1, 2), Rat(1, 2)}));
    EXPECT_EQ(kind_of([&] { pushforward(d, IndexMap({0, 1}, 2)); }), ErrorKind::ArityMismatch);
}

TEST(PartitionInner, Examples) {
    const FiniteDist lam = fd({Rat(1, 4), Rat(1, 4), Rat(1, 2)});
    EXPECT_EQ(partition_inner(0, lam, IndexMap({0, 0, 0}, 1)), lam);
    EXPECT_EQ(partition_inner(0, lam, IndexMap({0, 0, 1}, 2)), fd({Rat(1, 2), Rat(1, 2), Rat(0)}));
    // block 1 is empty
    EXPECT_EQ(partition_inner(1, lam, IndexMap({0, 0, 2}, 3)), FiniteDist::uniform(3));
    // block 1 exists but has zero mass
    const FiniteDist lam0 = fd({Rat(1, 2), Rat(0), Rat(1, 2)});
    EXPECT_EQ(partition_inner(1, lam0, IndexMap({0, 1, 0}, 2)), FiniteDist::uniform(3));
    EXPECT_EQ(kind_of([&] { partition_inner(2, lam, IndexMap({0, 0, 1}, 2)); }),
              ErrorKind::ArityMismatch);
}

TEST(RhoDist, Examples) {
    const FiniteDist lam = fd({Rat(1, 4), Rat(1, 4), Rat(1, 2)});
    EXPECT_EQ(rho_dist(lam, IndexMap::identity(3)), lam);
    EXPECT_EQ(rho_dist(lam, IndexMap({0, 0, 0}, 1)), FiniteDist::point_mass(1, 0));
    EXPECT_EQ(rho_dist(lam, IndexMap({0, 0, 1}, 2)), fd({Rat(1, 2), Rat(1, 2)}));
}

TEST(Dominates, Examples) {
    const FiniteDist half = fd({Rat(1, 2), Rat(1, 2)});
    const FiniteDist first = fd({Rat(1), Rat(0)});
    EXPECT_TRUE(dominates(half, first));
    EXPECT_FALSE(dominates(first, half));
    EXPECT_TRUE(dominates(first, first));
    EXPECT_EQ(kind_of([&] { dominates(half, FiniteDist::uniform(3)); }), ErrorKind::DimensionMismatch);
}

TEST(IndexMaps, Validation) {
    EXPECT_EQ(kind_of([] { IndexMap({0, 3}, 3); }), ErrorKind::ArityMismatch);
    EXPECT_EQ(kind_of([] { Permutation({0, 0, 1}); }), ErrorKind::NotBijective);
    EXPECT_TRUE(IndexMap({2, 0}, 3).injective());
    EXPECT_FALSE(IndexMap({2, 2}, 3).injective());
    const Permutation s({2, 0, 1});
    EXPECT_EQ(permute(fd({Rat(1, 2), Rat(1, 3), Rat(1, 6)}), s), fd({Rat(1, 6), Rat(1, 2), Rat(1, 3)}));
}

TEST(Generator, DistributionsAreValidAndDeterministic) {
    Gen a(99), b(99);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = a.range(1, 6);
        EXPECT_EQ(n, b.range(1, 6));
        const FiniteDist d = a.dist(n);
        EXPECT_EQ(d, b.dist(n));
        for (const auto& w : d.weights()) EXPECT_LE(w.denominator(), 64);
    }
}
