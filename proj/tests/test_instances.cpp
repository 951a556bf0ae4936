#include <gtest/gtest.h>

#include "convex/binary_laws.hpp"
#include "convex/conical_laws.hpp"
#include "convex/instances.hpp"
#include "convex/random.hpp"

using namespace convex;

namespace {

FiniteDist fd(std::initializer_list<Rat> w) { return FiniteDist(std::vector<Rat>(w)); }

void expect_all_pass(const LawReport& r) {
    for (const auto& l : r.laws) {
        EXPECT_TRUE(l.ok()) << l.law << " failed: "
                            << (l.counterexample ? l.counterexample->lhs + " vs " + l.counterexample->rhs : "");
    }
}

}  // namespace

TEST(RatPoint, ConvExamples) {
    EXPECT_EQ(conv(Prob::one(), RatPoint{5}, RatPoint{9}), RatPoint{5});
    EXPECT_EQ(conv(prob_new(1, 2), RatPoint{0}, RatPoint{1}), RatPoint{Rat(1, 2)});
    EXPECT_EQ(conv(prob_new(1, 4), RatPoint{4}, RatPoint{8}), RatPoint{7});
}

TEST(FdistPoint, ConvIsPointwise) {
    EXPECT_EQ(conv(prob_new(1, 2), fd({1, 0}), fd({0, 1})), fd({Rat(1, 2), Rat(1, 2)}));
    EXPECT_THROW(conv(prob_new(1, 2), fd({1, 0}), fd({0, 0, 1})), error);
}

TEST(RatVector, DimensionMismatch) {
    try {
        conv(prob_new(1, 2), RatVector({1, 2}), RatVector({1, 2, 3}));
        ADD_FAILURE();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(DominatedPair, RejectsUndominated) {
    try {
        DominatedPair(fd({Rat(1, 2), Rat(1, 2)}), fd({1, 0}));
        ADD_FAILURE();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDominated);
    }
}

TEST(DominatedPair, MixturesStayDominated) {
    Gen g(3);
    const DominatedPairSampler sample{4};
    for (int i = 0; i < 1000; ++i) {
        const auto a = sample(g), b = sample(g);
        const auto m = conv(g.prob(), a, b);
        EXPECT_TRUE(dominates(m.q(), m.p()));
    }
}

TEST(BinaryLaws, RatPointThousandCases) {
    const auto r = check_binary_laws(RatSampler{}, 1, 1000);
    ASSERT_EQ(r.laws.size(), 4u);
    expect_all_pass(r);
}

TEST(BinaryLaws, FdistAlphabetThree) { expect_all_pass(check_binary_laws(FdistSampler{3}, 2, 500)); }

TEST(BinaryLaws, VectorsAndPairs) {
    for (std::size_t dim = 1; dim <= 3; ++dim) expect_all_pass(check_binary_laws(VectorSampler{dim}, 3, 300));
    expect_all_pass(check_binary_laws(DominatedPairSampler{3}, 4, 300));
}

TEST(BinaryLaws, BrokenInstanceIsCaught) {
    const auto r = check_binary_laws(BrokenSampler{}, 5, 500);
    EXPECT_TRUE(r.find("unit")->ok());
    EXPECT_TRUE(r.find("idempotence")->ok());
    const auto* skew = r.find("skewed-commutativity");
    ASSERT_FALSE(skew->ok());
    const auto& cx = *skew->counterexample;
    ASSERT_EQ(cx.inputs.size(), 3u);
    EXPECT_NE(cx.inputs[0].second, "1/2");
    EXPECT_NE(cx.inputs[1].second, cx.inputs[2].second);
    EXPECT_NE(cx.lhs, cx.rhs);
}

TEST(BinaryLaws, ReportsAreDeterministic) {
    const auto a = check_binary_laws(BrokenSampler{}, 11, 200);
    const auto b = check_binary_laws(BrokenSampler{}, 11, 200);
    const auto& ca = *a.find("skewed-commutativity")->counterexample;
    const auto& cb = *b.find("skewed-commutativity")->counterexample;
    EXPECT_EQ(ca.case_index, cb.case_index);
    EXPECT_EQ(ca.inputs, cb.inputs);
}

TEST(EntropicIdentity, HoldsOnEveryInstance) {
    EXPECT_TRUE(check_entropic_law(RatSampler{}, 1, 500).ok());
    EXPECT_TRUE(check_entropic_law(VectorSampler{2}, 1, 300).ok());
    EXPECT_TRUE(check_entropic_law(FdistSampler{3}, 1, 300).ok());
    EXPECT_TRUE(check_entropic_law(DominatedPairSampler{3}, 1, 300).ok());
    EXPECT_TRUE(check_entropic_law(ScaledSampler<RatSampler>{}, 1, 300).ok());
}
