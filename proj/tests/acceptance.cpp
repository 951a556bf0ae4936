// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "convex/convex.hpp"
#include "oracles.hpp"

using namespace convex;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kCases = 500;

struct Outcome {
    bool ok = true;
    std::string detail;

    void need(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void need(const LawResult& r, const std::string& where) {
        std::string what = where + ": " + r.law + " " + std::to_string(r.passed) + "/" +
                           std::to_string(r.cases);
        if (r.counterexample) what += " (" + r.counterexample->lhs + " vs " + r.counterexample->rhs + ")";
        need(r.ok(), what);
    }
    void need(const LawReport& r, const std::string& where) {
        for (const auto& l : r.laws) need(l, where);
    }
};

// Calls f(name, sampler) for each point instance.
template <class F>
void for_each_instance(F&& f) {
    f("rat", RatSampler{});
    f("vec1", VectorSampler{1});
    f("vec2", VectorSampler{2});
    f("vec3", VectorSampler{3});
    f("fdist2", FdistSampler{2});
    f("fdist3", FdistSampler{3});
    f("fdist4", FdistSampler{4});
    f("dompair", DominatedPairSampler{3});
    f("scaled-rat", ScaledSampler<RatSampler>{});
}

const MultiaryOptions kOpt{6};

Outcome binary_laws() {
    Outcome o;
    for_each_instance([&](const char* name, const auto& s) {
        const auto r = check_binary_laws(s, kSeed, kCases);
        o.need(r.laws.size() == 4, std::string(name) + ": expected 4 binary laws");
        o.need(r, name);
    });
    return o;
}

Outcome projection_barycenter() {
    Outcome o;
    for_each_instance([&](const char* name, const auto& s) {
        o.need(check_projection_law(s, kSeed, kCases, kOpt), name);
        o.need(check_barycenter_law(s, kSeed, kCases, kOpt), name);
    });
    // convn against an independent weighted sum
    Gen g(kSeed, "acceptance-oracle");
    for (std::size_t t = 0; t < kCases && o.ok; ++t) {
        const std::size_t n = g.range(1, 6), dim = g.range(1, 3);
        std::vector<RatVector> x;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rat> c;
            for (std::size_t k = 0; k < dim; ++k) c.push_back(g.rat());
            x.emplace_back(c);
        }
        const FiniteDist d = g.dist(n);
        o.need(convn(d, x) == oracle::weighted_sum(oracle::weights(d), x),
               "convn differs from the weighted sum at case " + std::to_string(t));
    }
    return o;
}

Outcome partition_idem_derived() {
    Outcome o;
    for_each_instance([&](const char* name, const auto& s) {
        const auto part = check_partition_law(s, kSeed, kCases, kOpt);
        o.need(part, name);
        o.need(part.special >= 50, std::string(name) + ": only " + std::to_string(part.special) +
                                       " empty-block cases");
        o.need(check_idem_law(s, kSeed, kCases, kOpt), name);
        o.need(check_partition_barycenter_law(s, kSeed, kCases, kOpt), name);
        o.need(check_inj_map_law(s, kSeed, kCases, kOpt), name);
        o.need(check_map_law(s, kSeed, kCases, kOpt), name);
    });
    return o;
}

Outcome roundtrips() {
    Outcome o;
    for_each_instance([&](const char* name, const auto& s) { o.need(check_roundtrips(s, kSeed, kCases, kOpt), name); });
    return o;
}

Outcome conical() {
    Outcome o;
    for_each_instance([&](const char* name, const auto& s) {
        using X = std::invoke_result_t<decltype(s), Gen&>;
        if constexpr (!std::is_same_v<X, ScaledPoint<RatPoint>>) {
            const auto r = check_conical_laws(s, kSeed, kCases);
            o.need(r.laws.size() == 9, std::string(name) + ": expected 9 conical laws");
            o.need(r, name);
            o.need(check_weight_homomorphism(s, kSeed, kCases), name);
            o.need(check_s1_conv(s, kSeed, kCases), name);
            o.need(check_s1_convn(s, kSeed, kCases, kOpt), name);
        }
    });
    // weights (1/2, 1/4, 1/4) over three points of Q^2
    const RatVector x({0, 0}), y({4, 0}), z({0, 4});
    const FiniteDist d({Rat(1, 2), Rat(1, 4), Rat(1, 4)});
    const RatVector w = convn(d, std::vector<RatVector>{x, y, z});
    const auto sum = scaled_sum(std::vector<ScaledPoint<RatVector>>{
        scalept(Rat(1, 2), s1(x)), scalept(Rat(1, 4), s1(y)), scalept(Rat(1, 4), s1(z))});
    o.need(w == RatVector({1, 1}) && s1(w) == sum, "three-point example: s1(convn) != scaled sum");
    Gen g(kSeed, "acceptance-three-point");
    for (std::size_t t = 0; t < kCases && o.ok; ++t) {
        const std::vector<RatPoint> pts{{g.rat()}, {g.rat()}, {g.rat()}};
        const auto lhs = s1(convn(d, pts));
        const auto rhs = scaled_sum(std::vector<ScaledPoint<RatPoint>>{
            scalept(Rat(1, 2), s1(pts[0])), scalept(Rat(1, 4), s1(pts[1])), scalept(Rat(1, 4), s1(pts[2]))});
        o.need(lhs == rhs, "three-point example fails at case " + std::to_string(t));
    }
    return o;
}

Outcome perm_entropic() {
    Outcome o;
    for_each_instance([&](const char* name, const auto& s) {
        o.need(check_perm_law(s, kSeed, kCases, kOpt), name);
        o.need(check_entropic_law(s, kSeed, kCases), name);
    });
    return o;
}

Outcome avgn_chain() {
    Outcome o;
    o.need(check_avgn(kSeed, kCases, kOpt), "rat");
    o.need(check_scale_r_additive(kSeed, kCases), "rat");
    return o;
}

Outcome hull_split() {
    Outcome o;
    for_each_instance([&](const char* name, const auto& s) {
        const auto r = check_hull_union_split(s, kSeed, kCases, 8);
        o.need(r, name);
        o.need(r.special >= 50, std::string(name) + ": only " + std::to_string(r.special) +
                                    " all-X/all-Y cases");
    });
    return o;
}

Outcome log_concavity() {
    Outcome o;
    const Interval dom(std::ldexp(1.0, -20), std::ldexp(1.0, 20));
    const auto& log = find_function("log_ext");
    o.need(check_convex_in(log, dom, kSeed, 10000, Tolerance(1e-9), Curvature::concave), "log_ext");
    o.need(second_derivative_test(log, dom, 1000, Tolerance(1e-9), Curvature::concave, Spacing::log),
           "log_ext");
    return o;
}

Outcome divergence() {
    Outcome o;
    Gen g(kSeed, "acceptance-div-self");
    for (int t = 0; t < 1000 && o.ok; ++t) {
        const FiniteDist p = g.dist(g.range(1, 4));
        o.need(std::fabs(div(p, p)) <= 1e-12, "D(P||P) = " + real_to_string(div(p, p)));
    }
    for (std::size_t n = 1; n <= 4; ++n)
        o.need(check_div_nonnegative(kSeed, 10000, n, Tolerance(1e-12)), "alphabet " + std::to_string(n));
    for (std::size_t n = 2; n <= 4; ++n)
        o.need(check_div_convexity(kSeed, 10000, n, Tolerance(1e-9)), "alphabet " + std::to_string(n));
    const double hand = div(FiniteDist({1, 0}), FiniteDist({Rat(1, 2), Rat(1, 2)}));
    o.need(std::fabs(hand - 1.0) <= 1e-12, "D((1,0)||(1/2,1/2)) = " + real_to_string(hand));
    return o;
}

Outcome mutants() {
    Outcome o;
    o.need(!check_binary_laws(BrokenSampler{}, kSeed, kCases).ok(), "broken conv not flagged");
    const auto unguarded = check_projection_law(RatSampler{}, kSeed, kCases, kOpt, UnguardedConvn{});
    o.need(!unguarded.ok(), "unguarded convn not flagged");
    o.need(!check_convex_in(find_function("sin"), Interval(-10, 10), kSeed, kCases).ok(),
           "sin not flagged as non-convex");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"binary laws on every instance", binary_laws},
        {"projection and barycenter laws", projection_barycenter},
        {"partition, idempotence and derived laws", partition_idem_derived},
        {"binary/multiary roundtrips", roundtrips},
        {"conical laws and scaled embedding", conical},
        {"permutation and entropic laws", perm_entropic},
        {"avgn chain", avgn_chain},
        {"hull union split", hull_split},
        {"log concavity", log_concavity},
        {"divergence nonnegativity and convexity", divergence},
        {"mutants are flagged", mutants},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %zu: %s%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.ok ? "" : " -- ", o.detail.c_str());
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
