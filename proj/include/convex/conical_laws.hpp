#pragma once

/// @file conical_laws.hpp
/// @brief Checkers for the conical-space laws on scaled points, the weight
/// homomorphism, the S1 embedding lemmas and the closed formula on the
/// rational line.

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "convex/conical.hpp"
#include "convex/multiary_laws.hpp"
#include "convex/report.hpp"

namespace convex {

/// Zero about one time in six, otherwise <w, x> with w > 0 drawn from small
/// rationals and x from the inner sampler.
template <class Inner>
struct ScaledSampler {
    Inner inner{};
    using Point = std::invoke_result_t<const Inner&, Gen&>;

    ScaledPoint<Point> operator()(Gen& g) const {
        if (g.chance(1, 6)) return ScaledPoint<Point>::zero();
        const Rat w(1 + static_cast<long>(g.below(12)), 1 + static_cast<long>(g.below(8)));
        return ScaledPoint<Point>::scaled(w, inner(g));
    }
};

/// The nine equational laws of a conical space.
template <class Inner>
LawReport check_conical_laws(const Inner& inner, std::uint64_t seed, std::size_t cases) {
    const ScaledSampler<Inner> sample{inner};
    using S = typename ScaledSampler<Inner>::Point;
    using P = ScaledPoint<S>;
    LawReport r;
    r.seed = seed;
    r.cases = cases;

    r.add(run_law("add-associativity", seed, cases, [&](Gen& g, Case& c) {
        const P x = sample(g), y = sample(g), z = sample(g);
        c.input("x", x);
        c.input("y", y);
        c.input("z", z);
        return c.sides(addpt(x, addpt(y, z)), addpt(addpt(x, y), z));
    }));
    r.add(run_law("add-commutativity", seed, cases, [&](Gen& g, Case& c) {
        const P x = sample(g), y = sample(g);
        c.input("x", x);
        c.input("y", y);
        return c.sides(addpt(x, y), addpt(y, x));
    }));
    r.add(run_law("scale-associativity", seed, cases, [&](Gen& g, Case& c) {
        const Rat a = g.nonneg_rat(), b = g.nonneg_rat();
        const P x = sample(g);
        c.input("c", a);
        c.input("d", b);
        c.input("x", x);
        return c.sides(scalept(a, scalept(b, x)), scalept(a * b, x));
    }));
    r.add(run_law("left-distributivity", seed, cases, [&](Gen& g, Case& c) {
        const Rat a = g.nonneg_rat(), b = g.nonneg_rat();
        const P x = sample(g);
        c.input("c", a);
        c.input("d", b);
        c.input("x", x);
        return c.sides(scalept(a + b, x), addpt(scalept(a, x), scalept(b, x)));
    }));
    r.add(run_law("right-distributivity", seed, cases, [&](Gen& g, Case& c) {
        const Rat a = g.nonneg_rat();
        const P x = sample(g), y = sample(g);
        c.input("c", a);
        c.input("x", x);
        c.input("y", y);
        return c.sides(scalept(a, addpt(x, y)), addpt(scalept(a, x), scalept(a, y)));
    }));
    r.add(run_law("add-zero", seed, cases, [&](Gen& g, Case& c) {
        const P x = sample(g);
        c.input("x", x);
        return c.sides(addpt(P::zero(), x), x);
    }));
    r.add(run_law("scale-left-zero", seed, cases, [&](Gen& g, Case& c) {
        const P x = sample(g);
        c.input("x", x);
        return c.sides(scalept(Rat(0), x), P::zero());
    }));
    r.add(run_law("scale-right-zero", seed, cases, [&](Gen& g, Case& c) {
        const Rat a = g.nonneg_rat();
        c.input("c", a);
        return c.sides(scalept(a, P::zero()), P::zero());
    }));
    r.add(run_law("scale-one", seed, cases, [&](Gen& g, Case& c) {
        const P x = sample(g);
        c.input("x", x);
        return c.sides(scalept(Rat(1), x), x);
    }));
    return r;
}

/// weight(a + b) = weight(a) + weight(b) and weight(c a) = c weight(a).
template <class Inner>
LawResult check_weight_homomorphism(const Inner& inner, std::uint64_t seed, std::size_t cases) {
    const ScaledSampler<Inner> sample{inner};
    return run_law("weight-homomorphism", seed, cases, [&](Gen& g, Case& c) {
        const auto a = sample(g), b = sample(g);
        const Rat k = g.nonneg_rat();
        c.input("a", a);
        c.input("b", b);
        c.input("c", k);
        const bool add = c.sides(weight(addpt(a, b)), weight(a) + weight(b));
        if (!add) return false;
        return c.sides(weight(scalept(k, a)), k * weight(a));
    });
}

/// s1(convn(d, x)) = sum_i d_i s1(x_i).
template <class Inner, class Op = Convn>
LawResult check_s1_convn(const Inner& inner, std::uint64_t seed, std::size_t cases,
                         MultiaryOptions opt = {}, const Op& op = {}) {
    using X = std::invoke_result_t<const Inner&, Gen&>;
    return run_law("s1-convn", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t n = g.range(1, opt.max_arity);
        const FiniteDist d = g.dist(n);
        const auto x = detail::sample_points(inner, g, n);
        c.input("d", d);
        c.input("x", x);
        return c.sides(s1(detail::apply<X>(op, d, x)), s1_sum(d, std::span<const X>(x)));
    });
}

/// s1(x <p> y) = s1(x) <p> s1(y), with the right side computed by convpt.
template <class Inner>
LawResult check_s1_conv(const Inner& inner, std::uint64_t seed, std::size_t cases) {
    using X = std::invoke_result_t<const Inner&, Gen&>;
    return run_law("s1-conv", seed, cases, [&](Gen& g, Case& c) {
        const Prob p = g.prob();
        const X x = inner(g), y = inner(g);
        c.input("p", p);
        c.input("x", x);
        c.input("y", y);
        return c.sides(s1(conv(p, x, y)), convpt(p, s1(x), s1(y)));
    });
}

/// The chain convn(e, g) = scale_r(sum e_i s1(g_i)) = sum e_i g_i on the
/// rational line.
inline LawResult check_avgn(std::uint64_t seed, std::size_t cases, MultiaryOptions opt = {}) {
    return run_law("avgn", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t n = g.range(1, opt.max_arity);
        const FiniteDist e = g.dist(n);
        std::vector<RatPoint> pts;
        std::vector<Rat> vals;
        for (std::size_t i = 0; i < n; ++i) {
            vals.push_back(g.rat());
            pts.push_back({vals.back()});
        }
        c.input("e", e);
        c.input("g", vals);
        const Rat direct = convn(e, pts).value;
        const Rat closed = avgn(e, vals);
        const Rat conical = scale_r(s1_sum(e, std::span<const RatPoint>(pts)));
        if (!c.sides(conical, closed)) return false;
        return c.sides(direct, closed);
    });
}

/// scale_r(a + b) = scale_r(a) + scale_r(b) on scaled rational points.
inline LawResult check_scale_r_additive(std::uint64_t seed, std::size_t cases) {
    const ScaledSampler<RatSampler> sample{};
    return run_law("scale-r-additive", seed, cases, [&](Gen& g, Case& c) {
        const auto a = sample(g), b = sample(g);
        c.input("a", a);
        c.input("b", b);
        return c.sides(scale_r(addpt(a, b)), scale_r(a) + scale_r(b));
    });
}

}  // namespace convex
