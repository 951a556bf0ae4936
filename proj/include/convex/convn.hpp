#pragma once

/// @file convn.hpp
/// @brief The multiary convex combination derived from the binary operator,
/// and the binary operator recovered from a multiary one.
///
/// convn(d, x) = x_0                               if d_0 = 1 or n = 1
///             = x_0 <d_0> convn(d', x_1..x_{n-1}) otherwise
/// with d'_i = d_{i+1} / (1 - d_0).

#include <cstddef>
#include <span>
#include <vector>

#include "convex/distribution.hpp"
#include "convex/error.hpp"
#include "convex/rational.hpp"
#include "convex/space.hpp"

namespace convex {

namespace detail {

inline void check_arity(const FiniteDist& d, std::size_t points) {
    if (d.arity() != points)
        throw error(ErrorKind::ArityMismatch, "distribution of arity " + std::to_string(d.arity()) +
                                                  " over " + std::to_string(points) + " points");
}

inline FiniteDist tail_dist(const FiniteDist& d) {
    const Rat rest = Rat(1) - d[0];
    std::vector<Rat> w(d.arity() - 1);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = d[i + 1] / rest;
    return FiniteDist(std::move(w));
}

}  // namespace detail

/// Recursion over any binary operator `op(p, a, b)`.
template <class X, class BinOp>
X convn_via(const BinOp& op, const FiniteDist& d, std::span<const X> x) {
    detail::check_arity(d, x.size());
    if (d[0] == Rat(1) || x.size() == 1) return x[0];
    return op(Prob(d[0]), x[0], convn_via<X>(op, detail::tail_dist(d), x.subspan(1)));
}

template <ConvexSpace X>
X convn(const FiniteDist& d, std::span<const X> x) {
    return convn_via<X>(BinaryConv{}, d, x);
}

template <ConvexSpace X>
X convn(const FiniteDist& d, const std::vector<X>& x) {
    return convn<X>(d, std::span<const X>(x));
}

/// Multiary operators as function objects, so law checkers can be pointed
/// at alternative (or mutant) implementations.
struct Convn {
    template <ConvexSpace X>
    X operator()(const FiniteDist& d, std::span<const X> x) const {
        return convn<X>(d, x);
    }
};

/// x_0 <p> x_1 computed as a multiary combination with weights (p, 1-p).
template <ConvexSpace X, class Multiary = Convn>
X binconv_from_convn(const Prob& p, const X& x0, const X& x1, const Multiary& op = {}) {
    const std::vector<X> pts{x0, x1};
    return op(FiniteDist::binary(p), std::span<const X>(pts));
}

/// The multiary operator re-derived from binconv_from_convn. Extensionally
/// equal to Convn.
struct RederivedConvn {
    template <ConvexSpace X>
    X operator()(const FiniteDist& d, std::span<const X> x) const {
        auto bin = [](const Prob& p, const X& a, const X& b) { return binconv_from_convn(p, a, b); };
        return convn_via<X>(bin, d, x);
    }
};

/// Mutant: drops the d_0 = 1 guard, so a point mass in front of a longer
/// list divides by 1 - d_0 = 0.
struct UnguardedConvn {
    template <ConvexSpace X>
    X operator()(const FiniteDist& d, std::span<const X> x) const {
        detail::check_arity(d, x.size());
        if (x.size() == 1) return x[0];
        return conv(Prob(d[0]), x[0], (*this)(detail::tail_dist(d), x.subspan(1)));
    }
};

/// Variant that skips the d_0 = 1 shortcut but substitutes a uniform tail
/// instead of dividing by zero. The tail is absorbed by conv(1, x_0, _).
struct UniformTailConvn {
    template <ConvexSpace X>
    X operator()(const FiniteDist& d, std::span<const X> x) const {
        detail::check_arity(d, x.size());
        if (x.size() == 1) return x[0];
        const FiniteDist tail =
            d[0] == Rat(1) ? FiniteDist::uniform(x.size() - 1) : detail::tail_dist(d);
        return conv(Prob(d[0]), x[0], (*this)(tail, x.subspan(1)));
    }
};

}  // namespace convex
