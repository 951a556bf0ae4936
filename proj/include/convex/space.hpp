#pragma once

/// @file space.hpp
/// @brief The binary convex-space interface.
///
/// A point type X models a convex space when `conv(p, x, y)` is found by
/// argument-dependent lookup and X has decidable equality. `to_string(x)`
/// is also required so that law checkers can print counterexamples.
///
/// The four laws every instance must satisfy:
///   unit                 conv(1, x, y) = x
///   idempotence          conv(p, x, x) = x
///   skewed commutativity conv(1-p, x, y) = conv(p, y, x)
///   quasi-associativity  conv(p, x, conv(q, y, z)) = conv(s, conv(r, x, y), z)
/// with s = s_of(p, q) and r = r_of(p, q).

#include <concepts>
#include <string>

#include "convex/rational.hpp"

namespace convex {

template <class X>
concept ConvexSpace = std::equality_comparable<X> && std::copy_constructible<X> &&
    requires(const Prob& p, const X& x) {
        { conv(p, x, x) } -> std::same_as<X>;
        { to_string(x) } -> std::convertible_to<std::string>;
    };

/// Function object wrapping the instance's own binary operator.
struct BinaryConv {
    template <ConvexSpace X>
    X operator()(const Prob& p, const X& x, const X& y) const {
        return conv(p, x, y);
    }
};

}  // namespace convex
