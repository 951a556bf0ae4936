#pragma once

/// @file conical.hpp
/// @brief Scaled points: the conical space S_X = (Q>0 x X) + {Zero} built on
/// top of a convex space X.
///
///   <r,x> + <q,y> = <r+q, x <r/(r+q)> y>,   Zero + a = a + Zero = a
///   c <q,x>       = <cq, x> if c > 0,       Zero otherwise
///
/// Addition is associative and commutative without side conditions, which
/// is what makes multiary combinations tractable: s1(convn(d, x)) is the
/// conical sum of d_i s1(x_i).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convex/convn.hpp"
#include "convex/distribution.hpp"
#include "convex/error.hpp"
#include "convex/instances.hpp"
#include "convex/rational.hpp"
#include "convex/space.hpp"

namespace convex {

template <ConvexSpace X>
class ScaledPoint {
public:
    /// Zero.
    ScaledPoint() = default;

    static ScaledPoint zero() { return {}; }

    /// <weight, point>; weight must be strictly positive.
    static ScaledPoint scaled(Rat weight, X point) {
        if (weight.sign() <= 0)
            throw error(ErrorKind::OutOfRange, "scaled weight " + weight.to_string() + " is not positive");
        return ScaledPoint(Payload{std::move(weight), std::move(point)});
    }

    bool is_zero() const noexcept { return !payload_; }

    /// 0 for Zero.
    Rat weight() const { return payload_ ? payload_->weight : Rat(0); }

    const X& point() const {
        if (!payload_) throw error(ErrorKind::ZeroPoint, "Zero carries no point");
        return payload_->point;
    }

    friend bool operator==(const ScaledPoint&, const ScaledPoint&) = default;

private:
    struct Payload {
        Rat weight;
        X point;
        friend bool operator==(const Payload&, const Payload&) = default;
    };

    explicit ScaledPoint(Payload p) : payload_(std::move(p)) {}

    std::optional<Payload> payload_;
};

template <ConvexSpace X>
std::string to_string(const ScaledPoint<X>& a) {
    if (a.is_zero()) return "Zero";
    return "<" + a.weight().to_string() + ", " + to_string(a.point()) + ">";
}

template <ConvexSpace X>
ScaledPoint<X> addpt(const ScaledPoint<X>& a, const ScaledPoint<X>& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Rat total = a.weight() + b.weight();
    return ScaledPoint<X>::scaled(total, conv(Prob(a.weight() / total), a.point(), b.point()));
}

template <ConvexSpace X>
ScaledPoint<X> scalept(const Rat& c, const ScaledPoint<X>& a) {
    if (c.sign() < 0) throw error(ErrorKind::NegativeScale, "scaling by " + c.to_string());
    if (c.is_zero() || a.is_zero()) return ScaledPoint<X>::zero();
    return ScaledPoint<X>::scaled(c * a.weight(), a.point());
}

/// x -> <1, x>.
template <ConvexSpace X>
ScaledPoint<X> s1(const X& x) {
    return ScaledPoint<X>::scaled(Rat(1), x);
}

template <ConvexSpace X>
Rat weight(const ScaledPoint<X>& a) {
    return a.weight();
}

/// The x with a = <p, x>; ZeroPoint for Zero.
template <ConvexSpace X>
const X& point_of(const ScaledPoint<X>& a) {
    return a.point();
}

/// Left fold of addpt from Zero.
template <ConvexSpace X>
ScaledPoint<X> scaled_sum(std::span<const ScaledPoint<X>> terms) {
    ScaledPoint<X> acc;
    for (const auto& t : terms) acc = addpt(acc, t);
    return acc;
}

template <ConvexSpace X>
ScaledPoint<X> scaled_sum(const std::vector<ScaledPoint<X>>& terms) {
    return scaled_sum(std::span<const ScaledPoint<X>>(terms));
}

/// p a + (1-p) b. Makes S_X itself a convex space.
template <ConvexSpace X>
ScaledPoint<X> convpt(const Prob& p, const ScaledPoint<X>& a, const ScaledPoint<X>& b) {
    return addpt(scalept(p.value(), a), scalept(complement(p).value(), b));
}

template <ConvexSpace X>
ScaledPoint<X> conv(const Prob& p, const ScaledPoint<X>& a, const ScaledPoint<X>& b) {
    return convpt(p, a, b);
}

/// p y for <p, y>, 0 for Zero.
inline Rat scale_r(const ScaledPoint<RatPoint>& a) {
    if (a.is_zero()) return Rat(0);
    return a.weight() * a.point().value;
}

/// sum_i e_i g_i, the closed form of convn on the rational line.
inline Rat avgn(const FiniteDist& e, std::span<const Rat> g) {
    if (e.arity() != g.size())
        throw error(ErrorKind::ArityMismatch, "avgn over " + std::to_string(g.size()) + " values");
    Rat s(0);
    for (std::size_t i = 0; i < g.size(); ++i) s += e[i] * g[i];
    return s;
}

/// The right-hand side of s1(convn(d, x)) = sum_i d_i s1(x_i).
template <ConvexSpace X>
ScaledPoint<X> s1_sum(const FiniteDist& d, std::span<const X> x) {
    if (d.arity() != x.size()) throw error(ErrorKind::ArityMismatch, "s1_sum arity");
    std::vector<ScaledPoint<X>> terms;
    terms.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) terms.push_back(scalept(d[i], s1(x[i])));
    return scaled_sum(terms);
}

static_assert(ConvexSpace<ScaledPoint<RatPoint>>);

}  // namespace convex
