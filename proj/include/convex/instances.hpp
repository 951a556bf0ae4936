#pragma once

/// @file instances.hpp
/// @brief Concrete convex spaces: the rational line, rational vectors,
/// finite distributions (see distribution.hpp), dominated pairs, and a
/// deliberately broken instance used to show that the checkers bite.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "convex/distribution.hpp"
#include "convex/error.hpp"
#include "convex/rational.hpp"
#include "convex/space.hpp"

namespace convex {

/// A point of the rational line; conv(p, a, b) = p a + (1-p) b.
struct RatPoint {
    Rat value;

    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

inline RatPoint conv(const Prob& p, const RatPoint& a, const RatPoint& b) {
    return {p.value() * a.value + complement(p).value() * b.value};
}

inline std::string to_string(const RatPoint& a) { return a.value.to_string(); }

/// A point of Q^dim; conv acts coordinatewise.
class RatVector {
public:
    explicit RatVector(std::vector<Rat> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw error(ErrorKind::DimensionMismatch, "dimension must be positive");
    }

    std::size_t dim() const noexcept { return coords_.size(); }
    const Rat& operator[](std::size_t i) const { return coords_.at(i); }
    const std::vector<Rat>& coords() const noexcept { return coords_; }

    friend bool operator==(const RatVector&, const RatVector&) = default;

private:
    std::vector<Rat> coords_;
};

inline RatVector conv(const Prob& p, const RatVector& a, const RatVector& b) {
    if (a.dim() != b.dim())
        throw error(ErrorKind::DimensionMismatch,
                    "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    const Rat q = complement(p).value();
    std::vector<Rat> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.value() * a[i] + q * b[i];
    return RatVector(std::move(c));
}

inline std::string to_string(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

/// A pair (P, Q) with Q dominating P. Rejected at construction otherwise.
class DominatedPair {
public:
    DominatedPair(FiniteDist p, FiniteDist q) : p_(std::move(p)), q_(std::move(q)) {
        if (!dominates(q_, p_))
            throw error(ErrorKind::NotDominated, to_string(q_) + " does not dominate " + to_string(p_));
    }

    const FiniteDist& p() const noexcept { return p_; }
    const FiniteDist& q() const noexcept { return q_; }

    friend bool operator==(const DominatedPair&, const DominatedPair&) = default;

private:
    FiniteDist p_;
    FiniteDist q_;
};

/// (P1 <p> P2, Q1 <p> Q2). The constructor re-checks dominance.
inline DominatedPair conv(const Prob& p, const DominatedPair& a, const DominatedPair& b) {
    return {conv(p, a.p(), b.p()), conv(p, a.q(), b.q())};
}

inline std::string to_string(const DominatedPair& a) {
    return to_string(a.p()) + " << " + to_string(a.q());
}

/// Mutant: conv(p, x, y) = x. Unit and idempotence still hold; skewed
/// commutativity does not.
struct BrokenPoint {
    Rat value;

    friend bool operator==(const BrokenPoint&, const BrokenPoint&) = default;
};

inline BrokenPoint conv(const Prob&, const BrokenPoint& a, const BrokenPoint&) { return a; }

inline std::string to_string(const BrokenPoint& a) { return a.value.to_string(); }

static_assert(ConvexSpace<RatPoint>);
static_assert(ConvexSpace<RatVector>);
static_assert(ConvexSpace<FiniteDist>);
static_assert(ConvexSpace<DominatedPair>);
static_assert(ConvexSpace<BrokenPoint>);

}  // namespace convex
