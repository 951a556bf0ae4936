#pragma once

/// @file hull.hpp
/// @brief Convex sets and convex hulls represented by explicit witnesses.
///
/// A member of hull(S) is the value of a finite combination of generators
/// taken from S; a HullWitness carries that combination. There is no
/// decision procedure for membership in the hull of an abstract set.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "convex/convn.hpp"
#include "convex/distribution.hpp"
#include "convex/error.hpp"
#include "convex/report.hpp"
#include "convex/space.hpp"

namespace convex {

template <ConvexSpace X>
struct HullWitness {
    FiniteDist weights;
    std::vector<X> generators;

    HullWitness(FiniteDist d, std::vector<X> g) : weights(std::move(d)), generators(std::move(g)) {
        if (weights.arity() != generators.size())
            throw error(ErrorKind::ArityMismatch,
                        "witness has " + std::to_string(weights.arity()) + " weights and " +
                            std::to_string(generators.size()) + " generators");
    }

    /// The single-generator witness for x.
    static HullWitness trivial(X x) { return HullWitness(FiniteDist::point_mass(1, 0), {std::move(x)}); }

    friend bool operator==(const HullWitness&, const HullWitness&) = default;
};

template <ConvexSpace X>
std::string to_string(const HullWitness<X>& w) {
    std::string s = to_string(w.weights) + " over [";
    for (std::size_t i = 0; i < w.generators.size(); ++i) {
        if (i) s += ", ";
        s += to_string(w.generators[i]);
    }
    return s + "]";
}

template <ConvexSpace X>
X hull_eval(const HullWitness<X>& w) {
    return convn(w.weights, w.generators);
}

/// A witness for x <p> y built by concatenating the generator lists of the
/// two witnesses with weights scaled by p and 1-p.
template <ConvexSpace X>
HullWitness<X> mix_witnesses(const Prob& p, const HullWitness<X>& a, const HullWitness<X>& b) {
    std::vector<Rat> w;
    std::vector<X> g;
    for (std::size_t i = 0; i < a.generators.size(); ++i) {
        w.push_back(p.value() * a.weights[i]);
        g.push_back(a.generators[i]);
    }
    const Rat q = complement(p).value();
    for (std::size_t i = 0; i < b.generators.size(); ++i) {
        w.push_back(q * b.weights[i]);
        g.push_back(b.generators[i]);
    }
    return HullWitness<X>(FiniteDist(std::move(w)), std::move(g));
}

template <ConvexSpace X>
struct ConvexSetSpec {
    std::string name;
    std::function<bool(const X&)> contains;
    /// Must only produce members.
    std::function<X(Gen&)> sample;
};

/// Samples p, x, y with x, y in the set and checks that x <p> y is too.
template <ConvexSpace X>
LawResult check_convex_set(const ConvexSetSpec<X>& set, std::uint64_t seed, std::size_t cases) {
    return run_law("convex-set:" + set.name, seed, cases, [&](Gen& g, Case& c) {
        const Prob p = g.prob();
        const X x = set.sample(g), y = set.sample(g);
        c.input("p", p);
        c.input("x", x);
        c.input("y", y);
        const X z = conv(p, x, y);
        c.lhs = to_string(z);
        c.rhs = "member of " + set.name;
        return set.contains(z);
    });
}

template <ConvexSpace X>
struct HullSplit {
    HullWitness<X> x;
    HullWitness<X> y;
    Prob p;
};

namespace detail {

template <ConvexSpace X>
HullWitness<X> block_witness(const HullWitness<X>& z, const std::vector<std::size_t>& idx,
                             const Rat& mass, const X& fallback) {
    if (mass.is_zero() || idx.empty()) return HullWitness<X>::trivial(fallback);
    std::vector<Rat> w;
    std::vector<X> g;
    for (auto i : idx) {
        w.push_back(z.weights[i] / mass);
        g.push_back(z.generators[i]);
    }
    return HullWitness<X>(FiniteDist(std::move(w)), std::move(g));
}

template <ConvexSpace X>
HullSplit<X> split_by_tags(const HullWitness<X>& z, const std::vector<bool>& in_x,
                           const X& default_x, const X& default_y) {
    std::vector<std::size_t> xs, ys;
    Rat mass(0);
    for (std::size_t i = 0; i < in_x.size(); ++i) {
        if (in_x[i]) {
            xs.push_back(i);
            mass += z.weights[i];
        } else {
            ys.push_back(i);
        }
    }
    const Prob p(mass);
    return {block_witness(z, xs, mass, default_x),
            block_witness(z, ys, complement(p).value(), default_y), p};
}

}  // namespace detail

/// Splits a witness over generators of X u Y into x in hull(X), y in hull(Y)
/// and p with hull_eval(z) = hull_eval(x) <p> hull_eval(y). Generators for
/// which `in_x` is false are taken to lie in Y. The defaults stand in for a
/// block of zero mass.
template <ConvexSpace X>
HullSplit<X> hull_union_split(const HullWitness<X>& z, const std::function<bool(const X&)>& in_x,
                              const X& default_x, const X& default_y) {
    std::vector<bool> tag;
    for (const auto& g : z.generators) tag.push_back(in_x(g));
    return detail::split_by_tags(z, tag, default_x, default_y);
}

/// Index-set variant: generator i is in X iff i is listed in `x_indices`.
template <ConvexSpace X>
HullSplit<X> hull_union_split_by_index(const HullWitness<X>& z,
                                       std::span<const std::size_t> x_indices,
                                       const X& default_x, const X& default_y) {
    std::vector<bool> tag(z.generators.size(), false);
    for (auto i : x_indices) {
        if (i >= tag.size())
            throw error(ErrorKind::ArityMismatch, "X index " + std::to_string(i) + " out of range");
        tag[i] = true;
    }
    return detail::split_by_tags(z, tag, default_x, default_y);
}

/// Random witnesses with random X-tagging; checks the exact reconstruction
/// conv(p, hull_eval(x), hull_eval(y)) = hull_eval(z) and that each part is
/// built only from its own generators. All-X and all-Y taggings are forced
/// in about a fifth of the cases and counted in `special`.
template <class Sampler>
LawResult check_hull_union_split(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                                 std::size_t max_arity = 8) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("hull-union-split", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t n = g.range(1, max_arity);
        std::vector<X> gens;
        for (std::size_t i = 0; i < n; ++i) gens.push_back(sample(g));
        const HullWitness<X> z(g.dist(n), gens);
        std::vector<std::size_t> xi;
        const auto mode = g.below(10);
        for (std::size_t i = 0; i < n; ++i)
            if (mode == 0 || (mode != 1 && g.chance(1, 2))) xi.push_back(i);
        const X dx = sample(g), dy = sample(g);
        c.input("z", z);
        c.input("x_indices", xi);
        c.input("default_x", dx);
        c.input("default_y", dy);
        c.special = xi.empty() || xi.size() == n;
        const auto split = hull_union_split_by_index(z, std::span<const std::size_t>(xi), dx, dy);
        c.note = "p = " + split.p.value().to_string();

        std::vector<bool> tag(n, false);
        for (auto i : xi) tag[i] = true;
        auto drawn_from = [&](const HullWitness<X>& w, bool want_x, const X& fallback) {
            if (w.generators.size() == 1 && w.generators[0] == fallback) return true;
            for (const auto& gen : w.generators) {
                bool found = false;
                for (std::size_t i = 0; i < n && !found; ++i)
                    found = tag[i] == want_x && gens[i] == gen;
                if (!found) return false;
            }
            return true;
        };
        if (!drawn_from(split.x, true, dx) || !drawn_from(split.y, false, dy)) {
            c.note += "; a part uses generators from the other block";
            return false;
        }
        return c.sides(conv(split.p, hull_eval(split.x), hull_eval(split.y)), hull_eval(z));
    });
}

}  // namespace convex
