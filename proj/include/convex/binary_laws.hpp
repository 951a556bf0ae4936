#pragma once

/// @file binary_laws.hpp
/// @brief Seeded checkers for the four binary convex-space laws and the
/// entropic identity.

#include <cstddef>
#include <cstdint>
#include <type_traits>

#include "convex/rational.hpp"
#include "convex/report.hpp"
#include "convex/space.hpp"

namespace convex {

template <ConvexSpace X, class Sampler>
LawResult check_unit_law(const Sampler& sample, std::uint64_t seed, std::size_t cases) {
    return run_law("unit", seed, cases, [&](Gen& g, Case& c) {
        const X x = sample(g), y = sample(g);
        c.input("x", x);
        c.input("y", y);
        return c.sides(conv(Prob::one(), x, y), x);
    });
}

template <ConvexSpace X, class Sampler>
LawResult check_idempotence_law(const Sampler& sample, std::uint64_t seed, std::size_t cases) {
    return run_law("idempotence", seed, cases, [&](Gen& g, Case& c) {
        const Prob p = g.prob();
        const X x = sample(g);
        c.input("p", p);
        c.input("x", x);
        return c.sides(conv(p, x, x), x);
    });
}

template <ConvexSpace X, class Sampler>
LawResult check_skewed_commutativity_law(const Sampler& sample, std::uint64_t seed,
                                         std::size_t cases) {
    return run_law("skewed-commutativity", seed, cases, [&](Gen& g, Case& c) {
        const Prob p = g.prob();
        const X x = sample(g), y = sample(g);
        c.input("p", p);
        c.input("x", x);
        c.input("y", y);
        return c.sides(conv(complement(p), x, y), conv(p, y, x));
    });
}

template <ConvexSpace X, class Sampler>
LawResult check_quasi_associativity_law(const Sampler& sample, std::uint64_t seed,
                                        std::size_t cases) {
    return run_law("quasi-associativity", seed, cases, [&](Gen& g, Case& c) {
        const Prob p = g.prob(), q = g.prob();
        const X x = sample(g), y = sample(g), z = sample(g);
        c.input("p", p);
        c.input("q", q);
        c.input("x", x);
        c.input("y", y);
        c.input("z", z);
        c.special = s_of(p, q).value().is_zero();
        return c.sides(conv(p, x, conv(q, y, z)), conv(s_of(p, q), conv(r_of(p, q), x, y), z));
    });
}

/// All four binary axioms. Each law draws from its own stream of `seed`.
template <class Sampler, ConvexSpace X = std::invoke_result_t<const Sampler&, Gen&>>
LawReport check_binary_laws(const Sampler& sample, std::uint64_t seed, std::size_t cases) {
    LawReport r;
    r.seed = seed;
    r.cases = cases;
    r.add(check_unit_law<X>(sample, seed, cases));
    r.add(check_idempotence_law<X>(sample, seed, cases));
    r.add(check_skewed_commutativity_law<X>(sample, seed, cases));
    r.add(check_quasi_associativity_law<X>(sample, seed, cases));
    return r;
}

/// (a <q> b) <p> (c <q> d) = (a <p> c) <q> (b <p> d).
template <class Sampler, ConvexSpace X = std::invoke_result_t<const Sampler&, Gen&>>
LawResult check_entropic_law(const Sampler& sample, std::uint64_t seed, std::size_t cases) {
    return run_law("entropic", seed, cases, [&](Gen& g, Case& c) {
        const Prob p = g.prob(), q = g.prob();
        const X a = sample(g), b = sample(g), cc = sample(g), d = sample(g);
        c.input("p", p);
        c.input("q", q);
        c.input("a", a);
        c.input("b", b);
        c.input("c", cc);
        c.input("d", d);
        return c.sides(conv(p, conv(q, a, b), conv(q, cc, d)),
                       conv(q, conv(p, a, cc), conv(p, b, d)));
    });
}

}  // namespace convex
