#pragma once

/// @file multiary_laws.hpp
/// @brief Seeded checkers for the multiary axiomatizations: the standard
/// projection and barycenter laws, the partition and idempotence laws, the
/// derived map laws, permutation invariance, and the binary/multiary
/// round trips.
///
/// Every checker takes the multiary operator as a parameter (default
/// `Convn`, the recursion from the binary operator) so that alternative
/// implementations can be held to the same laws.

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "convex/convn.hpp"
#include "convex/distribution.hpp"
#include "convex/report.hpp"
#include "convex/space.hpp"

namespace convex {

struct MultiaryOptions {
    std::size_t max_arity = 6;
};

namespace detail {

template <class Sampler, class X = std::invoke_result_t<const Sampler&, Gen&>>
std::vector<X> sample_points(const Sampler& sample, Gen& g, std::size_t n) {
    std::vector<X> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.push_back(sample(g));
    return x;
}

template <class X, class Op>
X apply(const Op& op, const FiniteDist& d, const std::vector<X>& x) {
    return op(d, std::span<const X>(x));
}

}  // namespace detail

template <class Sampler, class Op = Convn>
LawResult check_projection_law(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                               MultiaryOptions opt = {}, const Op& op = {}) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("projection", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t n = g.range(1, opt.max_arity);
        const std::size_t j = g.below(n);
        const FiniteDist d = FiniteDist::point_mass(n, j);
        const auto x = detail::sample_points(sample, g, n);
        c.input("d", d);
        c.input("x", x);
        c.special = j == 0;
        return c.sides(detail::apply<X>(op, d, x), x[j]);
    });
}

template <class Sampler, class Op = Convn>
LawResult check_barycenter_law(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                               MultiaryOptions opt = {}, const Op& op = {}) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("barycenter", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t n = g.range(1, opt.max_arity), m = g.range(1, opt.max_arity);
        const FiniteDist d = g.dist(n);
        std::vector<FiniteDist> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(g.dist(m));
        const StochasticMatrix e(std::move(rows));
        const auto x = detail::sample_points(sample, g, m);
        c.input("d", d);
        c.input("e", e);
        c.input("x", x);
        std::vector<X> inner;
        for (std::size_t i = 0; i < n; ++i) inner.push_back(detail::apply<X>(op, e.row(i), x));
        return c.sides(detail::apply<X>(op, d, inner), detail::apply<X>(op, mix_rows(d, e), x));
    });
}

/// Partition law in the K/delta form. Roughly a third of the cases force a
/// block with zero mass; those are counted in `special`.
template <class Sampler, class Op = Convn>
LawResult check_partition_law(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                              MultiaryOptions opt = {}, const Op& op = {}) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("partition", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t n = g.range(1, opt.max_arity), m = g.range(1, opt.max_arity);
        const FiniteDist lam = g.dist(n);
        std::vector<std::size_t> table(n);
        for (auto& v : table) v = g.below(m);
        if (m >= 2 && g.chance(1, 3)) {
            const std::size_t empty = g.below(m);
            for (auto& v : table)
                if (v == empty) v = (v + 1 + g.below(m - 1)) % m;
        }
        const PartitionMap k(std::move(table), m);
        const auto x = detail::sample_points(sample, g, n);
        c.input("lambda", lam);
        c.input("K", k);
        c.input("x", x);
        const FiniteDist rho = rho_dist(lam, k);
        std::vector<X> blocks;
        for (std::size_t j = 0; j < m; ++j) {
            if (rho[j].is_zero()) c.special = true;
            blocks.push_back(detail::apply<X>(op, partition_inner(j, lam, k), x));
        }
        return c.sides(detail::apply<X>(op, lam, x), detail::apply<X>(op, rho, blocks));
    });
}

/// Points equal to A on the support of lambda, arbitrary elsewhere.
template <class Sampler, class Op = Convn>
LawResult check_idem_law(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                         MultiaryOptions opt = {}, const Op& op = {}) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("idempotence-multiary", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t n = g.range(1, opt.max_arity);
        const FiniteDist lam = g.dist(n);
        const X a = sample(g);
        std::vector<X> x;
        for (std::size_t i = 0; i < n; ++i) {
            if (lam[i].is_zero()) {
                x.push_back(sample(g));
                c.special = true;
            } else {
                x.push_back(a);
            }
        }
        c.input("lambda", lam);
        c.input("A", a);
        c.input("x", x);
        return c.sides(detail::apply<X>(op, lam, x), a);
    });
}

namespace detail {

template <class X, class Op>
bool map_case(const Op& op, Case& c, const FiniteDist& d, const IndexMap& u,
              const std::vector<X>& gpts) {
    c.input("d", d);
    c.input("u", u);
    c.input("g", gpts);
    std::vector<X> pulled;
    for (std::size_t i = 0; i < u.source(); ++i) pulled.push_back(gpts[u(i)]);
    return c.sides(apply<X>(op, d, pulled), apply<X>(op, pushforward(d, u), gpts));
}

}  // namespace detail

template <class Sampler, class Op = Convn>
LawResult check_map_law(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                        MultiaryOptions opt = {}, const Op& op = {}) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("map", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t m = g.range(1, opt.max_arity), n = g.range(1, opt.max_arity);
        const FiniteDist d = g.dist(m);
        const IndexMap u = g.index_map(m, n);
        c.special = !u.injective();
        return detail::map_case<X>(op, c, d, u, detail::sample_points(sample, g, n));
    });
}

template <class Sampler, class Op = Convn>
LawResult check_inj_map_law(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                            MultiaryOptions opt = {}, const Op& op = {}) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("injective-map", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t n = g.range(1, opt.max_arity);
        const std::size_t m = g.range(1, n);
        const FiniteDist d = g.dist(m);
        const IndexMap u = g.injection(m, n);
        c.special = m < n;
        return detail::map_case<X>(op, c, d, u, detail::sample_points(sample, g, n));
    });
}

/// Barycenter law restricted to matrices whose rows have pairwise disjoint
/// supports.
template <class Sampler, class Op = Convn>
LawResult check_partition_barycenter_law(const Sampler& sample, std::uint64_t seed,
                                         std::size_t cases, MultiaryOptions opt = {},
                                         const Op& op = {}) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("partition-barycenter", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t m = g.range(1, opt.max_arity);
        const std::size_t n = g.range(1, m);
        const auto cols = g.shuffled(m);
        std::vector<std::vector<std::size_t>> owned(n);
        for (std::size_t k = 0; k < m; ++k) {
            if (k < n) owned[k].push_back(cols[k]);
            else if (g.chance(3, 4)) owned[g.below(n)].push_back(cols[k]);
        }
        std::vector<FiniteDist> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(g.dist_on(m, owned[i]));
        const StochasticMatrix e(std::move(rows));
        const FiniteDist d = g.dist(n);
        const auto x = detail::sample_points(sample, g, m);
        c.input("d", d);
        c.input("e", e);
        c.input("x", x);
        std::vector<X> inner;
        for (std::size_t i = 0; i < n; ++i) inner.push_back(detail::apply<X>(op, e.row(i), x));
        return c.sides(detail::apply<X>(op, d, inner), detail::apply<X>(op, mix_rows(d, e), x));
    });
}

template <class Sampler, class Op = Convn>
LawResult check_perm_law(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                         MultiaryOptions opt = {}, const Op& op = {}) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("permutation", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t n = g.range(1, opt.max_arity);
        const FiniteDist d = g.dist(n);
        const Permutation s = g.permutation(n);
        const auto x = detail::sample_points(sample, g, n);
        std::vector<X> xs;
        for (std::size_t i = 0; i < n; ++i) xs.push_back(x[s(i)]);
        c.input("d", d);
        c.input("s", s.as_map());
        c.input("x", x);
        return c.sides(detail::apply<X>(op, permute(d, s), xs), detail::apply<X>(op, d, x));
    });
}

/// binconv_from_convn(p, a, b) = conv(p, a, b).
template <class Sampler, class Op = Convn>
LawResult check_roundtrip_binary(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                                 const Op& op = {}) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("roundtrip-binary", seed, cases, [&](Gen& g, Case& c) {
        const Prob p = g.prob();
        const X a = sample(g), b = sample(g);
        c.input("p", p);
        c.input("a", a);
        c.input("b", b);
        return c.sides(binconv_from_convn(p, a, b, op), conv(p, a, b));
    });
}

/// The multiary operator re-derived through binconv_from_convn equals `op`.
template <class Sampler, class Op = Convn>
LawResult check_roundtrip_multiary(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                                   MultiaryOptions opt = {}, const Op& op = {}) {
    using X = std::invoke_result_t<const Sampler&, Gen&>;
    return run_law("roundtrip-multiary", seed, cases, [&](Gen& g, Case& c) {
        const std::size_t n = g.range(1, opt.max_arity);
        const FiniteDist d = g.dist(n);
        const auto x = detail::sample_points(sample, g, n);
        c.input("d", d);
        c.input("x", x);
        return c.sides(detail::apply<X>(RederivedConvn{}, d, x), detail::apply<X>(op, d, x));
    });
}

template <class Sampler, class Op = Convn>
LawReport check_roundtrips(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                           MultiaryOptions opt = {}, const Op& op = {}) {
    LawReport r;
    r.seed = seed;
    r.cases = cases;
    r.add(check_roundtrip_binary(sample, seed, cases, op));
    r.add(check_roundtrip_multiary(sample, seed, cases, opt, op));
    return r;
}

/// Every multiary law above, in a fixed order.
template <class Sampler, class Op = Convn>
LawReport check_multiary_laws(const Sampler& sample, std::uint64_t seed, std::size_t cases,
                              MultiaryOptions opt = {}, const Op& op = {}) {
    LawReport r;
    r.seed = seed;
    r.cases = cases;
    r.add(check_projection_law(sample, seed, cases, opt, op));
    r.add(check_barycenter_law(sample, seed, cases, opt, op));
    r.add(check_partition_law(sample, seed, cases, opt, op));
    r.add(check_idem_law(sample, seed, cases, opt, op));
    r.add(check_partition_barycenter_law(sample, seed, cases, opt, op));
    r.add(check_inj_map_law(sample, seed, cases, opt, op));
    r.add(check_map_law(sample, seed, cases, opt, op));
    r.add(check_perm_law(sample, seed, cases, opt, op));
    r.append(check_roundtrips(sample, seed, cases, opt, op));
    return r;
}

}  // namespace convex
