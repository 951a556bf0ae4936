#pragma once

/// @file random.hpp
/// @brief Seeded generation of probabilities, distributions and points.
///
/// Everything is driven by std::mt19937_64 with a portable bounded draw, so
/// a seed reproduces the same cases on every platform. Probabilities and
/// distribution weights have denominators at most 64; boundary values
/// (0, 1, point masses, zero weights) are drawn on purpose.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string_view>
#include <vector>

#include "convex/distribution.hpp"
#include "convex/instances.hpp"
#include "convex/rational.hpp"

namespace convex {

constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
    std::uint64_t h = 14695981039346656037ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    /// Independent stream for a named law under a common seed.
    Gen(std::uint64_t seed, std::string_view stream) : eng_(seed ^ fnv1a(stream)) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do v = eng_();
        while (v >= limit);
        return v % n;
    }

    /// Uniform in [lo, hi].
    std::size_t range(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// Uniform real in [0, 1).
    double unit_real() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    Rat rat(long max_abs_num = 20, long max_den = 12) {
        const long num = static_cast<long>(below(2 * max_abs_num + 1)) - max_abs_num;
        const long den = 1 + static_cast<long>(below(max_den));
        return Rat(num, den);
    }

    Rat nonneg_rat(long max_num = 8, long max_den = 8) {
        if (chance(1, 8)) return Rat(0);
        if (chance(1, 8)) return Rat(1);
        return Rat(static_cast<long>(below(max_num + 1)), 1 + static_cast<long>(below(max_den)));
    }

    Prob prob(long max_den = 64) {
        if (chance(1, 10)) return Prob::zero();
        if (chance(1, 10)) return Prob::one();
        const long den = 1 + static_cast<long>(below(max_den));
        return Prob(Rat(static_cast<long>(below(den + 1)), den));
    }

    /// A distribution of arity n whose weights have a common denominator <= max_den.
    FiniteDist dist(std::size_t n, long max_den = 64) {
        if (chance(1, 8)) return FiniteDist::point_mass(n, below(n));
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < n; ++i)
            if (chance(3, 4)) active.push_back(i);
        if (active.empty()) active.push_back(below(n));
        const long total = 1 + static_cast<long>(below(max_den));
        std::vector<long> units(n, 0);
        for (long u = 0; u < total; ++u) ++units[active[below(active.size())]];
        std::vector<Rat> w;
        w.reserve(n);
        for (auto k : units) w.emplace_back(k, total);
        return FiniteDist(std::move(w));
    }

    /// A distribution with every weight strictly positive.
    FiniteDist full_support_dist(std::size_t n, long max_den = 64) {
        const long total = static_cast<long>(n) + static_cast<long>(below(max_den));
        std::vector<long> units(n, 1);
        for (long u = static_cast<long>(n); u < total; ++u) ++units[below(n)];
        std::vector<Rat> w;
        for (auto k : units) w.emplace_back(k, total);
        return FiniteDist(std::move(w));
    }

    /// A distribution supported inside `support` (nonempty).
    FiniteDist dist_on(std::size_t n, const std::vector<std::size_t>& support, long max_den = 64) {
        const long total = 1 + static_cast<long>(below(max_den));
        std::vector<long> units(n, 0);
        for (long u = 0; u < total; ++u) ++units[support[below(support.size())]];
        std::vector<Rat> w;
        for (auto k : units) w.emplace_back(k, total);
        return FiniteDist(std::move(w));
    }

    IndexMap index_map(std::size_t source, std::size_t target) {
        std::vector<std::size_t> t(source);
        for (auto& v : t) v = below(target);
        return IndexMap(std::move(t), target);
    }

    /// Injective map I_source -> I_target, source <= target.
    IndexMap injection(std::size_t source, std::size_t target) {
        auto pool = shuffled(target);
        pool.resize(source);
        return IndexMap(std::move(pool), target);
    }

    Permutation permutation(std::size_t n) { return Permutation(shuffled(n)); }

    std::vector<std::size_t> shuffled(std::size_t n) {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[below(i)]);
        return v;
    }

private:
    std::mt19937_64 eng_;
};

/// Point samplers: callables Gen& -> X.

struct RatSampler {
    RatPoint operator()(Gen& g) const { return {g.rat()}; }
};

struct VectorSampler {
    std::size_t dim = 2;
    RatVector operator()(Gen& g) const {
        std::vector<Rat> c(dim);
        for (auto& x : c) x = g.rat();
        return RatVector(std::move(c));
    }
};

struct FdistSampler {
    std::size_t alphabet = 3;
    FiniteDist operator()(Gen& g) const { return g.dist(alphabet, 16); }
};

/// Q drawn first; P drawn inside supp(Q).
struct DominatedPairSampler {
    std::size_t alphabet = 3;
    DominatedPair operator()(Gen& g) const {
        FiniteDist q = g.dist(alphabet, 16);
        FiniteDist p = g.dist_on(alphabet, q.support(), 16);
        return {std::move(p), std::move(q)};
    }
};

struct BrokenSampler {
    BrokenPoint operator()(Gen& g) const { return {g.rat()}; }
};

}  // namespace convex
