#pragma once

/// @file distribution.hpp
/// @brief Finite distributions over index sets {0..n-1} and the index
/// transformations used by the multiary laws.
///
/// Distributions are dense weight vectors; supports are computed on demand.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "convex/error.hpp"
#include "convex/rational.hpp"

namespace convex {

class FiniteDist {
public:
    /// Validates: nonempty, every weight >= 0, weights sum to exactly 1.
    explicit FiniteDist(std::vector<Rat> weights) : w_(std::move(weights)) {
        if (w_.empty()) throw error(ErrorKind::InvalidDistribution, "arity must be positive");
        Rat sum(0);
        for (const auto& x : w_) {
            if (x.sign() < 0)
                throw error(ErrorKind::InvalidDistribution, "negative weight " + x.to_string());
            sum += x;
        }
        if (sum != Rat(1))
            throw error(ErrorKind::InvalidDistribution,
                        "weights sum to " + sum.to_string() + ", expected 1");
    }

    static FiniteDist point_mass(std::size_t n, std::size_t j) {
        if (j >= n) throw error(ErrorKind::ArityMismatch, "point mass index out of range");
        std::vector<Rat> w(n, Rat(0));
        w[j] = Rat(1);
        return FiniteDist(std::move(w));
    }

    static FiniteDist uniform(std::size_t n) {
        return FiniteDist(std::vector<Rat>(n, Rat(1, static_cast<long>(n))));
    }

    /// The two-point distribution (p, 1-p).
    static FiniteDist binary(const Prob& p) { return FiniteDist({p.value(), complement(p).value()}); }

    std::size_t arity() const noexcept { return w_.size(); }
    const Rat& operator[](std::size_t i) const { return w_.at(i); }
    std::span<const Rat> weights() const noexcept { return w_; }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i].sign() > 0) s.push_back(i);
        return s;
    }

    friend bool operator==(const FiniteDist&, const FiniteDist&) = default;

private:
    std::vector<Rat> w_;
};

inline std::string to_string(const FiniteDist& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.arity(); ++i) {
        if (i) s += ", ";
        s += d[i].to_string();
    }
    return s + ")";
}

/// Pointwise mixture p*d1 + (1-p)*d2 over a common alphabet.
inline FiniteDist conv(const Prob& p, const FiniteDist& d1, const FiniteDist& d2) {
    if (d1.arity() != d2.arity())
        throw error(ErrorKind::DimensionMismatch, "alphabets of size " + std::to_string(d1.arity()) +
                                                      " and " + std::to_string(d2.arity()));
    const Rat q = complement(p).value();
    std::vector<Rat> w(d1.arity());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = p.value() * d1[i] + q * d2[i];
    return FiniteDist(std::move(w));
}

/// True iff Q(a) = 0 implies P(a) = 0 for every a.
inline bool dominates(const FiniteDist& q, const FiniteDist& p) {
    if (q.arity() != p.arity()) throw error(ErrorKind::DimensionMismatch, "dominance across alphabets");
    for (std::size_t a = 0; a < q.arity(); ++a)
        if (q[a].is_zero() && !p[a].is_zero()) return false;
    return true;
}

/// n rows, each a distribution over m columns.
class StochasticMatrix {
public:
    explicit StochasticMatrix(std::vector<FiniteDist> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw error(ErrorKind::ArityMismatch, "matrix needs at least one row");
        for (const auto& r : rows_)
            if (r.arity() != rows_.front().arity())
                throw error(ErrorKind::ArityMismatch, "rows of a stochastic matrix differ in arity");
    }

    static StochasticMatrix identity(std::size_t n) {
        std::vector<FiniteDist> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(FiniteDist::point_mass(n, i));
        return StochasticMatrix(std::move(rows));
    }

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return rows_.front().arity(); }
    const FiniteDist& row(std::size_t i) const { return rows_.at(i); }

    friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;

private:
    std::vector<FiniteDist> rows_;
};

/// A total map I_m -> I_n given by its table.
class IndexMap {
public:
    IndexMap(std::vector<std::size_t> table, std::size_t target)
        : table_(std::move(table)), target_(target) {
        for (auto v : table_)
            if (v >= target_)
                throw error(ErrorKind::ArityMismatch, "map value " + std::to_string(v) +
                                                          " outside target arity " +
                                                          std::to_string(target_));
    }

    static IndexMap identity(std::size_t n) {
        std::vector<std::size_t> t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = i;
        return IndexMap(std::move(t), n);
    }

    std::size_t source() const noexcept { return table_.size(); }
    std::size_t target() const noexcept { return target_; }
    std::size_t operator()(std::size_t i) const { return table_.at(i); }
    std::span<const std::size_t> table() const noexcept { return table_; }

    bool injective() const {
        std::vector<bool> seen(target_, false);
        for (auto v : table_) {
            if (seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }

    friend bool operator==(const IndexMap&, const IndexMap&) = default;

private:
    std::vector<std::size_t> table_;
    std::size_t target_;
};

/// The block assignment K : I_n -> I_m of a partition; block j is K^-1(j).
using PartitionMap = IndexMap;

/// A bijection on I_n.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> perm) : map_(perm, perm.size()) {
        if (!map_.injective()) throw error(ErrorKind::NotBijective, "permutation repeats a value");
    }

    std::size_t arity() const noexcept { return map_.source(); }
    std::size_t operator()(std::size_t i) const { return map_(i); }
    const IndexMap& as_map() const noexcept { return map_; }

private:
    IndexMap map_;
};

inline std::string to_string(const IndexMap& u) {
    std::string s = "[";
    for (std::size_t i = 0; i < u.source(); ++i) {
        if (i) s += ", ";
        s += std::to_string(u(i));
    }
    return s + "]";
}

inline std::string to_string(const StochasticMatrix& e) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.rows(); ++i) {
        if (i) s += ", ";
        s += to_string(e.row(i));
    }
    return s + "]";
}

/// w_j = sum_i d_i e_{i,j}.
inline FiniteDist mix_rows(const FiniteDist& d, const StochasticMatrix& e) {
    if (d.arity() != e.rows())
        throw error(ErrorKind::ArityMismatch, "distribution of arity " + std::to_string(d.arity()) +
                                                  " against " + std::to_string(e.rows()) + " rows");
    std::vector<Rat> w(e.cols(), Rat(0));
    for (std::size_t i = 0; i < d.arity(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += d[i] * e.row(i)[j];
    return FiniteDist(std::move(w));
}

/// (u_* d)_j = sum over u(i) = j of d_i.
inline FiniteDist pushforward(const FiniteDist& d, const IndexMap& u) {
    if (d.arity() != u.source())
        throw error(ErrorKind::ArityMismatch, "distribution of arity " + std::to_string(d.arity()) +
                                                  " pushed along a map from " +
                                                  std::to_string(u.source()));
    std::vector<Rat> w(u.target(), Rat(0));
    for (std::size_t i = 0; i < d.arity(); ++i) w[u(i)] += d[i];
    return FiniteDist(std::move(w));
}

/// Block masses rho_j = sum over K(k) = j of lambda_k.
inline FiniteDist rho_dist(const FiniteDist& lam, const PartitionMap& k) { return pushforward(lam, k); }

/// k -> delta_{j,K(k)} lambda_k / rho_j, or uniform over I_n when rho_j = 0.
inline FiniteDist partition_inner(std::size_t j, const FiniteDist& lam, const PartitionMap& k) {
    if (lam.arity() != k.source()) throw error(ErrorKind::ArityMismatch, "partition map arity");
    if (j >= k.target()) throw error(ErrorKind::ArityMismatch, "block index out of range");
    Rat rho(0);
    for (std::size_t i = 0; i < lam.arity(); ++i)
        if (k(i) == j) rho += lam[i];
    if (rho.is_zero()) return FiniteDist::uniform(lam.arity());
    std::vector<Rat> w(lam.arity(), Rat(0));
    for (std::size_t i = 0; i < lam.arity(); ++i)
        if (k(i) == j) w[i] = lam[i] / rho;
    return FiniteDist(std::move(w));
}

/// (d o s)_i = d_{s(i)}.
inline FiniteDist permute(const FiniteDist& d, const Permutation& s) {
    if (d.arity() != s.arity()) throw error(ErrorKind::ArityMismatch, "permutation arity");
    std::vector<Rat> w(d.arity());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = d[s(i)];
    return FiniteDist(std::move(w));
}

}  // namespace convex
