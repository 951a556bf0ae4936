#pragma once

/// @file rational.hpp
/// @brief Exact rationals and the probability subtype [0,1].
///
/// Every coefficient in the algebraic core is an exact rational. Values are
/// kept in lowest terms with a positive denominator, so equality is
/// structural and the convex-space laws become decidable equations.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "convex/error.hpp"

namespace convex {

class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rat(long num, long den) {
        if (den == 0) throw error(ErrorKind::ZeroDenominator, "denominator is zero");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "num/den" or an integer. Whitespace is not accepted.
    static Rat parse(std::string_view text) {
        auto valid_int = [](std::string_view s, bool allow_sign) {
            if (s.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        const auto slash = text.find('/');
        const std::string_view num = text.substr(0, slash);
        const std::string_view den =
            slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
        mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw error(ErrorKind::ZeroDenominator, "in '" + std::string(text) + "'");
        return Rat(mpq_class(n, d));
    }

    const mpq_class& raw() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }

    double to_double() const { return q_.get_d(); }

    /// "n/d", or "n" when the denominator is 1.
    std::string to_string() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero())
            throw error(ErrorKind::ZeroDenominator, "division of " + a.to_string() + " by zero");
        return Rat(mpq_class(a.q_ / b.q_));
    }
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

inline std::string to_string(const Rat& r) { return r.to_string(); }

/// A rational in the closed unit interval.
class Prob {
public:
    Prob() = default;

    explicit Prob(Rat value) : value_(std::move(value)) {
        if (value_ < Rat(0) || value_ > Rat(1))
            throw error(ErrorKind::OutOfRange, value_.to_string() + " is not in [0,1]");
    }

    static Prob zero() { return Prob(Rat(0)); }
    static Prob one() { return Prob(Rat(1)); }

    const Rat& value() const noexcept { return value_; }
    operator const Rat&() const noexcept { return value_; }  // NOLINT(google-explicit-constructor)

    friend bool operator==(const Prob&, const Prob&) = default;
    friend auto operator<=>(const Prob& a, const Prob& b) { return a.value_ <=> b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Prob& p) { return os << p.value_; }

private:
    Rat value_{0};
};

inline std::string to_string(const Prob& p) { return p.value().to_string(); }

inline Prob prob_new(long num, long den) { return Prob(Rat(num, den)); }

/// 1 - p.
inline Prob complement(const Prob& p) { return Prob(Rat(1) - p.value()); }

/// s = 1 - (1-p)(1-q), the outer weight of quasi-associativity.
inline Prob s_of(const Prob& p, const Prob& q) {
    return Prob(Rat(1) - (Rat(1) - p.value()) * (Rat(1) - q.value()));
}

/// r = p/s when s != 0, else 0. The value of r is irrelevant when s = 0.
inline Prob r_of(const Prob& p, const Prob& q) {
    const Prob s = s_of(p, q);
    if (s.value().is_zero()) return Prob::zero();
    return Prob(p.value() / s.value());
}

}  // namespace convex
