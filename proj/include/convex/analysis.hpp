#pragma once

/// @file analysis.hpp
/// @brief Convex and concave functions into the ordered convex space of
/// reals, checked numerically, plus the Kullback-Leibler divergence on
/// dominated pairs.
///
/// Unlike the rest of the library this module works in double precision.
/// Comparisons use an additive slack (default 1e-9). Logarithms are base 2
/// unless LogBase::e is requested.

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "convex/distribution.hpp"
#include "convex/error.hpp"
#include "convex/instances.hpp"
#include "convex/report.hpp"

namespace convex {

/// %.17g, enough to round-trip a double.
inline std::string real_to_string(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

enum class LogBase { two, e };

/// log(x) for x > 0, and 0 otherwise.
inline double log_ext(double x, LogBase base = LogBase::two) {
    if (!(x > 0)) return 0.0;
    return base == LogBase::two ? std::log2(x) : std::log(x);
}

/// A point of the ordered convex space of reals.
struct OrderedReal {
    double value = 0;

    friend bool operator==(const OrderedReal&, const OrderedReal&) = default;
    friend auto operator<=>(const OrderedReal& a, const OrderedReal& b) { return a.value <=> b.value; }
};

inline OrderedReal conv(double p, OrderedReal x, OrderedReal y) {
    return {p * x.value + (1 - p) * y.value};
}

inline std::string to_string(const OrderedReal& x) { return real_to_string(x.value); }

struct RealFn {
    std::string name;
    std::function<double(double)> eval;

    double operator()(double x) const { return eval(x); }
};

inline RealFn negate(const RealFn& f) {
    return {"neg_" + f.name, [g = f.eval](double x) { return -g(x); }};
}

/// The built-in catalog. `log_ext`, `neg_log_ext` and `xlogx` are base 2.
inline const std::vector<RealFn>& function_catalog() {
    static const std::vector<RealFn> fns = {
        {"log_ext", [](double x) { return log_ext(x); }},
        {"neg_log_ext", [](double x) { return -log_ext(x); }},
        {"ln_ext", [](double x) { return log_ext(x, LogBase::e); }},
        {"square", [](double x) { return x * x; }},
        {"abs", [](double x) { return std::fabs(x); }},
        {"xlogx", [](double x) { return x > 0 ? x * std::log2(x) : 0.0; }},
        {"exp", [](double x) { return std::exp(x); }},
        {"sin", [](double x) { return std::sin(x); }},
        {"linear", [](double x) { return 2 * x + 1; }},
    };
    return fns;
}

inline const RealFn& find_function(std::string_view name) {
    for (const auto& f : function_catalog())
        if (f.name == name) return f;
    throw error(ErrorKind::UnknownFunction, "no catalog function named '" + std::string(name) + "'");
}

struct Tolerance {
    double slack = 1e-9;

    Tolerance() = default;
    explicit Tolerance(double s) : slack(s) {
        if (!(s >= 0)) throw error(ErrorKind::OutOfRange, "slack must be nonnegative");
    }
};

enum class Curvature { convex, concave };

inline std::string_view curvature_name(Curvature c) {
    return c == Curvature::convex ? "convex" : "concave";
}

/// f(x <p> y) <= f(x) <p> f(y) + slack.
inline bool convex_at(const RealFn& f, double p, double x, double y, Tolerance tol = {}) {
    const double lhs = f(conv(p, OrderedReal{x}, OrderedReal{y}).value);
    const double rhs = conv(p, OrderedReal{f(x)}, OrderedReal{f(y)}).value;
    return lhs <= rhs + tol.slack;
}

/// Convexity for the reversed order: f(x <p> y) >= f(x) <p> f(y) - slack.
inline bool concave_at(const RealFn& f, double p, double x, double y, Tolerance tol = {}) {
    const double lhs = f(conv(p, OrderedReal{x}, OrderedReal{y}).value);
    const double rhs = conv(p, OrderedReal{f(x)}, OrderedReal{f(y)}).value;
    return lhs >= rhs - tol.slack;
}

inline bool curvature_at(Curvature mode, const RealFn& f, double p, double x, double y,
                         Tolerance tol = {}) {
    return mode == Curvature::convex ? convex_at(f, p, x, y, tol) : concave_at(f, p, x, y, tol);
}

enum class Spacing { automatic, linear, log };

struct Interval {
    double lo = 0;
    double hi = 1;

    Interval() = default;
    Interval(double l, double h) : lo(l), hi(h) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo))
            throw error(ErrorKind::DegenerateInterval,
                        "[" + real_to_string(lo) + ", " + real_to_string(hi) + "]");
    }

    /// "lo:hi".
    static Interval parse(std::string_view text) {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos)
            throw error(ErrorKind::ParseError, "interval must be lo:hi, got '" + std::string(text) + "'");
        auto num = [&](std::string_view s) {
            std::string str(s);
            char* end = nullptr;
            const double v = std::strtod(str.c_str(), &end);
            if (str.empty() || end != str.c_str() + str.size())
                throw error(ErrorKind::ParseError, "bad interval bound '" + str + "'");
            return v;
        };
        return Interval(num(text.substr(0, colon)), num(text.substr(colon + 1)));
    }

    /// Log spacing is used automatically for positive intervals spanning
    /// more than three decades.
    bool use_log(Spacing s) const {
        if (s == Spacing::log) {
            if (!(lo > 0)) throw error(ErrorKind::DegenerateInterval, "log spacing needs lo > 0");
            return true;
        }
        return s == Spacing::automatic && lo > 0 && hi / lo > 1e3;
    }
};

/// Samples (p, x, y) with x, y in the interval and reports the first
/// violation of convexity (or concavity) beyond the slack.
inline LawResult check_convex_in(const RealFn& f, const Interval& domain, std::uint64_t seed,
                                 std::size_t cases, Tolerance tol = {},
                                 Curvature mode = Curvature::convex,
                                 Spacing spacing = Spacing::automatic) {
    const bool logs = domain.use_log(spacing);
    const double llo = logs ? std::log(domain.lo) : 0, lhi = logs ? std::log(domain.hi) : 0;
    const std::string law = std::string(curvature_name(mode)) + "-in:" + f.name;
    return run_law(law, seed, cases, [&](Gen& g, Case& c) {
        auto draw = [&] {
            const double u = g.unit_real();
            return logs ? std::exp(llo + u * (lhi - llo)) : domain.lo + u * (domain.hi - domain.lo);
        };
        const double x = draw(), y = draw();
        double p = g.unit_real();
        if (g.chance(1, 20)) p = 0.5;
        const double m = conv(p, OrderedReal{x}, OrderedReal{y}).value;
        c.inputs = {{"p", real_to_string(p)}, {"x", real_to_string(x)}, {"y", real_to_string(y)}};
        c.lhs = real_to_string(f(m));
        c.rhs = real_to_string(conv(p, OrderedReal{f(x)}, OrderedReal{f(y)}).value);
        return curvature_at(mode, f, p, x, y, tol);
    });
}

/// Central second differences at `grid_points` interior points of the
/// interval. Nonnegative everywhere is evidence of convexity, nonpositive
/// of concavity; it is a sufficient-evidence heuristic, not a proof.
inline LawResult second_derivative_test(const RealFn& f, const Interval& domain,
                                        std::size_t grid_points, Tolerance tol = {},
                                        Curvature mode = Curvature::convex,
                                        Spacing spacing = Spacing::automatic) {
    if (grid_points < 3) throw error(ErrorKind::OutOfRange, "grid needs at least 3 points");
    const bool logs = domain.use_log(spacing);
    LawResult r;
    r.law = std::string(curvature_name(mode)) + "-second-derivative:" + f.name;
    r.cases = grid_points;
    const double steps = static_cast<double>(grid_points + 1);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double t = static_cast<double>(i + 1) / steps;
        double x, h;
        if (logs) {
            const double llo = std::log(domain.lo), lhi = std::log(domain.hi);
            x = std::exp(llo + t * (lhi - llo));
            h = 0.5 * x * -std::expm1(-(lhi - llo) / steps);
        } else {
            x = domain.lo + t * (domain.hi - domain.lo);
            h = 0.5 * (domain.hi - domain.lo) / steps;
        }
        const double d2 = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
        const bool ok = mode == Curvature::convex ? d2 >= -tol.slack : d2 <= tol.slack;
        if (ok) {
            ++r.passed;
        } else if (!r.counterexample) {
            r.counterexample = Counterexample{
                i, {{"x", real_to_string(x)}, {"h", real_to_string(h)}}, real_to_string(d2), "0",
                "second difference has the wrong sign"};
        }
    }
    return r;
}

/// Reflexivity, transitivity and antisymmetry of <= on sampled reals.
inline LawResult check_order_laws(std::uint64_t seed, std::size_t cases) {
    return run_law("order", seed, cases, [&](Gen& g, Case& c) {
        auto draw = [&] { return OrderedReal{std::round((g.unit_real() - 0.5) * 8) / 2}; };
        const OrderedReal x = draw(), y = draw(), z = draw();
        c.inputs = {{"x", to_string(x)}, {"y", to_string(y)}, {"z", to_string(z)}};
        const bool refl = x <= x;
        const bool trans = !(x <= y && y <= z) || x <= z;
        const bool anti = !(x <= y && y <= x) || x == y;
        return refl && trans && anti;
    });
}

/// f concave at (p, x, y) iff -f convex at (p, x, y), case by case.
inline LawResult check_negation_duality(const RealFn& f, const Interval& domain,
                                        std::uint64_t seed, std::size_t cases, Tolerance tol = {}) {
    const RealFn nf = negate(f);
    return run_law("negation-duality:" + f.name, seed, cases, [&](Gen& g, Case& c) {
        const double x = domain.lo + g.unit_real() * (domain.hi - domain.lo);
        const double y = domain.lo + g.unit_real() * (domain.hi - domain.lo);
        const double p = g.unit_real();
        c.inputs = {{"p", real_to_string(p)}, {"x", real_to_string(x)}, {"y", real_to_string(y)}};
        const bool a = concave_at(f, p, x, y, tol), b = convex_at(nf, p, x, y, tol);
        c.lhs = a ? "concave" : "not concave";
        c.rhs = b ? "negation convex" : "negation not convex";
        return a == b;
    });
}

/// D(P || Q) = sum_a P(a) log(P(a) / Q(a)); terms with P(a) = 0 are 0.
inline double div(const FiniteDist& p, const FiniteDist& q, LogBase base = LogBase::two) {
    if (p.arity() != q.arity()) throw error(ErrorKind::ArityMismatch, "divergence across alphabets");
    if (!dominates(q, p))
        throw error(ErrorKind::NotDominated, to_string(q) + " does not dominate " + to_string(p));
    double s = 0;
    for (std::size_t a = 0; a < p.arity(); ++a) {
        if (p[a].is_zero()) continue;
        s += p[a].to_double() * log_ext((p[a] / q[a]).to_double(), base);
    }
    return s;
}

inline double div(const DominatedPair& pq, LogBase base = LogBase::two) {
    return div(pq.p(), pq.q(), base);
}

namespace detail {

/// Half of the pairs have full support, the rest random supports.
inline DominatedPair sample_dominated_pair(Gen& g, std::size_t alphabet) {
    if (g.chance(1, 2)) return {g.full_support_dist(alphabet), g.full_support_dist(alphabet)};
    FiniteDist q = g.dist(alphabet);
    FiniteDist p = g.dist_on(alphabet, q.support());
    return {std::move(p), std::move(q)};
}

}  // namespace detail

/// D(P || Q) >= -slack.
inline LawResult check_div_nonnegative(std::uint64_t seed, std::size_t cases, std::size_t alphabet,
                                       Tolerance tol = {}, LogBase base = LogBase::two) {
    return run_law("div-nonnegative", seed, cases, [&](Gen& g, Case& c) {
        const DominatedPair pq = detail::sample_dominated_pair(g, alphabet);
        c.input("pair", pq);
        const double d = div(pq, base);
        c.lhs = real_to_string(d);
        c.rhs = "0";
        return d >= -tol.slack;
    });
}

/// D(mixture) <= l D(P1||Q1) + (1-l) D(P2||Q2) + slack, with the mixture
/// taken in the convex space of dominated pairs.
inline LawResult check_div_convexity(std::uint64_t seed, std::size_t cases, std::size_t alphabet,
                                     Tolerance tol = {}, LogBase base = LogBase::two) {
    if (alphabet < 2) throw error(ErrorKind::OutOfRange, "alphabet size must be at least 2");
    return run_law("div-convexity", seed, cases, [&](Gen& g, Case& c) {
        const DominatedPair a = detail::sample_dominated_pair(g, alphabet);
        const DominatedPair b = detail::sample_dominated_pair(g, alphabet);
        const Prob lam = g.prob();
        c.input("lambda", lam);
        c.input("a", a);
        c.input("b", b);
        const double l = lam.value().to_double();
        const double lhs = div(conv(lam, a, b), base);
        const double rhs = l * div(a, base) + (1 - l) * div(b, base);
        c.lhs = real_to_string(lhs);
        c.rhs = real_to_string(rhs);
        return lhs <= rhs + tol.slack;
    });
}

}  // namespace convex
