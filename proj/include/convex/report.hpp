#pragma once

/// @file report.hpp
/// @brief Results of seeded law checks, with replayable counterexamples.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "convex/error.hpp"
#include "convex/random.hpp"

namespace convex {

struct Counterexample {
    std::size_t case_index = 0;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct LawResult {
    std::string law;
    std::size_t cases = 0;
    std::size_t passed = 0;
    /// Cases that exercised a degenerate branch (empty block, all-X split, ...).
    std::size_t special = 0;
    std::optional<Counterexample> counterexample;

    bool ok() const noexcept { return passed == cases && !counterexample; }
};

struct LawReport {
    std::string instance;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::vector<LawResult> laws;

    bool ok() const noexcept {
        for (const auto& l : laws)
            if (!l.ok()) return false;
        return true;
    }

    void add(LawResult r) { laws.push_back(std::move(r)); }

    void append(const LawReport& other) {
        laws.insert(laws.end(), other.laws.begin(), other.laws.end());
    }

    const LawResult* find(const std::string& law) const {
        for (const auto& l : laws)
            if (l.law == law) return &l;
        return nullptr;
    }
};

/// Scratch space a law body fills while evaluating one case.
struct Case {
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs;
    std::string rhs;
    std::string note;
    bool special = false;

    template <class T>
    void input(std::string name, const T& value) {
        inputs.emplace_back(std::move(name), render(value));
    }

    template <class T>
    static std::string render(const T& value) {
        if constexpr (std::is_arithmetic_v<T>) {
            return std::to_string(value);
        } else if constexpr (requires { value.begin(); value.end(); value.size(); }) {
            std::string s = "[";
            bool first = true;
            for (const auto& v : value) {
                if (!first) s += ", ";
                first = false;
                s += render(v);
            }
            return s + "]";
        } else {
            using convex::to_string;
            return to_string(value);
        }
    }

    /// Records both sides and returns their equality.
    template <class T>
    bool sides(const T& l, const T& r) {
        using convex::to_string;
        lhs = to_string(l);
        rhs = to_string(r);
        return l == r;
    }
};

/// Runs `body(gen, case)` for `cases` iterations on the stream named `law`.
/// A thrown convex::error counts as a counterexample. Only the first
/// counterexample is kept.
template <class Body>
LawResult run_law(const std::string& law, std::uint64_t seed, std::size_t cases, Body&& body) {
    LawResult result;
    result.law = law;
    result.cases = cases;
    Gen gen(seed, law);
    for (std::size_t i = 0; i < cases; ++i) {
        Case c;
        bool ok = false;
        try {
            ok = body(gen, c);
        } catch (const error& e) {
            c.note = e.what();
        }
        if (c.special) ++result.special;
        if (ok) {
            ++result.passed;
        } else if (!result.counterexample) {
            result.counterexample = Counterexample{i, std::move(c.inputs), std::move(c.lhs),
                                                   std::move(c.rhs), std::move(c.note)};
        }
    }
    return result;
}

}  // namespace convex
