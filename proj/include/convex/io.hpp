#pragma once

/// @file io.hpp
/// @brief JSON encodings for rationals, points, distributions, witnesses and
/// law reports.
///
///   Rat               "1/2" or "3" (integers are also accepted on input)
///   RatVector         {"coords": ["1/2", "1/4"]}   (a bare array is accepted)
///   FiniteDist        {"weights": ["1/2", "1/2"]}  (a bare array is accepted)
///   StochasticMatrix  {"rows": [["1", "0"], ["0", "1"]]}
///   HullWitness       {"weights": [...], "generators": [...]}
///
/// Every malformed input is reported as ErrorKind::ParseError.

#include <json.hpp>

#include <string>
#include <vector>

#include "convex/analysis.hpp"
#include "convex/conical.hpp"
#include "convex/distribution.hpp"
#include "convex/error.hpp"
#include "convex/hull.hpp"
#include "convex/instances.hpp"
#include "convex/rational.hpp"
#include "convex/report.hpp"

namespace convex::io {

using json = nlohmann::ordered_json;

inline Rat rat_from_json(const json& j) {
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const error& e) {
            if (e.kind() == ErrorKind::ParseError) throw;
            throw error(ErrorKind::ParseError, e.what());
        }
    }
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw error(ErrorKind::ParseError, "expected a rational string or integer, got " + j.dump());
}

inline json rat_to_json(const Rat& r) { return r.to_string(); }

namespace detail {

inline const json& array_field(const json& j, const char* field) {
    if (j.is_array()) return j;
    if (j.is_object() && j.contains(field) && j.at(field).is_array()) return j.at(field);
    throw error(ErrorKind::ParseError, std::string("expected an array or an object with \"") + field +
                                           "\", got " + j.dump());
}

inline std::vector<Rat> rats_from_json(const json& arr) {
    std::vector<Rat> out;
    for (const auto& v : arr) out.push_back(rat_from_json(v));
    return out;
}

inline json rats_to_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(rat_to_json(r));
    return arr;
}

}  // namespace detail

/// Distribution parsing reports invalid weights as ParseError with the sum.
inline FiniteDist dist_from_json(const json& j) {
    auto w = detail::rats_from_json(detail::array_field(j, "weights"));
    try {
        return FiniteDist(std::move(w));
    } catch (const error& e) {
        throw error(ErrorKind::ParseError, e.what());
    }
}

inline json dist_to_json(const FiniteDist& d) {
    return json{{"weights", detail::rats_to_json({d.weights().begin(), d.weights().end()})}};
}

inline RatVector vector_from_json(const json& j) {
    auto c = detail::rats_from_json(detail::array_field(j, "coords"));
    if (c.empty()) throw error(ErrorKind::ParseError, "empty coordinate list");
    return RatVector(std::move(c));
}

inline json vector_to_json(const RatVector& v) { return json{{"coords", detail::rats_to_json(v.coords())}}; }

inline StochasticMatrix matrix_from_json(const json& j) {
    std::vector<FiniteDist> rows;
    for (const auto& r : detail::array_field(j, "rows")) rows.push_back(dist_from_json(r));
    try {
        return StochasticMatrix(std::move(rows));
    } catch (const error& e) {
        throw error(ErrorKind::ParseError, e.what());
    }
}

inline json matrix_to_json(const StochasticMatrix& e) {
    json rows = json::array();
    for (std::size_t i = 0; i < e.rows(); ++i) rows.push_back(dist_to_json(e.row(i)).at("weights"));
    return json{{"rows", rows}};
}

/// Per-instance point codecs, selected by type.
template <class X>
struct PointCodec;

template <>
struct PointCodec<RatPoint> {
    static RatPoint decode(const json& j) { return {rat_from_json(j)}; }
    static json encode(const RatPoint& x) { return rat_to_json(x.value); }
};

template <>
struct PointCodec<RatVector> {
    static RatVector decode(const json& j) { return vector_from_json(j); }
    static json encode(const RatVector& x) { return vector_to_json(x); }
};

template <>
struct PointCodec<FiniteDist> {
    static FiniteDist decode(const json& j) { return dist_from_json(j); }
    static json encode(const FiniteDist& x) { return dist_to_json(x); }
};

template <>
struct PointCodec<DominatedPair> {
    static DominatedPair decode(const json& j) {
        if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
            throw error(ErrorKind::ParseError, "dominated pair needs \"P\" and \"Q\"");
        try {
            return {dist_from_json(j.at("P")), dist_from_json(j.at("Q"))};
        } catch (const error& e) {
            if (e.kind() == ErrorKind::NotDominated) throw error(ErrorKind::ParseError, e.what());
            throw;
        }
    }
    static json encode(const DominatedPair& x) {
        return json{{"P", dist_to_json(x.p())}, {"Q", dist_to_json(x.q())}};
    }
};

template <class X>
std::vector<X> points_from_json(const json& arr) {
    if (!arr.is_array()) throw error(ErrorKind::ParseError, "expected an array of points");
    std::vector<X> out;
    for (const auto& v : arr) out.push_back(PointCodec<X>::decode(v));
    return out;
}

template <class X>
json points_to_json(const std::vector<X>& pts) {
    json arr = json::array();
    for (const auto& x : pts) arr.push_back(PointCodec<X>::encode(x));
    return arr;
}

template <class X>
HullWitness<X> witness_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("generators"))
        throw error(ErrorKind::ParseError, "witness needs \"weights\" and \"generators\"");
    FiniteDist d = dist_from_json(j.at("weights"));
    auto g = points_from_json<X>(j.at("generators"));
    try {
        return HullWitness<X>(std::move(d), std::move(g));
    } catch (const error& e) {
        throw error(ErrorKind::ParseError, e.what());
    }
}

template <class X>
json witness_to_json(const HullWitness<X>& w) {
    return json{{"weights", dist_to_json(w.weights).at("weights")},
                {"generators", points_to_json(w.generators)}};
}

inline json law_to_json(const LawResult& r) {
    json j{{"law", r.law},
           {"ok", r.ok()},
           {"cases", r.cases},
           {"passed", r.passed},
           {"special_cases", r.special}};
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        json inputs = json::object();
        for (const auto& [k, v] : c.inputs) inputs[k] = v;
        j["counterexample"] = json{{"case", c.case_index},
                                   {"inputs", inputs},
                                   {"lhs", c.lhs},
                                   {"rhs", c.rhs},
                                   {"note", c.note}};
    }
    return j;
}

inline json report_to_json(const LawReport& r) {
    json laws = json::array();
    for (const auto& l : r.laws) laws.push_back(law_to_json(l));
    return json{{"instance", r.instance},
                {"seed", r.seed},
                {"cases", r.cases},
                {"ok", r.ok()},
                {"laws", laws}};
}

/// Parses text, mapping syntax errors to ParseError.
inline json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace convex::io
