#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "convex/convex.hpp"
#include "convex/io.hpp"

namespace convex::cli {

namespace {

using io::json;

struct Config {
    std::uint64_t seed = 42;
    std::size_t cases = 500;
    std::string format = "text";
    std::string instance;
    std::string input;
    std::vector<std::string> positional;
    std::string x_indices;
    std::string fn;
    std::string mode = "convex";
    std::string interval = "-10:10";
    std::string spacing = "auto";
    std::string base = "2";
    std::size_t grid = 1000;
    double slack = 1e-9;
    std::size_t max_arity = 6;
};

bool json_output(const Config& cfg) { return cfg.format == "json"; }

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw error(ErrorKind::ParseError, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------- laws

/// Full suite for one instance: binary, entropic, multiary, conical
/// envelope, S1 lemmas and hull splitting.
template <class Sampler, class Op = Convn>
LawReport full_suite(const Sampler& sample, const Config& cfg, const Op& op = {}) {
    const MultiaryOptions opt{cfg.max_arity};
    LawReport r = check_binary_laws(sample, cfg.seed, cfg.cases);
    r.add(check_entropic_law(sample, cfg.seed, cfg.cases));
    r.append(check_multiary_laws(sample, cfg.seed, cfg.cases, opt, op));
    r.add(check_s1_conv(sample, cfg.seed, cfg.cases));
    r.add(check_s1_convn(sample, cfg.seed, cfg.cases, opt, op));
    r.append(check_conical_laws(sample, cfg.seed, cfg.cases));
    r.add(check_weight_homomorphism(sample, cfg.seed, cfg.cases));
    r.add(check_hull_union_split(sample, cfg.seed, cfg.cases));
    return r;
}

const std::map<std::string, std::function<LawReport(const Config&)>>& suites() {
    static const std::map<std::string, std::function<LawReport(const Config&)>> s = {
        {"rat",
         [](const Config& c) {
             auto r = full_suite(RatSampler{}, c);
             r.add(check_avgn(c.seed, c.cases, {c.max_arity}));
             r.add(check_scale_r_additive(c.seed, c.cases));
             return r;
         }},
        {"vec1", [](const Config& c) { return full_suite(VectorSampler{1}, c); }},
        {"vec2", [](const Config& c) { return full_suite(VectorSampler{2}, c); }},
        {"vec3", [](const Config& c) { return full_suite(VectorSampler{3}, c); }},
        {"fdist2", [](const Config& c) { return full_suite(FdistSampler{2}, c); }},
        {"fdist3", [](const Config& c) { return full_suite(FdistSampler{3}, c); }},
        {"fdist4", [](const Config& c) { return full_suite(FdistSampler{4}, c); }},
        {"dompair", [](const Config& c) { return full_suite(DominatedPairSampler{3}, c); }},
        {"scaled-rat", [](const Config& c) { return full_suite(ScaledSampler<RatSampler>{}, c); }},
        {"broken-demo", [](const Config& c) { return full_suite(BrokenSampler{}, c); }},
        {"broken-convn",
         [](const Config& c) { return full_suite(RatSampler{}, c, UnguardedConvn{}); }},
    };
    return s;
}

void print_law_text(const LawResult& l, std::ostream& out) {
    out << (l.ok() ? "PASS " : "FAIL ") << l.law << " (" << l.passed << "/" << l.cases << ")";
    if (l.special) out << " [" << l.special << " degenerate]";
    out << "\n";
    if (l.counterexample) {
        const auto& c = *l.counterexample;
        out << "  counterexample at case " << c.case_index << ":\n";
        for (const auto& [k, v] : c.inputs) out << "    " << k << " = " << v << "\n";
        if (!c.lhs.empty() || !c.rhs.empty())
            out << "    lhs = " << c.lhs << "\n    rhs = " << c.rhs << "\n";
        if (!c.note.empty()) out << "    note: " << c.note << "\n";
    }
}

int cmd_laws(const Config& cfg, std::ostream& out) {
    const auto it = suites().find(cfg.instance);
    if (it == suites().end())
        throw error(ErrorKind::UnknownInstance, "'" + cfg.instance + "'");
    LawReport r = it->second(cfg);
    r.instance = cfg.instance;
    r.seed = cfg.seed;
    r.cases = cfg.cases;
    if (json_output(cfg)) {
        out << io::report_to_json(r).dump(2) << "\n";
    } else {
        out << "instance " << r.instance << ", seed " << r.seed << ", " << r.cases
            << " cases per law\n";
        for (const auto& l : r.laws) print_law_text(l, out);
        out << (r.ok() ? "all laws hold\n" : "counterexample found\n");
    }
    return r.ok() ? kOk : kCounterexample;
}

// ---------------------------------------------------------------- barycenter

enum class PointKind { rat, vec, fdist };

PointKind infer_kind(const json& p) {
    if (p.is_string() || p.is_number_integer()) return PointKind::rat;
    if (p.is_array() || (p.is_object() && p.contains("coords"))) return PointKind::vec;
    if (p.is_object() && p.contains("weights")) return PointKind::fdist;
    throw error(ErrorKind::ParseError, "cannot tell the point type of " + p.dump());
}

PointKind kind_from_flag(const std::string& s, const json& first) {
    if (s.empty()) return infer_kind(first);
    if (s == "rat") return PointKind::rat;
    if (s.rfind("vec", 0) == 0) return PointKind::vec;
    if (s.rfind("fdist", 0) == 0) return PointKind::fdist;
    throw error(ErrorKind::UnknownInstance, "'" + s + "' has no point encoding");
}

std::string text_of(const RatPoint& x) { return to_string(x); }
std::string text_of(const RatVector& x) { return to_string(x); }
std::string text_of(const FiniteDist& x) { return to_string(x); }

template <class X>
int barycenter_for(const FiniteDist& d, const json& pts, const Config& cfg, std::ostream& out) {
    const auto x = io::points_from_json<X>(pts);
    if (x.size() != d.arity())
        throw error(ErrorKind::ArityMismatch, std::to_string(d.arity()) + " weights but " +
                                                  std::to_string(x.size()) + " points");
    const X result = convn(d, x);
    if (json_output(cfg))
        out << json{{"point", io::PointCodec<X>::encode(result)}}.dump(2) << "\n";
    else
        out << text_of(result) << "\n";
    return kOk;
}

int cmd_barycenter(const Config& cfg, std::ostream& out) {
    const json in = io::parse(read_input(cfg.input));
    if (!in.is_object() || !in.contains("weights") || !in.contains("points"))
        throw error(ErrorKind::ParseError, "input needs \"weights\" and \"points\"");
    const FiniteDist d = io::dist_from_json(in.at("weights"));
    const json& pts = in.at("points");
    if (!pts.is_array() || pts.empty()) throw error(ErrorKind::ParseError, "\"points\" must be a nonempty array");
    switch (kind_from_flag(cfg.instance, pts.front())) {
        case PointKind::rat: return barycenter_for<RatPoint>(d, pts, cfg, out);
        case PointKind::vec: return barycenter_for<RatVector>(d, pts, cfg, out);
        case PointKind::fdist: return barycenter_for<FiniteDist>(d, pts, cfg, out);
    }
    return kUsage;
}

// ---------------------------------------------------------------- hull-split

std::vector<std::size_t> parse_indices(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw error(ErrorKind::ParseError, "bad index '" + tok + "'");
        out.push_back(std::stoul(tok));
    }
    return out;
}

template <class X>
int hull_split_for(const json& in, const Config& cfg, std::ostream& out) {
    const auto z = io::witness_from_json<X>(in);
    std::vector<std::size_t> xi;
    if (!cfg.x_indices.empty()) {
        xi = parse_indices(cfg.x_indices);
    } else if (in.contains("x_indices")) {
        if (!in.at("x_indices").is_array()) throw error(ErrorKind::ParseError, "\"x_indices\" must be an array");
        for (const auto& v : in.at("x_indices")) {
            if (!v.is_number_unsigned()) throw error(ErrorKind::ParseError, "bad index " + v.dump());
            xi.push_back(v.get<std::size_t>());
        }
    }
    std::vector<bool> tag(z.generators.size(), false);
    for (auto i : xi) {
        if (i >= tag.size()) throw error(ErrorKind::ArityMismatch, "X index " + std::to_string(i) + " out of range");
        tag[i] = true;
    }
    // A missing default falls back to the first generator of its block.
    auto fallback = [&](const char* key, bool want_x) -> X {
        if (in.contains(key)) return io::PointCodec<X>::decode(in.at(key));
        for (std::size_t i = 0; i < tag.size(); ++i)
            if (tag[i] == want_x) return z.generators[i];
        throw error(ErrorKind::OutOfRange,
                    std::string(want_x ? "X" : "Y") + " is empty; provide \"" + key + "\"");
    };
    const X dx = fallback("default_x", true);
    const X dy = fallback("default_y", false);
    const auto split = hull_union_split_by_index(z, std::span<const std::size_t>(xi), dx, dy);
    const X xp = hull_eval(split.x), yp = hull_eval(split.y), zp = hull_eval(z);
    const bool ok = conv(split.p, xp, yp) == zp;
    if (json_output(cfg)) {
        out << json{{"p", io::rat_to_json(split.p.value())},
                    {"x", io::witness_to_json(split.x)},
                    {"y", io::witness_to_json(split.y)},
                    {"x_point", io::PointCodec<X>::encode(xp)},
                    {"y_point", io::PointCodec<X>::encode(yp)},
                    {"z_point", io::PointCodec<X>::encode(zp)},
                    {"reconstruction", ok}}
                   .dump(2)
            << "\n";
    } else {
        out << "p = " << split.p << "\n"
            << "x = " << text_of(xp) << "  from " << to_string(split.x) << "\n"
            << "y = " << text_of(yp) << "  from " << to_string(split.y) << "\n"
            << "z = " << text_of(zp) << "\n"
            << "reconstruction " << (ok ? "holds" : "FAILS") << "\n";
    }
    return ok ? kOk : kCounterexample;
}

int cmd_hull_split(const Config& cfg, std::ostream& out) {
    const json in = io::parse(read_input(cfg.input));
    if (!in.is_object() || !in.contains("generators") || !in.at("generators").is_array() ||
        in.at("generators").empty())
        throw error(ErrorKind::ParseError, "witness needs a nonempty \"generators\" array");
    switch (kind_from_flag(cfg.instance, in.at("generators").front())) {
        case PointKind::rat: return hull_split_for<RatPoint>(in, cfg, out);
        case PointKind::vec: return hull_split_for<RatVector>(in, cfg, out);
        case PointKind::fdist: return hull_split_for<FiniteDist>(in, cfg, out);
    }
    return kUsage;
}

// ---------------------------------------------------------------- divergence

LogBase parse_base(const std::string& s) {
    if (s == "2") return LogBase::two;
    if (s == "e") return LogBase::e;
    throw CLI::ValidationError("--base", "must be 2 or e");
}

int cmd_divergence(const Config& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.positional.size() != 2) throw CLI::ValidationError("divergence", "expects P.json and Q.json");
    const FiniteDist p = io::dist_from_json(io::parse(read_input(cfg.positional[0])));
    const FiniteDist q = io::dist_from_json(io::parse(read_input(cfg.positional[1])));
    if (p.arity() != q.arity())
        throw error(ErrorKind::ArityMismatch, "alphabets of size " + std::to_string(p.arity()) +
                                                  " and " + std::to_string(q.arity()));
    std::vector<std::size_t> violations;
    for (std::size_t a = 0; a < p.arity(); ++a)
        if (q[a].is_zero() && !p[a].is_zero()) violations.push_back(a);
    if (!violations.empty()) {
        if (json_output(cfg)) {
            out << json{{"dominated", false}, {"violations", violations}}.dump(2) << "\n";
        } else {
            out << "not dominated: Q(a) = 0 < P(a) at a in";
            for (auto a : violations) out << " " << a;
            out << "\n";
        }
        err << "NotDominated\n";
        return kPrecondition;
    }
    const double d = div(p, q, parse_base(cfg.base));
    if (json_output(cfg))
        out << json{{"dominated", true}, {"base", cfg.base}, {"divergence", real_to_string(d)}}.dump(2)
            << "\n";
    else
        out << "D(P||Q) = " << real_to_string(d) << (cfg.base == "2" ? " bits" : " nats") << "\n";
    return kOk;
}

// ---------------------------------------------------------------- convex-check

int cmd_convex_check(const Config& cfg, std::ostream& out) {
    const RealFn& f = find_function(cfg.fn);
    const Curvature mode = cfg.mode == "concave" ? Curvature::concave : Curvature::convex;
    const Spacing spacing = cfg.spacing == "log"      ? Spacing::log
                            : cfg.spacing == "linear" ? Spacing::linear
                                                      : Spacing::automatic;
    const Interval dom = Interval::parse(cfg.interval);
    const Tolerance tol(cfg.slack);
    LawReport r;
    r.instance = cfg.fn;
    r.seed = cfg.seed;
    r.cases = cfg.cases;
    r.add(check_convex_in(f, dom, cfg.seed, cfg.cases, tol, mode, spacing));
    r.add(second_derivative_test(f, dom, cfg.grid, tol, mode, spacing));
    if (json_output(cfg)) {
        auto j = io::report_to_json(r);
        j["mode"] = cfg.mode;
        j["interval"] = {real_to_string(dom.lo), real_to_string(dom.hi)};
        out << j.dump(2) << "\n";
    } else {
        out << cfg.fn << " " << cfg.mode << " on [" << real_to_string(dom.lo) << ", "
            << real_to_string(dom.hi) << "]\n";
        for (const auto& l : r.laws) print_law_text(l, out);
    }
    return r.ok() ? kOk : kCounterexample;
}

int exit_code_for(const error& e) {
    switch (e.kind()) {
        case ErrorKind::UnknownInstance:
        case ErrorKind::UnknownFunction: return kUsage;
        default: return kPrecondition;
    }
}

}  // namespace

std::vector<std::string> instance_names() {
    std::vector<std::string> names;
    for (const auto& [k, _] : suites()) names.push_back(k);
    return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    if (const char* env = std::getenv(kSeedEnv)) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "ignoring malformed " << kSeedEnv << "=" << env << "\n";
        }
    }

    CLI::App app{"Convex and conical spaces: law checking, barycenters, hulls, divergence", "convex-cli"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Random seed (default from $CONVEX_SEED, else 42)");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* laws = app.add_subcommand("laws", "Run the full law suite on an instance");
    add_common(laws);
    laws->add_option("--instance", cfg.instance, "Instance name")->required();
    laws->add_option("--cases", cfg.cases, "Cases per law")->check(CLI::PositiveNumber);
    laws->add_option("--max-arity", cfg.max_arity, "Largest arity sampled")->check(CLI::Range(1, 12));

    auto* bary = app.add_subcommand("barycenter", "Evaluate convn(d, x) exactly");
    add_common(bary);
    bary->add_option("--input", cfg.input, "JSON file with weights and points ('-' for stdin)")->required();
    bary->add_option("--instance", cfg.instance, "Point type: rat, vecN or fdistN (inferred by default)");

    auto* hull = app.add_subcommand("hull-split", "Split a hull witness over X u Y");
    add_common(hull);
    hull->add_option("--input", cfg.input, "JSON witness ('-' for stdin)")->required();
    hull->add_option("--x-indices", cfg.x_indices, "Comma-separated generator indices lying in X");
    hull->add_option("--instance", cfg.instance, "Point type: rat, vecN or fdistN (inferred by default)");

    auto* dv = app.add_subcommand("divergence", "Kullback-Leibler divergence D(P||Q)");
    add_common(dv);
    dv->add_option("files", cfg.positional, "P.json Q.json")->expected(2)->required();
    dv->add_option("--base", cfg.base, "Logarithm base: 2 or e")->check(CLI::IsMember({"2", "e"}));

    auto* cc = app.add_subcommand("convex-check", "Numeric convexity/concavity check of a catalog function");
    add_common(cc);
    cc->add_option("--fn", cfg.fn, "Catalog function name")->required();
    cc->add_option("--mode", cfg.mode, "convex or concave")->check(CLI::IsMember({"convex", "concave"}));
    cc->add_option("--interval", cfg.interval, "Domain as lo:hi");
    cc->add_option("--cases", cfg.cases, "Sampled (p, x, y) triples")->check(CLI::PositiveNumber);
    cc->add_option("--grid", cfg.grid, "Second-difference grid points")->check(CLI::Range(3, 10000000));
    cc->add_option("--slack", cfg.slack, "Additive tolerance")->check(CLI::NonNegativeNumber);
    cc->add_option("--spacing", cfg.spacing, "Grid/sample spacing")->check(CLI::IsMember({"auto", "linear", "log"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*laws) return cmd_laws(cfg, out);
        if (*bary) return cmd_barycenter(cfg, out);
        if (*hull) return cmd_hull_split(cfg, out);
        if (*dv) return cmd_divergence(cfg, out, err);
        if (*cc) return cmd_convex_check(cfg, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
    return kUsage;
}

}  // namespace convex::cli
