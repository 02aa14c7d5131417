#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "matchk/approx.hpp"
#include "matchk/exact.hpp"
#include "matchk/graph.hpp"
#include "matchk/io.hpp"
#include "matchk/polynomial.hpp"
#include "matchk/reduction.hpp"

namespace {

using namespace matchk;

constexpr int kExitParse = 2;
constexpr int kExitDisagree = 3;
constexpr int kExitCap = 4;

struct CountArgs {
    std::string input;
    std::string mode;
    std::string method = "direct";
    std::size_t k = 0;
    bool k_given = false;
    bool check = false;
};

// k-matching weight sum of whatever the input describes, by brute-force
// enumeration; the cross-check everything else is compared against.
Rational brute_value(const ParsedInput& in, std::size_t k) {
    switch (in.kind) {
        case InputKind::Bipartite:
            return weighted_matching_sum(graph_from_matrix(*in.matrix), k);
        case InputKind::Symmetric:
            return weighted_matching_sum(graph_from_symmetric(*in.symmetric), k);
        case InputKind::Graph:
            return weighted_matching_sum(*in.graph, k);
    }
    throw ArgumentError("unreachable");
}

int run_count(const CountArgs& args, const ExactCaps& caps) {
    ParsedInput in = read_input(args.input);
    std::size_t k = args.k;
    // name -> value, every applicable method when --check is on
    std::map<std::string, Rational> results;
    auto want = [&](const std::string& m) { return args.check || args.method == m; };

    if (args.mode == "perm") {
        if (in.kind != InputKind::Bipartite)
            throw ArgumentError("mode perm requires a rectangular matrix input");
        if (want("direct") || want("reduction")) results["direct"] = permanent(*in.matrix, caps);
        if (args.check && in.matrix->square())
            results["brute"] = brute_value(in, in.matrix->rows());
        else if (args.method == "brute")
            results["brute"] = brute_value(in, in.matrix->rows());
    } else if (args.mode == "haf") {
        if (in.kind != InputKind::Symmetric)
            throw ArgumentError("mode haf requires a symmetric matrix input");
        if (want("direct") || want("reduction")) results["direct"] = hafnian(*in.symmetric, caps);
        if (want("brute")) results["brute"] = brute_value(in, in.symmetric->order() / 2);
    } else if (args.mode == "perm_k") {
        if (in.kind != InputKind::Bipartite)
            throw ArgumentError("mode perm_k requires a rectangular matrix input");
        if (!args.k_given) throw ArgumentError("mode perm_k requires --k");
        if (want("direct")) results["direct"] = perm_k_direct(*in.matrix, k, caps);
        if (want("reduction")) results["reduction"] = perm_k_via_reduction(*in.matrix, k, caps);
        if (want("brute")) results["brute"] = brute_value(in, k);
    } else if (args.mode == "haf_k") {
        if (in.kind != InputKind::Symmetric)
            throw ArgumentError("mode haf_k requires a symmetric matrix input");
        if (!args.k_given) throw ArgumentError("mode haf_k requires --k");
        if (want("direct")) results["direct"] = haf_k_direct(*in.symmetric, k, caps);
        if (want("reduction")) results["reduction"] = haf_k_via_reduction(*in.symmetric, k, caps);
        if (want("brute")) results["brute"] = brute_value(in, k);
    } else if (args.mode == "matchings") {
        if (in.kind != InputKind::Graph)
            throw ArgumentError("mode matchings requires a graph input");
        if (!args.k_given) throw ArgumentError("mode matchings requires --k");
        results["brute"] = count_k_matchings(*in.graph, k);
    } else {
        throw ArgumentError("unknown mode: " + args.mode);
    }

    if (results.empty()) throw ArgumentError("method " + args.method + " not applicable");
    const Rational& first = results.begin()->second;
    for (const auto& [name, value] : results) {
        if (value != first) {
            std::cerr << "method disagreement: " << results.begin()->first << "="
                      << format_rational(first) << " vs " << name << "="
                      << format_rational(value) << "\n";
            return kExitDisagree;
        }
    }
    std::cout << format_rational(first) << "\n";
    return 0;
}

int run_poly(const std::string& input, const std::string& kind, bool verify,
             const ExactCaps& caps) {
    ParsedInput in = read_input(input);
    MatchingPolynomial p = [&] {
        if (in.kind == InputKind::Bipartite) {
            if (kind == "general") throw ArgumentError("input is a rectangular matrix");
            return matching_poly_bipartite(*in.matrix, caps);
        }
        if (kind == "bipartite") throw ArgumentError("input is not a rectangular matrix");
        SymZeroDiagMatrix a = (in.kind == InputKind::Symmetric) ? *in.symmetric
                                                                : symmetric_from_graph(*in.graph);
        return matching_poly_general(a, caps);
    }();
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        std::cout << (i ? " " : "") << format_rational(p.coefficients()[i]);
    std::cout << "\n";
    if (verify) {
        RootReport r = verify_real_negative_roots(p);
        std::cout << "real-negative-roots: " << (r.all_real_negative ? "true" : "false") << "\n";
    }
    return 0;
}

int run_reduce(const std::string& input, const std::string& output, std::size_t k,
               const std::string& kind) {
    ParsedInput in = read_input(input);
    std::ofstream out(output);
    if (!out) throw ParseError("cannot open output file: " + output);
    if (in.kind == InputKind::Bipartite) {
        if (kind == "general") throw ArgumentError("input is a rectangular matrix");
        write_matrix(out, build_Bk(*in.matrix, k));
    } else {
        if (kind == "bipartite") throw ArgumentError("input is not a rectangular matrix");
        SymZeroDiagMatrix a = (in.kind == InputKind::Symmetric) ? *in.symmetric
                                                                : symmetric_from_graph(*in.graph);
        write_symmetric(out, build_Ak(a, k));
    }
    return 0;
}

struct EstimateArgs {
    std::string input;
    std::string mode;
    std::size_t k = 0;
    bool k_given = false;
    double x = 1.0;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    double eps = 0.0, delta = 0.0;
    bool weight_proportional = false;
};

int run_estimate(const EstimateArgs& args) {
    ParsedInput in = read_input(args.input);
    SamplerOptions opts;
    opts.weight_proportional = args.weight_proportional;
    if (args.eps > 0.0 && args.delta > 0.0) opts.target = EstimateTarget{args.eps, args.delta};

    auto need_matrix = [&]() -> const NonnegMatrix& {
        if (in.kind != InputKind::Bipartite)
            throw ArgumentError("this mode requires a rectangular matrix input");
        return *in.matrix;
    };
    auto need_symmetric = [&]() -> SymZeroDiagMatrix {
        if (in.kind == InputKind::Symmetric) return *in.symmetric;
        if (in.kind == InputKind::Graph) return symmetric_from_graph(*in.graph);
        throw ArgumentError("this mode requires a symmetric matrix or graph input");
    };

    EstimateReport r;
    if (args.mode == "perm") {
        r = estimate_permanent(need_matrix(), args.samples, args.seed, opts);
    } else if (args.mode == "perm_k") {
        if (!args.k_given) throw ArgumentError("mode perm_k requires --k");
        r = estimate_perm_k(need_matrix(), args.k, args.samples, args.seed, opts);
    } else if (args.mode == "haf") {
        r = estimate_hafnian(need_symmetric(), args.samples, args.seed, opts);
    } else if (args.mode == "haf_k") {
        if (!args.k_given) throw ArgumentError("mode haf_k requires --k");
        r = estimate_haf_k(need_symmetric(), args.k, args.samples, args.seed, opts);
    } else if (args.mode == "poly") {
        r = estimate_matching_poly_eval(need_matrix(), args.x, args.samples, args.seed, opts);
    } else {
        throw ArgumentError("unknown mode: " + args.mode);
    }
    std::cout.precision(17);
    std::cout << "estimate=" << r.estimate << " stderr=" << r.standard_error
              << " samples=" << r.samples << " seed=" << r.seed << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and randomized k-matching counting"};
    app.require_subcommand(1);

    std::size_t max_n = 0;
    app.add_option("--max-n", max_n, "override all exponential-kernel size caps");

    CountArgs count;
    auto* c = app.add_subcommand("count", "exact counting");
    c->add_option("input", count.input, "matrix or graph file")->required();
    c->add_option("--mode", count.mode, "perm|haf|perm_k|haf_k|matchings")->required();
    c->add_option("--k", count.k)->each([&](const std::string&) { count.k_given = true; });
    c->add_option("--method", count.method, "direct|reduction|brute");
    c->add_flag("--check", count.check, "run all applicable methods, fail on disagreement");

    std::string poly_input, poly_kind;
    bool poly_verify = false;
    auto* p = app.add_subcommand("poly", "matching polynomial coefficients");
    p->add_option("input", poly_input)->required();
    p->add_option("--kind", poly_kind, "bipartite|general (default: inferred)");
    p->add_flag("--verify-roots", poly_verify);

    std::string red_input, red_output, red_kind;
    std::size_t red_k = 0;
    auto* r = app.add_subcommand("reduce", "write the padded block matrix B_k / A_k");
    r->add_option("input", red_input)->required();
    r->add_option("output", red_output)->required();
    r->add_option("--k", red_k)->required();
    r->add_option("--kind", red_kind, "bipartite|general (default: inferred)");

    EstimateArgs est;
    auto* e = app.add_subcommand("estimate", "Monte Carlo estimation");
    e->add_option("input", est.input)->required();
    e->add_option("--mode", est.mode, "perm|perm_k|haf|haf_k|poly")->required();
    e->add_option("--k", est.k)->each([&](const std::string&) { est.k_given = true; });
    e->add_option("--x", est.x, "evaluation point for mode poly");
    e->add_option("--samples", est.samples);
    e->add_option("--seed", est.seed);
    e->add_option("--eps", est.eps, "relative-error target (with --delta)");
    e->add_option("--delta", est.delta, "failure-probability target (with --eps)");
    e->add_flag("--weight-proportional", est.weight_proportional);

    CLI11_PARSE(app, argc, argv);

    ExactCaps caps;
    if (max_n > 0) caps = {max_n, max_n, max_n};

    try {
        if (*c) return run_count(count, caps);
        if (*p) return run_poly(poly_input, poly_kind, poly_verify, caps);
        if (*r) return run_reduce(red_input, red_output, red_k, red_kind);
        if (*e) return run_estimate(est);
    } catch (const ResourceLimitError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitCap;
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const ArgumentError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
