#include "charpoly/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "charpoly/baselines.hpp"
#include "charpoly/gallery.hpp"
#include "charpoly/io.hpp"
#include "charpoly/labudde.hpp"
#include "charpoly/oracle.hpp"
#include "charpoly/reduction.hpp"

namespace charpoly {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt17(*v) : std::string(); }

gallery::GallerySpec gallery_spec_from(const RunConfig& cfg) {
    gallery::GallerySpec s;
    s.name = cfg.gallery;
    s.n = cfg.n;
    if (cfg.has_forsythe_nu) s.params["nu"] = cfg.forsythe_nu;
    if (cfg.has_toeplitz_b) s.params["b"] = cfg.toeplitz_b;
    s.coeffs = cfg.companion_coeffs;
    s.seed = cfg.seed;
    s.has_seed = true;
    return s;
}

struct MethodRun {
    CoeffResult result;
    std::optional<ReductionReport> reduction;
};

/// labudde dispatch: exactly symmetric input runs the tridiagonal pipeline,
/// an already-Hessenberg input skips stage 1, anything else is reduced first.
MethodRun run_labudde(const DenseMatrix& a, int k, double nu) {
    if (a.is_symmetric()) {
        TridiagonalReduction red = to_tridiagonal(a, false, nu);
        return {charpoly_sym(red.t, k), red.report};
    }
    if (is_upper_hessenberg(a)) {
        return {charpoly_hess(validate_hessenberg(a), k), std::nullopt};
    }
    HessenbergReduction red = to_hessenberg(a, false, nu);
    return {charpoly_hess(red.h, k), red.report};
}

MethodRun run_method(const std::string& method, const DenseMatrix& a, int k, double nu) {
    if (method == "labudde") return run_labudde(a, k, nu);
    if (method == "eig-summation") {
        CoeffResult r = poly_via_eig(a);
        r.coeffs.resize(static_cast<std::size_t>(k));
        r.bounds.resize(static_cast<std::size_t>(k));
        return {std::move(r), std::nullopt};
    }
    if (method == "leverrier") {
        CoeffResult r;
        r.coeffs = leverrier(a);
        r.coeffs.resize(static_cast<std::size_t>(k));
        r.bounds.assign(static_cast<std::size_t>(k), 0.0);
        r.method = Method::leverrier;
        return {std::move(r), std::nullopt};
    }
    throw SpecError("unknown method '" + method + "'");
}

struct Row {
    int k = 0;
    double coeff = 0.0;
    std::optional<double> bound;
    std::optional<double> exact;
    std::optional<double> abs_err;
    std::optional<double> rel_err;
};

void write_csv(const std::vector<Row>& rows, std::ostream& out) {
    out << "k,coeff,bound,exact,abs_err,rel_err\n";
    for (const Row& r : rows) {
        out << r.k << ',' << fmt17(r.coeff) << ',' << fmt_opt(r.bound) << ',' << fmt_opt(r.exact)
            << ',' << fmt_opt(r.abs_err) << ',' << fmt_opt(r.rel_err) << '\n';
    }
}

nlohmann::json opt_json(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void write_json(const std::vector<Row>& rows, const MethodRun& run, int n, std::ostream& out) {
    nlohmann::json j;
    j["method"] = method_name(run.result.method);
    j["n"] = n;
    j["k"] = static_cast<int>(rows.size());
    j["underflow_flagged"] = run.result.underflow_flagged;
    if (run.reduction)
        j["reduction_backward_error_estimate"] = run.reduction->backward_error_estimate;
    nlohmann::json arr = nlohmann::json::array();
    for (const Row& r : rows) {
        nlohmann::json jr;
        jr["k"] = r.k;
        jr["coeff"] = r.coeff;
        jr["bound"] = opt_json(r.bound);
        jr["exact"] = opt_json(r.exact);
        jr["abs_err"] = opt_json(r.abs_err);
        jr["rel_err"] = opt_json(r.rel_err);
        arr.push_back(std::move(jr));
    }
    j["rows"] = std::move(arr);
    out << j.dump(2) << '\n';
}

}  // namespace

void cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.input_path.empty() == cfg.gallery.empty())
        throw SpecError("compute needs exactly one of --input or --gallery");

    DenseMatrix a(1);
    std::optional<gallery::KnownCoeffs> known;
    if (!cfg.input_path.empty()) {
        a = read_matrix_market_file(cfg.input_path);
    } else {
        gallery::GalleryMatrix g = gallery::build(gallery_spec_from(cfg));
        a = std::move(g.a);
        known = std::move(g.known);
    }

    const int n = a.order();
    const int k = cfg.k == 0 ? n : cfg.k;
    if (k < 1 || k > n) throw SpecError("need 1 <= k <= n");

    MethodRun run = run_method(cfg.method, a, k, cfg.nu);

    std::optional<RationalPoly> exact;
    if (cfg.oracle) {
        if (n > cfg.oracle_limit)
            throw SpecError("oracle limited to n <= " + std::to_string(cfg.oracle_limit) +
                            " (rational entries grow combinatorially); raise --oracle-limit "
                            "to override");
        exact = exact_charpoly(lift(a));
    }

    std::vector<Row> rows(static_cast<std::size_t>(k));
    const bool with_bounds =
        cfg.bounds &&
        (run.result.method == Method::labudde_sym || run.result.method == Method::labudde_hess);
    std::vector<CoeffError> errs;
    if (exact) errs = error_report(run.result.coeffs, *exact);
    for (int j = 1; j <= k; ++j) {
        Row& r = rows[static_cast<std::size_t>(j) - 1];
        r.k = j;
        r.coeff = run.result.coeffs[static_cast<std::size_t>(j) - 1];
        if (with_bounds) r.bound = run.result.bounds[static_cast<std::size_t>(j) - 1];
        if (exact) {
            r.exact = to_double_nearest((*exact)[static_cast<std::size_t>(j) - 1]);
            const CoeffError& e = errs[static_cast<std::size_t>(j) - 1];
            r.abs_err = e.abs_err;
            if (!e.exact_zero) r.rel_err = e.rel_err;
        }
    }

    if (cfg.format == "json")
        write_json(rows, run, n, out);
    else if (cfg.format == "csv")
        write_csv(rows, out);
    else
        throw SpecError("unknown format '" + cfg.format + "'");

    err << "method: " << method_name(run.result.method) << ", n = " << n << ", k = " << k << '\n';
    if (run.reduction)
        err << "stage 1 backward error estimate: " << fmt17(run.reduction->backward_error_estimate)
            << '\n';
    if (run.result.method == Method::eig_summation)
        err << "realify residue (largest discarded imaginary part): "
            << fmt17(run.result.realify_residue) << '\n';
    if (run.result.underflow_flagged)
        err << "warning: a subdiagonal product underflowed to zero; "
               "running bounds may be unreliable\n";
    (void)known;
}

namespace {

/// One table column: name plus per-k optional values.
struct Series {
    std::string name;
    std::vector<std::optional<double>> vals;
};

void write_series_csv(int n, const std::vector<Series>& cols, std::ostream& out) {
    out << "k";
    for (const Series& s : cols) out << ',' << s.name;
    out << '\n';
    for (int j = 1; j <= n; ++j) {
        out << j;
        for (const Series& s : cols) out << ',' << fmt_opt(s.vals[static_cast<std::size_t>(j) - 1]);
        out << '\n';
    }
}

Series abs_series(std::string name, const std::vector<CoeffError>& e) {
    Series s{std::move(name), {}};
    s.vals.reserve(e.size());
    for (const CoeffError& c : e) s.vals.emplace_back(c.abs_err);
    return s;
}

Series rel_series(std::string name, const std::vector<CoeffError>& e) {
    Series s{std::move(name), {}};
    s.vals.reserve(e.size());
    for (const CoeffError& c : e)
        s.vals.push_back(c.exact_zero ? std::optional<double>() : std::optional<double>(c.rel_err));
    return s;
}

Series bound_series(std::string name, const CoeffResult& r) {
    Series s{std::move(name), {}};
    s.vals.reserve(r.bounds.size());
    for (double b : r.bounds) s.vals.emplace_back(b);
    return s;
}

RationalPoly known_to_poly(const gallery::KnownCoeffs& kc) {
    RationalPoly p(kc.size());
    for (std::size_t i = 0; i < kc.size(); ++i) {
        if (!kc[i]) throw SpecError("internal: incomplete closed form");
        p[i] = *kc[i];
    }
    return p;
}

}  // namespace

void cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string& ex = cfg.experiment;

    if (ex == "forsythe") {
        const int n = cfg.n ? cfg.n : 200;
        gallery::GallerySpec gs;
        gs.name = "forsythe-rotated";
        gs.n = n;
        if (cfg.has_forsythe_nu) gs.params["nu"] = cfg.forsythe_nu;
        gs.seed = cfg.seed;
        gs.has_seed = true;
        gallery::GalleryMatrix g = gallery::build(gs);

        // Errors are measured against the exact characteristic polynomial of
        // the Hessenberg matrix the recursion actually received, which is
        // what the running bounds cover.
        HessenbergReduction red = to_hessenberg(g.a, false, cfg.nu);
        DenseMatrix h = red.h.dense();
        CoeffResult lb = charpoly_hess(red.h, n);
        CoeffResult eig = poly_via_eig(h);
        RationalPoly exact = exact_charpoly(lift(h));
        std::vector<CoeffError> lbe = error_report(lb.coeffs, exact);
        std::vector<CoeffError> eie = error_report(eig.coeffs, exact);

        write_series_csv(n,
                         {abs_series("labudde_abs_err", lbe), bound_series("labudde_bound", lb),
                          abs_series("eig_abs_err", eie)},
                         out);
        err << "forsythe: n = " << n << ", errors against the reduced matrix's exact"
            << " coefficients\n";
        return;
    }

    if (ex == "hansen" || ex == "toeplitz" || ex == "frank") {
        const int n = cfg.n ? cfg.n : (ex == "hansen" ? 200 : ex == "toeplitz" ? 100 : 50);
        gallery::GallerySpec gs;
        gs.name = ex == "hansen" ? "hansen" : ex == "toeplitz" ? "toeplitz-indef" : "frank";
        gs.n = n;
        if (ex == "toeplitz" && cfg.has_toeplitz_b) gs.params["b"] = cfg.toeplitz_b;
        gallery::GalleryMatrix g = gallery::build(gs);

        RationalPoly exact = ex == "hansen" ? known_to_poly(*g.known) : exact_charpoly(lift(g.a));
        MethodRun lb = run_labudde(g.a, n, cfg.nu);
        CoeffResult eig = poly_via_eig(g.a);
        std::vector<CoeffError> lbe = error_report(lb.result.coeffs, exact);
        std::vector<CoeffError> eie = error_report(eig.coeffs, exact);

        write_series_csv(n,
                         {abs_series("labudde_abs_err", lbe),
                          bound_series("labudde_bound", lb.result),
                          rel_series("labudde_rel_err", lbe), abs_series("eig_abs_err", eie),
                          rel_series("eig_rel_err", eie)},
                         out);
        err << ex << ": n = " << n << ", method " << method_name(lb.result.method) << '\n';
        return;
    }

    if (ex == "chow") {
        const int n = cfg.n ? cfg.n : 50;
        gallery::GallerySpec gs;
        gs.name = "chow-transpose";
        gs.n = n;
        gallery::GalleryMatrix gt = gallery::build(gs);
        DenseMatrix c = gt.a.transposed();

        RationalPoly exact = exact_charpoly(lift(gt.a));  // transpose-invariant
        CoeffResult ct_lb = charpoly_hess(validate_hessenberg(gt.a), n);
        CoeffResult ct_eig = poly_via_eig(gt.a);
        HessenbergReduction red = to_hessenberg(c, false, cfg.nu);
        CoeffResult c_lb = charpoly_hess(red.h, n);
        CoeffResult c_eig = poly_via_eig(c);

        write_series_csv(n,
                         {rel_series("ct_labudde_rel_err", error_report(ct_lb.coeffs, exact)),
                          rel_series("ct_eig_rel_err", error_report(ct_eig.coeffs, exact)),
                          rel_series("c_labudde_rel_err", error_report(c_lb.coeffs, exact)),
                          rel_series("c_eig_rel_err", error_report(c_eig.coeffs, exact))},
                         out);
        err << "chow: n = " << n << ", transposed variant runs without stage 1\n";
        return;
    }

    throw SpecError("unknown experiment '" + ex +
                    "' (expected forsythe, hansen, toeplitz, frank, or chow)");
}

namespace {

double best_of_3(const std::function<void()>& work) {
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        work();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

double fit_exponent(const std::vector<int>& ns, const std::vector<double>& ts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double x = std::log(static_cast<double>(ns[i]));
        const double y = std::log(std::max(ts[i], 1e-12));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

void cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.bench_sizes.size() < 2) throw SpecError("bench needs at least two sizes");
    for (int n : cfg.bench_sizes)
        if (n < 2) throw SpecError("bench sizes must be at least 2");

    std::vector<double> s1(cfg.bench_sizes.size()), s2(cfg.bench_sizes.size()),
        tot(cfg.bench_sizes.size());
    out << "n,stage1_seconds,stage2_seconds,total_seconds\n";
    for (std::size_t i = 0; i < cfg.bench_sizes.size(); ++i) {
        const int n = cfg.bench_sizes[i];
        std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(n));
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        DenseMatrix a(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a(r, c) = dist(rng);

        s1[i] = best_of_3([&] { to_hessenberg(a); });
        HessenbergReduction red = to_hessenberg(a);
        s2[i] = best_of_3([&] { charpoly_hess(red.h, n); });
        tot[i] = s1[i] + s2[i];
        char line[160];
        std::snprintf(line, sizeof line, "%d,%.6g,%.6g,%.6g\n", n, s1[i], s2[i], tot[i]);
        out << line;
    }
    char meta[240];
    std::snprintf(meta, sizeof meta,
                  "# stage1_scaling_exponent,%.3f\n# stage2_scaling_exponent,%.3f\n"
                  "# total_scaling_exponent,%.3f\n",
                  fit_exponent(cfg.bench_sizes, s1), fit_exponent(cfg.bench_sizes, s2),
                  fit_exponent(cfg.bench_sizes, tot));
    out << meta;
    err << "bench: best of 3 runs per size, seed " << cfg.seed << '\n';
}

namespace {

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw SpecError("empty entry in list '" + s + "'");
        std::size_t used = 0;
        out.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw SpecError("bad number '" + tok + "'");
    }
    if (out.empty()) throw SpecError("empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_double_list(s)) {
        if (v != std::floor(v) || std::abs(v) > 1e9) throw SpecError("bad integer in '" + s + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string coeffs_arg, sizes_arg;
    bool no_bounds = false;

    CLI::App app{"characteristic polynomial coefficients with running error bounds"};
    app.require_subcommand(1);

    CLI::App* compute = app.add_subcommand("compute", "coefficients of one matrix");
    compute->add_option("--input", cfg.input_path, "Matrix Market file");
    compute->add_option("--gallery", cfg.gallery, "gallery family name");
    compute->add_option("--n", cfg.n, "matrix order");
    compute->add_option("--k", cfg.k, "number of coefficients (default: all)");
    compute->add_option("--method", cfg.method, "labudde | eig-summation | leverrier");
    compute->add_flag("--no-bounds", no_bounds, "omit running error bounds");
    compute->add_flag("--oracle", cfg.oracle, "compare against the exact rational oracle");
    compute->add_option("--oracle-limit", cfg.oracle_limit, "max n the oracle accepts");
    compute->add_option("--format", cfg.format, "csv | json");
    auto* seed_c = compute->add_option("--seed", cfg.seed, "seed for seeded families");
    compute->add_option("--nu", cfg.nu, "stage 1 backward error model constant");
    auto* fnu_c = compute->add_option("--forsythe-nu", cfg.forsythe_nu, "forsythe perturbation");
    auto* b_c = compute->add_option("--b", cfg.toeplitz_b, "toeplitz off-diagonal");
    compute->add_option("--coeffs", coeffs_arg, "companion coefficients, comma separated");

    CLI::App* reproduce = app.add_subcommand("reproduce", "emit one experiment's data series");
    reproduce->add_option("experiment", cfg.experiment,
                          "forsythe | hansen | toeplitz | frank | chow")
        ->required();
    reproduce->add_option("--n", cfg.n, "override the experiment's size");
    auto* seed_r = reproduce->add_option("--seed", cfg.seed, "seed for the rotation");
    reproduce->add_option("--nu", cfg.nu, "stage 1 backward error model constant");
    auto* fnu_r = reproduce->add_option("--forsythe-nu", cfg.forsythe_nu, "forsythe perturbation");
    auto* b_r = reproduce->add_option("--b", cfg.toeplitz_b, "toeplitz off-diagonal");

    CLI::App* bench = app.add_subcommand("bench", "stage timings and scaling exponents");
    bench->add_option("--sizes", sizes_arg, "comma separated matrix orders")->required();
    auto* seed_b = bench->add_option("--seed", cfg.seed, "seed for the random matrices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        const bool seed_given =
            seed_c->count() > 0 || seed_r->count() > 0 || seed_b->count() > 0;
        if (!seed_given) {
            if (const char* env = std::getenv("CHARPOLY_SEED")) {
                std::size_t used = 0;
                const std::string s(env);
                unsigned long long v = 0;
                try {
                    v = std::stoull(s, &used);
                } catch (const std::exception&) {
                    throw SpecError("CHARPOLY_SEED is not an unsigned integer");
                }
                if (used != s.size()) throw SpecError("CHARPOLY_SEED is not an unsigned integer");
                cfg.seed = v;
            }
        }
        cfg.bounds = !no_bounds;
        cfg.has_forsythe_nu = fnu_c->count() > 0 || fnu_r->count() > 0;
        cfg.has_toeplitz_b = b_c->count() > 0 || b_r->count() > 0;
        if (!coeffs_arg.empty()) cfg.companion_coeffs = parse_double_list(coeffs_arg);
        if (!sizes_arg.empty()) cfg.bench_sizes = parse_int_list(sizes_arg);

        if (compute->parsed()) {
            cfg.command = "compute";
            cmd_compute(cfg, out, err);
        } else if (reproduce->parsed()) {
            cfg.command = "reproduce";
            cmd_reproduce(cfg, out, err);
        } else {
            cfg.command = "bench";
            cmd_bench(cfg, out, err);
        }
        return 0;
    } catch (const SpecError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const StructureError& e) {
        err << "structure error: " << e.what() << '\n';
        return 3;
    } catch (const HypothesisError& e) {
        err << "hypothesis violation: " << e.what() << '\n';
        return 5;
    } catch (const OverflowError& e) {
        err << "numeric error: " << e.what() << '\n';
        return 4;
    } catch (const DomainError& e) {
        err << "numeric error: " << e.what() << '\n';
        return 4;
    } catch (const EigFailure& e) {
        err << "numeric error: " << e.what() << '\n';
        return 4;
    } catch (const IndexError& e) {
        err << "numeric error: " << e.what() << '\n';
        return 4;
    }
}

}  // namespace charpoly
