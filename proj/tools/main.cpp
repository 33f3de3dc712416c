// sphdes command line: catalog designs, strength verification, optimality
// criteria, numerical construction, stereograms, model fit/simulation.
// Talks to the library exclusively through the C API in sphdes.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphdes.h"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 verification negative, 2 input error,
// 3 convergence failure.
struct CliError {
    int exit_code;
    std::string message;
};

int exit_code_for(sphdes_status status) {
    switch (status) {
        case SPHDES_ERR_NO_CONVERGENCE: return 3;
        default: return 2;
    }
}

void check(sphdes_status status) {
    if (status != SPHDES_OK) throw CliError{exit_code_for(status), sphdes_last_error()};
}

struct DesignHandle {
    sphdes_design* ptr = nullptr;
    DesignHandle() = default;
    explicit DesignHandle(sphdes_design* p) : ptr(p) {}
    DesignHandle(const DesignHandle&) = delete;
    DesignHandle& operator=(const DesignHandle&) = delete;
    DesignHandle(DesignHandle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
    ~DesignHandle() { sphdes_design_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { sphdes_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{2, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{2, "cannot write " + path};
    out << text;
}

DesignHandle load_design(const std::string& path) {
    const std::string text = read_input(path);
    DesignHandle d;
    check(sphdes_design_parse(text.c_str(), &d.ptr));
    return d;
}

// Whitespace-separated numbers; '#' starts a comment line.
std::vector<double> read_numbers(const std::string& path) {
    const std::string text = read_input(path);
    std::vector<double> values;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;
        std::istringstream fields(line);
        std::string word;
        while (fields >> word) {
            try {
                std::size_t used = 0;
                const double v = std::stod(word, &used);
                if (used != word.size()) throw std::invalid_argument(word);
                values.push_back(v);
            } catch (const std::exception&) {
                throw CliError{2, path + ": line " + std::to_string(line_no) +
                                      ": not a number: '" + word + "'"};
            }
        }
    }
    return values;
}

std::string format_design(const sphdes_design* d, int precision, bool flat) {
    OwnedString s;
    check(sphdes_design_format(d, precision, flat ? 1 : 0, &s.ptr));
    return s.str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SPHDES_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CliError{2, "SPHDES_SEED is not an unsigned integer"};
        }
    }
    return 0;
}

json design_json(const sphdes_design* d) {
    const std::size_t n = sphdes_design_size(d);
    std::vector<double> xyz(3 * n);
    check(sphdes_design_coords(d, xyz.data()));
    json points = json::array();
    for (std::size_t i = 0; i < n; ++i)
        points.push_back({xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]});
    return points;
}

// ---- subcommand state ---------------------------------------------------

struct CatalogArgs {
    std::string name;
    int d = 1;
    double alpha = 0.0;
    int n_theta = 0;
    int n_phi = 0;
    std::string out = "-";
};

struct VerifyArgs {
    std::string file;
    int t = 1;
    double tol = 1e-10;
    bool oracle = false;
    int trials = 200;
    std::optional<std::uint64_t> seed;
};

struct CriteriaArgs {
    std::string file;
    int d = 0;
    std::vector<double> p;
};

struct ConstructArgs {
    int t = 1;
    std::size_t n = 0;
    int starts = 20;
    std::optional<std::uint64_t> seed;
    double tol = 1e-10;
    long max_iters = 20000;
    std::string out = "-";
};

struct StereogramArgs {
    std::string file;
    std::string out = "-";
    bool grid = false;
    int size = 480;
    double marker = 5.0;
    int meridians = 12;
    int parallels = 2;
};

struct FitArgs {
    std::string design_file;
    std::string obs_file;
    int d = 0;
};

struct SimulateArgs {
    std::string design_file;
    int d = 0;
    std::optional<std::uint64_t> seed;
    double noise = 1.0;
    std::string coeffs_file;
};

struct ConvertArgs {
    std::string file;
    std::string format = "triples";
    std::string out = "-";
    int precision = 17;
};

int run_catalog(const CatalogArgs& a) {
    DesignHandle d;
    if (a.name == "product") {
        check(sphdes_design_product(a.d, a.n_theta, a.n_phi, a.alpha, &d.ptr));
    } else {
        check(sphdes_design_platonic(a.name.c_str(), &d.ptr));
    }
    write_output(a.out, format_design(d.ptr, 17, false));
    return 0;
}

int run_verify(const VerifyArgs& a, bool as_json) {
    DesignHandle d = load_design(a.file);
    std::vector<double> residuals(static_cast<std::size_t>(a.t));
    int strength = 0;
    check(sphdes_strength(d.ptr, a.t, a.tol, &strength, residuals.data()));
    const bool passed = strength >= a.t;

    double oracle_dev = 0.0;
    if (a.oracle)
        check(sphdes_monomial_check(d.ptr, a.t, a.trials, a.seed.value_or(default_seed()),
                                    &oracle_dev));

    if (as_json) {
        json out{{"n", sphdes_design_size(d.ptr)},
                 {"t", a.t},
                 {"tol", a.tol},
                 {"strength", strength},
                 {"residuals", residuals},
                 {"passed", passed}};
        if (a.oracle) out["oracle_deviation"] = oracle_dev;
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("design: %zu points\n", sphdes_design_size(d.ptr));
        for (int l = 1; l <= a.t; ++l)
            std::printf("  r_%-3d = %.3e%s\n", l, residuals[static_cast<std::size_t>(l - 1)],
                        residuals[static_cast<std::size_t>(l - 1)] <= a.tol ? "" : "  <-- exceeds tol");
        std::printf("strength >= %d (tol %.1e): %s\n", a.t, a.tol, passed ? "yes" : "NO");
        if (a.oracle)
            std::printf("monomial oracle: max deviation %.3e over %d trials\n", oracle_dev,
                        a.trials);
    }
    return passed ? 0 : 1;
}

int run_criteria(const CriteriaArgs& a, bool as_json) {
    DesignHandle d = load_design(a.file);
    sphdes_criteria_report report{};
    std::vector<double> phi(a.p.size());
    check(sphdes_criteria(d.ptr, a.d, a.p.data(), a.p.size(), phi.data(), &report));

    if (as_json) {
        json out{{"d", a.d},
                 {"n", sphdes_design_size(d.ptr)},
                 {"d_criterion", report.d_criterion},
                 {"a_criterion", report.a_criterion},
                 {"e_criterion", report.e_criterion},
                 {"identity_deviation", report.identity_deviation},
                 {"singular", report.singular != 0}};
        json phis = json::array();
        for (std::size_t i = 0; i < a.p.size(); ++i)
            phis.push_back({{"p", a.p[i]}, {"phi", phi[i]}});
        out["phi_p"] = phis;
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("order d = %d, %zu points, %d parameters\n", a.d, sphdes_design_size(d.ptr),
                    (a.d + 1) * (a.d + 1));
        if (report.singular) std::printf("information matrix is SINGULAR\n");
        std::printf("D-criterion        = %.12f\n", report.d_criterion);
        std::printf("A-criterion        = %.12f\n", report.a_criterion);
        std::printf("E-criterion        = %.12f\n", report.e_criterion);
        for (std::size_t i = 0; i < a.p.size(); ++i)
            std::printf("phi_%-14g = %.12f\n", a.p[i], phi[i]);
        std::printf("max |M - I|        = %.3e\n", report.identity_deviation);
    }
    return 0;
}

int run_construct(const ConstructArgs& a, bool as_json) {
    DesignHandle d;
    sphdes_construct_report report{};
    check(sphdes_construct(a.t, a.n, a.starts, a.seed.value_or(default_seed()), a.max_iters,
                           a.tol, &d.ptr, &report));

    // Independent verification of the outcome: residual strength and the
    // monomial oracle.
    int strength = 0;
    check(sphdes_strength(d.ptr, a.t, a.tol, &strength, nullptr));
    double oracle_dev = 0.0;
    check(sphdes_monomial_check(d.ptr, a.t, 200, a.seed.value_or(default_seed()), &oracle_dev));
    const bool verified = report.converged && strength >= a.t && oracle_dev < 1e-9;

    const std::string text = format_design(d.ptr, 17, false);
    const bool design_on_stdout = a.out.empty() || a.out == "-";

    if (as_json) {
        json out{{"t", a.t},
                 {"n", a.n},
                 {"residual", report.residual},
                 {"iterations", report.iterations},
                 {"start_index", report.start_index},
                 {"converged", report.converged != 0},
                 {"verified_strength", strength},
                 {"oracle_deviation", oracle_dev},
                 {"verified", verified},
                 {"design", design_json(d.ptr)}};
        std::cout << out.dump(2) << "\n";
        if (!design_on_stdout) write_output(a.out, text);
    } else {
        write_output(a.out, text);
        std::FILE* rep = design_on_stdout ? stderr : stdout;
        std::fprintf(rep, "residual  = %.3e (tol %.1e)\n", report.residual, a.tol);
        std::fprintf(rep, "converged = %s (start %d, %ld iterations)\n",
                     report.converged ? "yes" : "NO", report.start_index, report.iterations);
        std::fprintf(rep, "verified  = %s (strength %d, oracle deviation %.3e)\n",
                     verified ? "yes" : "NO", strength, oracle_dev);
    }
    return report.converged ? 0 : 3;
}

int run_stereogram(const StereogramArgs& a) {
    DesignHandle d = load_design(a.file);
    sphdes_stereogram_style style;
    sphdes_stereogram_style_default(&style);
    style.canvas_px = a.size;
    style.marker_radius_px = a.marker;
    style.meridians = a.meridians;
    style.parallels = a.parallels;
    style.draw_grid = a.grid ? 1 : 0;
    OwnedString svg;
    check(sphdes_stereogram_svg(d.ptr, &style, &svg.ptr));
    write_output(a.out, svg.str());
    return 0;
}

int run_fit(const FitArgs& a, bool as_json) {
    DesignHandle d = load_design(a.design_file);
    const std::vector<double> y = read_numbers(a.obs_file);
    if (y.size() != sphdes_design_size(d.ptr))
        throw CliError{2, "observation count " + std::to_string(y.size()) +
                              " does not match design size " +
                              std::to_string(sphdes_design_size(d.ptr))};
    const int k = (a.d + 1) * (a.d + 1);
    std::vector<double> coeffs(static_cast<std::size_t>(k));
    check(sphdes_fit(d.ptr, y.data(), y.size(), a.d, coeffs.data()));

    if (as_json) {
        json out{{"d", a.d}, {"coefficients", coeffs}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("# l m c_l^m\n");
        int idx = 0;
        for (int l = 0; l <= a.d; ++l)
            for (int m = -l; m <= l; ++m, ++idx)
                std::printf("%d %d %.17g\n", l, m, coeffs[static_cast<std::size_t>(idx)]);
    }
    return 0;
}

int run_simulate(const SimulateArgs& a) {
    DesignHandle d = load_design(a.design_file);
    const int k = (a.d + 1) * (a.d + 1);
    std::vector<double> coeffs;
    if (!a.coeffs_file.empty()) {
        coeffs = read_numbers(a.coeffs_file);
        if (coeffs.size() != static_cast<std::size_t>(k))
            throw CliError{2, "expected " + std::to_string(k) + " coefficients, got " +
                                  std::to_string(coeffs.size())};
    }
    std::vector<double> y(sphdes_design_size(d.ptr));
    check(sphdes_simulate(d.ptr, a.d, coeffs.empty() ? nullptr : coeffs.data(), a.noise,
                          a.seed.value_or(default_seed()), y.data()));
    std::string text;
    char buf[40];
    for (double v : y) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        text += buf;
    }
    write_output("-", text);
    return 0;
}

int run_table(bool as_json) {
    json rows = json::array();
    if (!as_json)
        std::printf("  d params t_min bound n_theta n_phi n_tot verified\n");
    for (int d = 1; d <= 7; ++d) {
        DesignHandle pd;
        check(sphdes_design_product(d, 0, 0, 0.0, &pd.ptr));
        int strength = 0;
        check(sphdes_strength(pd.ptr, 2 * d, 1e-10, &strength, nullptr));
        const int n_theta = sphdes_default_polar_count(d);
        const int n_phi = 2 * d + 1;
        const long bound = sphdes_lower_bound(2 * d);
        const bool ok = strength >= 2 * d;
        if (as_json) {
            rows.push_back({{"d", d},
                            {"params", (d + 1) * (d + 1)},
                            {"t_min", 2 * d},
                            {"lower_bound", bound},
                            {"n_theta", n_theta},
                            {"n_phi", n_phi},
                            {"n_tot", sphdes_design_size(pd.ptr)},
                            {"verified", ok}});
        } else {
            std::printf("%3d %6d %5d %5ld %7d %5d %5zu %s\n", d, (d + 1) * (d + 1), 2 * d, bound,
                        n_theta, n_phi, sphdes_design_size(pd.ptr), ok ? "yes" : "NO");
        }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return 0;
}

int run_convert(const ConvertArgs& a) {
    DesignHandle d = load_design(a.file);
    if (a.format != "triples" && a.format != "flat")
        throw CliError{2, "unknown format '" + a.format + "' (triples|flat)"};
    write_output(a.out, format_design(d.ptr, a.precision, a.format == "flat"));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spherical t-designs for spherical harmonic regression"};
    app.require_subcommand(1);
    bool as_json = false;

    CatalogArgs cat;
    auto* catalog = app.add_subcommand("catalog", "emit a built-in design");
    catalog->add_option("name", cat.name,
                        "tetrahedron|octahedron|cube|icosahedron|dodecahedron|product")
        ->required();
    catalog->add_option("--d", cat.d, "model order (product)");
    catalog->add_option("--alpha", cat.alpha, "azimuth offset in radians (product)");
    catalog->add_option("--ntheta", cat.n_theta, "polar node count override (product)");
    catalog->add_option("--nphi", cat.n_phi, "azimuth count override (product)");
    catalog->add_option("-o,--output", cat.out, "output file ('-' = stdout)");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "strength report; exit 1 if strength < t");
    verify->add_option("file", ver.file, "design file ('-' = stdin)")->required();
    verify->add_option("--t", ver.t, "strength to verify")->required();
    verify->add_option("--tol", ver.tol, "residual tolerance (default 1e-10)");
    verify->add_flag("--oracle", ver.oracle, "also run the monomial integration oracle");
    verify->add_option("--trials", ver.trials, "oracle trials (default 200)");
    verify->add_option("--seed", ver.seed, "oracle seed");
    verify->add_flag("--json", as_json, "emit the report as JSON");

    CriteriaArgs cri;
    auto* criteria = app.add_subcommand("criteria", "optimality criteria report");
    criteria->add_option("file", cri.file, "design file ('-' = stdin)")->required();
    criteria->add_option("--d", cri.d, "model order")->required();
    criteria->add_option("--p", cri.p, "phi_p exponents (p > 0)")->delimiter(',');
    criteria->add_flag("--json", as_json, "emit the report as JSON");

    ConstructArgs con;
    auto* construct = app.add_subcommand("construct", "build a t-design numerically");
    construct->add_option("--t", con.t, "target strength")->required();
    construct->add_option("--n", con.n, "point count")->required();
    construct->add_option("--starts", con.starts, "random starts (default 20)")
        ->check(CLI::PositiveNumber);
    construct->add_option("--seed", con.seed, "base seed");
    construct->add_option("--tol", con.tol, "residual target (default 1e-10)");
    construct->add_option("--max-iters", con.max_iters, "iteration cap per start");
    construct->add_option("-o,--output", con.out, "design output file ('-' = stdout)");
    construct->add_flag("--json", as_json, "emit the report as JSON");

    StereogramArgs ste;
    auto* stereogram = app.add_subcommand("stereogram", "render a design as an SVG stereogram");
    stereogram->add_option("file", ste.file, "design file ('-' = stdin)")->required();
    stereogram->add_option("-o,--output", ste.out, "SVG output file ('-' = stdout)");
    stereogram->add_flag("--grid", ste.grid, "draw meridians and parallels");
    stereogram->add_option("--size", ste.size, "canvas size in px");
    stereogram->add_option("--marker", ste.marker, "marker radius in px");
    stereogram->add_option("--meridians", ste.meridians, "grid meridian count");
    stereogram->add_option("--parallels", ste.parallels, "grid parallel count");

    FitArgs fit;
    auto* fitc = app.add_subcommand("fit", "least-squares coefficient estimates");
    fitc->add_option("design", fit.design_file, "design file ('-' = stdin)")->required();
    fitc->add_option("obs", fit.obs_file, "observations, one per point")->required();
    fitc->add_option("--d", fit.d, "model order")->required();
    fitc->add_flag("--json", as_json, "emit the report as JSON");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "draw observations from the model");
    simulate->add_option("design", sim.design_file, "design file ('-' = stdin)")->required();
    simulate->add_option("--d", sim.d, "model order")->required();
    simulate->add_option("--seed", sim.seed, "noise seed");
    simulate->add_option("--noise", sim.noise, "noise standard deviation (default 1)");
    simulate->add_option("--coeffs", sim.coeffs_file, "coefficient file (default all zero)");

    auto* table = app.add_subcommand("table", "product designs vs minimum design sizes, d = 1..7");
    table->add_flag("--json", as_json, "emit the table as JSON");

    ConvertArgs cvt;
    auto* convert = app.add_subcommand("convert", "rewrite a design file");
    convert->add_option("file", cvt.file, "design file ('-' = stdin)")->required();
    convert->add_option("--format", cvt.format, "triples|flat")->required();
    convert->add_option("-o,--output", cvt.out, "output file ('-' = stdout)");
    convert->add_option("--precision", cvt.precision, "significant digits (6..17)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (catalog->parsed()) return run_catalog(cat);
        if (verify->parsed()) return run_verify(ver, as_json);
        if (criteria->parsed()) return run_criteria(cri, as_json);
        if (construct->parsed()) return run_construct(con, as_json);
        if (stereogram->parsed()) return run_stereogram(ste);
        if (fitc->parsed()) return run_fit(fit, as_json);
        if (simulate->parsed()) return run_simulate(sim);
        if (table->parsed()) return run_table(as_json);
        if (convert->parsed()) return run_convert(cvt);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    }
    return 2;
}
