#include "sphdes.h"

#include <cstring>
#include <exception>
#include <new>
#include <span>
#include <string>

#include "core/catalog.hpp"
#include "core/construct.hpp"
#include "core/cubature.hpp"
#include "core/designio.hpp"
#include "core/harmonics.hpp"
#include "core/optimality.hpp"
#include "core/sphere.hpp"
#include "core/stereogram.hpp"

struct sphdes_design {
    sphdes::Design design;
};

namespace {

thread_local std::string g_last_error;

sphdes_status fail(sphdes_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Maps core exceptions onto the status enum.
template <typename Fn>
sphdes_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const sphdes::ParseError& e) {
        return fail(SPHDES_ERR_PARSE, e.what());
    } catch (const sphdes::ConvergenceError& e) {
        return fail(SPHDES_ERR_NO_CONVERGENCE, e.what());
    } catch (const sphdes::SingularMatrixError& e) {
        return fail(SPHDES_ERR_SINGULAR, e.what());
    } catch (const std::domain_error& e) {
        return fail(SPHDES_ERR_ARGUMENT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SPHDES_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SPHDES_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SPHDES_ERR_INTERNAL, "unknown error");
    }
}

sphdes_status require(bool ok, const char* what) {
    return ok ? SPHDES_OK : fail(SPHDES_ERR_ARGUMENT, what);
}

sphdes_status wrap_design(sphdes::Design d, sphdes_design** out) {
    *out = new sphdes_design{std::move(d)};
    return SPHDES_OK;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* sphdes_version(void) { return "1.0.0"; }

const char* sphdes_last_error(void) { return g_last_error.c_str(); }

void sphdes_string_free(char* s) { delete[] s; }

void sphdes_design_free(sphdes_design* design) { delete design; }

sphdes_status sphdes_design_from_points(const double* xyz, size_t n, sphdes_design** out) {
    if (auto st = require(xyz && out && n > 0, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        sphdes::Design d;
        d.points.reserve(n);
        for (size_t i = 0; i < n; ++i)
            d.points.push_back(
                sphdes::SpherePoint::from_vector({xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]}));
        return wrap_design(std::move(d), out);
    });
}

sphdes_status sphdes_design_platonic(const char* name, sphdes_design** out) {
    if (auto st = require(name && out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] { return wrap_design(sphdes::platonic(name), out); });
}

sphdes_status sphdes_design_product(int d, int n_theta, int n_phi, double alpha,
                                    sphdes_design** out) {
    if (auto st = require(out != nullptr, "null output"); st != SPHDES_OK) return st;
    return guarded([&] {
        return wrap_design(sphdes::product_design({d, n_theta, n_phi, alpha}), out);
    });
}

sphdes_status sphdes_design_random(size_t n, uint64_t seed, sphdes_design** out) {
    if (auto st = require(out != nullptr, "null output"); st != SPHDES_OK) return st;
    return guarded([&] { return wrap_design(sphdes::random_design(n, seed), out); });
}

size_t sphdes_design_size(const sphdes_design* design) {
    return design ? design->design.points.size() : 0;
}

sphdes_status sphdes_design_coords(const sphdes_design* design, double* xyz) {
    if (auto st = require(design && xyz, "null input"); st != SPHDES_OK) return st;
    size_t i = 0;
    for (const sphdes::SpherePoint& p : design->design.points) {
        xyz[i++] = p.x();
        xyz[i++] = p.y();
        xyz[i++] = p.z();
    }
    return SPHDES_OK;
}

sphdes_status sphdes_design_parse(const char* text, sphdes_design** out) {
    if (auto st = require(text && out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] { return wrap_design(sphdes::parse_design(text).design, out); });
}

sphdes_status sphdes_design_format(const sphdes_design* design, int precision, int flat,
                                   char** text_out) {
    if (auto st = require(design && text_out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        *text_out = copy_string(sphdes::write_design(
            design->design, precision,
            flat ? sphdes::DesignFormat::flat : sphdes::DesignFormat::triples));
        return SPHDES_OK;
    });
}

sphdes_status sphdes_assoc_legendre(int l, int m, double x, double* out) {
    if (auto st = require(out != nullptr, "null output"); st != SPHDES_OK) return st;
    return guarded([&] {
        *out = sphdes::assoc_legendre(l, m, x);
        return SPHDES_OK;
    });
}

sphdes_status sphdes_real_sph_harm(int l, int m, double theta, double phi, double* out) {
    if (auto st = require(out != nullptr, "null output"); st != SPHDES_OK) return st;
    return guarded([&] {
        *out = sphdes::real_sph_harm(l, m, theta, phi);
        return SPHDES_OK;
    });
}

sphdes_status sphdes_basis_vector(int d, double theta, double phi, double* out) {
    if (auto st = require(out && d >= 0, "need non-null output and d >= 0"); st != SPHDES_OK)
        return st;
    return guarded([&] {
        std::vector<double> scratch;
        sphdes::basis_into(d, theta, phi, scratch,
                           std::span<double>(out, static_cast<size_t>(sphdes::basis_size(d))));
        return SPHDES_OK;
    });
}

sphdes_status sphdes_residuals(const sphdes_design* design, int t_max, double* residuals_out) {
    if (auto st = require(design && residuals_out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        const std::vector<double> r = sphdes::residuals(design->design, t_max);
        std::memcpy(residuals_out, r.data(), r.size() * sizeof(double));
        return SPHDES_OK;
    });
}

sphdes_status sphdes_strength(const sphdes_design* design, int t_max, double tol,
                              int* strength_out, double* residuals_out) {
    if (auto st = require(design && strength_out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        const sphdes::StrengthReport report =
            sphdes::strength(design->design, t_max, tol > 0.0 ? tol : 1e-10);
        *strength_out = report.strength;
        if (residuals_out)
            std::memcpy(residuals_out, report.residuals.data(),
                        report.residuals.size() * sizeof(double));
        return SPHDES_OK;
    });
}

sphdes_status sphdes_monomial_integral(int a, int b, int c, double* out) {
    if (auto st = require(out != nullptr, "null output"); st != SPHDES_OK) return st;
    return guarded([&] {
        *out = sphdes::monomial_integral(a, b, c);
        return SPHDES_OK;
    });
}

sphdes_status sphdes_monomial_check(const sphdes_design* design, int t, int trials,
                                    uint64_t seed, double* max_dev_out) {
    if (auto st = require(design && max_dev_out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        *max_dev_out = sphdes::monomial_check(design->design, t, trials, seed);
        return SPHDES_OK;
    });
}

sphdes_status sphdes_information_matrix(const sphdes_design* design, int d, double* m_out) {
    if (auto st = require(design && m_out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        const sphdes::InformationMatrix m = sphdes::information_matrix(design->design, d);
        std::memcpy(m_out, m.entries.data(), m.entries.size() * sizeof(double));
        return SPHDES_OK;
    });
}

sphdes_status sphdes_criteria(const sphdes_design* design, int d, const double* p_values,
                              size_t n_p, double* phi_out, sphdes_criteria_report* out) {
    if (auto st = require(design && out && (n_p == 0 || p_values), "null input");
        st != SPHDES_OK)
        return st;
    return guarded([&] {
        const sphdes::CriteriaReport report = sphdes::criteria(
            sphdes::information_matrix(design->design, d), std::span<const double>(p_values, n_p));
        out->d_criterion = report.d_criterion;
        out->a_criterion = report.a_criterion;
        out->e_criterion = report.e_criterion;
        out->identity_deviation = report.identity_deviation;
        out->singular = report.singular ? 1 : 0;
        if (phi_out)
            std::memcpy(phi_out, report.phi_p.data(), report.phi_p.size() * sizeof(double));
        return SPHDES_OK;
    });
}

sphdes_status sphdes_check_result(const sphdes_design* design, int d, double tol,
                                  int* optimal_out, double* deviation_out) {
    if (auto st = require(design && optimal_out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        const sphdes::ResultCheck check =
            sphdes::check_result(design->design, d, tol > 0.0 ? tol : 1e-10);
        *optimal_out = check.optimal ? 1 : 0;
        if (deviation_out) *deviation_out = check.deviation;
        return SPHDES_OK;
    });
}

sphdes_status sphdes_fit(const sphdes_design* design, const double* y, size_t n, int d,
                         double* coeffs_out) {
    if (auto st = require(design && y && coeffs_out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        const std::vector<double> c =
            sphdes::fit(design->design, std::span<const double>(y, n), d);
        std::memcpy(coeffs_out, c.data(), c.size() * sizeof(double));
        return SPHDES_OK;
    });
}

sphdes_status sphdes_simulate(const sphdes_design* design, int d, const double* coeffs,
                              double noise_sd, uint64_t seed, double* y_out) {
    if (auto st = require(design && y_out && d >= 0, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        const size_t k = static_cast<size_t>(sphdes::basis_size(d));
        std::vector<double> c(k, 0.0);
        if (coeffs) c.assign(coeffs, coeffs + k);
        const std::vector<double> y =
            sphdes::simulate(design->design, d, c, noise_sd, seed);
        std::memcpy(y_out, y.data(), y.size() * sizeof(double));
        return SPHDES_OK;
    });
}

sphdes_status sphdes_construct(int t, size_t n, int starts, uint64_t seed, long max_iters,
                               double tol, sphdes_design** design_out,
                               sphdes_construct_report* report_out) {
    if (auto st = require(design_out && report_out, "null output"); st != SPHDES_OK) return st;
    return guarded([&] {
        sphdes::ConstructOptions opts;
        opts.t = t;
        opts.n = n;
        opts.starts = starts > 0 ? starts : 20;
        opts.seed = seed;
        if (max_iters > 0) opts.max_iters = max_iters;
        if (tol > 0.0) opts.tol = tol;
        sphdes::ConstructOutcome outcome = sphdes::minimize(opts);
        report_out->residual = outcome.residual;
        report_out->iterations = outcome.iterations;
        report_out->start_index = outcome.start_index;
        report_out->converged = outcome.converged ? 1 : 0;
        return wrap_design(std::move(outcome.design), design_out);
    });
}

sphdes_status sphdes_refine(const sphdes_design* design, int t, long max_iters, double tol,
                            sphdes_design** design_out, sphdes_construct_report* report_out) {
    if (auto st = require(design && design_out && report_out, "null input"); st != SPHDES_OK)
        return st;
    return guarded([&] {
        sphdes::ConstructOptions opts;
        opts.t = t;
        opts.n = design->design.points.size();
        if (max_iters > 0) opts.max_iters = max_iters;
        if (tol > 0.0) opts.tol = tol;
        sphdes::ConstructOutcome outcome = sphdes::refine(design->design, t, opts);
        report_out->residual = outcome.residual;
        report_out->iterations = outcome.iterations;
        report_out->start_index = outcome.start_index;
        report_out->converged = outcome.converged ? 1 : 0;
        return wrap_design(std::move(outcome.design), design_out);
    });
}

sphdes_status sphdes_objective(const sphdes_design* design, int t, double* out) {
    if (auto st = require(design && out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        *out = sphdes::objective(design->design, t);
        return SPHDES_OK;
    });
}

long sphdes_lower_bound(int t) {
    if (t < 0) return -1;
    return sphdes::lower_bound(t);
}

int sphdes_default_polar_count(int d) { return sphdes::default_polar_count(d); }

sphdes_status sphdes_polar_nodes(int d, int n_theta, double* nodes_out) {
    if (auto st = require(nodes_out != nullptr, "null output"); st != SPHDES_OK) return st;
    return guarded([&] {
        const std::vector<double> nodes = sphdes::polar_nodes(d, n_theta);
        std::memcpy(nodes_out, nodes.data(), nodes.size() * sizeof(double));
        return SPHDES_OK;
    });
}

void sphdes_stereogram_style_default(sphdes_stereogram_style* style) {
    if (!style) return;
    const sphdes::StereogramStyle s;
    style->canvas_px = s.canvas_px;
    style->marker_radius_px = s.marker_radius_px;
    style->meridians = s.meridians;
    style->parallels = s.parallels;
    style->draw_grid = s.grid ? 1 : 0;
    style->draw_boundary = s.boundary ? 1 : 0;
}

sphdes_status sphdes_project(double x, double y, double z, double* u_out, double* v_out,
                             int* north_out) {
    if (auto st = require(u_out && v_out && north_out, "null output"); st != SPHDES_OK) return st;
    return guarded([&] {
        const sphdes::ProjectedMarker m =
            sphdes::project(sphdes::SpherePoint::from_vector({x, y, z}));
        *u_out = m.u;
        *v_out = m.v;
        *north_out = m.north ? 1 : 0;
        return SPHDES_OK;
    });
}

sphdes_status sphdes_stereogram_svg(const sphdes_design* design,
                                    const sphdes_stereogram_style* style, char** svg_out) {
    if (auto st = require(design && svg_out, "null input"); st != SPHDES_OK) return st;
    return guarded([&] {
        sphdes::StereogramStyle s;
        if (style) {
            s.canvas_px = style->canvas_px;
            s.marker_radius_px = style->marker_radius_px;
            s.meridians = style->meridians;
            s.parallels = style->parallels;
            s.grid = style->draw_grid != 0;
            s.boundary = style->draw_boundary != 0;
        }
        *svg_out = copy_string(sphdes::render_svg(design->design, s));
        return SPHDES_OK;
    });
}

} // extern "C"
