/* sphdes - spherical t-designs and optimal designs for spherical harmonic
 * regression. C interface of the shared library: opaque handles, status
 * codes, caller-owned output buffers.
 *
 * Every function returning sphdes_status leaves a human-readable message for
 * the most recent failure in thread-local storage; fetch it with
 * sphdes_last_error(). Strings returned through char** outputs are owned by
 * the library and must be released with sphdes_string_free().
 */
#ifndef SPHDES_H
#define SPHDES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sphdes_status {
    SPHDES_OK = 0,
    SPHDES_ERR_ARGUMENT = 1,       /* domain violation or bad index */
    SPHDES_ERR_PARSE = 2,          /* malformed point-set text */
    SPHDES_ERR_NO_CONVERGENCE = 3, /* iterative solve failed */
    SPHDES_ERR_SINGULAR = 4,       /* singular information matrix */
    SPHDES_ERR_INTERNAL = 5
} sphdes_status;

/* An equally-weighted point set on the unit sphere. */
typedef struct sphdes_design sphdes_design;

const char* sphdes_version(void);
const char* sphdes_last_error(void);
void sphdes_string_free(char* s);
void sphdes_design_free(sphdes_design* design);

/* ---- design creation -------------------------------------------------- */

/* xyz holds n unit vectors, layout x0 y0 z0 x1 y1 z1 ... */
sphdes_status sphdes_design_from_points(const double* xyz, size_t n, sphdes_design** out);

/* name: tetrahedron | octahedron | cube | icosahedron | dodecahedron */
sphdes_status sphdes_design_platonic(const char* name, sphdes_design** out);

/* Product design of order d: polar quadrature nodes x equally spaced
 * azimuths. n_theta = 0 picks the minimal known node count (d = 1..7),
 * n_phi = 0 picks 2d+1. */
sphdes_status sphdes_design_product(int d, int n_theta, int n_phi, double alpha,
                                    sphdes_design** out);

/* n uniform points from the seeded deterministic generator. */
sphdes_status sphdes_design_random(size_t n, uint64_t seed, sphdes_design** out);

/* ---- design access and text form -------------------------------------- */

size_t sphdes_design_size(const sphdes_design* design);

/* Copies the coordinates into xyz (3n doubles). */
sphdes_status sphdes_design_coords(const sphdes_design* design, double* xyz);

/* Parses the catalog file formats ('#' comments; triples or flat layout,
 * auto-detected by field count). */
sphdes_status sphdes_design_parse(const char* text, sphdes_design** out);

/* precision: significant digits in [6, 17] (17 round-trips exactly);
 * flat: nonzero writes one coordinate per line instead of x y z triples. */
sphdes_status sphdes_design_format(const sphdes_design* design, int precision, int flat,
                                   char** text_out);

/* ---- spherical harmonics ---------------------------------------------- */

/* P_l^m(x) without Condon-Shortley phase; reference path, l <= 40. */
sphdes_status sphdes_assoc_legendre(int l, int m, double x, double* out);

/* Real spherical harmonic Y_l^m(theta, phi); theta in [0, pi]. */
sphdes_status sphdes_real_sph_harm(int l, int m, double theta, double phi, double* out);

/* All Y_l^m for l <= d, ordering (0,0), (1,-1), (1,0), (1,1), ...;
 * out must hold (d+1)^2 values. */
sphdes_status sphdes_basis_vector(int d, double theta, double phi, double* out);

/* ---- cubature / strength ----------------------------------------------- */

/* residuals_out[l-1] = sum_m (mean of Y_l^m over the design)^2, l = 1..t_max. */
sphdes_status sphdes_residuals(const sphdes_design* design, int t_max, double* residuals_out);

/* strength_out = largest t <= t_max with all residuals r_1..r_t <= tol.
 * tol <= 0 selects the default 1e-10. residuals_out may be NULL. */
sphdes_status sphdes_strength(const sphdes_design* design, int t_max, double tol,
                              int* strength_out, double* residuals_out);

/* Uniform-measure integral of x^a y^b z^c over the sphere. */
sphdes_status sphdes_monomial_integral(int a, int b, int c, double* out);

/* Max deviation of design averages from exact monomial integrals over
 * `trials` random exponent triples with total degree <= t. */
sphdes_status sphdes_monomial_check(const sphdes_design* design, int t, int trials,
                                    uint64_t seed, double* max_dev_out);

/* ---- optimal design criteria ------------------------------------------ */

/* M = (1/n) sum f f^T, row-major (d+1)^2 x (d+1)^2, into m_out. */
sphdes_status sphdes_information_matrix(const sphdes_design* design, int d, double* m_out);

typedef struct sphdes_criteria_report {
    double d_criterion; /* (det M)^(1/k) */
    double a_criterion; /* k / tr(M^-1) */
    double e_criterion; /* smallest eigenvalue */
    double identity_deviation; /* max |M - I| */
    int singular;
} sphdes_criteria_report;

/* phi_out (may be NULL when n_p = 0) receives phi_p for each requested p > 0;
 * all criteria equal 1 exactly at M = I, and 0 with the singular flag set
 * when M is singular. */
sphdes_status sphdes_criteria(const sphdes_design* design, int d, const double* p_values,
                              size_t n_p, double* phi_out, sphdes_criteria_report* out);

/* optimal_out = 1 iff max |M - I| <= tol (tol <= 0 selects 1e-10). */
sphdes_status sphdes_check_result(const sphdes_design* design, int d, double tol,
                                  int* optimal_out, double* deviation_out);

/* Least-squares fit of observations y (length n = design size) at order d;
 * coeffs_out holds (d+1)^2 estimates in the basis ordering. */
sphdes_status sphdes_fit(const sphdes_design* design, const double* y, size_t n, int d,
                         double* coeffs_out);

/* y_i = sum c Y(x_i) + noise_sd * N(0,1); coeffs may be NULL for all zeros;
 * y_out holds design-size values. Deterministic per seed. */
sphdes_status sphdes_simulate(const sphdes_design* design, int d, const double* coeffs,
                              double noise_sd, uint64_t seed, double* y_out);

/* ---- numerical construction -------------------------------------------- */

typedef struct sphdes_construct_report {
    double residual; /* total cubature residual A_t achieved */
    long iterations; /* iterations of the winning start */
    int start_index;
    int converged; /* residual <= tol */
} sphdes_construct_report;

/* Multi-start minimization of the degree-t cubature residual over n points.
 * starts <= 0 selects 20, max_iters <= 0 selects 20000, tol <= 0 selects
 * 1e-10. Non-convergence is reported, not an error. */
sphdes_status sphdes_construct(int t, size_t n, int starts, uint64_t seed, long max_iters,
                               double tol, sphdes_design** design_out,
                               sphdes_construct_report* report_out);

/* Single local run polishing an existing design. */
sphdes_status sphdes_refine(const sphdes_design* design, int t, long max_iters, double tol,
                            sphdes_design** design_out, sphdes_construct_report* report_out);

/* Total cubature residual A_t of a design (the construction objective). */
sphdes_status sphdes_objective(const sphdes_design* design, int t, double* out);

/* ---- catalog facts ------------------------------------------------------ */

/* Minimum point count of a spherical t-design: (t+2)^2/4 or (t+1)(t+3)/4.
 * Returns -1 for t < 0. */
long sphdes_lower_bound(int t);

/* Minimal known polar node count for order d (d = 1..7), else 0. */
int sphdes_default_polar_count(int d);

/* Equal-weight polar abscissas solving the order-d moment system;
 * nodes_out holds n_theta values of cos(theta), descending. */
sphdes_status sphdes_polar_nodes(int d, int n_theta, double* nodes_out);

/* ---- stereogram --------------------------------------------------------- */

typedef struct sphdes_stereogram_style {
    int canvas_px;
    double marker_radius_px;
    int meridians;
    int parallels;
    int draw_grid;
    int draw_boundary;
} sphdes_stereogram_style;

void sphdes_stereogram_style_default(sphdes_stereogram_style* style);

/* Projection of one point: north (z >= 0) maps to (x,y)/(1+z), south to
 * (x,y)/(1-z); north_out reports the hemisphere (solid vs open marker). */
sphdes_status sphdes_project(double x, double y, double z, double* u_out, double* v_out,
                             int* north_out);

/* Standalone SVG stereogram of the design. style may be NULL for defaults. */
sphdes_status sphdes_stereogram_svg(const sphdes_design* design,
                                    const sphdes_stereogram_style* style, char** svg_out);

#ifdef __cplusplus
}
#endif

#endif /* SPHDES_H */
