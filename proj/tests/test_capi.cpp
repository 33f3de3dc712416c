// Exercises the shared-library C interface exactly as an embedding client
// would: only sphdes.h, opaque handles, status codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "sphdes.h"

namespace {

struct Handle {
    sphdes_design* d = nullptr;
    ~Handle() { sphdes_design_free(d); }
};

} // namespace

TEST_CASE("version and error text") {
    CHECK(std::strlen(sphdes_version()) > 0);
    Handle h;
    CHECK(sphdes_design_platonic("not-a-solid", &h.d) == SPHDES_ERR_ARGUMENT);
    CHECK(std::string(sphdes_last_error()).find("not-a-solid") != std::string::npos);
}

TEST_CASE("platonic handles, size and coordinates") {
    Handle h;
    REQUIRE(sphdes_design_platonic("icosahedron", &h.d) == SPHDES_OK);
    REQUIRE(sphdes_design_size(h.d) == 12);
    std::vector<double> xyz(36);
    REQUIRE(sphdes_design_coords(h.d, xyz.data()) == SPHDES_OK);
    for (int i = 0; i < 12; ++i) {
        const double n2 = xyz[3 * i] * xyz[3 * i] + xyz[3 * i + 1] * xyz[3 * i + 1] +
                          xyz[3 * i + 2] * xyz[3 * i + 2];
        CHECK(std::abs(n2 - 1.0) < 1e-12);
    }
}

TEST_CASE("strength and residuals through the C surface") {
    Handle h;
    REQUIRE(sphdes_design_platonic("icosahedron", &h.d) == SPHDES_OK);
    int s = 0;
    std::vector<double> r(8);
    REQUIRE(sphdes_strength(h.d, 8, 0.0, &s, r.data()) == SPHDES_OK);
    CHECK(s == 5);
    CHECK(r[5] > 1e-10);
    double dev = 0.0;
    REQUIRE(sphdes_monomial_check(h.d, 5, 200, 0, &dev) == SPHDES_OK);
    CHECK(dev < 1e-9);
}

TEST_CASE("parse, format, round trip") {
    Handle h;
    REQUIRE(sphdes_design_parse("# poles\n0 0 1\n0 0 -1\n", &h.d) == SPHDES_OK);
    REQUIRE(sphdes_design_size(h.d) == 2);
    char* text = nullptr;
    REQUIRE(sphdes_design_format(h.d, 17, 1, &text) == SPHDES_OK);
    CHECK(std::string(text) == "0\n0\n1\n0\n0\n-1\n");
    sphdes_string_free(text);

    Handle bad;
    CHECK(sphdes_design_parse("0 0 nope\n", &bad.d) == SPHDES_ERR_PARSE);
    CHECK(sphdes_design_parse("0 0 1.5\n", &bad.d) == SPHDES_ERR_PARSE);

    char* out = nullptr;
    CHECK(sphdes_design_format(h.d, 5, 0, &out) == SPHDES_ERR_ARGUMENT);
    CHECK(sphdes_design_format(h.d, 18, 0, &out) == SPHDES_ERR_ARGUMENT);
}

TEST_CASE("harmonic evaluations") {
    double v = 0.0;
    REQUIRE(sphdes_assoc_legendre(2, 0, 0.5, &v) == SPHDES_OK);
    CHECK(v == doctest::Approx(-0.125).epsilon(1e-14));
    CHECK(sphdes_assoc_legendre(2, 3, 0.5, &v) == SPHDES_ERR_ARGUMENT);

    REQUIRE(sphdes_real_sph_harm(1, 0, 0.0, 0.0, &v) == SPHDES_OK);
    CHECK(v == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));

    std::vector<double> basis(9);
    REQUIRE(sphdes_basis_vector(2, 1.1, 0.4, basis.data()) == SPHDES_OK);
    CHECK(basis[0] == 1.0);
    double sum = 0.0;
    for (double b : basis) sum += b * b;
    CHECK(sum == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("criteria, check_result, fit and simulate") {
    Handle h;
    REQUIRE(sphdes_design_platonic("tetrahedron", &h.d) == SPHDES_OK);

    sphdes_criteria_report rep{};
    const double ps[2] = {1.0, 2.0};
    double phi[2] = {0.0, 0.0};
    REQUIRE(sphdes_criteria(h.d, 1, ps, 2, phi, &rep) == SPHDES_OK);
    CHECK(rep.d_criterion == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(phi[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.singular == 0);

    int optimal = 0;
    double dev = 0.0;
    REQUIRE(sphdes_check_result(h.d, 1, 0.0, &optimal, &dev) == SPHDES_OK);
    CHECK(optimal == 1);

    std::vector<double> m(16);
    REQUIRE(sphdes_information_matrix(h.d, 1, m.data()) == SPHDES_OK);
    CHECK(m[0] == doctest::Approx(1.0).epsilon(1e-12));

    // simulate then refit without noise
    std::vector<double> c{0.5, 0.0, -0.25, 0.0};
    std::vector<double> y(4);
    REQUIRE(sphdes_simulate(h.d, 1, c.data(), 0.0, 7, y.data()) == SPHDES_OK);
    std::vector<double> c_hat(4);
    REQUIRE(sphdes_fit(h.d, y.data(), 4, 1, c_hat.data()) == SPHDES_OK);
    for (int i = 0; i < 4; ++i) CHECK(c_hat[i] == doctest::Approx(c[i]).epsilon(1e-12));

    // a two-point design cannot identify a d=2 model
    Handle small;
    REQUIRE(sphdes_design_parse("0 0 1\n0 0 -1\n", &small.d) == SPHDES_OK);
    std::vector<double> y2{1.0, 2.0};
    std::vector<double> c2(9);
    CHECK(sphdes_fit(small.d, y2.data(), 2, 2, c2.data()) == SPHDES_ERR_SINGULAR);
}

TEST_CASE("construct and refine") {
    Handle h;
    sphdes_construct_report rep{};
    REQUIRE(sphdes_construct(2, 4, 10, 0, 0, 0.0, &h.d, &rep) == SPHDES_OK);
    CHECK(rep.converged == 1);
    CHECK(rep.residual < 1e-10);
    CHECK(sphdes_design_size(h.d) == 4);

    Handle polished;
    sphdes_construct_report rep2{};
    REQUIRE(sphdes_refine(h.d, 2, 0, 0.0, &polished.d, &rep2) == SPHDES_OK);
    CHECK(rep2.converged == 1);

    Handle below;
    sphdes_construct_report rep3{};
    CHECK(sphdes_construct(3, 5, 1, 0, 0, 0.0, &below.d, &rep3) == SPHDES_ERR_ARGUMENT);

    double a1 = 0.0;
    REQUIRE(sphdes_objective(h.d, 2, &a1) == SPHDES_OK);
    CHECK(a1 < 1e-10);
}

TEST_CASE("catalog facts and polar nodes") {
    CHECK(sphdes_lower_bound(5) == 12);
    CHECK(sphdes_lower_bound(-1) == -1);
    CHECK(sphdes_default_polar_count(4) == 9);
    CHECK(sphdes_default_polar_count(9) == 0);

    std::vector<double> nodes(9);
    REQUIRE(sphdes_polar_nodes(4, 9, nodes.data()) == SPHDES_OK);
    CHECK(nodes[4] == 0.0);
    CHECK(sphdes_polar_nodes(2, 3, nodes.data()) == SPHDES_ERR_NO_CONVERGENCE);

    Handle pd;
    REQUIRE(sphdes_design_product(2, 0, 0, 0.0, &pd.d) == SPHDES_OK);
    CHECK(sphdes_design_size(pd.d) == 20);
}

TEST_CASE("stereogram") {
    double u = 0.0, v = 0.0;
    int north = 0;
    REQUIRE(sphdes_project(0.0, 0.6, 0.8, &u, &v, &north) == SPHDES_OK);
    CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(north == 1);

    Handle h;
    REQUIRE(sphdes_design_platonic("octahedron", &h.d) == SPHDES_OK);
    sphdes_stereogram_style style;
    sphdes_stereogram_style_default(&style);
    CHECK(style.canvas_px > 0);
    char* svg = nullptr;
    REQUIRE(sphdes_stereogram_svg(h.d, &style, &svg) == SPHDES_OK);
    CHECK(std::string(svg).find("<svg") != std::string::npos);
    sphdes_string_free(svg);
    REQUIRE(sphdes_stereogram_svg(h.d, nullptr, &svg) == SPHDES_OK);
    sphdes_string_free(svg);
}

TEST_CASE("null arguments are rejected, not crashed on") {
    CHECK(sphdes_design_platonic(nullptr, nullptr) == SPHDES_ERR_ARGUMENT);
    CHECK(sphdes_design_coords(nullptr, nullptr) == SPHDES_ERR_ARGUMENT);
    CHECK(sphdes_design_size(nullptr) == 0);
    double v;
    CHECK(sphdes_assoc_legendre(1, 0, 0.5, nullptr) == SPHDES_ERR_ARGUMENT);
    CHECK(sphdes_residuals(nullptr, 3, &v) == SPHDES_ERR_ARGUMENT);
}

TEST_CASE("random designs are reproducible through the C surface") {
    Handle a, b;
    REQUIRE(sphdes_design_random(16, 99, &a.d) == SPHDES_OK);
    REQUIRE(sphdes_design_random(16, 99, &b.d) == SPHDES_OK);
    std::vector<double> xa(48), xb(48);
    REQUIRE(sphdes_design_coords(a.d, xa.data()) == SPHDES_OK);
    REQUIRE(sphdes_design_coords(b.d, xb.data()) == SPHDES_OK);
    CHECK(xa == xb);
}
