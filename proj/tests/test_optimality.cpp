#include <cmath>
#include <vector>

#include "core/catalog.hpp"
#include "core/harmonics.hpp"
#include "core/optimality.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace sphdes;

namespace {

InformationMatrix diagonal(std::vector<double> values) {
    InformationMatrix m;
    // Fake order: dim is whatever the diagonal says; only criteria() math is
    // exercised, which reads entries and dim through order.
    const int k = static_cast<int>(values.size());
    m.order = static_cast<int>(std::sqrt(static_cast<double>(k))) - 1;
    while (m.dim() < k) ++m.order;
    REQUIRE(m.dim() == k);
    m.entries.assign(static_cast<std::size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i) m.entries[static_cast<std::size_t>(i) * k + i] = values[static_cast<std::size_t>(i)];
    return m;
}

double max_identity_dev(const InformationMatrix& m) {
    double dev = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            dev = std::max(dev, std::abs(m.at(i, j) - (i == j ? 1.0 : 0.0)));
    return dev;
}

} // namespace

TEST_CASE("information matrix of strong designs is the identity") {
    // Brute-force oracle: assemble the 4x4 matrix from single harmonic calls.
    const Design tetra = platonic("tetrahedron");
    double brute[4][4] = {};
    for (const SpherePoint& p : tetra.points) {
        double f[4];
        for (int l = 0; l <= 1; ++l)
            for (int m = -l; m <= l; ++m)
                f[basis_index(l, m)] = real_sph_harm(l, m, p.theta(), p.phi());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) brute[i][j] += f[i] * f[j] / 4.0;
    }
    const InformationMatrix m = information_matrix(tetra, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(m.at(i, j) == doctest::Approx(brute[i][j]).epsilon(1e-14));
            CHECK(std::abs(m.at(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);
        }

    CHECK(max_identity_dev(information_matrix(platonic("icosahedron"), 2)) < 1e-12);
}

TEST_CASE("information matrices are symmetric and positive semidefinite") {
    for (std::uint64_t seed : {1ULL, 5ULL}) {
        const InformationMatrix m = information_matrix(random_design(15, seed), 3);
        const int k = m.dim();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) CHECK(std::abs(m.at(i, j) - m.at(j, i)) < 1e-14);
        // Quadratic form against random vectors stays nonnegative.
        SplitMix64 rng(seed + 100);
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<double> v(static_cast<std::size_t>(k));
            for (double& x : v) x = 2.0 * rng.next_double() - 1.0;
            double q = 0.0;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) q += v[static_cast<std::size_t>(i)] * m.at(i, j) * v[static_cast<std::size_t>(j)];
            CHECK(q >= -1e-10);
        }
    }
}

TEST_CASE("repeated single point gives the rank-one outer product") {
    Design d;
    for (int i = 0; i < 5; ++i) d.points.push_back(SpherePoint::from_angles(1.0, 0.5));
    const InformationMatrix m = information_matrix(d, 1);
    const auto f = basis_vector(1, d.points[0]);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(m.at(i, j) == doctest::Approx(f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)]).epsilon(1e-14));
}

TEST_CASE("criteria at the identity are exactly one") {
    const InformationMatrix m = information_matrix(platonic("tetrahedron"), 1);
    const double ps[] = {0.5, 1.0, 2.0, 10.0};
    const CriteriaReport rep = criteria(m, ps);
    CHECK(rep.d_criterion == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.a_criterion == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.e_criterion == doctest::Approx(1.0).epsilon(1e-12));
    for (double phi : rep.phi_p) CHECK(phi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.identity_deviation < 1e-12);
    CHECK_FALSE(rep.singular);
}

TEST_CASE("criteria on a diagonal spectrum, hand evaluated") {
    // Hand case on two eigenvalues {2, 1/2}:
    // phi_1 = ((1/2)(1/2 + 2))^-1 = 0.8; here padded with two unit eigenvalues
    // since dimensions are (d+1)^2.
    CHECK(1.0 / (0.5 * (1.0 / 2.0 + 1.0 / 0.5)) == doctest::Approx(0.8).epsilon(1e-15));

    const InformationMatrix m = diagonal({2.0, 0.5, 1.0, 1.0});
    const double ps[] = {1.0};
    const CriteriaReport rep = criteria(m, ps);
    CHECK(rep.d_criterion == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.e_criterion == doctest::Approx(0.5).epsilon(1e-12));
    // A = 4 / (1/2 + 2 + 1 + 1) = 8/9; phi_1 = ((1/4)(1/2 + 2 + 1 + 1))^-1.
    CHECK(rep.a_criterion == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    CHECK(rep.phi_p[0] == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("singular matrices are flagged, not thrown") {
    Design d;
    d.points.push_back(SpherePoint::from_angles(1.2, 0.3));
    const InformationMatrix m = information_matrix(d, 1); // rank one
    const CriteriaReport rep = criteria(m, {});
    CHECK(rep.singular);
    CHECK(rep.d_criterion == 0.0);
    CHECK(rep.a_criterion == 0.0);
    CHECK(rep.e_criterion == 0.0);
}

TEST_CASE("phi_p approaches the E-criterion for large p") {
    // The gap decays like log(k / multiplicity(l_min)) / p, so a doubled
    // smallest eigenvalue keeps the p = 1e6 check inside 1e-6 relative.
    const InformationMatrix m = diagonal({2.0, 0.5, 0.5, 1.5});
    const double ps[] = {1e6};
    const CriteriaReport rep = criteria(m, ps);
    CHECK(std::abs(rep.phi_p[0] - rep.e_criterion) / rep.e_criterion < 1e-6);

    // And the gap closes monotonically in p.
    const double ps_seq[] = {1.0, 10.0, 100.0, 1e4};
    const CriteriaReport seq = criteria(diagonal({2.0, 1.0, 0.5, 1.5}), ps_seq);
    double prev_gap = 1e300;
    for (double phi : seq.phi_p) {
        const double gap = phi - seq.e_criterion;
        CHECK(gap >= -1e-12);
        CHECK(gap <= prev_gap + 1e-12);
        prev_gap = gap;
    }
}

TEST_CASE("E-criterion is monotone under eigenvalue scaling") {
    double prev = 0.0;
    for (double scale : {0.5, 1.0, 2.0, 4.0}) {
        const InformationMatrix m = diagonal({scale * 0.7, 1.0, 2.0, 3.0});
        const CriteriaReport rep = criteria(m, {});
        CHECK(rep.e_criterion >= prev);
        prev = rep.e_criterion;
    }
}

TEST_CASE("check_result matches the strength threshold") {
    const ResultCheck ok = check_result(product_design(3), 3, 1e-10);
    CHECK(ok.optimal);
    CHECK(ok.deviation < 1e-10);

    // Octahedron has strength 3 < 2*2: off-identity entries appear at l = 2.
    const ResultCheck bad = check_result(platonic("octahedron"), 2, 1e-10);
    CHECK_FALSE(bad.optimal);
    CHECK(bad.deviation > 1e-3);

    const ResultCheck trivial = check_result(random_design(9, 4), 0, 1e-10);
    CHECK(trivial.optimal);
}

TEST_CASE("fit recovers coefficients") {
    SUBCASE("constant observations give the constant harmonic") {
        const Design d = platonic("icosahedron");
        std::vector<double> y(d.size(), 1.0);
        const auto c = fit(d, y, 2);
        CHECK(c[0] == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t i = 1; i < c.size(); ++i) CHECK(std::abs(c[i]) < 1e-12);
    }
    SUBCASE("zero-noise band-limited data is recovered exactly") {
        const Design d = product_design(3);
        SplitMix64 rng(9);
        std::vector<double> c_true(static_cast<std::size_t>(basis_size(3)));
        for (double& c : c_true) c = 2.0 * rng.next_double() - 1.0;
        const auto y = simulate(d, 3, c_true, 0.0, 0);
        const auto c_hat = fit(d, y, 3);
        for (std::size_t i = 0; i < c_true.size(); ++i)
            CHECK(std::abs(c_hat[i] - c_true[i]) < 1e-10);
    }
    SUBCASE("noisy estimates have covariance (noise^2/n) I") {
        const Design d = platonic("icosahedron");
        std::vector<double> c_true(9, 0.0);
        c_true[0] = 0.7;
        c_true[4] = -0.3;
        const double sd = 0.1;
        double sq_sum = 0.0;
        const int reps = 200;
        for (int rep = 0; rep < reps; ++rep) {
            const auto y = simulate(d, 2, c_true, sd, 1000 + static_cast<std::uint64_t>(rep));
            const auto c_hat = fit(d, y, 2);
            for (std::size_t i = 0; i < 9; ++i) {
                const double e = c_hat[i] - c_true[i];
                sq_sum += e * e;
            }
        }
        const double mse = sq_sum / (reps * 9.0);
        const double expected = sd * sd / static_cast<double>(d.size());
        CHECK(mse / expected > 0.75);
        CHECK(mse / expected < 1.30);
    }
    SUBCASE("singular fit names the order and size") {
        Design d;
        d.points.push_back(SpherePoint::from_angles(0.4, 0.1));
        d.points.push_back(SpherePoint::from_angles(1.4, -0.9));
        std::vector<double> y{1.0, 2.0};
        try {
            fit(d, y, 2);
            FAIL("expected SingularMatrixError");
        } catch (const SingularMatrixError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("d=2") != std::string::npos);
            CHECK(msg.find("n=2") != std::string::npos);
        }
    }
    SUBCASE("observation count mismatch") {
        std::vector<double> y{1.0};
        CHECK_THROWS_AS(fit(platonic("cube"), y, 1), std::invalid_argument);
    }
}

TEST_CASE("simulate") {
    const Design d = platonic("octahedron");
    std::vector<double> c(static_cast<std::size_t>(basis_size(2)), 0.0);
    c[0] = 1.0;
    c[2] = 0.5;
    SUBCASE("zero noise reproduces the model exactly") {
        const auto y = simulate(d, 2, c, 0.0, 123);
        for (std::size_t i = 0; i < d.size(); ++i) {
            const auto f = basis_vector(2, d.points[i]);
            double want = 0.0;
            for (std::size_t j = 0; j < f.size(); ++j) want += c[j] * f[j];
            CHECK(y[i] == doctest::Approx(want).epsilon(1e-15));
        }
    }
    SUBCASE("same seed, same draw") {
        const auto y1 = simulate(d, 2, c, 1.0, 42);
        const auto y2 = simulate(d, 2, c, 1.0, 42);
        CHECK(y1 == y2);
        const auto y3 = simulate(d, 2, c, 1.0, 43);
        CHECK(y1 != y3);
    }
    SUBCASE("pure noise has near-zero mean over many points") {
        const Design big = random_design(10000, 6);
        std::vector<double> zero(1, 0.0);
        const auto y = simulate(big, 0, zero, 1.0, 9);
        double mean = 0.0;
        for (double v : y) mean += v;
        mean /= static_cast<double>(y.size());
        CHECK(std::abs(mean) < 0.05);
    }
    SUBCASE("negative noise is rejected") {
        CHECK_THROWS_AS(simulate(d, 2, c, -1.0, 0), std::domain_error);
    }
}
