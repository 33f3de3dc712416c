#include "core/cubature.hpp"

#include <cmath>
#include <stdexcept>

#include "core/harmonics.hpp"
#include "core/rng.hpp"

namespace sphdes {

std::vector<double> residuals(const Design& design, int t_max) {
    if (t_max < 1) throw std::domain_error("residuals: t_max must be >= 1");
    if (design.points.empty()) throw std::domain_error("residuals: empty design");

    const std::size_t k = static_cast<std::size_t>(basis_size(t_max));
    std::vector<double> mean(k, 0.0);
    std::vector<double> row(k);
    std::vector<double> scratch;
    for (const SpherePoint& p : design.points) {
        basis_into(t_max, p.theta(), p.phi(), scratch, row);
        for (std::size_t j = 0; j < k; ++j) mean[j] += row[j];
    }
    const double inv_n = 1.0 / static_cast<double>(design.points.size());
    for (double& v : mean) v *= inv_n;

    std::vector<double> r(static_cast<std::size_t>(t_max));
    for (int l = 1; l <= t_max; ++l) {
        double acc = 0.0;
        for (int m = -l; m <= l; ++m) {
            const double v = mean[basis_index(l, m)];
            acc += v * v;
        }
        r[static_cast<std::size_t>(l - 1)] = acc;
    }
    return r;
}

StrengthReport strength(const Design& design, int t_max, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("strength: tolerance must be positive");
    StrengthReport report;
    report.residuals = residuals(design, t_max);
    report.tol = tol;
    report.strength = 0;
    for (int l = 1; l <= t_max; ++l) {
        if (report.residuals[static_cast<std::size_t>(l - 1)] > tol) break;
        report.strength = l;
    }
    return report;
}

double monomial_integral(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::domain_error("monomial exponents must be nonnegative");
    if (a + b + c > 60) throw std::domain_error("monomial degree limited to 60");
    if ((a % 2) || (b % 2) || (c % 2)) return 0.0;
    // (a-1)!!(b-1)!!(c-1)!! / (a+b+c+1)!!, evaluated as a running product to
    // avoid large intermediates.
    double value = 1.0;
    int denom = a + b + c + 1; // odd
    auto fold = [&](int e) {
        for (int f = e - 1; f >= 3; f -= 2) value *= f;
    };
    fold(a);
    fold(b);
    fold(c);
    for (int f = denom; f >= 3; f -= 2) value /= f;
    return value;
}

double monomial_check(const Design& design, int t, int trials, std::uint64_t seed) {
    if (t < 0) throw std::domain_error("monomial_check: t must be >= 0");
    if (trials < 1) throw std::domain_error("monomial_check: trials must be >= 1");
    if (design.points.empty()) throw std::domain_error("monomial_check: empty design");

    SplitMix64 rng(seed);
    const double inv_n = 1.0 / static_cast<double>(design.points.size());
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        // Uniform exponent triple with a+b+c <= t via rejection.
        int a, b, c;
        do {
            a = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(t + 1));
            b = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(t + 1));
            c = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(t + 1));
        } while (a + b + c > t);

        double sum = 0.0;
        for (const SpherePoint& p : design.points)
            sum += std::pow(p.x(), a) * std::pow(p.y(), b) * std::pow(p.z(), c);
        const double dev = std::abs(sum * inv_n - monomial_integral(a, b, c));
        if (dev > worst) worst = dev;
    }
    return worst;
}

} // namespace sphdes
