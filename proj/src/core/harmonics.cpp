#include "core/harmonics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphdes {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;
} // namespace

double assoc_legendre(int l, int m, double x) {
    if (l < 0 || m < 0 || m > l)
        throw std::domain_error("assoc_legendre: need 0 <= m <= l, got l=" + std::to_string(l) +
                                " m=" + std::to_string(m));
    if (l > 40)
        throw std::domain_error("assoc_legendre: reference path limited to l <= 40, got l=" +
                                std::to_string(l));
    if (!(x >= -1.0 && x <= 1.0))
        throw std::domain_error("assoc_legendre: argument outside [-1, 1]");

    // P_m^m = (2m-1)!! (1-x^2)^(m/2), no Condon-Shortley phase.
    double pmm = 1.0;
    if (m > 0) {
        const double omx2 = (1.0 - x) * (1.0 + x);
        const double s = std::sqrt(std::max(omx2, 0.0));
        double fact = 1.0;
        for (int i = 1; i <= m; ++i) {
            pmm *= fact * s;
            fact += 2.0;
        }
    }
    if (l == m) return pmm;

    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pmmp1;

    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

double legendre_p(int l, double x) {
    if (l < 0) throw std::domain_error("legendre_p: negative degree");
    if (l == 0) return 1.0;
    double pm1 = 1.0;
    double p = x;
    for (int k = 2; k <= l; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p - (k - 1.0) * pm1) / k;
        pm1 = p;
        p = pk;
    }
    return p;
}

void legendre_p_all(int lmax, double x, std::span<double> out) {
    out[0] = 1.0;
    if (lmax == 0) return;
    out[1] = x;
    for (int k = 2; k <= lmax; ++k)
        out[k] = ((2.0 * k - 1.0) * x * out[k - 1] - (k - 1.0) * out[k - 2]) / k;
}

void legendre_p_deriv_all(int lmax, double x, std::span<double> p, std::span<double> dp) {
    legendre_p_all(lmax, x, p);
    dp[0] = 0.0;
    if (lmax == 0) return;
    dp[1] = 1.0;
    // P_l' = P_{l-2}' + (2l-1) P_{l-1}; polynomial identity, valid for any x.
    for (int k = 2; k <= lmax; ++k)
        dp[k] = dp[k - 2] + (2.0 * k - 1.0) * p[k - 1];
}

void norm_legendre_table(int lmax, double x, std::vector<double>& table) {
    const double s = std::sqrt(std::max((1.0 - x) * (1.0 + x), 0.0));
    table.resize(static_cast<std::size_t>(tri_index(lmax, lmax)) + 1);

    double diag = 1.0; // N_0^0
    for (int m = 0; m <= lmax; ++m) {
        table[tri_index(m, m)] = diag;
        if (m + 1 <= lmax) table[tri_index(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * x * diag;
        for (int l = m + 2; l <= lmax; ++l) {
            const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
            const double b = std::sqrt((2.0 * l + 1.0) * (l - 1.0 - m) * (l - 1.0 + m) /
                                       ((2.0 * l - 3.0) * (l - m) * (l + m)));
            table[tri_index(l, m)] = a * x * table[tri_index(l - 1, m)] - b * table[tri_index(l - 2, m)];
        }
        diag *= std::sqrt((2.0 * m + 3.0) / (2.0 * m + 2.0)) * s;
    }
}

namespace {

// Single (l, m) column of the normalized recurrence; O(l) and allocation free.
double norm_assoc_legendre(int l, int m, double x) {
    const double s = std::sqrt(std::max((1.0 - x) * (1.0 + x), 0.0));
    double diag = 1.0;
    for (int k = 1; k <= m; ++k) diag *= std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
    if (l == m) return diag;
    double prev = diag;
    double cur = std::sqrt(2.0 * m + 3.0) * x * diag;
    for (int k = m + 2; k <= l; ++k) {
        const double a = std::sqrt((4.0 * k * k - 1.0) / (static_cast<double>(k) * k - static_cast<double>(m) * m));
        const double b = std::sqrt((2.0 * k + 1.0) * (k - 1.0 - m) * (k - 1.0 + m) /
                                   ((2.0 * k - 3.0) * (k - m) * (k + m)));
        const double next = a * x * cur - b * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void check_theta(double theta) {
    if (!(theta >= -1e-12 && theta <= kPi + 1e-12))
        throw std::domain_error("polar angle must lie in [0, pi], got " + std::to_string(theta));
}

} // namespace

double real_sph_harm(int l, int m, double theta, double phi) {
    if (l < 0 || m < -l || m > l)
        throw std::domain_error("real_sph_harm: need |m| <= l, got l=" + std::to_string(l) +
                                " m=" + std::to_string(m));
    check_theta(theta);
    const double x = std::cos(theta);
    if (m == 0) return norm_assoc_legendre(l, 0, x);
    const double n = kSqrt2 * norm_assoc_legendre(l, std::abs(m), x);
    return m > 0 ? n * std::cos(m * phi) : n * std::sin(m * phi);
}

void basis_into(int d, double theta, double phi, std::vector<double>& scratch,
                std::span<double> out) {
    if (d < 0) throw std::domain_error("basis order must be nonnegative");
    check_theta(theta);
    norm_legendre_table(d, std::cos(theta), scratch);
    for (int l = 0; l <= d; ++l) {
        out[basis_index(l, 0)] = scratch[tri_index(l, 0)];
        for (int m = 1; m <= l; ++m) {
            const double n = kSqrt2 * scratch[tri_index(l, m)];
            out[basis_index(l, m)] = n * std::cos(m * phi);
            out[basis_index(l, -m)] = n * std::sin(-m * phi);
        }
    }
}

std::vector<double> basis_vector(int d, const SpherePoint& p) {
    std::vector<double> out(static_cast<std::size_t>(basis_size(d)));
    std::vector<double> scratch;
    basis_into(d, p.theta(), p.phi(), scratch, out);
    return out;
}

} // namespace sphdes
