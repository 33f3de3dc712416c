#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sphdes {

void symmetric_eigen(std::span<const double> a, int k, std::vector<double>& values,
                     std::vector<double>& vectors) {
    const std::size_t n = static_cast<std::size_t>(k);
    std::vector<double> m(a.begin(), a.end());
    vectors.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vectors[i * n + i] = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) s += m[p * n + q] * m[p * n + q];
        return std::sqrt(2.0 * s);
    };

    double scale = 0.0;
    for (std::size_t i = 0; i < n * n; ++i) scale = std::max(scale, std::abs(m[i]));
    const double stop = (scale > 0.0 ? scale : 1.0) * 1e-15 * static_cast<double>(k);

    for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m[p * n + q];
                if (std::abs(apq) <= stop / static_cast<double>(n)) continue;
                const double app = m[p * n + p];
                const double aqq = m[q * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double mip = m[i * n + p];
                    const double miq = m[i * n + q];
                    m[i * n + p] = c * mip - s * miq;
                    m[i * n + q] = s * mip + c * miq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double mpi = m[p * n + i];
                    const double mqi = m[q * n + i];
                    m[p * n + i] = c * mpi - s * mqi;
                    m[q * n + i] = s * mpi + c * mqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = vectors[i * n + p];
                    const double viq = vectors[i * n + q];
                    vectors[i * n + p] = c * vip - s * viq;
                    vectors[i * n + q] = s * vip + c * viq;
                }
            }
        }
    }

    values.resize(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = m[i * n + i];

    // Sort ascending and permute eigenvectors to match.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    std::vector<double> sorted_values(n);
    std::vector<double> sorted_vectors(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        sorted_values[j] = values[order[j]];
        for (std::size_t i = 0; i < n; ++i) sorted_vectors[i * n + j] = vectors[i * n + order[j]];
    }
    values = std::move(sorted_values);
    vectors = std::move(sorted_vectors);
}

bool solve_spd(std::span<const double> a, std::span<const double> b, int k,
               std::vector<double>& x) {
    const std::size_t n = static_cast<std::size_t>(k);
    std::vector<double> l(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a[i * n + j];
            for (std::size_t p = 0; p < j; ++p) s -= l[i * n + p] * l[j * n + p];
            if (i == j) {
                if (!(s > 0.0)) return false;
                l[i * n + i] = std::sqrt(s);
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    x.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t p = 0; p < i; ++p) s -= l[i * n + p] * x[p];
        x[i] = s / l[i * n + i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t p = ii + 1; p < n; ++p) s -= l[p * n + ii] * x[p];
        x[ii] = s / l[ii * n + ii];
    }
    return true;
}

} // namespace sphdes
