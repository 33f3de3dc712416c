#include "core/optimality.hpp"

#include <cmath>
#include <string>

#include "core/harmonics.hpp"
#include "core/linalg.hpp"
#include "core/rng.hpp"

namespace sphdes {

InformationMatrix information_matrix(const Design& design, int d) {
    if (d < 0) throw std::domain_error("information_matrix: order must be nonnegative");
    if (design.points.empty()) throw std::domain_error("information_matrix: empty design");
    const int k = basis_size(d);
    InformationMatrix m;
    m.order = d;
    m.entries.assign(static_cast<std::size_t>(k) * k, 0.0);

    std::vector<double> row(static_cast<std::size_t>(k));
    std::vector<double> scratch;
    for (const SpherePoint& p : design.points) {
        basis_into(d, p.theta(), p.phi(), scratch, row);
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j)
                m.entries[static_cast<std::size_t>(i) * k + j] += row[i] * row[j];
    }
    const double inv_n = 1.0 / static_cast<double>(design.points.size());
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            const double v = m.entries[static_cast<std::size_t>(i) * k + j] * inv_n;
            m.entries[static_cast<std::size_t>(i) * k + j] = v;
            m.entries[static_cast<std::size_t>(j) * k + i] = v;
        }
    return m;
}

namespace {

double identity_deviation(const InformationMatrix& m) {
    const int k = m.dim();
    double dev = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            dev = std::max(dev, std::abs(m.at(i, j) - target));
        }
    return dev;
}

} // namespace

CriteriaReport criteria(const InformationMatrix& m, std::span<const double> p_values) {
    const int k = m.dim();
    CriteriaReport report;
    report.order = m.order;
    report.p_values.assign(p_values.begin(), p_values.end());
    report.identity_deviation = identity_deviation(m);
    for (double p : p_values)
        if (!(p > 0.0)) throw std::domain_error("criteria: phi_p requires finite p > 0");

    std::vector<double> values, vectors;
    symmetric_eigen(m.entries, k, values, vectors);
    const double lmax = values.back();
    const double floor = 1e-12 * std::max(lmax, 0.0);
    if (!(values.front() > floor) || !(lmax > 0.0)) {
        report.singular = true;
        report.phi_p.assign(p_values.size(), 0.0);
        return report;
    }

    // All criteria from one decomposition, in log space where overflow lurks.
    double log_sum = 0.0;
    double inv_sum = 0.0;
    for (double l : values) {
        log_sum += std::log(l);
        inv_sum += 1.0 / l;
    }
    report.d_criterion = std::exp(log_sum / k);
    report.a_criterion = k / inv_sum;
    report.e_criterion = values.front();

    report.phi_p.reserve(p_values.size());
    for (double p : p_values) {
        // phi_p = exp(-(1/p) * log((1/k) sum exp(-p log l_i))), evaluated with
        // the usual max-shift so that p as large as 1e6 stays finite.
        double shift = -p * std::log(values.front()); // largest exponent
        double acc = 0.0;
        for (double l : values) acc += std::exp(-p * std::log(l) - shift);
        const double log_mean = shift + std::log(acc / k);
        report.phi_p.push_back(std::exp(-log_mean / p));
    }
    return report;
}

ResultCheck check_result(const Design& design, int d, double tol) {
    const InformationMatrix m = information_matrix(design, d);
    ResultCheck check;
    check.deviation = identity_deviation(m);
    check.optimal = check.deviation <= tol;
    return check;
}

std::vector<double> fit(const Design& design, std::span<const double> y, int d) {
    if (y.size() != design.points.size())
        throw std::invalid_argument("fit: observation count " + std::to_string(y.size()) +
                                    " does not match design size " +
                                    std::to_string(design.points.size()));
    const int k = basis_size(d);
    const std::size_t n = design.points.size();

    std::vector<double> b(static_cast<std::size_t>(k), 0.0);
    std::vector<double> row(static_cast<std::size_t>(k));
    std::vector<double> scratch;
    for (std::size_t i = 0; i < n; ++i) {
        basis_into(d, design.points[i].theta(), design.points[i].phi(), scratch, row);
        for (int j = 0; j < k; ++j) b[static_cast<std::size_t>(j)] += y[i] * row[static_cast<std::size_t>(j)];
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (double& v : b) v *= inv_n;

    const InformationMatrix m = information_matrix(design, d);
    if (identity_deviation(m) <= 1e-10) return b; // M = I: the estimate is the plain average

    std::vector<double> values, vectors;
    symmetric_eigen(m.entries, k, values, vectors);
    if (!(values.back() > 0.0) || values.front() < 1e-12 * values.back())
        throw SingularMatrixError("fit: singular information matrix for order d=" +
                                  std::to_string(d) + " with n=" + std::to_string(n) + " points");

    // c = V diag(1/lambda) V^T b
    std::vector<double> vtb(static_cast<std::size_t>(k), 0.0);
    for (int j = 0; j < k; ++j) {
        double s = 0.0;
        for (int i = 0; i < k; ++i) s += vectors[static_cast<std::size_t>(i) * k + j] * b[static_cast<std::size_t>(i)];
        vtb[static_cast<std::size_t>(j)] = s / values[static_cast<std::size_t>(j)];
    }
    std::vector<double> c(static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < k; ++i) {
        double s = 0.0;
        for (int j = 0; j < k; ++j) s += vectors[static_cast<std::size_t>(i) * k + j] * vtb[static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(i)] = s;
    }
    return c;
}

std::vector<double> simulate(const Design& design, int d, std::span<const double> coeffs,
                             double noise_sd, std::uint64_t seed) {
    const int k = basis_size(d);
    if (coeffs.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("simulate: expected " + std::to_string(k) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    if (noise_sd < 0.0) throw std::domain_error("simulate: noise_sd must be nonnegative");

    SplitMix64 rng(seed);
    std::vector<double> y;
    y.reserve(design.points.size());
    std::vector<double> row(static_cast<std::size_t>(k));
    std::vector<double> scratch;
    for (const SpherePoint& p : design.points) {
        basis_into(d, p.theta(), p.phi(), scratch, row);
        double v = 0.0;
        for (int j = 0; j < k; ++j) v += coeffs[static_cast<std::size_t>(j)] * row[static_cast<std::size_t>(j)];
        if (noise_sd > 0.0) v += noise_sd * rng.next_normal();
        y.push_back(v);
    }
    return y;
}

} // namespace sphdes
