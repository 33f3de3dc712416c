#ifndef SPHDES_CORE_OPTIMALITY_HPP
#define SPHDES_CORE_OPTIMALITY_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "core/sphere.hpp"

namespace sphdes {

/// M = (1/n) sum_i f(x_i) f(x_i)^T with f the spherical harmonic basis of
/// order d; symmetric positive semidefinite, (d+1)^2 x (d+1)^2, row-major.
struct InformationMatrix {
    int order = 0;
    std::vector<double> entries;

    int dim() const { return (order + 1) * (order + 1); }
    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim() + j]; }
};

InformationMatrix information_matrix(const Design& design, int d);

/// Scalar design criteria of M with eigenvalues l_1..l_k. All are normalized
/// so that larger is better and M = I scores exactly 1:
///   D = (det M)^(1/k),  A = k / tr(M^-1),  E = l_min,
///   phi_p = ((1/k) sum l_i^-p)^(-1/p) for finite p > 0.
/// A singular M (l_min < 1e-12 l_max) reports D = A = E = phi_p = 0 with the
/// singular flag set instead of throwing.
struct CriteriaReport {
    int order = 0;
    double d_criterion = 0.0;
    double a_criterion = 0.0;
    double e_criterion = 0.0;
    std::vector<double> p_values;
    std::vector<double> phi_p;
    double identity_deviation = 0.0; // max |M - I| entry
    bool singular = false;
};

CriteriaReport criteria(const InformationMatrix& m, std::span<const double> p_values);

struct ResultCheck {
    bool optimal = false;
    double deviation = 0.0;
};

/// True iff max |information_matrix(design, d) - I| <= tol. Holds whenever the
/// design has cubature strength >= 2d.
ResultCheck check_result(const Design& design, int d, double tol = 1e-10);

/// Least-squares coefficient estimate c = M^-1 (1/n) sum_i y_i f(x_i), with a
/// direct fast path when M passes the identity check at 1e-10.
/// Throws SingularMatrixError when M is singular.
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> fit(const Design& design, std::span<const double> y, int d);

/// y_i = sum c_l^m Y_l^m(x_i) + noise_sd * e_i with e_i standard normal from
/// the seeded generator. coeffs has length (d+1)^2 in the basis ordering.
std::vector<double> simulate(const Design& design, int d, std::span<const double> coeffs,
                             double noise_sd, std::uint64_t seed);

} // namespace sphdes

#endif
