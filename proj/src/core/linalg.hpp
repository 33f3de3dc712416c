#ifndef SPHDES_CORE_LINALG_HPP
#define SPHDES_CORE_LINALG_HPP

#include <span>
#include <vector>

namespace sphdes {

/// Eigen decomposition of a symmetric k x k matrix (row-major) by cyclic
/// Jacobi rotations: A = V diag(values) V^T. Eigenvalues ascending;
/// eigenvector j is the j-th column of V (row-major k x k).
void symmetric_eigen(std::span<const double> a, int k, std::vector<double>& values,
                     std::vector<double>& vectors);

/// Solves A x = b for symmetric positive definite A (row-major k x k) by
/// Cholesky factorization. Returns false when A is not positive definite.
bool solve_spd(std::span<const double> a, std::span<const double> b, int k,
               std::vector<double>& x);

} // namespace sphdes

#endif
