#ifndef SPHDES_CORE_CATALOG_HPP
#define SPHDES_CORE_CATALOG_HPP

#include <stdexcept>
#include <string_view>
#include <vector>

#include "core/sphere.hpp"

namespace sphdes {

/// Raised when an iterative node solve fails after bounded retries.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vertices of a Platonic solid inscribed in the unit sphere, in a fixed
/// documented orientation:
///   tetrahedron  - cube vertices (+-1,+-1,+-1)/sqrt(3) with positive sign product
///   octahedron   - the six +-axis unit vectors
///   cube         - all eight (+-1,+-1,+-1)/sqrt(3)
///   icosahedron  - cyclic permutations of (0,+-1,+-g)/sqrt(1+g^2), g the golden ratio
///   dodecahedron - the dual: cube vertices plus cyclic permutations of
///                  (0,+-1/g,+-g), all scaled by 1/sqrt(3)
/// Throws std::invalid_argument for an unknown name.
Design platonic(std::string_view name);

/// Polar quadrature abscissas: n_theta equally weighted values of cos(theta),
/// symmetric about zero (pairs +-a_k plus the node 0 when n_theta is odd),
/// solving (1/n_theta) sum_i P_2k(x_i) = 0 for k = 1..d. Solved by
/// Levenberg-Marquardt from equispaced starting nodes, retried with jittered
/// starts. Returned in descending order. Throws ConvergenceError when no
/// solution is found.
std::vector<double> polar_nodes(int d, int n_theta);

struct ProductDesignSpec {
    int d = 1;          // model order
    int n_theta = 0;    // polar node count; 0 selects default_polar_count(d)
    int n_phi = 0;      // azimuth count; 0 selects 2d+1; must be >= 2d+1
    double alpha = 0.0; // azimuth offset in radians
};

/// Product design: polar nodes x equally spaced azimuths
/// phi_j = alpha + 2*pi*j/n_phi - pi. Has cubature strength >= 2d.
Design product_design(const ProductDesignSpec& spec);
Design product_design(int d, double alpha = 0.0);

/// Minimal polar node count known to admit an equal-weight solution for the
/// moment system of order d (d = 1..7: 2, 4, 6, 9, 13, 17, 23). Returns 0
/// outside that range.
int default_polar_count(int d);

/// Minimum possible point count for a spherical t-design:
/// (t+2)^2/4 for even t, (t+1)(t+3)/4 for odd t.
long lower_bound(int t);

} // namespace sphdes

#endif
