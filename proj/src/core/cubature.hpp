#ifndef SPHDES_CORE_CUBATURE_HPP
#define SPHDES_CORE_CUBATURE_HPP

#include <cstdint>
#include <vector>

#include "core/sphere.hpp"

namespace sphdes {

/// Per-degree cubature residuals and the detected maximal strength.
struct StrengthReport {
    std::vector<double> residuals; // residuals[l-1] = r_l for l = 1..t_max
    int strength = 0;              // largest t with r_1..r_t all <= tol
    double tol = 1e-10;
};

/// r_l = sum_m ( (1/n) sum_i Y_l^m(x_i) )^2 for l = 1..t_max. The design
/// averages every degree-l harmonic exactly iff r_l vanishes, since the
/// uniform-measure integral of each Y_l^m with l >= 1 is zero.
std::vector<double> residuals(const Design& design, int t_max);

/// Detects the strength: the longest prefix r_1..r_t with all residuals <= tol.
StrengthReport strength(const Design& design, int t_max, double tol = 1e-10);

/// Integral of x^a y^b z^c over the sphere with respect to the normalized
/// uniform measure: 0 if any exponent is odd, otherwise
/// (a-1)!!(b-1)!!(c-1)!!/(a+b+c+1)!!. Requires a+b+c <= 60.
double monomial_integral(int a, int b, int c);

/// Independent oracle for the cubature property: over `trials` random exponent
/// triples with a+b+c <= t, the maximum of
/// | (1/n) sum_i x_i^a y_i^b z_i^c - monomial_integral(a,b,c) |.
double monomial_check(const Design& design, int t, int trials, std::uint64_t seed);

} // namespace sphdes

#endif
