#ifndef SPHDES_CORE_HARMONICS_HPP
#define SPHDES_CORE_HARMONICS_HPP

#include <span>
#include <vector>

#include "core/sphere.hpp"

namespace sphdes {

/// Number of real spherical harmonics of degree <= d.
constexpr int basis_size(int d) { return (d + 1) * (d + 1); }

/// Position of (l, m) in the basis ordering (0,0), (1,-1), (1,0), (1,1), ...,
/// i.e. m ascending within each degree.
constexpr int basis_index(int l, int m) { return l * l + l + m; }

/// Associated Legendre function P_l^m(x) without the Condon-Shortley phase:
/// P_l^m(x) = (1-x^2)^(m/2) d^m/dx^m P_l(x).
///
/// Reference path with factorial-scale intermediates; restricted to l <= 40.
/// Throws std::domain_error for |x| > 1, m > l, m < 0 or l > 40.
double assoc_legendre(int l, int m, double x);

/// Legendre polynomial P_l(x). Valid for any real x (polynomial recurrence).
double legendre_p(int l, double x);

/// Fills out[0..lmax] with P_0(x) .. P_lmax(x).
void legendre_p_all(int lmax, double x, std::span<double> out);

/// Fills p with P_0..P_lmax and dp with P_0'..P_lmax'.
void legendre_p_deriv_all(int lmax, double x, std::span<double> p, std::span<double> dp);

/// Fully normalized associated Legendre functions
///   N_l^m(x) = sqrt((2l+1) (l-m)!/(l+m)!) * P_l^m(x)
/// for all 0 <= m <= l <= lmax at a single x, written into `table` at
/// tri_index(l, m) = l(l+1)/2 + m. No factorial ratio is formed explicitly,
/// so the evaluation stays finite for high degrees (tested at l = 200).
void norm_legendre_table(int lmax, double x, std::vector<double>& table);

constexpr int tri_index(int l, int m) { return l * (l + 1) / 2 + m; }

/// Real spherical harmonic
///   Y_l^0      = sqrt(2l+1) P_l(cos theta)
///   Y_l^m, m>0 = sqrt(2(2l+1)(l-m)!/(l+m)!) P_l^m(cos theta) cos(m phi)
///   Y_l^m, m<0 = sqrt(2(2l+1)(l-|m|)!/(l+|m|)!) P_l^|m|(cos theta) sin(m phi)
/// computed through the normalized recurrence. theta must lie in [0, pi].
double real_sph_harm(int l, int m, double theta, double phi);

/// All Y_l^m(theta, phi) for l <= d in the basis ordering. `scratch` carries the
/// normalized Legendre table between calls; out must hold basis_size(d) values.
void basis_into(int d, double theta, double phi, std::vector<double>& scratch,
                std::span<double> out);

/// Vector of all Y_l^m(p) for l <= d in the basis ordering.
std::vector<double> basis_vector(int d, const SpherePoint& p);

} // namespace sphdes

#endif
