#include "core/sphere.hpp"

#include <cmath>
#include <stdexcept>

#include "core/rng.hpp"

namespace sphdes {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

double wrap_angle(double phi) {
    double p = std::fmod(phi, 2.0 * kPi);
    if (p <= -kPi) p += 2.0 * kPi;
    if (p > kPi) p -= 2.0 * kPi;
    return p;
}

SpherePoint SpherePoint::from_angles(double theta, double phi) {
    if (!(theta >= -1e-9 && theta <= kPi + 1e-9))
        throw std::domain_error("polar angle must lie in [0, pi], got " + std::to_string(theta));
    if (!std::isfinite(phi))
        throw std::domain_error("azimuth must be finite");
    const double t = std::min(std::max(theta, 0.0), kPi);
    const double p = wrap_angle(phi);
    const double st = std::sin(t);
    return SpherePoint({st * std::cos(p), st * std::sin(p), std::cos(t)}, t, p);
}

SpherePoint SpherePoint::from_vector(const Vec3& v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::domain_error("cannot normalize a zero or non-finite vector");
    // A norm within floating noise of 1 is left untouched so that parsed
    // coordinates survive bit for bit.
    const Vec3 u = (std::abs(n - 1.0) <= 1e-12) ? v : Vec3{v.x / n, v.y / n, v.z / n};
    const double theta = std::acos(std::min(std::max(u.z, -1.0), 1.0));
    // Pole convention: azimuth 0 keeps serialization deterministic.
    const double phi = (u.x == 0.0 && u.y == 0.0) ? 0.0 : wrap_angle(std::atan2(u.y, u.x));
    return SpherePoint(u, theta, phi);
}

Design random_design(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::domain_error("design needs at least one point");
    SplitMix64 rng(seed);
    Design d;
    d.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.next_double();
        const double v = rng.next_double();
        const double theta = std::acos(1.0 - 2.0 * u);
        const double phi = 2.0 * kPi * v - kPi;
        d.points.push_back(SpherePoint::from_angles(theta, phi));
    }
    return d;
}

} // namespace sphdes
