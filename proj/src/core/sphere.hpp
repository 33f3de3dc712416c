#ifndef SPHDES_CORE_SPHERE_HPP
#define SPHDES_CORE_SPHERE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sphdes {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& v);

/// A direction on the unit sphere. Stores the unit vector together with the
/// polar angle theta in [0, pi] and the azimuth phi in (-pi, pi]; the two
/// representations are synchronized at construction and immutable afterwards.
class SpherePoint {
public:
    /// theta must lie in [0, pi] (tolerance 1e-9); phi is wrapped into (-pi, pi].
    /// Throws std::domain_error otherwise.
    static SpherePoint from_angles(double theta, double phi);

    /// Normalizes v and recovers the angles. At the poles phi is set to 0.
    /// Throws std::domain_error on a zero vector.
    static SpherePoint from_vector(const Vec3& v);

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    double theta() const { return theta_; }
    double phi() const { return phi_; }

    SpherePoint antipode() const { return from_vector(-v_); }

private:
    SpherePoint(const Vec3& v, double theta, double phi) : v_(v), theta_(theta), phi_(phi) {}

    Vec3 v_;
    double theta_;
    double phi_;
};

/// An equally-weighted finite point set on the sphere.
struct Design {
    std::vector<SpherePoint> points;
    std::string label;

    std::size_t size() const { return points.size(); }
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double phi);

/// n independent uniform points: theta = acos(1 - 2u), phi = 2*pi*v - pi with
/// u, v drawn pairwise from SplitMix64(seed). Identical seed, identical design.
Design random_design(std::size_t n, std::uint64_t seed);

} // namespace sphdes

#endif
