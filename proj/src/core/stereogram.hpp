#ifndef SPHDES_CORE_STEREOGRAM_HPP
#define SPHDES_CORE_STEREOGRAM_HPP

#include <string>

#include "core/sphere.hpp"

namespace sphdes {

/// A sphere point mapped onto the equatorial plane. Both closed hemispheres
/// land in the closed unit disk.
struct ProjectedMarker {
    double u = 0.0;
    double v = 0.0;
    bool north = true; // rendered solid; southern points render as open circles
};

/// Stereographic projection: northern points (z >= 0, equator included) from
/// the south pole, (u, v) = (x, y)/(1+z); southern points from the north pole,
/// (u, v) = (x, y)/(1-z).
ProjectedMarker project(const SpherePoint& p);

struct StereogramStyle {
    int canvas_px = 480;
    double marker_radius_px = 5.0;
    int meridians = 12; // grid diameters through the origin
    int parallels = 2;  // grid circles centred at the origin, poles excluded
    bool grid = false;
    bool boundary = true;
};

/// Standalone SVG document: the unit-circle boundary, the optional grid, one
/// filled circle per northern point and one stroked open circle per southern
/// point. Coincident projections (the pole pair, or any equator-mirror pair)
/// render concentrically as an open ring around the solid dot. Rendering is a
/// pure function of its inputs; identical input, identical text.
std::string render_svg(const Design& design, const StereogramStyle& style);

} // namespace sphdes

#endif
