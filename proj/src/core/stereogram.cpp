#include "core/stereogram.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sphdes {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    // Fixed decimals keep the document byte-stable; -0 collapses to 0.
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}
} // namespace

ProjectedMarker project(const SpherePoint& p) {
    ProjectedMarker m;
    m.north = p.z() >= 0.0;
    const double denom = m.north ? 1.0 + p.z() : 1.0 - p.z();
    m.u = p.x() / denom;
    m.v = p.y() / denom;
    return m;
}

std::string render_svg(const Design& design, const StereogramStyle& style) {
    if (style.canvas_px <= 0 || style.marker_radius_px <= 0.0)
        throw std::invalid_argument("stereogram style dimensions must be positive");

    // Plane window [-1.05, 1.05]^2 onto the canvas, v axis flipped (north up).
    const double w = static_cast<double>(style.canvas_px);
    const double scale = w / 2.1;
    auto px = [&](double u) { return (u + 1.05) * scale; };
    auto py = [&](double v) { return (1.05 - v) * scale; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.canvas_px) +
           "\" height=\"" + std::to_string(style.canvas_px) + "\" viewBox=\"0 0 " +
           std::to_string(style.canvas_px) + " " + std::to_string(style.canvas_px) + "\">\n";

    if (style.grid) {
        svg += "  <g stroke=\"#bbbbbb\" stroke-width=\"1\" fill=\"none\">\n";
        for (int k = 0; k < style.meridians; ++k) {
            const double a = kPi * k / style.meridians;
            const double cu = std::cos(a), sv = std::sin(a);
            svg += "    <line x1=\"" + fmt(px(-cu)) + "\" y1=\"" + fmt(py(-sv)) + "\" x2=\"" +
                   fmt(px(cu)) + "\" y2=\"" + fmt(py(sv)) + "\"/>\n";
        }
        for (int k = 1; k <= style.parallels; ++k) {
            // Parallels at colatitude k*(pi/2)/(parallels+1) project to
            // origin-centred circles of radius tan(theta/2).
            const double theta = 0.5 * kPi * k / (style.parallels + 1);
            const double r = std::tan(theta / 2.0);
            svg += "    <circle cx=\"" + fmt(px(0.0)) + "\" cy=\"" + fmt(py(0.0)) + "\" r=\"" +
                   fmt(r * scale) + "\"/>\n";
        }
        svg += "  </g>\n";
    }

    if (style.boundary) {
        svg += "  <circle cx=\"" + fmt(px(0.0)) + "\" cy=\"" + fmt(py(0.0)) + "\" r=\"" +
               fmt(scale) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }

    // Southern markers first so a concentric antipodal pair shows as an open
    // ring around the solid dot.
    const std::string r = fmt(style.marker_radius_px);
    for (const SpherePoint& p : design.points) {
        const ProjectedMarker m = project(p);
        if (m.north) continue;
        svg += "  <circle cx=\"" + fmt(px(m.u)) + "\" cy=\"" + fmt(py(m.v)) + "\" r=\"" + r +
               "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (const SpherePoint& p : design.points) {
        const ProjectedMarker m = project(p);
        if (!m.north) continue;
        svg += "  <circle cx=\"" + fmt(px(m.u)) + "\" cy=\"" + fmt(py(m.v)) + "\" r=\"" + r +
               "\" fill=\"black\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace sphdes
