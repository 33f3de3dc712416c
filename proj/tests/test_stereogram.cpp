#include <cmath>
#include <string>

#include "core/catalog.hpp"
#include "core/sphere.hpp"
#include "core/stereogram.hpp"
#include "doctest.h"

using namespace sphdes;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("projection of the reference points") {
    const ProjectedMarker top = project(SpherePoint::from_vector({0, 0, 1}));
    CHECK(top.u == 0.0);
    CHECK(top.v == 0.0);
    CHECK(top.north);

    const ProjectedMarker bottom = project(SpherePoint::from_vector({0, 0, -1}));
    CHECK(bottom.u == 0.0);
    CHECK(bottom.v == 0.0);
    CHECK_FALSE(bottom.north);

    const ProjectedMarker mid = project(SpherePoint::from_vector({0, 0.6, 0.8}));
    CHECK(mid.u == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mid.v == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(mid.north);

    // Equator points count as northern by convention.
    const ProjectedMarker eq = project(SpherePoint::from_vector({1, 0, 0}));
    CHECK(eq.u == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eq.north);
}

TEST_CASE("projections stay inside the closed unit disk") {
    const Design d = random_design(500, 77);
    for (const SpherePoint& p : d.points) {
        const ProjectedMarker m = project(p);
        CHECK(m.u * m.u + m.v * m.v <= 1.0 + 1e-9);
    }
}

TEST_CASE("antipodal points project to the same radius with opposite flags") {
    // The projection of -p lands at -(u, v): same distance from the centre on
    // the same diameter, in the opposite hemisphere.
    const Design d = random_design(50, 31);
    for (const SpherePoint& p : d.points) {
        const ProjectedMarker a = project(p);
        const ProjectedMarker b = project(p.antipode());
        CHECK(a.north != b.north);
        CHECK(std::abs(a.u + b.u) < 1e-12);
        CHECK(std::abs(a.v + b.v) < 1e-12);
    }
}

TEST_CASE("equator-mirror pairs project concentrically with opposite flags") {
    const Design d = random_design(50, 33);
    for (const SpherePoint& p : d.points) {
        if (std::abs(p.z()) < 1e-9) continue;
        const ProjectedMarker a = project(p);
        const ProjectedMarker b = project(SpherePoint::from_vector({p.x(), p.y(), -p.z()}));
        CHECK(a.north != b.north);
        CHECK(std::abs(a.u - b.u) < 1e-12);
        CHECK(std::abs(a.v - b.v) < 1e-12);
    }
}

TEST_CASE("octahedron stereogram: five solid markers, one open, pole pair concentric") {
    StereogramStyle style;
    const std::string svg = render_svg(platonic("octahedron"), style);
    CHECK(count_occurrences(svg, "fill=\"black\"/>") == 5);
    CHECK(count_occurrences(svg, "fill=\"white\" stroke=\"black\"") == 1);
    // Both pole markers sit at the canvas centre (240, 240 at 480 px).
    CHECK(count_occurrences(svg, "cx=\"240.0000\" cy=\"240.0000\" r=\"5.0000\" fill=\"black\"") == 1);
    CHECK(count_occurrences(svg, "cx=\"240.0000\" cy=\"240.0000\" r=\"5.0000\" fill=\"white\"") == 1);
}

TEST_CASE("tetrahedron solid/open split follows the z signs") {
    // Orientation (+-1,+-1,+-1)/sqrt(3), positive sign product: two vertices in
    // each hemisphere.
    const std::string svg = render_svg(platonic("tetrahedron"), StereogramStyle{});
    CHECK(count_occurrences(svg, "fill=\"black\"/>") == 2);
    CHECK(count_occurrences(svg, "fill=\"white\" stroke=\"black\"") == 2);
}

TEST_CASE("marker and element counts without the grid") {
    StereogramStyle style;
    style.grid = false;
    const Design d = random_design(9, 5);
    const std::string svg = render_svg(d, style);
    CHECK(count_occurrences(svg, "<circle") == 10); // 9 markers + boundary
    CHECK(count_occurrences(svg, "<line") == 0);

    style.boundary = false;
    CHECK(count_occurrences(render_svg(d, style), "<circle") == 9);
}

TEST_CASE("grid rendering adds meridians and parallels") {
    StereogramStyle style;
    style.grid = true;
    style.meridians = 6;
    style.parallels = 3;
    const Design d = random_design(4, 15);
    const std::string svg = render_svg(d, style);
    CHECK(count_occurrences(svg, "<line") == 6);
    CHECK(count_occurrences(svg, "<circle") == 4 + 1 + 3);
}

TEST_CASE("rendering is deterministic") {
    const Design d = random_design(40, 123);
    StereogramStyle style;
    style.grid = true;
    CHECK(render_svg(d, style) == render_svg(d, style));
}

TEST_CASE("invalid style dimensions are rejected") {
    StereogramStyle style;
    style.canvas_px = 0;
    CHECK_THROWS_AS(render_svg(platonic("cube"), style), std::invalid_argument);
}
