#pragma once

#include <span>
#include <vector>

#include "numrange/matrix.hpp"

namespace numrange {

/// Convex polygon with counterclockwise vertices and no three collinear.
/// One- and two-vertex polygons (a point, a segment) are legal and flagged
/// as degenerate.
struct ConvexPolygon {
    std::vector<Complex> vertices;

    [[nodiscard]] bool degenerate() const noexcept { return vertices.size() < 3; }
    friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;
};

/// Andrew's monotone chain. A boundary point within 1e-12 of the point-set
/// extent from the chord through its neighbours is dropped as collinear.
/// Throws DomainError on empty input.
ConvexPolygon convex_hull(std::span<const Complex> points);

/// How far z lies outside the polygon (0 when inside or on the boundary).
double outside_distance(const ConvexPolygon& polygon, Complex z);

inline bool contains(const ConvexPolygon& polygon, Complex z, double tol) {
    return outside_distance(polygon, z) <= tol;
}

}  // namespace numrange
