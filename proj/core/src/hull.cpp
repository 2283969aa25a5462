#include "numrange/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "numrange/errors.hpp"

namespace numrange {

namespace {

double cross(Complex o, Complex a, Complex b) noexcept {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(Complex a, Complex b, Complex z) noexcept {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) {
        return std::abs(z - a);
    }
    const double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

}  // namespace

ConvexPolygon convex_hull(std::span<const Complex> points) {
    if (points.empty()) {
        throw DomainError("convex_hull: empty point set");
    }
    std::vector<Complex> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    double min_re = std::numeric_limits<double>::infinity();
    double max_re = -min_re;
    double min_im = min_re;
    double max_im = -min_re;
    double magnitude = 0.0;
    for (const auto& p : pts) {
        min_re = std::min(min_re, p.real());
        max_re = std::max(max_re, p.real());
        min_im = std::min(min_im, p.imag());
        max_im = std::max(max_im, p.imag());
        magnitude = std::max(magnitude, std::abs(p));
    }
    const double extent = std::hypot(max_re - min_re, max_im - min_im);
    if (extent <= 1e-12 * magnitude || pts.size() == 1) {
        return {{pts.front()}};
    }
    // A middle point is dropped when it lies within 1e-12 * extent of the
    // chord joining its neighbours.
    const double collinear_tol = 1e-12 * extent;
    auto turns_left = [collinear_tol](Complex o, Complex a, Complex b) {
        return cross(o, a, b) > collinear_tol * std::abs(b - o);
    };

    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], p)) {
            --k;
        }
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && !turns_left(hull[k - 2], hull[k - 1], pts[i])) {
            --k;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return {std::move(hull)};
}

double outside_distance(const ConvexPolygon& polygon, Complex z) {
    const auto& v = polygon.vertices;
    if (v.empty()) {
        throw DomainError("outside_distance: empty polygon");
    }
    if (v.size() == 1) {
        return std::abs(z - v[0]);
    }
    if (v.size() == 2) {
        return segment_distance(v[0], v[1], z);
    }
    bool inside = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex a = v[i];
        const Complex b = v[(i + 1) % v.size()];
        if (cross(a, b, z) < 0.0) {
            inside = false;
            break;
        }
    }
    if (inside) {
        return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        best = std::min(best, segment_distance(v[i], v[(i + 1) % v.size()], z));
    }
    return best;
}

}  // namespace numrange
