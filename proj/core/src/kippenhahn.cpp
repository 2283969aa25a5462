#include "numrange/kippenhahn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "numrange/errors.hpp"

namespace numrange {

namespace {

Matrix rotated_pencil(const HermitianPair& parts, double theta) {
    return std::cos(theta) * parts.h1 + std::sin(theta) * parts.h2;
}

void require_grid(std::size_t m) {
    if (m < 3) {
        throw DomainError("sample count must be at least 3, got " + std::to_string(m));
    }
}

std::vector<BoundarySample> sweep(const Matrix& a, std::size_t m, bool outer_only) {
    require_grid(m);
    const HermitianPair parts = hermitian_parts(a);
    std::vector<BoundarySample> samples;
    samples.reserve(outer_only ? m : m * a.size());
    for (double theta : angle_grid(m)) {
        const auto pairs = hermitian_eigen(rotated_pencil(parts, theta));
        const std::size_t branches = outer_only ? 1 : pairs.size();
        for (std::size_t k = 0; k < branches; ++k) {
            samples.push_back({theta, k, rayleigh(a, pairs[k].vector), pairs[k].value});
        }
    }
    return samples;
}

}  // namespace

double support_function(const HermitianPair& parts, double theta) {
    return hermitian_eigen(rotated_pencil(parts, theta)).front().value;
}

double support_function(const Matrix& a, double theta) {
    return support_function(hermitian_parts(a), theta);
}

std::vector<double> angle_grid(std::size_t m) {
    std::vector<double> grid(m);
    for (std::size_t j = 0; j < m; ++j) {
        grid[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    }
    return grid;
}

std::vector<BoundarySample> kippenhahn_points(const Matrix& a, std::size_t m) {
    return sweep(a, m, false);
}

std::vector<BoundarySample> fov_boundary(const Matrix& a, std::size_t m) {
    return sweep(a, m, true);
}

ConvexPolygon hull_of(const std::vector<BoundarySample>& samples) {
    std::vector<Complex> points;
    points.reserve(samples.size());
    for (const auto& s : samples) {
        points.push_back(s.point);
    }
    return convex_hull(points);
}

double hull_gap_bound(const std::vector<BoundarySample>& samples) {
    double gap = 0.0;
    const std::size_t m = samples.size();
    for (std::size_t j = 0; j < m; ++j) {
        const BoundarySample& s0 = samples[j];
        const BoundarySample& s1 = samples[(j + 1) % m];
        // Support lines Re(e^{-i t} z) = h meet at the apex of the sliver
        // between the chord s0-s1 and the true boundary.
        const double det = std::sin(s1.theta - s0.theta);
        if (det == 0.0) {
            continue;
        }
        const double x = (s0.support * std::sin(s1.theta) - s1.support * std::sin(s0.theta)) / det;
        const double y = (s1.support * std::cos(s0.theta) - s0.support * std::cos(s1.theta)) / det;
        const ConvexPolygon chord{{s0.point, s1.point}};
        gap = std::max(gap, s0.point == s1.point ? std::abs(Complex{x, y} - s0.point)
                                                 : outside_distance(chord, Complex{x, y}));
    }
    return gap;
}

}  // namespace numrange
