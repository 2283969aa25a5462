#pragma once

#include <cstddef>
#include <vector>

#include "numrange/hull.hpp"
#include "numrange/matrix.hpp"

namespace numrange {

/// A point of the boundary-generating curve: for direction theta, the
/// Rayleigh quotient of the eigenvector belonging to eigenvalue `branch`
/// (0 = largest) of cos(theta) H1 + sin(theta) H2. Re(e^{-i theta} point)
/// equals `support`.
struct BoundarySample {
    double theta;
    std::size_t branch;
    Complex point;
    double support;
};

/// Largest eigenvalue of cos(theta) H1 + sin(theta) H2, i.e. the maximum of
/// Re(e^{-i theta} z) over the field of values.
double support_function(const Matrix& a, double theta);

/// Same, with the Hermitian parts already split off.
double support_function(const HermitianPair& parts, double theta);

/// Directions 2*pi*j/m for j = 0..m-1.
std::vector<double> angle_grid(std::size_t m);

/// All n branches at each of the m grid angles, ordered by (angle, branch).
/// Throws DomainError for m < 3.
std::vector<BoundarySample> kippenhahn_points(const Matrix& a, std::size_t m);

/// Branch 0 only: m samples of the outer boundary, counterclockwise.
std::vector<BoundarySample> fov_boundary(const Matrix& a, std::size_t m);

/// Convex hull of the sample points.
ConvexPolygon hull_of(const std::vector<BoundarySample>& samples);

/// Upper bound on how far the field of values can reach outside the hull of
/// outer-boundary samples: for each pair of consecutive samples, the distance
/// from their chord to the intersection of their support lines. `samples`
/// must be the output of fov_boundary.
double hull_gap_bound(const std::vector<BoundarySample>& samples);

}  // namespace numrange
