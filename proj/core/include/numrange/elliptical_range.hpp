#pragma once

#include <string_view>

#include "numrange/matrix.hpp"

namespace numrange {

enum class EllipseKind { point, segment, circle, ellipse };

std::string_view to_string(EllipseKind kind) noexcept;

/// Closed elliptical disk described by its foci and semi-axes.
///
/// center is (focus1 + focus2) / 2, semi_major^2 = semi_minor^2 + c^2 with c
/// the focal half-distance, and rotation is the major-axis direction in
/// [0, pi), 0 for circles and points.
struct EllipseDisk {
    Complex center;
    Complex focus1;
    Complex focus2;
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double rotation = 0.0;
    EllipseKind kind = EllipseKind::point;
};

/// The field of values of a 2x2 matrix: centered at tr(A)/2, foci at the
/// eigenvalues, minor axis sqrt(tr(A^*A) - |l1|^2 - |l2|^2).
///
/// Throws DimensionError unless n = 2, and NumericalError when the minor-axis
/// radicand is below -1e-10 tr(A^*A).
EllipseDisk elliptical_range(const Matrix& a);

/// Focal-sum membership: |z - f1| + |z - f2| <= 2 semi_major + tol.
bool contains(const EllipseDisk& e, Complex z, double tol);

/// How far the focal sum of z exceeds the major axis (0 when inside).
double focal_excess(const EllipseDisk& e, Complex z) noexcept;

/// max over the disk of Re(e^{-i theta} z).
double ellipse_support(const EllipseDisk& e, double theta) noexcept;

/// Image of the disk under z -> alpha z + beta.
EllipseDisk affine_image(const EllipseDisk& e, Complex alpha, Complex beta);

/// Largest field-wise difference between two disks: center, foci as sorted
/// pairs, semi-axes, and rotation measured as displacement of the foci
/// (angle difference mod pi times the focal half-distance).
double ellipse_deviation(const EllipseDisk& lhs, const EllipseDisk& rhs) noexcept;

}  // namespace numrange
