#pragma once

#include <array>

#include "numrange/polynomial.hpp"

namespace numrange {

using Matrix3 = std::array<std::array<double, 3>, 3>;

double determinant(const Matrix3& m) noexcept;

/// Transpose of the cofactor matrix: adjugate(m) * m = det(m) * I.
Matrix3 adjugate(const Matrix3& m) noexcept;

/// Real symmetric 3x3 matrix M of the conic (u, v, w) M (u, v, w)^T = 0.
/// Construction rejects asymmetric, non-finite or all-zero input.
class ConicMatrix {
public:
    explicit ConicMatrix(const Matrix3& m);

    static ConicMatrix diagonal(double a, double b, double c);

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept { return m_[i][j]; }
    [[nodiscard]] const Matrix3& matrix() const noexcept { return m_; }

    [[nodiscard]] double determinant() const noexcept { return numrange::determinant(m_); }
    [[nodiscard]] double frobenius_norm() const noexcept;
    [[nodiscard]] double evaluate(double u, double v, double w) const noexcept;

    /// Quadratic form as a polynomial; mixed coefficients are twice the
    /// off-diagonal entries.
    [[nodiscard]] HomogeneousPolynomial to_polynomial() const;

    friend bool operator==(const ConicMatrix&, const ConicMatrix&) = default;

private:
    Matrix3 m_;
};

/// Symmetric matrix of a degree-2 polynomial: diagonal entries are the square
/// coefficients, off-diagonals half the mixed coefficients.
ConicMatrix conic_of(const HomogeneousPolynomial& p);

/// Point equation of the conic whose tangential equation is C: adj(C).
/// Throws DegenerateError when |det C| <= 1e-12 ||C||_F^3.
ConicMatrix adjugate_dual(const ConicMatrix& c);

/// Scales C so that its largest-magnitude entry has modulus 1 and the first
/// nonzero entry in row-major order is positive.
ConicMatrix normalize_conic(const ConicMatrix& c);

}  // namespace numrange
