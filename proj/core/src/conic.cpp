#include "numrange/conic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "numrange/errors.hpp"

namespace numrange {

double determinant(const Matrix3& m) noexcept {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 adjugate(const Matrix3& m) noexcept {
    Matrix3 adj{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            // cofactor of (j, i)
            const std::size_t r0 = (j + 1) % 3;
            const std::size_t r1 = (j + 2) % 3;
            const std::size_t c0 = (i + 1) % 3;
            const std::size_t c1 = (i + 2) % 3;
            adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    }
    return adj;
}

ConicMatrix::ConicMatrix(const Matrix3& m) : m_(m) {
    bool any_nonzero = false;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (!std::isfinite(m_[i][j])) {
                throw DomainError("conic entries must be finite");
            }
            if (m_[i][j] != m_[j][i]) {
                throw DomainError("conic matrix must be symmetric");
            }
            any_nonzero = any_nonzero || m_[i][j] != 0.0;
        }
    }
    if (!any_nonzero) {
        throw DomainError("conic matrix must be nonzero");
    }
}

ConicMatrix ConicMatrix::diagonal(double a, double b, double c) {
    return ConicMatrix(Matrix3{{{a, 0.0, 0.0}, {0.0, b, 0.0}, {0.0, 0.0, c}}});
}

double ConicMatrix::frobenius_norm() const noexcept {
    double sum = 0.0;
    for (const auto& row : m_) {
        for (double x : row) {
            sum += x * x;
        }
    }
    return std::sqrt(sum);
}

double ConicMatrix::evaluate(double u, double v, double w) const noexcept {
    const std::array<double, 3> x{u, v, w};
    double sum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            sum += x[i] * m_[i][j] * x[j];
        }
    }
    return sum;
}

HomogeneousPolynomial ConicMatrix::to_polynomial() const {
    HomogeneousPolynomial p(2);
    for (unsigned i = 0; i < 3; ++i) {
        Exponent square{};
        square[i] = 2;
        p.add_term(square, m_[i][i]);
        for (unsigned j = i + 1; j < 3; ++j) {
            Exponent mixed{};
            mixed[i] = 1;
            mixed[j] = 1;
            p.add_term(mixed, 2.0 * m_[i][j]);
        }
    }
    return p;
}

ConicMatrix conic_of(const HomogeneousPolynomial& p) {
    if (p.degree() != 2) {
        throw DegreeError("conic_of requires degree 2, got " + std::to_string(p.degree()));
    }
    Matrix3 m{};
    for (unsigned i = 0; i < 3; ++i) {
        Exponent square{};
        square[i] = 2;
        m[i][i] = p.coefficient(square);
        for (unsigned j = i + 1; j < 3; ++j) {
            Exponent mixed{};
            mixed[i] = 1;
            mixed[j] = 1;
            m[i][j] = m[j][i] = p.coefficient(mixed) / 2.0;
        }
    }
    return ConicMatrix(m);
}

ConicMatrix adjugate_dual(const ConicMatrix& c) {
    const double scale = c.frobenius_norm();
    const double det = c.determinant();
    if (std::abs(det) <= 1e-12 * scale * scale * scale) {
        throw DegenerateError("adjugate_dual: singular conic, its dual is not a conic");
    }
    Matrix3 adj = adjugate(c.matrix());
    // Exactly symmetric up to operand order; mirror the upper triangle.
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            adj[j][i] = adj[i][j];
        }
    }
    return ConicMatrix(adj);
}

ConicMatrix normalize_conic(const ConicMatrix& c) {
    double largest = 0.0;
    double first = 0.0;
    for (const auto& row : c.matrix()) {
        for (double x : row) {
            largest = std::max(largest, std::abs(x));
            if (first == 0.0) {
                first = x;
            }
        }
    }
    const double divisor = first < 0.0 ? -largest : largest;
    Matrix3 m = c.matrix();
    for (auto& row : m) {
        for (double& x : row) {
            x = x / divisor + 0.0;  // no negative zeros
        }
    }
    return ConicMatrix(m);
}

}  // namespace numrange
