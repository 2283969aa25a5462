#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "numrange/conic.hpp"
#include "numrange/errors.hpp"
#include "numrange/polynomial.hpp"
#include "oracles.hpp"

using namespace numrange;

namespace {

constexpr Complex I{0.0, 1.0};

HomogeneousPolynomial random_polynomial(unsigned degree, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    HomogeneousPolynomial p(degree);
    for (unsigned i = 0; i <= degree; ++i) {
        for (unsigned j = 0; i + j <= degree; ++j) {
            p.add_term({i, j, degree - i - j}, coef(rng));
        }
    }
    return p;
}

void expect_matrix3_near(const Matrix3& actual, const Matrix3& expected, double tol) {
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_NEAR(actual[i][j], expected[i][j], tol) << "entry (" << i << "," << j << ")";
        }
    }
}

ConicMatrix random_symmetric(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    while (true) {
        Matrix3 m{};
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i; j < 3; ++j) {
                m[i][j] = m[j][i] = entry(rng);
            }
        }
        const ConicMatrix c(m);
        if (std::abs(c.determinant()) > 1e-3) {
            return c;
        }
    }
}

}  // namespace

TEST(PolynomialTest, TermsMustMatchDegree) {
    HomogeneousPolynomial p(2);
    EXPECT_THROW(p.add_term({1, 0, 0}, 1.0), DegreeError);
    EXPECT_THROW(HomogeneousPolynomial(3, {{{1, 1, 0}, 2.0}}), DegreeError);
    EXPECT_TRUE(p.is_zero());
    p.add_term({1, 1, 0}, 2.0);
    p.add_term({1, 1, 0}, -2.0);
    EXPECT_TRUE(p.is_zero());
}

TEST(PolynomialTest, EvaluateExamples) {
    const HomogeneousPolynomial circle(2, {{{2, 0, 0}, -0.25}, {{0, 2, 0}, -0.25}, {{0, 0, 2}, 1.0}});
    EXPECT_EQ(evaluate(circle, 1.0, 0.0, 0.5), 0.0);
    EXPECT_EQ(evaluate(circle, 0.0, 0.0, 0.0), 0.0);
    const HomogeneousPolynomial w2(2, {{{0, 0, 2}, 1.0}});
    EXPECT_EQ(evaluate(w2, 3.0, 7.0, 2.0), 4.0);
}

TEST(PolynomialTest, Homogeneity) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> x(-2.0, 2.0);
    for (unsigned degree = 1; degree <= 8; ++degree) {
        for (int trial = 0; trial < 25; ++trial) {
            const HomogeneousPolynomial p = random_polynomial(degree, rng);
            const double u = x(rng), v = x(rng), w = x(rng), t = x(rng);
            const double base = evaluate(p, u, v, w);
            const double scaled = evaluate(p, t * u, t * v, t * w);
            const double expected = std::pow(t, degree) * base;
            const double scale = std::pow(std::abs(t), degree) * evaluation_scale(p, u, v, w);
            EXPECT_LE(std::abs(scaled - expected), 1e-10 * scale);
        }
    }
}

TEST(PencilDeterminantTest, GoldenCaseNilpotent) {
    const HomogeneousPolynomial p = pencil_determinant(hermitian_parts(Matrix{{0.0, 1.0}, {0.0, 0.0}}));
    EXPECT_EQ(p.degree(), 2u);
    EXPECT_NEAR(p.coefficient({2, 0, 0}), -0.25, 1e-15);
    EXPECT_NEAR(p.coefficient({0, 2, 0}), -0.25, 1e-15);
    EXPECT_NEAR(p.coefficient({0, 0, 2}), 1.0, 1e-15);
    EXPECT_NEAR(p.coefficient({1, 1, 0}), 0.0, 1e-15);
    EXPECT_NEAR(p.coefficient({1, 0, 1}), 0.0, 1e-15);
    EXPECT_NEAR(p.coefficient({0, 1, 1}), 0.0, 1e-15);
}

TEST(PencilDeterminantTest, GoldenCaseUpperTriangular) {
    // -(1 + |b|^2/4) u^2 - (|b|^2/4) v^2 + w^2
    for (Complex b : {Complex{2.0}, Complex{0.5}, Complex{1.0}, Complex{5.0}, Complex{3.0, 4.0}}) {
        const HomogeneousPolynomial p = pencil_determinant(hermitian_parts(Matrix{{1.0, b}, {0.0, -1.0}}));
        const double quarter = std::norm(b) / 4.0;
        EXPECT_NEAR(p.coefficient({2, 0, 0}), -(1.0 + quarter), 1e-14);
        EXPECT_NEAR(p.coefficient({0, 2, 0}), -quarter, 1e-14);
        EXPECT_NEAR(p.coefficient({0, 0, 2}), 1.0, 1e-14);
        EXPECT_NEAR(p.coefficient({1, 1, 0}), 0.0, 1e-14);
        EXPECT_NEAR(p.coefficient({1, 0, 1}), 0.0, 1e-14);
        EXPECT_NEAR(p.coefficient({0, 1, 1}), 0.0, 1e-14);
    }
}

TEST(PencilDeterminantTest, ZeroMatrixGivesPowerOfW) {
    const HomogeneousPolynomial p = pencil_determinant(hermitian_parts(Matrix(2)));
    EXPECT_EQ(p, HomogeneousPolynomial(2, {{{0, 0, 2}, 1.0}}));
    const HomogeneousPolynomial p5 = pencil_determinant(hermitian_parts(Matrix(5)));
    EXPECT_EQ(p5, HomogeneousPolynomial(5, {{{0, 0, 5}, 1.0}}));
}

TEST(PencilDeterminantTest, IdentityGivesPerfectPower) {
    // H1 = I, H2 = 0: det((u + w) I) = (u + w)^3
    const HomogeneousPolynomial p = pencil_determinant(hermitian_parts(Matrix::identity(3)));
    EXPECT_EQ(p, HomogeneousPolynomial(3, {{{3, 0, 0}, 1.0}, {{2, 0, 1}, 3.0}, {{1, 0, 2}, 3.0}, {{0, 0, 3}, 1.0}}));
}

TEST(PencilDeterminantTest, MatchesNumericDeterminant) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> x(-1.5, 1.5);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 1 + seed % 5;
        const HermitianPair parts = hermitian_parts(random_matrix(n, seed));
        const HomogeneousPolynomial p = pencil_determinant(parts);
        for (int trial = 0; trial < 10; ++trial) {
            const double u = x(rng), v = x(rng), w = x(rng);
            const Complex direct = oracle::pencil_value(parts.h1, parts.h2, u, v, w);
            const double value = evaluate(p, u, v, w);
            EXPECT_LE(std::abs(value - direct), 1e-9 * std::max(1.0, evaluation_scale(p, u, v, w)));
            EXPECT_LE(std::abs(direct.imag()), 1e-9 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST(PencilDeterminantTest, DegreeAndMonicInW) {
    for (std::size_t n = 1; n <= 9; ++n) {
        const HomogeneousPolynomial p = pencil_determinant(hermitian_parts(random_matrix(n, 100 + n)));
        EXPECT_EQ(p.degree(), n);
        EXPECT_NEAR(p.coefficient({0, 0, static_cast<unsigned>(n)}), 1.0, 1e-14);
    }
}

TEST(PencilDeterminantTest, EigenvaluesOfRotatedPencilAreRoots) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 2 + seed % 4;
        const HermitianPair parts = hermitian_parts(random_matrix(n, seed));
        const HomogeneousPolynomial p = pencil_determinant(parts);
        for (double theta : {0.0, 0.7, 2.1, 3.3, 5.9}) {
            const double u = std::cos(theta), v = std::sin(theta);
            for (const auto& pair : hermitian_eigen(u * parts.h1 + v * parts.h2)) {
                const double w = -pair.value;
                EXPECT_LE(std::abs(evaluate(p, u, v, w)), 1e-9 * evaluation_scale(p, u, v, w));
            }
        }
    }
}

TEST(PencilDeterminantTest, NonHermitianPairIsRejected) {
    const Matrix a{{0.0, 1.0}, {0.0, 0.0}};
    const HermitianPair bad{a, Matrix::identity(2) * I};
    EXPECT_THROW(pencil_determinant(bad), NumericalError);
    EXPECT_THROW(pencil_determinant(HermitianPair{Matrix(2), Matrix(3)}), DimensionError);
}

TEST(ConicTest, ConicOfExamples) {
    const HomogeneousPolynomial circle(2, {{{2, 0, 0}, -0.25}, {{0, 2, 0}, -0.25}, {{0, 0, 2}, 1.0}});
    EXPECT_EQ(conic_of(circle), ConicMatrix::diagonal(-0.25, -0.25, 1.0));

    const HomogeneousPolynomial uv(2, {{{1, 1, 0}, 1.0}});
    EXPECT_EQ(conic_of(uv).matrix(), (Matrix3{{{0.0, 0.5, 0.0}, {0.5, 0.0, 0.0}, {0.0, 0.0, 0.0}}}));

    const HomogeneousPolynomial ellipse(2, {{{2, 0, 0}, -2.0}, {{0, 2, 0}, -1.0}, {{0, 0, 2}, 1.0}});
    EXPECT_EQ(conic_of(ellipse), ConicMatrix::diagonal(-2.0, -1.0, 1.0));

    EXPECT_THROW(conic_of(HomogeneousPolynomial(3, {{{3, 0, 0}, 1.0}})), DegreeError);
}

TEST(ConicTest, ConicOfRoundTripsThroughPolynomial) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const HomogeneousPolynomial p = random_polynomial(2, rng);
        EXPECT_EQ(conic_of(p).to_polynomial(), p);
        const double u = 0.3 * trial, v = -1.1, w = 0.7;
        EXPECT_NEAR(conic_of(p).evaluate(u, v, w), evaluate(p, u, v, w), 1e-12 * (1.0 + u * u));
    }
}

TEST(ConicTest, ConstructionInvariants) {
    EXPECT_THROW(ConicMatrix(Matrix3{}), DomainError);
    EXPECT_THROW(ConicMatrix(Matrix3{{{1.0, 2.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}}), DomainError);
}

TEST(ConicTest, AdjugateDualGoldenCases) {
    const ConicMatrix case_i = adjugate_dual(ConicMatrix::diagonal(-0.25, -0.25, 1.0));
    expect_matrix3_near(case_i.matrix(), ConicMatrix::diagonal(-0.25, -0.25, 1.0 / 16.0).matrix(), 1e-15);
    // x^2/(1/4) + y^2/(1/4) - z^2 = 0, normalized: diag(1, 1, -1/4)
    expect_matrix3_near(normalize_conic(case_i).matrix(), ConicMatrix::diagonal(1.0, 1.0, -0.25).matrix(), 1e-12);

    const ConicMatrix case_ii = adjugate_dual(ConicMatrix::diagonal(-2.0, -1.0, 1.0));
    expect_matrix3_near(case_ii.matrix(), ConicMatrix::diagonal(-1.0, -2.0, 2.0).matrix(), 1e-15);
    // x^2/2 + y^2 - z^2
    expect_matrix3_near(normalize_conic(case_ii).matrix(), ConicMatrix::diagonal(0.5, 1.0, -1.0).matrix(), 1e-12);

    EXPECT_EQ(adjugate_dual(ConicMatrix::diagonal(1.0, 1.0, 1.0)), ConicMatrix::diagonal(1.0, 1.0, 1.0));
}

TEST(ConicTest, AdjugateDualRejectsSingular) {
    EXPECT_THROW(adjugate_dual(ConicMatrix::diagonal(1.0, 1.0, 0.0)), DegenerateError);
    EXPECT_THROW(adjugate_dual(ConicMatrix(Matrix3{{{1.0, 1.0, 0.0}, {1.0, 1.0, 0.0}, {0.0, 0.0, 0.0}}})),
                 DegenerateError);
}

TEST(ConicTest, AdjugateIdentities) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const ConicMatrix c = random_symmetric(rng);
        const Matrix3 adj = adjugate(c.matrix());
        const double det = c.determinant();
        // adj(M) M = det(M) I
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                double sum = 0.0;
                for (std::size_t k = 0; k < 3; ++k) {
                    sum += adj[i][k] * c(k, j);
                }
                EXPECT_NEAR(sum, i == j ? det : 0.0, 1e-13);
            }
        }
        // adj(adj(M)) = det(M) M
        const Matrix3 bidual = adjugate(adj);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                EXPECT_NEAR(bidual[i][j], det * c(i, j), 1e-11 * std::max(1.0, std::abs(det)));
            }
        }
        EXPECT_NO_THROW(adjugate_dual(c));
    }
}

TEST(ConicTest, DualPointsAreTangentLines) {
    // For the tangential conic C, a line (u, v, w) with u^T C u = 0 touches the
    // point conic adj(C) at x = C u: x^T adj(C) x = det(C) u^T C u = 0 and u.x = 0.
    const ConicMatrix tangential = ConicMatrix::diagonal(-2.0, -1.0, 1.0);
    const ConicMatrix point = adjugate_dual(tangential);
    for (double theta = 0.0; theta < 6.28; theta += 0.1) {
        const double u = std::cos(theta), v = std::sin(theta);
        const double w = std::sqrt(2.0 * u * u + v * v);  // on the tangential conic
        const double x = -2.0 * u, y = -v, z = w;          // C (u, v, w)
        EXPECT_NEAR(point.evaluate(x, y, z), 0.0, 1e-12);
        EXPECT_NEAR(u * x + v * y + w * z, 0.0, 1e-12);
    }
}

TEST(ConicTest, NormalizeExamples) {
    EXPECT_EQ(normalize_conic(ConicMatrix::diagonal(-0.25, -0.25, 1.0 / 16.0)),
              ConicMatrix::diagonal(1.0, 1.0, -0.25));
    EXPECT_EQ(normalize_conic(ConicMatrix::diagonal(2.0, 2.0, -2.0)), ConicMatrix::diagonal(1.0, 1.0, -1.0));
    const ConicMatrix once = normalize_conic(ConicMatrix::diagonal(-3.0, 7.0, 0.1));
    EXPECT_EQ(normalize_conic(once), once);
}

TEST(ConicTest, NormalizeIsIdempotentAndScaleFree) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const ConicMatrix c = random_symmetric(rng);
        const ConicMatrix n1 = normalize_conic(c);
        EXPECT_EQ(normalize_conic(n1), n1);
        Matrix3 scaled = c.matrix();
        for (auto& row : scaled) {
            for (double& x : row) {
                x *= -3.5;
            }
        }
        expect_matrix3_near(normalize_conic(ConicMatrix(scaled)).matrix(), n1.matrix(), 1e-15);
    }
}
