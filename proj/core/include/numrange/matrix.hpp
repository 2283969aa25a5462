#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace numrange {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Largest supported dimension. The pencil-determinant expansion grows
/// exponentially with n.
inline constexpr std::size_t kMaxDimension = 16;

/// Dense n-by-n complex matrix, row-major, 1 <= n <= kMaxDimension.
/// Entries are always finite.
class Matrix {
public:
    /// Zero matrix of dimension n.
    explicit Matrix(std::size_t n);

    /// Takes row-major entries; entries.size() must equal n*n.
    Matrix(std::size_t n, std::vector<Complex> entries);

    /// Nested-list construction, e.g. Matrix{{0, 1}, {0, 0}}.
    /// Throws DimensionError when the rows do not form a square.
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const Complex> values);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    [[nodiscard]] const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * n_ + col];
    }
    Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * n_ + col]; }

    [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }

    [[nodiscard]] Matrix adjoint() const;
    [[nodiscard]] Complex trace() const noexcept;
    [[nodiscard]] double frobenius_norm() const noexcept;
    /// Largest entry modulus.
    [[nodiscard]] double max_abs() const noexcept;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(Complex scale) noexcept;

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, Complex scale) noexcept { return lhs *= scale; }
    friend Matrix operator*(Complex scale, Matrix rhs) noexcept { return rhs *= scale; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend ComplexVector operator*(const Matrix& lhs, std::span<const Complex> x);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_;
    std::vector<Complex> data_;
};

/// A = h1 + i*h2 with h1, h2 Hermitian.
struct HermitianPair {
    Matrix h1;
    Matrix h2;
};

/// One eigenvalue of a Hermitian matrix with its unit eigenvector.
struct EigenPair {
    double value;
    ComplexVector vector;
};

double norm(std::span<const Complex> x) noexcept;
Complex inner(std::span<const Complex> x, std::span<const Complex> y) noexcept;  // x^* y

/// h1 = (A + A^*)/2, h2 = (A - A^*)/(2i).
HermitianPair hermitian_parts(const Matrix& a);

/// trace(A^* A), the sum of squared entry moduli.
double gram_trace(const Matrix& a);

/// Roots of z^2 - tr(A) z + det(A) for a 2x2 matrix. The first root is the
/// one of larger modulus; the second is recovered as det/first.
std::pair<Complex, Complex> eigenvalues_2x2(const Matrix& a);

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Results are sorted by descending eigenvalue; equal values keep
/// their diagonal order. Throws PreconditionError if the input is not Hermitian
/// within 1e-12 * ||H||_F and NumericalError if 30 sweeps do not converge.
std::vector<EigenPair> hermitian_eigen(const Matrix& h);

/// x^* A x / x^* x.
Complex rayleigh(const Matrix& a, std::span<const Complex> x);

inline constexpr double kDefaultNormalityTolerance = 1e-10;

/// ||A^*A - AA^*||_F <= tol * ||A||_F^2.
bool is_normal(const Matrix& a, double tol = kDefaultNormalityTolerance);

/// Seeded sampler of unit vectors uniform on the complex sphere (complex
/// standard normal entries, then normalized).
class UnitSphereSampler {
public:
    explicit UnitSphereSampler(std::uint64_t seed) : engine_(seed) {}

    ComplexVector next(std::size_t n);

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

ComplexVector random_unit_vector(std::size_t n, std::uint64_t seed);

/// Haar-like unitary from Gram-Schmidt on a complex Gaussian matrix.
Matrix random_unitary(std::size_t n, std::uint64_t seed);

/// Entries with real and imaginary parts uniform on [-1, 1].
Matrix random_matrix(std::size_t n, std::uint64_t seed);

}  // namespace numrange
