#include "numrange/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "numrange/errors.hpp"

namespace numrange {

namespace {

void check_dimension(std::size_t n) {
    if (n == 0 || n > kMaxDimension) {
        throw DimensionError("matrix dimension " + std::to_string(n) + " outside [1, " +
                             std::to_string(kMaxDimension) + "]");
    }
}

void require_same_size(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) {
        throw DimensionError("matrix dimensions differ: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n) {
    check_dimension(n);
    data_.assign(n * n, Complex{});
}

Matrix::Matrix(std::size_t n, std::vector<Complex> entries) : n_(n), data_(std::move(entries)) {
    check_dimension(n);
    if (data_.size() != n * n) {
        throw DimensionError("expected " + std::to_string(n * n) + " entries, got " +
                             std::to_string(data_.size()));
    }
    for (const auto& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw DomainError("matrix entries must be finite");
        }
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : n_(rows.size()) {
    check_dimension(n_);
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw DimensionError("matrix is not square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    for (const auto& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw DomainError("matrix entries must be finite");
        }
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> values) {
    Matrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Complex Matrix::trace() const noexcept {
    Complex t{};
    for (std::size_t i = 0; i < n_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double Matrix::frobenius_norm() const noexcept {
    double sum = 0.0;
    for (const auto& z : data_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

double Matrix::max_abs() const noexcept {
    double best = 0.0;
    for (const auto& z : data_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_size(*this, rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_size(*this, rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= rhs.data_[k];
    }
    return *this;
}

Matrix& Matrix::operator*=(Complex scale) noexcept {
    for (auto& z : data_) {
        z *= scale;
    }
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    require_same_size(lhs, rhs);
    const std::size_t n = lhs.size();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexVector operator*(const Matrix& lhs, std::span<const Complex> x) {
    const std::size_t n = lhs.size();
    if (x.size() != n) {
        throw DimensionError("vector length " + std::to_string(x.size()) +
                             " does not match matrix dimension " + std::to_string(n));
    }
    ComplexVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < n; ++j) {
            acc += lhs(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

double norm(std::span<const Complex> x) noexcept {
    double sum = 0.0;
    for (const auto& z : x) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) noexcept {
    Complex acc{};
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

HermitianPair hermitian_parts(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix h1(n);
    Matrix h2(n);
    const Complex two_i{0.0, 2.0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex aij = a(i, j);
            const Complex aji_conj = std::conj(a(j, i));
            h1(i, j) = (aij + aji_conj) / 2.0;
            h2(i, j) = (aij - aji_conj) / two_i;
        }
    }
    return {std::move(h1), std::move(h2)};
}

double gram_trace(const Matrix& a) {
    double sum = 0.0;
    for (const auto& z : a.entries()) {
        sum += std::norm(z);
    }
    return sum;
}

std::pair<Complex, Complex> eigenvalues_2x2(const Matrix& a) {
    if (a.size() != 2) {
        throw DimensionError("eigenvalues_2x2 requires a 2x2 matrix, got n = " +
                             std::to_string(a.size()));
    }
    const Complex half_trace = (a(0, 0) + a(1, 1)) / 2.0;
    const Complex half_diff = (a(0, 0) - a(1, 1)) / 2.0;
    // (tr/2)^2 - det rewritten without the cancellation of the trace terms.
    Complex root = std::sqrt(half_diff * half_diff + a(0, 1) * a(1, 0));
    if ((std::conj(half_trace) * root).real() < 0.0) {
        root = -root;
    }
    const Complex first = half_trace + root;
    if (first == Complex{}) {
        return {first, half_trace - root};
    }
    // det / first avoids cancellation when the roots differ in size, but
    // amplifies the rounding in det when first is itself tiny. Take whichever
    // has the smaller first-order error estimate (in units of eps).
    const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const double det_error = std::abs(a(0, 0) * a(1, 1)) + std::abs(a(0, 1) * a(1, 0));
    const double disc_error = std::norm(half_diff) + std::abs(a(0, 1) * a(1, 0));
    const double root_abs = std::abs(root);
    const double root_error =
        root_abs > 0.0 ? std::min(disc_error / root_abs, std::sqrt(disc_error)) : std::sqrt(disc_error);
    const double quotient_error = det_error / std::abs(first);
    const double difference_error = std::abs(half_trace) + root_abs + root_error;
    return {first, quotient_error <= difference_error ? det / first : half_trace - root};
}

std::vector<EigenPair> hermitian_eigen(const Matrix& h) {
    const std::size_t n = h.size();
    const double fro = h.frobenius_norm();

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (std::abs(h(i, j) - std::conj(h(j, i))) > 1e-12 * fro) {
                throw PreconditionError("hermitian_eigen: input is not Hermitian");
            }
        }
    }

    Matrix a = h;
    Matrix v = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
    }

    constexpr int kMaxSweeps = 30;
    const double threshold = 1e-13 * fro;
    auto off_diagonal_converged = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (std::abs(a(i, j)) > threshold) {
                    return false;
                }
            }
        }
        return true;
    };

    int sweep = 0;
    while (!off_diagonal_converged()) {
        if (++sweep > kMaxSweeps) {
            throw NumericalError("hermitian_eigen: Jacobi iteration did not converge");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g == 0.0) {
                    continue;
                }
                // U = diag(1, e^{-i phi}) * R(theta) acting on the (p, q) plane makes
                // the pivot real and then annihilates it as in the real symmetric case.
                const Complex phase = std::conj(apq) / g;  // e^{-i phi}
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex u_qp = -s * phase;
                const Complex u_qq = c * phase;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp + u_qp * akq;
                    a(k, q) = s * akp + u_qq * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(u_qp) * aqk;
                    a(q, k) = s * apk + std::conj(u_qq) * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp + u_qp * vkq;
                    v(k, q) = s * vkp + u_qq * vkq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<EigenPair> pairs;
    pairs.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        ComplexVector column(n);
        for (std::size_t i = 0; i < n; ++i) {
            column[i] = v(i, j);
        }
        pairs.push_back({a(j, j).real(), std::move(column)});
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const EigenPair& x, const EigenPair& y) { return x.value > y.value; });
    return pairs;
}

Complex rayleigh(const Matrix& a, std::span<const Complex> x) {
    const ComplexVector ax = a * x;
    const double xx = inner(x, x).real();
    if (xx == 0.0) {
        throw DomainError("rayleigh: zero vector");
    }
    return inner(x, ax) / xx;
}

bool is_normal(const Matrix& a, double tol) {
    const Matrix adj = a.adjoint();
    const Matrix commutator = adj * a - a * adj;
    const double scale = a.frobenius_norm();
    return commutator.frobenius_norm() <= tol * scale * scale;
}

ComplexVector UnitSphereSampler::next(std::size_t n) {
    if (n == 0) {
        throw DimensionError("random unit vector of dimension 0");
    }
    ComplexVector x(n);
    double len = 0.0;
    while (len == 0.0) {
        for (auto& z : x) {
            const double re = normal_(engine_);
            const double im = normal_(engine_);
            z = {re, im};
        }
        len = norm(x);
    }
    for (auto& z : x) {
        z /= len;
    }
    return x;
}

ComplexVector random_unit_vector(std::size_t n, std::uint64_t seed) {
    return UnitSphereSampler(seed).next(n);
}

Matrix random_unitary(std::size_t n, std::uint64_t seed) {
    check_dimension(n);
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<ComplexVector> columns(n, ComplexVector(n));
    for (auto& col : columns) {
        for (auto& z : col) {
            const double re = normal(engine);
            const double im = normal(engine);
            z = {re, im};
        }
    }
    // Modified Gram-Schmidt, two passes for orthogonality at rounding level.
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                const Complex proj = inner(columns[k], columns[j]);
                for (std::size_t i = 0; i < n; ++i) {
                    columns[j][i] -= proj * columns[k][i];
                }
            }
        }
        const double len = norm(columns[j]);
        if (len == 0.0) {
            throw NumericalError("random_unitary: rank-deficient Gaussian draw");
        }
        for (auto& z : columns[j]) {
            z /= len;
        }
    }
    Matrix u(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            u(i, j) = columns[j][i];
        }
    }
    return u;
}

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
    check_dimension(n);
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<Complex> entries(n * n);
    for (auto& z : entries) {
        const double re = uniform(engine);
        const double im = uniform(engine);
        z = {re, im};
    }
    return Matrix(n, std::move(entries));
}

}  // namespace numrange
