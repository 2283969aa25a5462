#include "numrange/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "numrange/errors.hpp"

namespace numrange {

namespace {

double power(double x, unsigned e) {
    double r = 1.0;
    for (unsigned k = 0; k < e; ++k) {
        r *= x;
    }
    return r;
}

// Dense complex homogeneous polynomial of degree d; coefficient of
// u^i v^j w^(d-i-j) lives at i * (d + 1) + j.
struct DenseComplexPoly {
    unsigned degree = 0;
    std::vector<Complex> coef;

    static DenseComplexPoly one() { return {0, {Complex{1.0, 0.0}}}; }

    Complex& at(unsigned i, unsigned j) { return coef[i * (degree + 1) + j]; }
    [[nodiscard]] Complex at(unsigned i, unsigned j) const { return coef[i * (degree + 1) + j]; }
};

struct LinearForm {
    Complex u, v, w;
};

// acc += sign * (form * p), where acc has degree p.degree + 1.
void accumulate_product(DenseComplexPoly& acc, const LinearForm& form, const DenseComplexPoly& p,
                        double sign) {
    const unsigned d = p.degree;
    for (unsigned i = 0; i <= d; ++i) {
        for (unsigned j = 0; i + j <= d; ++j) {
            const Complex c = sign * p.at(i, j);
            if (c == Complex{}) {
                continue;
            }
            acc.at(i + 1, j) += form.u * c;
            acc.at(i, j + 1) += form.v * c;
            acc.at(i, j) += form.w * c;
        }
    }
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(unsigned degree, const std::map<Exponent, double>& terms)
    : degree_(degree) {
    for (const auto& [e, c] : terms) {
        add_term(e, c);
    }
}

double HomogeneousPolynomial::coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? 0.0 : it->second;
}

void HomogeneousPolynomial::add_term(const Exponent& e, double c) {
    if (e[0] + e[1] + e[2] != degree_) {
        throw DegreeError("exponent (" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
                          std::to_string(e[2]) + ") does not sum to degree " +
                          std::to_string(degree_));
    }
    if (!std::isfinite(c)) {
        throw DomainError("polynomial coefficients must be finite");
    }
    const double updated = coefficient(e) + c;
    if (updated == 0.0) {
        terms_.erase(e);
    } else {
        terms_[e] = updated;
    }
}

double HomogeneousPolynomial::max_coefficient() const noexcept {
    double best = 0.0;
    for (const auto& [e, c] : terms_) {
        best = std::max(best, std::abs(c));
    }
    return best;
}

double evaluate(const HomogeneousPolynomial& p, double u, double v, double w) {
    double sum = 0.0;
    for (const auto& [e, c] : p.terms()) {
        sum += c * power(u, e[0]) * power(v, e[1]) * power(w, e[2]);
    }
    return sum;
}

double evaluation_scale(const HomogeneousPolynomial& p, double u, double v, double w) {
    double sum = 0.0;
    for (const auto& [e, c] : p.terms()) {
        sum += std::abs(c) * power(std::abs(u), e[0]) * power(std::abs(v), e[1]) *
               power(std::abs(w), e[2]);
    }
    return sum;
}

HomogeneousPolynomial pencil_determinant(const HermitianPair& pair) {
    const std::size_t n = pair.h1.size();
    if (pair.h2.size() != n) {
        throw DimensionError("pencil_determinant: h1 and h2 differ in dimension");
    }
    if (n > kMaxDimension) {
        throw DimensionError("pencil_determinant: dimension above cap");
    }

    auto entry = [&](std::size_t row, std::size_t col) {
        return LinearForm{pair.h1(row, col), pair.h2(row, col), row == col ? 1.0 : 0.0};
    };

    // minors[S] is the determinant of the trailing |S| rows restricted to the
    // column set S. Built layer by layer in |S|, keeping one layer alive.
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<DenseComplexPoly> minors(std::size_t{1} << n);
    minors[0] = DenseComplexPoly::one();

    for (unsigned size = 1; size <= n; ++size) {
        const std::size_t row = n - size;
        for (std::uint32_t set = 1; set <= full; ++set) {
            if (static_cast<unsigned>(std::popcount(set)) != size) {
                continue;
            }
            DenseComplexPoly acc{size, std::vector<Complex>((size + 1) * (size + 1))};
            unsigned position = 0;
            for (std::size_t col = 0; col < n; ++col) {
                const std::uint32_t bit = std::uint32_t{1} << col;
                if ((set & bit) == 0) {
                    continue;
                }
                const double sign = (position % 2 == 0) ? 1.0 : -1.0;
                accumulate_product(acc, entry(row, col), minors[set & ~bit], sign);
                ++position;
            }
            minors[set] = std::move(acc);
        }
        for (std::uint32_t set = 0; set <= full; ++set) {
            if (static_cast<unsigned>(std::popcount(set)) == size - 1) {
                minors[set] = {};
            }
        }
    }

    const DenseComplexPoly& det = minors[full];
    const unsigned d = static_cast<unsigned>(n);
    double largest = 0.0;
    double residue = 0.0;
    for (unsigned i = 0; i <= d; ++i) {
        for (unsigned j = 0; i + j <= d; ++j) {
            largest = std::max(largest, std::abs(det.at(i, j).real()));
            residue = std::max(residue, std::abs(det.at(i, j).imag()));
        }
    }
    if (residue > 1e-10 * largest) {
        throw NumericalError("pencil_determinant: imaginary residue " + std::to_string(residue) +
                             " exceeds tolerance; the pair is not Hermitian");
    }

    HomogeneousPolynomial result(d);
    for (unsigned i = 0; i <= d; ++i) {
        for (unsigned j = 0; i + j <= d; ++j) {
            const double c = det.at(i, j).real();
            if (c != 0.0) {
                result.add_term({i, j, d - i - j}, c);
            }
        }
    }
    return result;
}

}  // namespace numrange
