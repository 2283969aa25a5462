#pragma once

#include <array>
#include <map>

#include "numrange/matrix.hpp"

namespace numrange {

/// Exponents (i, j, k) of the monomial u^i v^j w^k.
using Exponent = std::array<unsigned, 3>;

/// Real homogeneous polynomial in (u, v, w). Every stored exponent sums to
/// degree(); coefficients that are exactly zero are not stored, so the zero
/// polynomial is the one with no terms.
class HomogeneousPolynomial {
public:
    explicit HomogeneousPolynomial(unsigned degree) : degree_(degree) {}

    /// Throws DegreeError if an exponent does not sum to degree.
    HomogeneousPolynomial(unsigned degree, const std::map<Exponent, double>& terms);

    [[nodiscard]] unsigned degree() const noexcept { return degree_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    /// Terms ordered lexicographically by exponent.
    [[nodiscard]] const std::map<Exponent, double>& terms() const noexcept { return terms_; }

    [[nodiscard]] double coefficient(const Exponent& e) const;

    /// Adds c to the coefficient of e.
    void add_term(const Exponent& e, double c);

    /// Largest coefficient modulus (0 for the zero polynomial).
    [[nodiscard]] double max_coefficient() const noexcept;

    friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

private:
    unsigned degree_;
    std::map<Exponent, double> terms_;
};

double evaluate(const HomogeneousPolynomial& p, double u, double v, double w);

/// Sum of |c| |u|^i |v|^j |w|^k over the terms: the natural scale against
/// which an evaluation residual is measured.
double evaluation_scale(const HomogeneousPolynomial& p, double u, double v, double w);

/// det(h1 u + h2 v + I w) expanded as a degree-n homogeneous polynomial.
///
/// The expansion is a Laplace (cofactor) expansion along rows, memoized on
/// the set of remaining columns, over complex linear entries. The result is
/// coerced to real; an imaginary residue larger than 1e-10 times the largest
/// coefficient means the pair was not Hermitian and raises NumericalError.
HomogeneousPolynomial pencil_determinant(const HermitianPair& pair);

}  // namespace numrange
