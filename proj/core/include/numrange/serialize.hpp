#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "numrange/conic.hpp"
#include "numrange/elliptical_range.hpp"
#include "numrange/kippenhahn.hpp"
#include "numrange/matrix.hpp"
#include "numrange/polynomial.hpp"
#include "numrange/verify.hpp"

// Text formats. Parsers throw ParseError on malformed documents; a
// well-formed matrix of unsupported size surfaces as DimensionError.
namespace numrange {

/// {"n": 2, "entries": [[[re, im], ...], ...]}, row-major.
Matrix parse_matrix_json(std::string_view text);
std::string matrix_to_json(const Matrix& a);

/// [{"exp": [i, j, k], "coef": c}, ...] sorted lexicographically by exponent.
std::string polynomial_to_json(const HomogeneousPolynomial& p);
HomogeneousPolynomial parse_polynomial_json(std::string_view text);

/// {"matrix": [[...], ...], "polynomial": [...]}; the polynomial is the
/// quadratic form in the point coordinates (x, y, z).
std::string conic_to_json(const ConicMatrix& c);

/// {"center": [re, im], "foci": [[re, im], [re, im]], "semi_major": a,
///  "semi_minor": b, "rotation": r, "kind": "..."}
std::string ellipse_to_json(const EllipseDisk& e);

std::string report_to_json(const CheckReport& r);
/// JSON array of reports.
std::string reports_to_json(const std::vector<CheckReport>& reports);

/// Header "theta,branch,re,im,support"; theta with 12 significant digits,
/// the other reals with 17 so that they read back exactly.
std::string boundary_to_csv(const std::vector<BoundarySample>& samples);
std::vector<BoundarySample> parse_boundary_csv(std::string_view text);

}  // namespace numrange
