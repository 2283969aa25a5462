#include "numrange/elliptical_range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "numrange/errors.hpp"

namespace numrange {

namespace {

// Representative of x modulo pi in [0, pi).
double mod_pi(double x) noexcept {
    double r = std::fmod(x, std::numbers::pi);
    if (r < 0.0) {
        r += std::numbers::pi;
    }
    return r >= std::numbers::pi ? 0.0 : r;
}

// Squared Frobenius norm of the strictly upper part of a Schur form of A,
// computed from the self-commutator D = A^*A - AA^*. For a Schur form with
// off-diagonal b and eigenvalue gap d, ||D||_F^2 = 2|b|^4 + 2|b|^2 d^2,
// and |b|^2 is the positive root of that quadratic. Every term is
// nonnegative, so a normal matrix yields |b|^2 at the level of ||D||_F^2
// rather than at the level of the rounding in tr(A^*A).
double schur_offdiagonal_squared(const Matrix& a, double gap_squared) {
    const Matrix adj = a.adjoint();
    const double d2 = std::pow((adj * a - a * adj).frobenius_norm(), 2);
    const double denom = gap_squared + std::sqrt(gap_squared * gap_squared + 2.0 * d2);
    return denom > 0.0 ? d2 / denom : 0.0;
}

}  // namespace

std::string_view to_string(EllipseKind kind) noexcept {
    switch (kind) {
    case EllipseKind::point:
        return "point";
    case EllipseKind::segment:
        return "segment";
    case EllipseKind::circle:
        return "circle";
    case EllipseKind::ellipse:
        return "ellipse";
    }
    return "ellipse";
}

EllipseDisk elliptical_range(const Matrix& a) {
    if (a.size() != 2) {
        throw DimensionError("elliptical_range requires a 2x2 matrix, got n = " +
                             std::to_string(a.size()));
    }
    const auto [l1, l2] = eigenvalues_2x2(a);
    const double gram = gram_trace(a);

    const double radicand = gram - std::norm(l1) - std::norm(l2);
    if (radicand < -1e-10 * gram) {
        throw NumericalError("elliptical_range: minor-axis radicand " + std::to_string(radicand) +
                             " is negative beyond rounding");
    }

    EllipseDisk e;
    e.center = a.trace() / 2.0;
    e.focus1 = l1;
    e.focus2 = l2;
    const double half_gap = std::abs(l1 - l2) / 2.0;
    e.semi_minor = std::sqrt(schur_offdiagonal_squared(a, 4.0 * half_gap * half_gap)) / 2.0;
    e.semi_major = std::hypot(e.semi_minor, half_gap);
    e.rotation = mod_pi(std::arg(l1 - l2));

    const double scale = 1.0 + a.frobenius_norm();
    const double tol = 1e-12 * scale;
    // A double eigenvalue of a non-normal matrix splits under rounding by
    // about sqrt(eps) * scale, so focal coincidence is judged on the squared
    // half gap.
    const double gap_squared_tol = 64.0 * std::numeric_limits<double>::epsilon() * scale * scale;
    if (e.semi_major <= tol) {
        e.kind = EllipseKind::point;
        e.focus1 = e.focus2 = e.center;
        e.semi_major = e.semi_minor = 0.0;
        e.rotation = 0.0;
    } else if (e.semi_minor <= tol) {
        e.kind = EllipseKind::segment;
        e.semi_minor = 0.0;
        e.semi_major = half_gap;
    } else if (half_gap <= tol || half_gap * half_gap <= gap_squared_tol) {
        e.kind = EllipseKind::circle;
        e.focus1 = e.focus2 = e.center;
        e.semi_major = e.semi_minor;
        e.rotation = 0.0;
    } else {
        e.kind = EllipseKind::ellipse;
    }
    return e;
}

double focal_excess(const EllipseDisk& e, Complex z) noexcept {
    const double focal_sum = std::abs(z - e.focus1) + std::abs(z - e.focus2);
    return std::max(0.0, focal_sum - 2.0 * e.semi_major);
}

bool contains(const EllipseDisk& e, Complex z, double tol) {
    return std::abs(z - e.focus1) + std::abs(z - e.focus2) <= 2.0 * e.semi_major + tol;
}

double ellipse_support(const EllipseDisk& e, double theta) noexcept {
    const Complex direction = std::polar(1.0, -theta);
    const double c = std::cos(theta - e.rotation);
    const double s = std::sin(theta - e.rotation);
    return (direction * e.center).real() +
           std::sqrt(e.semi_major * e.semi_major * c * c + e.semi_minor * e.semi_minor * s * s);
}

EllipseDisk affine_image(const EllipseDisk& e, Complex alpha, Complex beta) {
    EllipseDisk out;
    if (alpha == Complex{}) {
        out.center = out.focus1 = out.focus2 = beta;
        out.kind = EllipseKind::point;
        return out;
    }
    const double scale = std::abs(alpha);
    out.center = alpha * e.center + beta;
    out.focus1 = alpha * e.focus1 + beta;
    out.focus2 = alpha * e.focus2 + beta;
    out.semi_major = scale * e.semi_major;
    out.semi_minor = scale * e.semi_minor;
    out.kind = e.kind;
    const bool has_axis = e.kind == EllipseKind::segment || e.kind == EllipseKind::ellipse;
    out.rotation = has_axis ? mod_pi(e.rotation + std::arg(alpha)) : 0.0;
    return out;
}

double ellipse_deviation(const EllipseDisk& lhs, const EllipseDisk& rhs) noexcept {
    const double same = std::max(std::abs(lhs.focus1 - rhs.focus1), std::abs(lhs.focus2 - rhs.focus2));
    const double swapped =
        std::max(std::abs(lhs.focus1 - rhs.focus2), std::abs(lhs.focus2 - rhs.focus1));

    double angle = std::abs(mod_pi(lhs.rotation) - mod_pi(rhs.rotation));
    angle = std::min(angle, std::numbers::pi - angle);
    const double half_gap =
        std::max(std::abs(lhs.focus1 - lhs.focus2), std::abs(rhs.focus1 - rhs.focus2)) / 2.0;

    return std::max({std::abs(lhs.center - rhs.center), std::min(same, swapped),
                     std::abs(lhs.semi_major - rhs.semi_major),
                     std::abs(lhs.semi_minor - rhs.semi_minor), angle * half_gap});
}

}  // namespace numrange
