#include "numrange/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "numrange/elliptical_range.hpp"
#include "numrange/errors.hpp"
#include "numrange/kippenhahn.hpp"
#include "numrange/polynomial.hpp"

namespace numrange {

namespace {

void require_2x2(const Matrix& a, const char* check) {
    if (a.size() != 2) {
        throw DimensionError(std::string(check) + " requires a 2x2 matrix, got n = " +
                             std::to_string(a.size()));
    }
}

CheckReport make_report(std::string name, double deviation, double tol, std::size_t samples,
                        std::string details) {
    return {std::move(name), deviation <= tol, deviation, tol, samples, std::move(details)};
}

std::string describe(const EllipseDisk& lhs, const EllipseDisk& rhs) {
    std::ostringstream os;
    os << "kinds " << to_string(lhs.kind) << "/" << to_string(rhs.kind);
    return os.str();
}

}  // namespace

CheckReport check_containment(const Matrix& a, std::size_t num_samples, std::uint64_t seed, double tol) {
    require_2x2(a, "check_containment");
    const EllipseDisk disk = elliptical_range(a);
    UnitSphereSampler sampler(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < num_samples; ++i) {
        worst = std::max(worst, focal_excess(disk, rayleigh(a, sampler.next(2))));
    }
    return make_report("containment", worst, tol, num_samples,
                       "Rayleigh quotients vs focal-sum membership, kind " +
                           std::string(to_string(disk.kind)));
}

CheckReport check_support_match(const Matrix& a, std::size_t m, double tol) {
    require_2x2(a, "check_support_match");
    const EllipseDisk disk = elliptical_range(a);
    const HermitianPair parts = hermitian_parts(a);
    double worst = 0.0;
    for (double theta : angle_grid(m)) {
        worst = std::max(worst, std::abs(ellipse_support(disk, theta) - support_function(parts, theta)));
    }
    return make_report("support_match", worst, tol, m,
                       "closed-form disk support vs largest pencil eigenvalue");
}

CheckReport check_tangential_roots(const Matrix& a, std::size_t m, double tol) {
    if (a.size() > 8) {
        throw DimensionError("check_tangential_roots supports n <= 8, got n = " +
                             std::to_string(a.size()));
    }
    const HermitianPair parts = hermitian_parts(a);
    const HomogeneousPolynomial pencil = pencil_determinant(parts);
    double worst = 0.0;
    std::size_t samples = 0;
    for (double theta : angle_grid(m)) {
        const double u = std::cos(theta);
        const double v = std::sin(theta);
        for (const auto& pair : hermitian_eigen(u * parts.h1 + v * parts.h2)) {
            const double w = -pair.value;
            const double scale = evaluation_scale(pencil, u, v, w);
            const double residual = std::abs(evaluate(pencil, u, v, w));
            worst = std::max(worst, scale > 0.0 ? residual / scale : residual);
            ++samples;
        }
    }
    return make_report("tangential_roots", worst, tol, samples,
                       "relative residual of the pencil determinant at (cos t, sin t, -h_k)");
}

CheckReport check_affine_covariance(const Matrix& a, Complex alpha, Complex beta, double tol) {
    require_2x2(a, "check_affine_covariance");
    const EllipseDisk direct = elliptical_range(alpha * a + beta * Matrix::identity(2));
    const EllipseDisk mapped = affine_image(elliptical_range(a), alpha, beta);
    std::ostringstream os;
    os << "alpha=" << alpha << " beta=" << beta << ", " << describe(direct, mapped);
    return make_report("affine_covariance", ellipse_deviation(direct, mapped), tol, 1, os.str());
}

CheckReport check_unitary_invariance(const Matrix& a, std::uint64_t seed, double tol) {
    require_2x2(a, "check_unitary_invariance");
    const Matrix u = random_unitary(2, seed);
    const EllipseDisk rotated = elliptical_range(u.adjoint() * a * u);
    const EllipseDisk original = elliptical_range(a);
    return make_report("unitary_invariance", ellipse_deviation(rotated, original), tol, 1,
                       "seed " + std::to_string(seed) + ", " + describe(rotated, original));
}

CheckReport check_biduality(const ConicMatrix& c, double tol) {
    const ConicMatrix dual = adjugate_dual(c);
    const Matrix3 bidual = adjugate(dual.matrix());
    const double det = c.determinant();
    double scale = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            scale = std::max(scale, std::abs(det * c(i, j)));
            worst = std::max(worst, std::abs(bidual[i][j] - det * c(i, j)));
        }
    }
    return make_report("biduality", worst / scale, tol, 9, "adj(adj C) vs det(C) C, entrywise relative");
}

CheckReport check_hull_containment(const Matrix& a, std::size_t m, std::size_t num_samples,
                                   std::uint64_t seed, double tol) {
    const auto boundary = fov_boundary(a, m);
    const ConvexPolygon hull = hull_of(boundary);
    UnitSphereSampler sampler(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < num_samples; ++i) {
        worst = std::max(worst, outside_distance(hull, rayleigh(a, sampler.next(a.size()))));
    }
    return make_report("hull_containment", worst, tol, num_samples,
                       "Rayleigh quotients vs hull of " + std::to_string(hull.vertices.size()) +
                           " boundary vertices");
}

std::vector<CheckReport> run_suite(const Matrix& a, const SuiteOptions& options) {
    const double scaled = options.tol * (1.0 + a.frobenius_norm());
    std::vector<CheckReport> reports;
    if (a.size() == 2) {
        reports.push_back(check_containment(a, options.rayleigh_samples, options.seed, scaled));
        reports.push_back(check_support_match(a, options.grid, scaled));
        reports.push_back(check_affine_covariance(a, 1.0, -a.trace() / 2.0, scaled));
        reports.push_back(check_unitary_invariance(a, options.seed, scaled));
    }
    if (a.size() <= 8) {
        reports.push_back(check_tangential_roots(a, options.grid, options.tol));
    }
    if (a.size() > 2) {
        // The sampled hull is inscribed in the field of values; allow the
        // computable discretization gap on top of the rounding tolerance.
        const double gap = hull_gap_bound(fov_boundary(a, options.grid));
        reports.push_back(check_hull_containment(a, options.grid, options.rayleigh_samples,
                                                 options.seed, scaled + gap));
    }
    return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) noexcept {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace numrange
