#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "numrange/conic.hpp"
#include "numrange/matrix.hpp"

namespace numrange {

/// Outcome of one verification check. passed is max_deviation <= tolerance.
struct CheckReport {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::size_t samples = 0;
    std::string details;
};

/// Random Rayleigh quotients against the closed-form disk; deviation is the
/// largest focal-sum excess. Requires n = 2.
CheckReport check_containment(const Matrix& a, std::size_t num_samples, std::uint64_t seed, double tol);

/// Closed-form disk support versus the largest pencil eigenvalue on m
/// angles. Requires n = 2.
CheckReport check_support_match(const Matrix& a, std::size_t m, double tol);

/// |P(cos t, sin t, -h_k)| / evaluation_scale for every grid angle and every
/// eigenvalue h_k of cos t H1 + sin t H2. Requires n <= 8.
CheckReport check_tangential_roots(const Matrix& a, std::size_t m, double tol);

/// elliptical_range(alpha A + beta I) against affine_image(elliptical_range(A)).
CheckReport check_affine_covariance(const Matrix& a, Complex alpha, Complex beta, double tol);

/// elliptical_range(U^* A U) against elliptical_range(A) for a seeded unitary U.
CheckReport check_unitary_invariance(const Matrix& a, std::uint64_t seed, double tol);

/// Largest entry of |adj(adj C) - det(C) C| relative to the largest entry of
/// |det(C) C|. Throws DegenerateError for singular C.
CheckReport check_biduality(const ConicMatrix& c, double tol);

/// Random Rayleigh quotients against the hull of fov_boundary(a, m); deviation
/// is the largest distance outside the hull. Any n.
CheckReport check_hull_containment(const Matrix& a, std::size_t m, std::size_t num_samples,
                                   std::uint64_t seed, double tol);

struct SuiteOptions {
    std::size_t grid = 720;
    std::size_t rayleigh_samples = 10000;
    std::uint64_t seed = 0;
    /// Relative tolerance; checks on A scale it by 1 + ||A||_F.
    double tol = 1e-9;
};

/// Every check that applies to a matrix of this size: the closed-form disk
/// checks (including the trace-zero reduction) for n = 2, tangential roots
/// for n <= 8 and hull containment for any n.
std::vector<CheckReport> run_suite(const Matrix& a, const SuiteOptions& options);

bool all_passed(const std::vector<CheckReport>& reports) noexcept;

}  // namespace numrange
