#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "numrange/matrix.hpp"

namespace numrange::cli {

enum class Subcommand { ellipse, poly, dual, boundary, verify, plot };
enum class Format { json, csv, svg };

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDimension = 3;
inline constexpr int kExitNumerical = 4;

struct CliConfig {
    Subcommand subcommand = Subcommand::ellipse;
    /// Exactly one matrix source: a file path, an inline JSON literal, or a
    /// seeded random matrix of the given dimension.
    std::optional<std::string> input_path;
    std::optional<std::string> inline_matrix;
    std::optional<std::size_t> random_dimension;
    std::size_t grid = 720;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::size_t rayleigh_samples = 10000;
    /// boundary: emit only the outer branch.
    bool outer_only = false;
    /// Empty means standard output.
    std::string output;
    /// Unset picks the subcommand's natural format.
    std::optional<Format> format;
};

/// Executes one subcommand, writing the document to `out` (or config.output)
/// and diagnostics to `err`. Returns the process exit status.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// SVG figure: hull path, outer-boundary sample markers, foci (2x2) and
/// eigenvalue markers. Exposed for tests.
std::string render_svg(const Matrix& a, std::size_t grid);

}  // namespace numrange::cli
