#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

#include "numrange/conic.hpp"
#include "numrange/elliptical_range.hpp"
#include "numrange/errors.hpp"
#include "numrange/kippenhahn.hpp"
#include "numrange/polynomial.hpp"
#include "numrange/serialize.hpp"
#include "numrange/verify.hpp"

namespace numrange::cli {

namespace {

Matrix load_matrix(const CliConfig& config) {
    const int sources = static_cast<int>(config.input_path.has_value()) +
                        static_cast<int>(config.inline_matrix.has_value()) +
                        static_cast<int>(config.random_dimension.has_value());
    if (sources != 1) {
        throw ParseError("exactly one of --input, --matrix or --random is required");
    }
    if (config.random_dimension) {
        return random_matrix(*config.random_dimension, config.seed);
    }
    if (config.inline_matrix) {
        return parse_matrix_json(*config.inline_matrix);
    }
    std::ifstream in(*config.input_path);
    if (!in) {
        throw ParseError("cannot open input file '" + *config.input_path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_json(buffer.str());
}

Format natural_format(Subcommand sub) {
    switch (sub) {
    case Subcommand::boundary:
        return Format::csv;
    case Subcommand::plot:
        return Format::svg;
    default:
        return Format::json;
    }
}

bool format_supported(Subcommand sub, Format format) {
    if (sub == Subcommand::boundary) {
        return format == Format::csv || format == Format::json;
    }
    return format == natural_format(sub);
}

std::string boundary_json(const std::vector<BoundarySample>& samples) {
    std::ostringstream os;
    os.precision(17);
    os << '[';
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        os << (i ? "," : "") << "{\"theta\":" << s.theta << ",\"branch\":" << s.branch << ",\"point\":["
           << s.point.real() << ',' << s.point.imag() << "],\"support\":" << s.support << '}';
    }
    os << "]\n";
    return os.str();
}

std::vector<Complex> spectrum(const Matrix& a) {
    if (a.size() == 2) {
        const auto [l1, l2] = eigenvalues_2x2(a);
        return {l1, l2};
    }
    Eigen::MatrixXcd m(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
        }
    }
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    const auto& values = solver.eigenvalues();
    return {values.data(), values.data() + values.size()};
}

// Maps mathematical coordinates onto a square canvas with the y axis flipped
// and 10% padding around the bounding box.
class Canvas {
public:
    Canvas(const std::vector<Complex>& points, double size) : size_(size) {
        double min_x = std::numeric_limits<double>::infinity();
        double max_x = -min_x;
        double min_y = min_x;
        double max_y = -min_x;
        for (const auto& p : points) {
            min_x = std::min(min_x, p.real());
            max_x = std::max(max_x, p.real());
            min_y = std::min(min_y, p.imag());
            max_y = std::max(max_y, p.imag());
        }
        double span = std::max(max_x - min_x, max_y - min_y);
        if (span <= 0.0) {
            span = 1.0;
        }
        const double padded = span * 1.2;
        origin_x_ = (min_x + max_x) / 2.0 - padded / 2.0;
        top_y_ = (min_y + max_y) / 2.0 + padded / 2.0;
        scale_ = size_ / padded;
    }

    [[nodiscard]] std::string x(Complex z) const { return number((z.real() - origin_x_) * scale_); }
    [[nodiscard]] std::string y(Complex z) const { return number((top_y_ - z.imag()) * scale_); }
    [[nodiscard]] double size() const { return size_; }

private:
    static std::string number(double v) {
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "%.3f", v);
        return buffer;
    }

    double size_;
    double origin_x_ = 0.0;
    double top_y_ = 0.0;
    double scale_ = 1.0;
};

void write_document(const CliConfig& config, const std::string& document, std::ostream& out) {
    if (config.output.empty()) {
        out << document;
        return;
    }
    std::ofstream file(config.output);
    if (!file) {
        throw ParseError("cannot open output file '" + config.output + "'");
    }
    file << document;
}

std::string ensure_newline(std::string s) {
    if (s.empty() || s.back() != '\n') {
        s.push_back('\n');
    }
    return s;
}

}  // namespace

std::string render_svg(const Matrix& a, std::size_t grid) {
    const auto samples = fov_boundary(a, grid);
    const ConvexPolygon hull = hull_of(samples);
    const std::vector<Complex> eigenvalues = spectrum(a);
    std::vector<Complex> foci;
    if (a.size() == 2) {
        const EllipseDisk disk = elliptical_range(a);
        foci = {disk.focus1, disk.focus2};
    }

    std::vector<Complex> extent = hull.vertices;
    extent.insert(extent.end(), eigenvalues.begin(), eigenvalues.end());
    const Canvas canvas(extent, 600.0);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    os << "<path class=\"hull\" fill=\"#dbe8f5\" stroke=\"#1f4e79\" stroke-width=\"1.5\" d=\"";
    for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
        os << (i ? " L " : "M ") << canvas.x(hull.vertices[i]) << ' ' << canvas.y(hull.vertices[i]);
    }
    os << " Z\"/>\n";
    for (const auto& s : samples) {
        os << "<circle class=\"sample\" cx=\"" << canvas.x(s.point) << "\" cy=\"" << canvas.y(s.point)
           << "\" r=\"1.2\" fill=\"#1f4e79\"/>\n";
    }
    for (const auto& f : foci) {
        os << "<circle class=\"focus\" cx=\"" << canvas.x(f) << "\" cy=\"" << canvas.y(f)
           << "\" r=\"6\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& l : eigenvalues) {
        os << "<g class=\"eigenvalue\" stroke=\"#c0392b\" stroke-width=\"1.5\" transform=\"translate("
           << canvas.x(l) << ' ' << canvas.y(l) << ")\"><line x1=\"-4\" y1=\"-4\" x2=\"4\" y2=\"4\"/>"
           << "<line x1=\"-4\" y1=\"4\" x2=\"4\" y2=\"-4\"/></g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.grid < 3) {
            throw ParseError("--grid must be at least 3");
        }
        if (!(config.tol > 0.0)) {
            throw ParseError("--tol must be positive");
        }
        const Format format = config.format.value_or(natural_format(config.subcommand));
        if (!format_supported(config.subcommand, format)) {
            throw ParseError("output format not supported by this subcommand");
        }
        const Matrix a = load_matrix(config);

        std::string document;
        int status = kExitOk;
        switch (config.subcommand) {
        case Subcommand::ellipse:
            document = ellipse_to_json(elliptical_range(a));
            break;
        case Subcommand::poly:
            document = polynomial_to_json(pencil_determinant(hermitian_parts(a)));
            break;
        case Subcommand::dual: {
            const ConicMatrix tangential = conic_of(pencil_determinant(hermitian_parts(a)));
            document = conic_to_json(normalize_conic(adjugate_dual(tangential)));
            break;
        }
        case Subcommand::boundary: {
            const auto samples =
                config.outer_only ? fov_boundary(a, config.grid) : kippenhahn_points(a, config.grid);
            document = format == Format::csv ? boundary_to_csv(samples) : boundary_json(samples);
            break;
        }
        case Subcommand::verify: {
            SuiteOptions options;
            options.grid = config.grid;
            options.seed = config.seed;
            options.tol = config.tol;
            options.rayleigh_samples = config.rayleigh_samples;
            const auto reports = run_suite(a, options);
            document = reports_to_json(reports);
            if (!all_passed(reports)) {
                status = kExitVerificationFailed;
            }
            break;
        }
        case Subcommand::plot:
            document = render_svg(a, config.grid);
            break;
        }
        write_document(config, ensure_newline(std::move(document)), out);
        return status;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDimension;
    } catch (const DegreeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDimension;
    } catch (const DegenerateError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDimension;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace numrange::cli
