#include "numrange/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "numrange/errors.hpp"

namespace numrange {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json report_json(const CheckReport& r) {
    return {{"name", r.name},         {"passed", r.passed},   {"max_deviation", r.max_deviation},
            {"tolerance", r.tolerance}, {"samples", r.samples}, {"details", r.details}};
}

json polynomial_json(const HomogeneousPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exp", {e[0], e[1], e[2]}}, {"coef", c}});
    }
    return terms;
}

std::string format_real(double x, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
    return buffer;
}

double parse_real(std::string_view field, std::size_t line) {
    double value = 0.0;
    const char* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("boundary CSV line " + std::to_string(line) + ": bad number '" +
                         std::string(field) + "'");
    }
    return value;
}

}  // namespace

Matrix parse_matrix_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
        throw ParseError("matrix JSON must be an object with \"n\" and \"entries\"");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() <= 0) {
        throw ParseError("matrix JSON: \"n\" must be a positive integer");
    }
    const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
    const json& rows = doc["entries"];
    if (!rows.is_array() || rows.size() != n) {
        throw ParseError("matrix JSON: \"entries\" must hold n rows");
    }
    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != n) {
            throw ParseError("matrix JSON: every row must hold n entries");
        }
        for (const json& entry : row) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
                throw ParseError("matrix JSON: entries must be [re, im] pairs");
            }
            entries.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return Matrix(n, std::move(entries));
}

std::string matrix_to_json(const Matrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.size(); ++j) {
            row.push_back(complex_json(a(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", a.size()}, {"entries", std::move(rows)}}.dump();
}

std::string polynomial_to_json(const HomogeneousPolynomial& p) { return polynomial_json(p).dump(); }

HomogeneousPolynomial parse_polynomial_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw ParseError("polynomial JSON must be a nonempty array of terms");
    }
    std::map<Exponent, double> terms;
    unsigned degree = 0;
    bool first = true;
    for (const json& term : doc) {
        if (!term.is_object() || !term.contains("exp") || !term.contains("coef") ||
            !term["exp"].is_array() || term["exp"].size() != 3 || !term["coef"].is_number()) {
            throw ParseError("polynomial JSON: terms must be {\"exp\": [i,j,k], \"coef\": c}");
        }
        Exponent e{};
        for (std::size_t k = 0; k < 3; ++k) {
            if (!term["exp"][k].is_number_unsigned()) {
                throw ParseError("polynomial JSON: exponents must be nonnegative integers");
            }
            e[k] = term["exp"][k].get<unsigned>();
        }
        if (first) {
            degree = e[0] + e[1] + e[2];
            first = false;
        }
        terms[e] += term["coef"].get<double>();
    }
    return HomogeneousPolynomial(degree, terms);
}

std::string conic_to_json(const ConicMatrix& c) {
    json rows = json::array();
    for (const auto& row : c.matrix()) {
        rows.push_back(json::array({row[0], row[1], row[2]}));
    }
    return json{{"matrix", std::move(rows)}, {"polynomial", polynomial_json(c.to_polynomial())}}.dump();
}

std::string ellipse_to_json(const EllipseDisk& e) {
    return json{{"center", complex_json(e.center)},
                {"foci", json::array({complex_json(e.focus1), complex_json(e.focus2)})},
                {"semi_major", e.semi_major},
                {"semi_minor", e.semi_minor},
                {"rotation", e.rotation},
                {"kind", std::string(to_string(e.kind))}}
        .dump();
}

std::string report_to_json(const CheckReport& r) { return report_json(r).dump(); }

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    json array = json::array();
    for (const auto& r : reports) {
        array.push_back(report_json(r));
    }
    return array.dump(2);
}

std::string boundary_to_csv(const std::vector<BoundarySample>& samples) {
    std::ostringstream os;
    os << "theta,branch,re,im,support\n";
    for (const auto& s : samples) {
        os << format_real(s.theta, 12) << ',' << s.branch << ',' << format_real(s.point.real(), 17)
           << ',' << format_real(s.point.imag(), 17) << ',' << format_real(s.support, 17) << '\n';
    }
    return os.str();
}

std::vector<BoundarySample> parse_boundary_csv(std::string_view text) {
    std::vector<BoundarySample> samples;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line_no == 1) {
            if (line != "theta,branch,re,im,support") {
                throw ParseError("boundary CSV: unexpected header '" + std::string(line) + "'");
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (fields.size() != 5) {
            throw ParseError("boundary CSV line " + std::to_string(line_no) + ": expected 5 fields");
        }
        std::size_t branch = 0;
        const auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), branch);
        if (ec != std::errc{} || ptr != fields[1].data() + fields[1].size()) {
            throw ParseError("boundary CSV line " + std::to_string(line_no) + ": bad branch index");
        }
        samples.push_back({parse_real(fields[0], line_no), branch,
                           {parse_real(fields[2], line_no), parse_real(fields[3], line_no)},
                           parse_real(fields[4], line_no)});
    }
    if (line_no == 0) {
        throw ParseError("boundary CSV: empty document");
    }
    return samples;
}

}  // namespace numrange
