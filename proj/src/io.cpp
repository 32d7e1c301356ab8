#include "simkern/io.hpp"

#include <sstream>

namespace simkern {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("expected a rational literal (\"p/q\" string or integer), got " + j.dump());
}

GaussianRational gaussian_from_json(const Json& j) {
    if (j.is_object()) {
        if (!j.contains("re") || !j.contains("im"))
            throw ParseError("Gaussian rational needs \"re\" and \"im\": " + j.dump());
        return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
    }
    return {rational_from_json(j), Rational(0)};  // plain literal: real value
}

ComplexFloat complex_float_from_json(const Json& j) {
    if (j.is_number()) return ComplexFloat(j.get<double>());
    if (j.is_object() && j.contains("re") && j.contains("im"))
        return {j.at("re").get<double>(), j.at("im").get<double>()};
    throw ParseError("expected a float entry (number or {\"re\",\"im\"}), got " + j.dump());
}

namespace {

template <ScalarType T, typename EntryParser>
Matrix<T> entries_from_json(const Json& j, std::size_t rows, std::size_t cols,
                            EntryParser&& parse_entry) {
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("entries must be an array of " + std::to_string(rows) + " rows");
    std::vector<std::vector<T>> data;
    data.reserve(rows);
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != cols)
            throw ParseError("each row must have " + std::to_string(cols) + " entries");
        std::vector<T> out_row;
        out_row.reserve(cols);
        for (const auto& e : row) out_row.push_back(parse_entry(e));
        data.push_back(std::move(out_row));
    }
    return Matrix<T>(data);
}

}  // namespace

AnyMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("matrix payload must be a JSON object");
    std::size_t rows = 0, cols = 0;
    if (j.contains("n")) rows = cols = j.at("n").get<std::size_t>();
    if (j.contains("rows")) rows = j.at("rows").get<std::size_t>();
    if (j.contains("cols")) cols = j.at("cols").get<std::size_t>();
    if (rows == 0 || cols == 0)
        throw ParseError("matrix payload needs \"n\" or \"rows\"/\"cols\"");
    if (!j.contains("entries")) throw ParseError("matrix payload needs \"entries\"");
    const std::string domain = j.value("domain", std::string("gaussian-rational"));
    if (domain == "rational")
        return entries_from_json<Rational>(j, rows, cols,
                                           [](const Json& e) { return rational_from_json(e); });
    if (domain == "gaussian-rational")
        return entries_from_json<GaussianRational>(
            j, rows, cols, [](const Json& e) { return gaussian_from_json(e); });
    if (domain == "float")
        return entries_from_json<ComplexFloat>(
            j, rows, cols, [](const Json& e) { return complex_float_from_json(e); });
    if (domain == "gf") {
        std::uint64_t p = j.value("p", std::uint64_t{0});
        auto parse = [&p](const Json& e) -> PrimeFieldElement {
            std::uint64_t ep = 0;
            long long val = 0;
            if (e.is_object() && e.contains("val")) {
                val = e.at("val").get<long long>();
                ep = e.value("p", std::uint64_t{0});
            } else if (e.is_number_integer()) {
                val = e.get<long long>();  // modulus from the payload-level "p"
            } else {
                throw ParseError("GF entry must be {\"val\",\"p\"} or an integer: " + e.dump());
            }
            if (ep == 0) ep = p;
            if (p == 0) p = ep;
            if (ep == 0) throw ParseError("GF payload needs a prime modulus \"p\"");
            if (ep != p) throw ParseError("GF entries must agree on a single prime modulus");
            return {val, ep};
        };
        return entries_from_json<PrimeFieldElement>(j, rows, cols, parse);
    }
    throw ParseError("unknown domain '" + domain +
                     "' (expected rational | gaussian-rational | gf | float)");
}

Matrix<Rational> matrix_from_csv(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            const auto b = cell.find_first_not_of(" \t\r");
            const auto e = cell.find_last_not_of(" \t\r");
            if (b == std::string::npos) throw ParseError("empty CSV cell");
            row.push_back(Rational::from_string(cell.substr(b, e - b + 1)));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty CSV matrix");
    try {
        return Matrix<Rational>(rows);
    } catch (const ShapeError& e) {
        throw ParseError(std::string("invalid CSV matrix: ") + e.what());
    }
}

std::string matrix_to_csv(const Matrix<Rational>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ",";
            out += m(i, j).to_string();
        }
        out += "\n";
    }
    return out;
}

namespace {

Matrix<ComplexFloat> to_float_matrix(const Matrix<Rational>& m) {
    Matrix<ComplexFloat> out(m.rows(), m.cols(), ComplexFloat(0.0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ComplexFloat(m(i, j).to_double());
    return out;
}

Matrix<ComplexFloat> to_float_matrix(const Matrix<GaussianRational>& m) {
    Matrix<ComplexFloat> out(m.rows(), m.cols(), ComplexFloat(0.0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = ComplexFloat(m(i, j).re().to_double(), m(i, j).im().to_double());
    return out;
}

}  // namespace

AnyMatrix convert_domain(const AnyMatrix& m, const std::string& target) {
    return std::visit(
        [&](const auto& mm) -> AnyMatrix {
            using T = typename std::decay_t<decltype(mm)>::value_type;
            if (target == scalar_traits<T>::domain_name) return mm;
            if constexpr (std::is_same_v<T, Rational>) {
                if (target == "gaussian-rational") return to_gaussian(mm);
                if (target == "float") return to_float_matrix(mm);
            } else if constexpr (std::is_same_v<T, GaussianRational>) {
                if (target == "float") return to_float_matrix(mm);
                if (target == "rational") {
                    Matrix<Rational> out(mm.rows(), mm.cols(), Rational(0));
                    for (std::size_t i = 0; i < mm.rows(); ++i)
                        for (std::size_t j = 0; j < mm.cols(); ++j) {
                            if (!mm(i, j).is_real())
                                throw UnsupportedDomainError(
                                    "matrix has nonreal entries; cannot coerce to the rational "
                                    "domain");
                            out(i, j) = mm(i, j).re();
                        }
                    return out;
                }
            }
            throw UnsupportedDomainError("no faithful conversion from " +
                                         std::string(scalar_traits<T>::domain_name) + " to '" +
                                         target + "'");
        },
        m);
}

AnyMatrix matrix_from_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty matrix payload");
    if (text[first] == '{') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("matrix payload is not valid JSON");
        return matrix_from_json(j);
    }
    return matrix_from_csv(text);
}

Partition partition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
        throw ParseError("partition payload needs \"n\" and \"blocks\"");
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& b : j.at("blocks")) {
        std::vector<std::size_t> blk;
        for (const auto& i : b) {
            std::size_t v = i.get<std::size_t>();
            if (v == 0) throw ParseError("partition indices are 1-based");
            blk.push_back(v - 1);
        }
        blocks.push_back(std::move(blk));
    }
    try {
        return {n, std::move(blocks)};
    } catch (const ShapeError& e) {
        throw ParseError(std::string("invalid partition: ") + e.what());
    }
}

}  // namespace simkern
