#include "torsionlink/json_io.hpp"

namespace torsionlink::json_io {

namespace {

std::string expect_string(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

} // namespace

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

json matrix_to_json(const IntMatrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).get_str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON must be an object with rows, cols, entries");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw ParseError("rows and cols must be integers");
    auto rows_v = j["rows"].get<long long>();
    auto cols_v = j["cols"].get<long long>();
    if (rows_v < 0 || cols_v < 0) throw ParseError("rows and cols must be nonnegative");
    std::size_t rows = static_cast<std::size_t>(rows_v);
    std::size_t cols = static_cast<std::size_t>(cols_v);
    const json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("entries must be an array of " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(cols) +
                             " entries");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_bigint(expect_string(row[c], "matrix entry"));
    }
    return m;
}

json form_to_json(const LinkingForm& f) {
    json j;
    json factors = json::array();
    for (const BigInt& d : f.group.invariant_factors) factors.push_back(d.get_str());
    j["invariant_factors"] = std::move(factors);
    json gram = json::array();
    for (const auto& row : f.gram) {
        json r = json::array();
        for (const QmodZ& v : row) r.push_back(v.str());
        gram.push_back(std::move(r));
    }
    j["gram"] = std::move(gram);
    return j;
}

LinkingForm form_from_json(const json& j) {
    if (!j.is_object() || !j.contains("invariant_factors") || !j.contains("gram"))
        throw ParseError("form JSON must be an object with invariant_factors and gram");
    const json& factors = j["invariant_factors"];
    const json& gram = j["gram"];
    if (!factors.is_array() || !gram.is_array()) throw ParseError("invariant_factors and gram must be arrays");

    LinkingForm f;
    for (const json& d : factors) {
        BigInt v = parse_bigint(expect_string(d, "invariant factor"));
        if (v < 2) throw ParseError("invariant factors must be >= 2");
        if (!f.group.invariant_factors.empty() && v % f.group.invariant_factors.back() != 0)
            throw ParseError("invariant factors must form a divisibility chain");
        f.group.invariant_factors.push_back(std::move(v));
    }
    std::size_t k = f.group.invariant_factors.size();
    if (gram.size() != k) throw ParseError("gram must be " + std::to_string(k) + "x" + std::to_string(k));
    f.gram.assign(k, std::vector<QmodZ>(k));
    for (std::size_t i = 0; i < k; ++i) {
        const json& row = gram[i];
        if (!row.is_array() || row.size() != k)
            throw ParseError("gram must be " + std::to_string(k) + "x" + std::to_string(k));
        for (std::size_t c = 0; c < k; ++c) {
            Rational v = parse_rational(expect_string(row[c], "gram entry"));
            QmodZ q(v);
            if (q.value() != v) throw ParseError("gram entries must be canonical, in [0,1)");
            f.gram[i][c] = q;
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < i; ++c)
            if (f.gram[i][c] != f.gram[c][i]) throw ParseError("gram must be symmetric");
    return f;
}

json witness_to_json(const IsometryWitness& w) {
    if (!w.found()) return nullptr;
    const IntMatrix& m = *w.matrix;
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace torsionlink::json_io
