#include "dynzeta/json_io.hpp"

#include <stdexcept>

namespace dynzeta {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("malformed input: " + what);
}

int small_int_field(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key)) malformed(std::string("missing field '") + key + "'");
    const json& v = j.at(key);
    long long n;
    if (v.is_number_integer())
        n = v.get<long long>();
    else if (v.is_string())
        n = std::stoll(v.get<std::string>());
    else
        malformed(std::string("field '") + key + "' must be an integer");
    if (n < lo || n > hi)
        malformed(std::string("field '") + key + "' out of range");
    return static_cast<int>(n);
}

}  // namespace

json rational_to_json(const Rational& r) { return json(r.str()); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) {
        // route through the textual form to keep full 64-bit precision
        return Rational::parse(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_array() && j.size() == 2) {
        Rational num = rational_from_json(j[0]);
        Rational den = rational_from_json(j[1]);
        if (!num.is_integer() || !den.is_integer())
            malformed("[num, den] pair entries must be integers");
        return Rational(num.numerator(), den.numerator());
    }
    malformed("expected a number, a \"num/den\" string, or a [num, den] pair");
}

json series_to_json(const TruncatedSeries& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) {
        const Rational& c = s.coeff(k);
        if (c.is_integer())
            coeffs.push_back(c.str());
        else
            coeffs.push_back(json::array({c.numerator().get_str(), c.denominator().get_str()}));
    }
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json& j) {
    if (!j.is_object()) malformed("series must be an object with 'order' and 'coeffs'");
    int order = small_int_field(j, "order", 0, 1 << 20);
    if (!j.contains("coeffs") || !j.at("coeffs").is_array())
        malformed("series field 'coeffs' must be an array");
    const json& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) > order + 1)
        malformed("series has more coefficients than order + 1");
    TruncatedSeries s(order);
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
        s.set_coeff(k, rational_from_json(coeffs[static_cast<size_t>(k)]));
    return s;
}

MonicSeries monic_from_json(const json& j) { return MonicSeries(series_from_json(j)); }

json exponents_to_json(const FactorExponents& f) {
    json exps = json::object();
    for (const auto& [n, e] : f.exponents) exps[std::to_string(n)] = e.str();
    return json{{"exponents", std::move(exps)}, {"max_index", f.max_index}};
}

FactorExponents exponents_from_json(const json& j) {
    if (!j.is_object() || !j.contains("exponents") || !j.at("exponents").is_object())
        malformed("factor exponents must be an object with an 'exponents' map");
    FactorExponents f;
    for (const auto& [key, value] : j.at("exponents").items()) {
        int n;
        try {
            n = std::stoi(key);
        } catch (const std::exception&) {
            malformed("exponent key '" + key + "' is not a positive integer");
        }
        if (n < 1) malformed("exponent key '" + key + "' is not a positive integer");
        f.set(n, rational_from_json(value));
    }
    if (j.contains("max_index"))
        f.max_index = std::max(f.max_index, small_int_field(j, "max_index", 0, 1 << 20));
    return f;
}

json sequence_to_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const Rational& v : values) out.push_back(v.str());
    return out;
}

std::vector<Rational> sequence_from_json(const json& j) {
    if (!j.is_array()) malformed("sequence must be a JSON array");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const json& v : j) out.push_back(rational_from_json(v));
    return out;
}

json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
        rows.push_back(std::move(row));
    }
    json out = json::object();
    if (m.is_square()) out["dim"] = m.rows();
    out["rows"] = std::move(rows);
    return out;
}

RationalMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array() || j.at("rows").empty())
        malformed("matrix must be an object with a non-empty 'rows' array");
    const json& rows = j.at("rows");
    int r = static_cast<int>(rows.size());
    if (!rows[0].is_array() || rows[0].empty()) malformed("matrix rows must be non-empty arrays");
    int c = static_cast<int>(rows[0].size());
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        const json& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != c)
            malformed("matrix rows must all have the same length");
        for (int k = 0; k < c; ++k)
            m.at(i, k) = rational_from_json(row[static_cast<size_t>(k)]);
    }
    if (j.contains("dim")) {
        int dim = small_int_field(j, "dim", 1, 1 << 12);
        if (dim != r || dim != c) malformed("matrix 'dim' does not match the row shape");
    }
    return m;
}

OrbitTable orbit_table_from_json(const json& j) {
    if (!j.is_object() || (!j.contains("orbits") && !j.contains("linearizations")))
        malformed("orbit table must contain 'orbits' and/or 'linearizations'");
    OrbitTable table;
    if (j.contains("orbits")) {
        if (!j.at("orbits").is_array()) malformed("'orbits' must be an array");
        for (const json& o : j.at("orbits")) {
            OrbitCount count;
            count.period = small_int_field(o, "m", 1, 1 << 20);
            Rational a = o.contains("a") ? rational_from_json(o.at("a")) : Rational(0);
            Rational b = o.contains("b") ? rational_from_json(o.at("b")) : Rational(0);
            if (!a.is_integer() || !b.is_integer() || !a.numerator().fits_slong_p() ||
                !b.numerator().fits_slong_p())
                malformed("orbit counts must be (machine-size) integers");
            count.a = a.numerator().get_si();
            count.b = b.numerator().get_si();
            table.counts.push_back(count);
        }
    }
    if (j.contains("linearizations")) {
        if (!j.at("linearizations").is_array()) malformed("'linearizations' must be an array");
        for (const json& o : j.at("linearizations")) {
            if (!o.contains("matrix")) malformed("linearization entry needs a 'matrix'");
            table.linearizations.push_back(OrbitLinearization{
                small_int_field(o, "period", 1, 1 << 20),
                matrix_from_json(o.at("matrix")),
            });
        }
    }
    return table;
}

json dold_verdict_to_json(const DoldVerdict& v) {
    json out{{"pass", v.pass}};
    if (v.pass)
        out["first_violation"] = nullptr;
    else
        out["first_violation"] = json{{"k", v.first_k}, {"value", v.value.str()}};
    return out;
}

json commutativity_report_to_json(const CommutativityReport& r) {
    return json{
        {"pass", r.pass},
        {"indices_ab", sequence_to_json(r.indices_ab.values)},
        {"indices_ba", sequence_to_json(r.indices_ba.values)},
        {"zeta_ab", series_to_json(r.zeta_ab.series())},
        {"zeta_ba", series_to_json(r.zeta_ba.series())},
    };
}

}  // namespace dynzeta
