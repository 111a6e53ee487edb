#include "motivic/json_io.hpp"

#include <string>

namespace motivic {

namespace {

BigInt parse_big(const Json& v) {
    if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        const std::size_t digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == digits || s.find_first_not_of("0123456789", digits) != std::string::npos) {
            throw Error(ErrorCode::SyntaxError, "not a decimal integer: '" + s + "'");
        }
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    }
    throw Error(ErrorCode::SyntaxError, "expected an integer or a decimal string");
}

}  // namespace

Json big_array(std::span<const BigInt> values) {
    Json a = Json::array();
    for (const auto& v : values) a.push_back(v.get_str());
    return a;
}

std::vector<BigInt> parse_big_array(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::SyntaxError, "expected an array");
    std::vector<BigInt> out;
    for (const auto& v : j) out.push_back(parse_big(v));
    return out;
}

Json witt_to_json(const WittVector& w) {
    Json j;
    j["precision"] = w.precision();
    j["coeffs"] = big_array(w.coeffs());
    return j;
}

WittVector witt_from_json(const Json& j) {
    if (j.is_array()) {
        auto c = parse_big_array(j);
        if (c.empty()) throw Error(ErrorCode::ValidationError, "a Witt vector needs precision >= 1");
        return WittVector(std::move(c));
    }
    if (!j.is_object() || !j.contains("coeffs")) throw Error(ErrorCode::SyntaxError, "expected {\"coeffs\": [...]}");
    auto c = parse_big_array(j.at("coeffs"));
    if (j.contains("precision") && (!j.at("precision").is_number_unsigned() ||
                                    j.at("precision").get<std::size_t>() != c.size())) {
        throw Error(ErrorCode::ValidationError, "precision does not match the number of coefficients");
    }
    if (c.empty()) throw Error(ErrorCode::ValidationError, "a Witt vector needs precision >= 1");
    return WittVector(std::move(c));
}

Json rational_to_json(const RationalFn& f) {
    Json j;
    j["numerator"] = big_array(f.numerator);
    j["denominator"] = big_array(f.denominator);
    return j;
}

RationalFn rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator")) {
        throw Error(ErrorCode::SyntaxError, "expected {\"numerator\": [...], \"denominator\": [...]}");
    }
    RationalFn f;
    f.numerator = parse_big_array(j.at("numerator"));
    f.denominator = parse_big_array(j.at("denominator"));
    if (f.numerator.empty() || f.denominator.empty() || f.numerator[0] != 1 || f.denominator[0] != 1) {
        throw Error(ErrorCode::ValidationError, "numerator and denominator need constant term 1");
    }
    return f;
}

Json weil_to_json(const WeilReport& r) {
    Json j;
    j["passed"] = r.passed;
    j["genus"] = r.genus;
    j["denominator_ok"] = r.denominator_ok;
    j["even_degree"] = r.even_degree;
    j["symmetric"] = r.symmetric;
    j["riemann"] = r.riemann;
    Json roots = Json::array();
    for (long double v : r.root_abs) roots.push_back(static_cast<double>(v));
    j["root_abs"] = roots;
    j["failures"] = r.failures;
    return j;
}

Json symbols_to_json(const SteinbergProduct& s) {
    Json a = Json::array();
    for (const auto& f : s.factors) {
        Json e;
        e["a"] = f.a.get_str();
        e["b"] = f.b.get_str();
        e["exponent"] = f.exponent;
        e["hilbert2"] = hilbert2(f.a, f.b);
        a.push_back(e);
    }
    return a;
}

Json error_to_json(const Error& e) {
    Json inner;
    inner["code"] = std::string(error_code_name(e.code()));
    inner["message"] = e.what();
    if (e.position()) inner["position"] = *e.position();
    Json j;
    j["error"] = inner;
    return j;
}

}  // namespace motivic
