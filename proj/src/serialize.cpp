#include "umbral/serialize.hpp"

#include <json.hpp>

namespace umbral {

namespace {

std::vector<BigRat> rational_array(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be a JSON array");
    std::vector<BigRat> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError(std::string(what) + " entries must be rational strings");
        out.push_back(rat_from_string(item.get<std::string>()));
    }
    return out;
}

nlohmann::json to_array(const std::vector<BigRat>& cs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cs) arr.push_back(rat_to_string(c));
    return arr;
}

nlohmann::json parse(const std::string& literal) {
    nlohmann::json j = nlohmann::json::parse(literal, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("malformed JSON literal");
    return j;
}

}  // namespace

Poly poly_from_json(const std::string& literal) {
    return Poly(rational_array(parse(literal), "polynomial literal"));
}

std::string poly_to_json(const Poly& p) { return to_array(p.coeffs()).dump(); }

EgfSeries series_from_json(const std::string& literal) {
    nlohmann::json j = parse(literal);
    if (!j.is_object() || !j.contains("coeffs") || !j.contains("trunc"))
        throw ParseError("series literal needs \"coeffs\" and \"trunc\" fields");
    std::vector<BigRat> coeffs = rational_array(j["coeffs"], "series coefficients");
    if (!j["trunc"].is_number_unsigned() || j["trunc"].get<size_t>() + 1 != coeffs.size())
        throw ParseError("series trunc must equal the coefficient count minus one");
    return EgfSeries(std::move(coeffs));
}

std::string series_to_json(const EgfSeries& f) {
    nlohmann::json j;
    j["coeffs"] = to_array(f.coeffs());
    j["trunc"] = f.trunc();
    return j.dump();
}

}  // namespace umbral
