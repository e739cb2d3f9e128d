#pragma once

#include <string>

#include <json.hpp>

#include "cpav/common.hpp"
#include "cpav/polynomial.hpp"
#include "cpav/series.hpp"

namespace cpav {

// Wire schema, shared by the CLI and caches:
//   polynomial: {"terms":[{"x":<int>,"y":<int>,"num":"<decimal>","den":"<decimal>"}, ...]}
//   series:     {"order":N,"convention":"coeff of t^n/n!","coeffs":[<polynomial>, ...]}

inline nlohmann::json poly_to_json(const PolyXY& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"x", m.x},
                         {"y", m.y},
                         {"num", boost::multiprecision::numerator(c).str()},
                         {"den", boost::multiprecision::denominator(c).str()}});
    }
    return nlohmann::json{{"terms", std::move(terms)}};
}

inline nlohmann::json poly_to_json(const PolyY& p) { return poly_to_json(PolyXY::from_y_poly(p)); }

inline PolyXY poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw invalid_input("poly_from_json: expected {\"terms\": [...]}");
    PolyXY p;
    for (const auto& t : j["terms"]) {
        const int x = t.at("x").get<int>();
        const int y = t.at("y").get<int>();
        const BigInt num(t.at("num").get<std::string>());
        const BigInt den(t.at("den").get<std::string>());
        if (den <= 0) throw invalid_input("poly_from_json: denominator must be positive");
        p.add_term(x, y, BigRational(num, den));
    }
    return p;
}

template <typename C>
nlohmann::json series_to_json(const EgfSeries<C>& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) {
        if constexpr (std::is_same_v<C, BigRational>)
            coeffs.push_back(poly_to_json(PolyXY(s.at(n))));
        else
            coeffs.push_back(poly_to_json(s.at(n)));
    }
    return nlohmann::json{{"order", s.order()}, {"convention", "coeff of t^n/n!"}, {"coeffs", std::move(coeffs)}};
}

inline EgfSeries<PolyXY> series_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw invalid_input("series_from_json: expected {\"order\", \"convention\", \"coeffs\"}");
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
        throw invalid_input("series_from_json: need exactly order+1 coefficients");
    EgfSeries<PolyXY> s(order);
    for (int n = 0; n <= order; ++n) s.at(n) = poly_from_json(coeffs[static_cast<size_t>(n)]);
    return s;
}

}  // namespace cpav
