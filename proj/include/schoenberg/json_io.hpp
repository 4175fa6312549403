#pragma once
/**
 * JSON forms of coefficient sequences.
 *
 *   {"space":"real","d":3,"truncation":N,"coeffs":[...],"valid_mass":true,"finite_support":true}
 *   {"space":"complex","q":2,"max_degree":M,"entries":[[m,n,value],...],"valid_mass":true,"finite_support":true}
 *
 * "finite_support" is optional on input and defaults to true. "valid_mass" is
 * recomputed from the coefficients on load; the stored flag is informational.
 * Doubles are written in shortest round-trip form.
 */

#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "complex_coeffs.hpp"
#include "errors.hpp"
#include "real_coeffs.hpp"

namespace schoenberg {

using Json = nlohmann::json;

inline Json to_json(const RealSchoenbergSequence& seq)
{
    return Json{{"space", "real"},
                {"d", seq.d},
                {"truncation", seq.truncation()},
                {"coeffs", seq.coeffs},
                {"valid_mass", seq.valid_mass},
                {"finite_support", seq.finite_support}};
}

inline Json to_json(const ComplexSchoenbergSequence& seq)
{
    Json entries = Json::array();
    for (const auto& [key, value] : seq.entries) {
        entries.push_back(Json::array({key.first, key.second, value}));
    }
    return Json{{"space", "complex"},
                {"q", seq.q},
                {"max_degree", seq.max_degree},
                {"entries", std::move(entries)},
                {"valid_mass", seq.valid_mass},
                {"finite_support", seq.finite_support}};
}

namespace detail {

inline const Json& require(const Json& j, const char* field)
{
    if (!j.is_object()) {
        throw FormatError("<root>", "expected a JSON object");
    }
    const auto it = j.find(field);
    if (it == j.end()) {
        throw FormatError(field, "missing");
    }
    return *it;
}

inline int require_int(const Json& j, const char* field, int minimum)
{
    const Json& v = require(j, field);
    if (!v.is_number_integer()) {
        throw FormatError(field, "expected an integer");
    }
    const auto value = v.get<long long>();
    if (value < minimum || value > 1'000'000) {
        throw FormatError(field, "value " + std::to_string(value) + " out of range (minimum " + std::to_string(minimum) + ")");
    }
    return static_cast<int>(value);
}

inline double require_finite(const Json& v, const std::string& field)
{
    if (!v.is_number()) {
        throw FormatError(field, "expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw FormatError(field, "non-finite value");
    }
    return x;
}

inline bool optional_bool(const Json& j, const char* field, bool fallback)
{
    const auto it = j.find(field);
    if (it == j.end()) {
        return fallback;
    }
    if (!it->is_boolean()) {
        throw FormatError(field, "expected a boolean");
    }
    return it->get<bool>();
}

inline void require_space(const Json& j, const std::string& expected)
{
    const Json& space = require(j, "space");
    if (!space.is_string() || space.get<std::string>() != expected) {
        throw FormatError("space", "expected \"" + expected + "\"");
    }
}

} // namespace detail

inline RealSchoenbergSequence real_sequence_from_json(const Json& j)
{
    detail::require_space(j, "real");
    const int d = detail::require_int(j, "d", 1);
    const int truncation = detail::require_int(j, "truncation", 0);
    const Json& coeffs = detail::require(j, "coeffs");
    if (!coeffs.is_array()) {
        throw FormatError("coeffs", "expected an array");
    }
    if (coeffs.size() != static_cast<std::size_t>(truncation) + 1) {
        throw FormatError("coeffs", "length " + std::to_string(coeffs.size()) + " does not match truncation + 1 = " +
                                        std::to_string(truncation + 1));
    }
    std::vector<double> values;
    values.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        values.push_back(detail::require_finite(coeffs[i], "coeffs[" + std::to_string(i) + "]"));
    }
    detail::optional_bool(j, "valid_mass", false);
    return RealSchoenbergSequence(d, std::move(values), detail::optional_bool(j, "finite_support", true));
}

inline ComplexSchoenbergSequence complex_sequence_from_json(const Json& j)
{
    detail::require_space(j, "complex");
    const int q = detail::require_int(j, "q", 2);
    const int max_degree = detail::require_int(j, "max_degree", 0);
    const Json& entries = detail::require(j, "entries");
    if (!entries.is_array()) {
        throw FormatError("entries", "expected an array");
    }
    std::map<BiDegree, double> values;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string field = "entries[" + std::to_string(i) + "]";
        const Json& e = entries[i];
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw FormatError(field, "expected [m, n, value] with integer m, n");
        }
        const auto m = e[0].get<long long>();
        const auto n = e[1].get<long long>();
        if (m < 0 || n < 0 || m + n > max_degree) {
            throw FormatError(field, "bi-degree outside 0 <= m, n and m + n <= max_degree");
        }
        const BiDegree key{static_cast<int>(m), static_cast<int>(n)};
        if (values.count(key)) {
            throw FormatError(field, "duplicate bi-degree");
        }
        values[key] = detail::require_finite(e[2], field);
    }
    detail::optional_bool(j, "valid_mass", false);
    return ComplexSchoenbergSequence(q, max_degree, std::move(values), detail::optional_bool(j, "finite_support", true));
}

using AnySequence = std::variant<RealSchoenbergSequence, ComplexSchoenbergSequence>;

inline AnySequence sequence_from_json(const Json& j)
{
    const Json& space = detail::require(j, "space");
    if (space == "real") {
        return real_sequence_from_json(j);
    }
    if (space == "complex") {
        return complex_sequence_from_json(j);
    }
    throw FormatError("space", "expected \"real\" or \"complex\"");
}

inline Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError("<document>", e.what());
    }
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw FormatError("<file>", "cannot open " + path);
    }
    return parse_json_text(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

} // namespace schoenberg
