#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "../errors.hpp"
#include "../rational.hpp"

namespace hyperdim::io {

using nlohmann::json;

/// {"n": <int>, "forms": [[c_0, ..., c_n], ...]} with each coefficient an
/// integer or a string "p/q".
struct InputDocument {
    int n = 0;
    std::vector<Vector> forms;
};

// Integers bare when they fit in 64 bits, everything else as a string.
template <class Json = json>
Json rational_to_json(const Rational& q) {
    if (is_integer(q)) {
        const Integer& z = numerator(q);
        if (z >= std::numeric_limits<std::int64_t>::min() &&
            z <= std::numeric_limits<std::int64_t>::max())
            return z.convert_to<std::int64_t>();
    }
    return q.str();
}

inline json vector_to_json(const Vector& v) {
    json row = json::array();
    for (const auto& x : v) row.push_back(rational_to_json(x));
    return row;
}

inline Rational rational_from_json(const json& value, const std::string& where) {
    switch (value.type()) {
        case json::value_t::number_integer:
            return Rational(value.get<std::int64_t>());
        case json::value_t::number_unsigned:
            return Rational(Integer(value.get<std::uint64_t>()));
        case json::value_t::number_float:
            throw InputError(where + ": floating-point coefficient " + value.dump() +
                             " is not allowed; write exact values as integers or \"p/q\" strings");
        case json::value_t::string:
            try {
                return parse_rational(value.get<std::string>());
            } catch (const InputError& e) {
                throw InputError(where + ": " + e.what());
            }
        default:
            throw InputError(where + ": expected an integer or a \"p/q\" string, got " +
                             std::string(value.type_name()));
    }
}

inline InputDocument parse_input(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("document must be an object with \"n\" and \"forms\"");
    if (!doc.contains("n")) throw InputError("missing field \"n\"");
    if (!doc.contains("forms")) throw InputError("missing field \"forms\"");

    const json& n = doc.at("n");
    if (!n.is_number_integer()) throw InputError("n: expected an integer");
    InputDocument out;
    const auto n_value = n.get<std::int64_t>();
    if (n_value < 1 || n_value > 1000) throw InputError("n: must be between 1 and 1000");
    out.n = static_cast<int>(n_value);

    const json& forms = doc.at("forms");
    if (!forms.is_array()) throw InputError("forms: expected an array of coefficient lists");
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const std::string where = "forms[" + std::to_string(i) + "]";
        if (!forms[i].is_array()) throw InputError(where + ": expected an array");
        Vector row;
        for (std::size_t j = 0; j < forms[i].size(); ++j)
            row.push_back(rational_from_json(forms[i][j], where + "[" + std::to_string(j) + "]"));
        out.forms.push_back(std::move(row));
    }
    return out;
}

inline json to_json(const InputDocument& doc) {
    json forms = json::array();
    for (const auto& f : doc.forms) forms.push_back(vector_to_json(f));
    return json{{"n", doc.n}, {"forms", std::move(forms)}};
}

}  // namespace hyperdim::io
