#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "motarr/arrangement.hpp"

namespace motarr {

// Scalars are kept as the strings they were given; they are parsed only when
// the arrangement is built, so a backend override can reinterpret them.
struct ArrangementDocument {
    std::string field = "q";
    std::size_t dimension = 0;
    struct Form {
        std::string constant;
        std::vector<std::string> coeffs;
        bool operator==(const Form&) const = default;
    };
    std::vector<Form> hyperplanes;
    std::optional<std::vector<std::size_t>> order;  // 1-based permutation

    bool operator==(const ArrangementDocument&) const = default;
};

ArrangementDocument parse_document(const nlohmann::json& j);
ArrangementDocument parse_document_text(const std::string& text);
nlohmann::json to_json(const ArrangementDocument& doc);
// Canonical scalar strings under the document's own field.
ArrangementDocument normalize(const ArrangementDocument& doc);
ArrangementDocument document_of(const Arrangement& arr);

// 1-based permutation "3,1,2".
std::vector<std::size_t> parse_order(const std::string& text);

// Builds the arrangement over `field_override` if given, then applies
// `order_override` or the document order.
Arrangement build(const ArrangementDocument& doc, const std::optional<Field>& field_override = std::nullopt,
                  const std::optional<std::vector<std::size_t>>& order_override = std::nullopt);

// Rational expression in x, y, z (or x1..xN), h1..hr for the chosen forms,
// numbers and, on the formal backend, letters. It must be a unit of U.
UnitElement parse_unit(const Arrangement& arr, const std::string& text);
// Units separated by ';'.
std::vector<UnitElement> parse_word(const Arrangement& arr, const std::string& text);
std::string unit_to_string(const Arrangement& arr, const UnitElement& u);

}  // namespace motarr
