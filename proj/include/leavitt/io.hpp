#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "leavitt/element.hpp"

namespace leavitt {

/// Parses the expression grammar
///
///   element := term (('+'|'-') term)*
///   term    := [scalar] factor*
///   factor  := 's' word | 't' word | '1' | '(' element ')'
///   word    := digit+ | '[' int (',' int)* ']'
///   scalar  := rat | rat 'i' | '(' rat ('+'|'-') rat 'i' ')'
///   rat     := int ['/' int]
///
/// A leading sign on the first term is accepted. Throws ParseError with the
/// byte offset, or LetterOutOfRange.
LeavittElement parse_element(std::string_view text, std::size_t d);

/// Canonical text; parse_element(format_element(a), d) == a.
std::string format_element(const LeavittElement& a);

nlohmann::json element_to_json(const LeavittElement& a);
/// Accepts non-canonical input (any levels, repeated degrees) and canonicalizes.
LeavittElement element_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace leavitt
