#pragma once

#include <string>
#include <variant>

#include "apk/core.hpp"
#include "apk/types.hpp"

namespace apk {

using Document = std::variant<ExtendedMultiSegment, AParameter>;

// Parses a UTF-8 JSON document into an extended multi-segment (key "blocks")
// or an A-parameter (key "summands"). Rows are normalized; structural
// invariants are verified (relaxed by default, group checks with strict).
// Throws InputError with field diagnostics.
Document parse_document(const std::string& text, bool strict);

ExtendedMultiSegment parse_ems(const std::string& text, bool strict);
AParameter parse_parameter(const std::string& text, bool strict);

// Canonical emission: normalized rows, fixed key order, two-space indent,
// trailing newline. parse(emit(E)) is the identity on normalized documents.
std::string emit(const ExtendedMultiSegment& e);
std::string emit(const AParameter& psi);

std::string report_to_json(const ValidationReport& rep);
std::string report_to_text(const ValidationReport& rep);

}  // namespace apk
