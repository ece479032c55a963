#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fhdim/model.hpp"

namespace fhdim::config {

/// Parses a bundle document. Sections: scenario, radio, service,
/// quantization, load, plus optional mcs_table and overrides. Unknown keys
/// are rejected; omitted optional keys take the standard parameter-set
/// defaults. The result has passed validation (warnings are dropped here;
/// call validate() for them).
/// Throws ParseError, SchemaError, or InvariantViolation.
Bundle bundle_from_json_text(std::string_view text,
                             std::string_view origin = "<string>");

/// Serializes every field of the bundle, fixed key order, 2-space indent.
std::string bundle_to_json_text(const Bundle& bundle);

/// bundle_from_json_text() over a file. Throws IoError if unreadable.
Bundle load_bundle(const std::filesystem::path& path);

/// Writes bundle_to_json_text() to `path`. The file round-trips through
/// load_bundle field-for-field. On failure nothing is left behind.
void save_bundle(const Bundle& bundle, const std::filesystem::path& path);

/// Loads an MCS table: either a bare JSON array of {m, rc} objects or a
/// document with an `mcs_table` key holding one.
McsTable load_mcs_table(const std::filesystem::path& path);

/// Parses inline "M:Rc,M:Rc,..." pairs, e.g. "4:0.66,16:0.64".
/// Throws std::invalid_argument on malformed input or an empty list.
McsTable parse_mcs_pairs(std::string_view pairs);

}  // namespace fhdim::config
