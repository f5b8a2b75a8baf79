#pragma once

// JSON encodings. Output uses insertion-ordered objects and 2-space
// indentation so the emitted bytes depend only on the value.
//
// Complex format:
//   {"name": str, "components": int, "markings": int,
//    "generators": [{"id": str, "maslov": int, "alexander": int}, ...],
//    "differential": [{"from": str, "to": str, "terms": [{"u": int, "w": int}, ...]}, ...]}

#include "cfk/algebra.hpp"
#include "cfk/chain_complex.hpp"

#include <filesystem>
#include <json.hpp>
#include <string>

namespace cfk {

using ojson = nlohmann::ordered_json;

ojson to_json(const PolyUW& p);
PolyUW poly_uw_from_json(const nlohmann::json& j);

ojson to_json(const LaurentQT& p);
LaurentQT laurent_from_json(const nlohmann::json& j);

ojson to_json(const FreeComplexUW& c);
// Throws ParseError on anything that is not in canonical form.
FreeComplexUW complex_from_json(const nlohmann::json& j);

std::string dump_canonical(const ojson& j);

// Reads and parses a UTF-8 JSON file; ParseError on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

FreeComplexUW load_complex(const std::filesystem::path& path);
void save_complex(const std::filesystem::path& path, const FreeComplexUW& c);

} // namespace cfk
