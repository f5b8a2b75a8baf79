#pragma once

// Deterministic run reports: a human-readable table rendering and a JSON
// rendering of the same content.

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace cfk {

struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct InputDigest {
    std::string label;
    std::string digest; // fnv1a64 of the file bytes, hex
};

struct RunReport {
    std::vector<std::string> command;
    std::vector<InputDigest> inputs;
    std::vector<Table> tables;
    std::vector<std::string> warnings;
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    int exit_code = 0;

    std::string render_text() const;
    std::string render_json() const;
};

std::string fnv1a64_hex(std::string_view bytes);

} // namespace cfk
