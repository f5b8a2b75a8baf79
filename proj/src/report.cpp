#include "cfk/report.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>

namespace cfk {

std::string fnv1a64_hex(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

namespace {

void render_table(std::ostringstream& os, const Table& t)
{
    os << "== " << t.title << " ==\n";
    std::vector<std::size_t> width(t.header.size(), 0);
    auto widen = [&width](const std::vector<std::string>& row) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    auto line = [&os, &width](const std::vector<std::string>& row) {
        std::string out;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += row[i];
            if (i + 1 < row.size()) out.append(width[i] - row[i].size(), ' ');
        }
        out.erase(out.find_last_not_of(' ') + 1);
        os << out << "\n";
    };
    if (!t.header.empty()) {
        line(t.header);
        std::vector<std::string> rule;
        for (std::size_t i = 0; i < t.header.size(); ++i) rule.emplace_back(width[i], '-');
        line(rule);
    }
    for (const auto& r : t.rows) line(r);
}

} // namespace

std::string RunReport::render_text() const
{
    std::ostringstream os;
    os << "$";
    for (const auto& c : command) os << " " << c;
    os << "\n";
    for (const auto& in : inputs) os << "input " << in.label << " fnv1a64:" << in.digest << "\n";
    for (const auto& t : tables) {
        os << "\n";
        render_table(os, t);
    }
    if (!warnings.empty()) os << "\n";
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string RunReport::render_json() const
{
    nlohmann::ordered_json j;
    j["command"] = command;
    auto ins = nlohmann::ordered_json::array();
    for (const auto& in : inputs) ins.push_back({{"label", in.label}, {"fnv1a64", in.digest}});
    j["inputs"] = std::move(ins);
    j["results"] = results;
    j["warnings"] = warnings;
    j["exit_code"] = exit_code;
    return j.dump(2) + "\n";
}

} // namespace cfk
