#include "cfk/complex_io.hpp"

#include "cfk/errors.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cfk {

namespace {

using json = nlohmann::json;

void require_object(const json& j, std::string_view what, std::initializer_list<std::string_view> keys)
{
    if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (auto k : keys) known = known || it.key() == k;
        if (!known) throw ParseError(std::string(what) + " has unknown key \"" + it.key() + "\"");
    }
    for (auto k : keys)
        if (!j.contains(k)) throw ParseError(std::string(what) + " is missing \"" + std::string(k) + "\"");
}

template <typename Int>
Int get_int(const json& j, const char* key, std::string_view what)
{
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw ParseError(std::string(what) + "." + key + " must be an integer");
    if (v.is_number_unsigned()) {
        const auto x = v.get<std::uint64_t>();
        if (x > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
            throw ParseError(std::string(what) + "." + key + " is out of range");
        return static_cast<Int>(x);
    }
    const auto x = v.get<std::int64_t>();
    if (x < static_cast<std::int64_t>(std::numeric_limits<Int>::min()) ||
        x > static_cast<std::int64_t>(std::numeric_limits<Int>::max()))
        throw ParseError(std::string(what) + "." + key + " is out of range");
    return static_cast<Int>(x);
}

std::string get_string(const json& j, const char* key, std::string_view what)
{
    const auto& v = j.at(key);
    if (!v.is_string()) throw ParseError(std::string(what) + "." + key + " must be a string");
    return v.get<std::string>();
}

const json& get_array(const json& j, const char* key, std::string_view what)
{
    const auto& v = j.at(key);
    if (!v.is_array()) throw ParseError(std::string(what) + "." + key + " must be an array");
    return v;
}

} // namespace

ojson to_json(const PolyUW& p)
{
    ojson arr = ojson::array();
    for (const auto& m : p.terms()) arr.push_back({{"u", m.u_exp}, {"w", m.w_exp}});
    return arr;
}

PolyUW poly_uw_from_json(const json& j)
{
    if (!j.is_array()) throw ParseError("polynomial terms must be an array");
    std::vector<MonomialUW> terms;
    std::set<MonomialUW> seen;
    for (const auto& t : j) {
        require_object(t, "term", {"u", "w"});
        MonomialUW m{get_int<std::uint32_t>(t, "u", "term"), get_int<std::uint32_t>(t, "w", "term")};
        if (!seen.insert(m).second)
            throw ParseError("duplicate monomial u^" + std::to_string(m.u_exp) + " w^" +
                             std::to_string(m.w_exp) + " in terms");
        terms.push_back(m);
    }
    return PolyUW::from_terms(std::move(terms));
}

ojson to_json(const LaurentQT& p)
{
    ojson arr = ojson::array();
    for (const auto& t : p.terms()) arr.push_back({{"q", t.q}, {"t", t.t}, {"c", t.c}});
    return arr;
}

LaurentQT laurent_from_json(const json& j)
{
    if (!j.is_array()) throw ParseError("Laurent polynomial must be an array of {q, t, c}");
    std::set<std::pair<int, int>> seen;
    LaurentQT p;
    for (const auto& t : j) {
        require_object(t, "monomial", {"q", "t", "c"});
        const int q = get_int<int>(t, "q", "monomial");
        const int tt = get_int<int>(t, "t", "monomial");
        if (!seen.insert({q, tt}).second)
            throw ParseError("duplicate monomial q^" + std::to_string(q) + " t^" + std::to_string(tt));
        p.add_term(q, tt, get_int<std::int64_t>(t, "c", "monomial"));
    }
    return p;
}

ojson to_json(const FreeComplexUW& c)
{
    ojson gens = ojson::array();
    for (const auto& g : c.generators)
        gens.push_back({{"id", g.id}, {"maslov", g.maslov}, {"alexander", g.alexander}});
    ojson diff = ojson::array();
    for (std::size_t x = 0; x < c.size(); ++x)
        for (const auto& t : c.differential[x])
            diff.push_back({{"from", c.generators[x].id},
                            {"to", c.generators[t.target].id},
                            {"terms", to_json(t.coeff)}});
    ojson out;
    out["name"] = c.name;
    out["components"] = c.components;
    out["markings"] = c.markings;
    out["generators"] = std::move(gens);
    out["differential"] = std::move(diff);
    return out;
}

FreeComplexUW complex_from_json(const json& j)
{
    require_object(j, "complex", {"name", "components", "markings", "generators", "differential"});
    FreeComplexUW c;
    c.name = get_string(j, "name", "complex");
    c.components = get_int<int>(j, "components", "complex");
    c.markings = get_int<int>(j, "markings", "complex");
    if (c.components < 1 || c.markings < 1)
        throw ParseError("components and markings must be positive integers");

    // Duplicate ids are left for validate() to report; references resolve to the first.
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& g : get_array(j, "generators", "complex")) {
        require_object(g, "generator", {"id", "maslov", "alexander"});
        Generator gen{get_string(g, "id", "generator"), get_int<int>(g, "maslov", "generator"),
                      get_int<int>(g, "alexander", "generator")};
        if (gen.id.empty()) throw ParseError("generator id must be non-empty");
        // The separator may only join non-empty factors, as in ids written by tensor().
        const auto& id = gen.id;
        const std::string sep(1, kTensorSeparator);
        if (id.front() == kTensorSeparator || id.back() == kTensorSeparator ||
            id.find(sep + sep) != std::string::npos)
            throw ParseError("generator id \"" + id + "\" misuses the reserved character '" + sep + "'");
        index.try_emplace(gen.id, c.size());
        c.add_generator(std::move(gen));
    }

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : get_array(j, "differential", "complex")) {
        require_object(e, "differential entry", {"from", "to", "terms"});
        const auto from = get_string(e, "from", "differential entry");
        const auto to = get_string(e, "to", "differential entry");
        auto fi = index.find(from);
        auto ti = index.find(to);
        if (fi == index.end()) throw ParseError("differential refers to unknown generator " + from);
        if (ti == index.end()) throw ParseError("differential refers to unknown generator " + to);
        if (!seen.insert({fi->second, ti->second}).second)
            throw ParseError("duplicate differential entry " + from + " -> " + to);
        auto poly = poly_uw_from_json(e.at("terms"));
        if (poly.is_zero()) throw ParseError("differential entry " + from + " -> " + to + " has no terms");
        c.add_arrow(fi->second, ti->second, poly);
    }
    return c;
}

std::string dump_canonical(const ojson& j)
{
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path.string());
    out << text;
    if (!out) throw DomainError("write failed for " + path.string());
}

json read_json_file(const std::filesystem::path& path)
{
    const auto text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

FreeComplexUW load_complex(const std::filesystem::path& path)
{
    return complex_from_json(read_json_file(path));
}

void save_complex(const std::filesystem::path& path, const FreeComplexUW& c)
{
    write_text_file(path, dump_canonical(to_json(c)));
}

} // namespace cfk
