#include "udlrc/spec_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace udlrc {

namespace {

[[noreturn]] void parse_error(std::size_t line, std::string_view field, const std::string& what) {
    std::string msg = "line " + std::to_string(line);
    if (!field.empty()) msg += ", field '" + std::string(field) + "'";
    throw Error(ErrorCode::ParseError, msg + ": " + what);
}

std::string_view strip(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

long long parse_int(std::string_view text, std::size_t line, std::string_view field) {
    text = strip(text);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        parse_error(line, field, "expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

int to_int(long long v, std::size_t line, std::string_view field) {
    if (v < 0 || v > 1'000'000) parse_error(line, field, "value " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

LocalityClass make_class(std::optional<int> r, std::optional<int> delta, std::optional<int> m, std::optional<int> n,
                         std::size_t line) {
    if (!r) parse_error(line, "r", "missing");
    if (!delta) parse_error(line, "delta", "missing");
    if (m.has_value() == n.has_value()) parse_error(line, "m", "give exactly one of m or n");
    if (m) return LocalityClass::with_groups(*r, *delta, *m);
    return {*n, *r, *delta};
}

LocalityClass parse_class_line(std::string_view rest, std::size_t line) {
    std::optional<int> r, delta, m, n;
    std::istringstream in{std::string(rest)};
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) parse_error(line, "class", "expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const int value = to_int(parse_int(std::string_view(token).substr(eq + 1), line, key), line, key);
        if (key == "r") r = value;
        else if (key == "delta") delta = value;
        else if (key == "m") m = value;
        else if (key == "n") n = value;
        else parse_error(line, key, "unknown class key");
    }
    return make_class(r, delta, m, n, line);
}

SpecFile parse_text(std::string_view text) {
    SpecFile out;
    bool have_q = false, have_k = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) parse_error(line_no, "", "expected 'key: value'");
        const std::string_view key = strip(line.substr(0, colon));
        const std::string_view value = line.substr(colon + 1);
        if (key == "q") {
            out.spec.q = to_int(parse_int(value, line_no, key), line_no, key);
            have_q = true;
        } else if (key == "t") {
            out.spec.t = to_int(parse_int(value, line_no, key), line_no, key);
        } else if (key == "k") {
            out.spec.k = to_int(parse_int(value, line_no, key), line_no, key);
            have_k = true;
        } else if (key == "seed") {
            const long long s = parse_int(value, line_no, key);
            if (s < 0) parse_error(line_no, key, "must be nonnegative");
            out.seed = static_cast<std::uint64_t>(s);
        } else if (key == "class") {
            out.spec.classes.push_back(parse_class_line(value, line_no));
        } else {
            parse_error(line_no, key, "unknown key");
        }
    }
    if (!have_q) parse_error(line_no, "q", "missing");
    if (!have_k) parse_error(line_no, "k", "missing");
    if (out.spec.classes.empty()) parse_error(line_no, "class", "no classes given");
    return out;
}

int json_int(const nlohmann::json& obj, const char* key, std::size_t item) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_integer()) {
        parse_error(item, key, "missing or not an integer");
    }
    return to_int(it->get<long long>(), item, key);
}

SpecFile parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "spec JSON must be an object");
    SpecFile out;
    out.spec.q = json_int(doc, "q", 0);
    out.spec.k = json_int(doc, "k", 0);
    if (doc.contains("t")) out.spec.t = json_int(doc, "t", 0);
    if (doc.contains("seed")) out.seed = static_cast<std::uint64_t>(json_int(doc, "seed", 0));
    const auto it = doc.find("classes");
    if (it == doc.end() || !it->is_array() || it->empty()) parse_error(0, "classes", "missing or empty array");
    std::size_t item = 0;
    for (const auto& c : *it) {
        ++item;
        if (!c.is_object()) parse_error(item, "classes", "entry is not an object");
        const auto opt = [&](const char* key) -> std::optional<int> {
            if (!c.contains(key)) return std::nullopt;
            return json_int(c, key, item);
        };
        out.spec.classes.push_back(make_class(opt("r"), opt("delta"), opt("m"), opt("n"), item));
    }
    return out;
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
    const std::string_view body = strip(text);
    if (!body.empty() && body.front() == '{') return parse_json(body);
    return parse_text(text);
}

SpecFile load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string canonical_spec(const LocalitySpec& spec) {
    std::string out = "q=" + std::to_string(spec.q);
    if (spec.t != 0) out += " t=" + std::to_string(spec.t);
    out += " k=" + std::to_string(spec.k) + " classes=[";
    for (std::size_t j = 0; j < spec.classes.size(); ++j) {
        const auto& c = spec.classes[j];
        if (j > 0) out += ",";
        out += "(n=" + std::to_string(c.n) + ",r=" + std::to_string(c.r) + ",delta=" + std::to_string(c.delta) + ")";
    }
    return out + "]";
}

std::string spec_digest(const LocalitySpec& spec) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const unsigned char c : canonical_spec(spec)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json elem_to_json(const ExtElem& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto c : x.coords()) arr.push_back(c);
    return arr;
}

ExtElem elem_from_json(const ExtField& field, const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "element must be an array of digits");
    std::vector<std::uint32_t> digits;
    for (const auto& d : j) {
        if (!d.is_number_unsigned()) throw Error(ErrorCode::ParseError, "digit must be a nonnegative integer");
        digits.push_back(d.get<std::uint32_t>());
    }
    return field.from_coords(digits);
}

nlohmann::json word_to_json(std::span<const ExtElem> word) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : word) arr.push_back(elem_to_json(x));
    return arr;
}

std::vector<ExtElem> word_from_json(const ExtField& field, const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "word must be an array of elements");
    std::vector<ExtElem> out;
    for (const auto& e : j) out.push_back(elem_from_json(field, e));
    return out;
}

std::vector<std::optional<ExtElem>> received_from_json(const ExtField& field, const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "received word must be an array");
    std::vector<std::optional<ExtElem>> out;
    for (const auto& e : j) {
        if (e.is_null()) out.emplace_back();
        else out.emplace_back(elem_from_json(field, e));
    }
    return out;
}

std::string format_elem(const ExtElem& x) {
    return elem_to_json(x).dump();
}

std::vector<ExtElem> random_message(const ExtField& field, std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t q = field.base().order();
    std::vector<ExtElem> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        ExtElem x(field.degree());
        for (std::size_t c = 0; c < field.degree(); ++c) x.set(c, static_cast<std::uint32_t>(rng() % q));
        out.push_back(x);
    }
    return out;
}

}  // namespace udlrc
