#include "desim/config.hpp"

#include "desim/common.hpp"
#include "desim/csv.hpp"

namespace desim {

namespace {

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

// Drops an unquoted trailing comment.
std::string strip_comment(const std::string& s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        else if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

} // namespace

Config Config::parse(const std::string& text, const std::string& origin) {
    Config cfg;
    std::string section;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(
            pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        line = strip(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(origin, ":", lineno, ": malformed section header");
            section = strip(line.substr(1, line.size() - 2));
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(origin, ":", lineno, ": expected key = value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty()) fail(origin, ":", lineno, ": empty key");
        cfg.kv_[section + "." + key] = value;
    }
    return cfg;
}

Config Config::load(const std::string& path) {
    return parse(read_file(path), path);
}

bool Config::has(const std::string& section, const std::string& key) const {
    return kv_.count(section + "." + key) != 0;
}

std::string Config::raw(const std::string& section,
                        const std::string& key) const {
    return kv_.at(section + "." + key);
}

namespace {

[[noreturn]] void missing(const std::string& section, const std::string& key) {
    fail("config ", section, ".", key, ": required key missing");
}

} // namespace

std::string Config::str(const std::string& section,
                        const std::string& key) const {
    if (!has(section, key)) missing(section, key);
    return unquote(raw(section, key));
}

std::string Config::str(const std::string& section, const std::string& key,
                        const std::string& dflt) const {
    if (!has(section, key)) return dflt;
    return unquote(raw(section, key));
}

double Config::f64(const std::string& section, const std::string& key) const {
    if (!has(section, key)) missing(section, key);
    return f64(section, key, 0.0);
}

double Config::f64(const std::string& section, const std::string& key,
                   double dflt) const {
    if (!has(section, key)) return dflt;
    const std::string v = raw(section, key);
    try {
        return parse_f64(v);
    } catch (const Error&) {
        fail("config ", section, ".", key, ": '", v, "' is not a number");
    }
}

long long Config::i64(const std::string& section,
                      const std::string& key) const {
    if (!has(section, key)) missing(section, key);
    return i64(section, key, 0);
}

long long Config::i64(const std::string& section, const std::string& key,
                      long long dflt) const {
    if (!has(section, key)) return dflt;
    const std::string v = raw(section, key);
    try {
        return parse_i64(v);
    } catch (const Error&) {
        fail("config ", section, ".", key, ": '", v, "' is not an integer");
    }
}

bool Config::flag(const std::string& section, const std::string& key) const {
    if (!has(section, key)) missing(section, key);
    return flag(section, key, false);
}

bool Config::flag(const std::string& section, const std::string& key,
                  bool dflt) const {
    if (!has(section, key)) return dflt;
    const std::string v = raw(section, key);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail("config ", section, ".", key, ": '", v, "' is not a boolean");
}

std::vector<double> Config::f64_list(const std::string& section,
                                     const std::string& key) const {
    if (!has(section, key)) return {};
    std::string v = raw(section, key);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        fail("config ", section, ".", key, ": expected [a, b, ...]");
    v = v.substr(1, v.size() - 2);
    std::vector<double> out;
    for (const std::string& part : split(v, ',')) {
        const std::string p = strip(part);
        if (p.empty()) continue;
        try {
            out.push_back(parse_f64(p));
        } catch (const Error&) {
            fail("config ", section, ".", key, ": '", p, "' is not a number");
        }
    }
    return out;
}

void Config::set(const std::string& section, const std::string& key,
                 const std::string& value) {
    kv_[section + "." + key] = value;
}

} // namespace desim
