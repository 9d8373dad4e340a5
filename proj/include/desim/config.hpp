#pragma once

#include <map>
#include <string>
#include <vector>

namespace desim {

// Minimal sectioned key/value config:
//   [section]
//   key = value          # numbers, true/false, "quoted" or bare strings
//   grid = [0.1, 0.2]
// Keys before any section header live in the "" section. Typed getters
// report the offending section.key on parse failures.
class Config {
public:
    static Config parse(const std::string& text,
                        const std::string& origin = "<config>");
    static Config load(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    // Two-argument forms are required keys: absence is an error naming
    // section.key. Three-argument forms fall back to the default.
    std::string str(const std::string& section, const std::string& key) const;
    std::string str(const std::string& section, const std::string& key,
                    const std::string& dflt) const;
    double f64(const std::string& section, const std::string& key) const;
    double f64(const std::string& section, const std::string& key,
               double dflt) const;
    long long i64(const std::string& section, const std::string& key) const;
    long long i64(const std::string& section, const std::string& key,
                  long long dflt) const;
    bool flag(const std::string& section, const std::string& key) const;
    bool flag(const std::string& section, const std::string& key,
              bool dflt) const;
    std::vector<double> f64_list(const std::string& section,
                                 const std::string& key) const;

    // Flag overrides: last write wins.
    void set(const std::string& section, const std::string& key,
             const std::string& value);

private:
    std::string raw(const std::string& section, const std::string& key) const;
    std::map<std::string, std::string> kv_; // "section.key" -> raw value
};

} // namespace desim
