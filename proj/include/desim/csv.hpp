#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace desim {

std::string strip(std::string_view s);
std::vector<std::string> split(std::string_view line, char delim);

long long parse_i64(std::string_view s);
double parse_f64(std::string_view s);

// Fixed-significant-digit formatting ("%.<digits>g"); deterministic for
// deterministic inputs, so identical runs produce identical files.
std::string fmt_g(double v, int digits = 10);

// Header-row CSV. No quoting: fields in this project never contain commas.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(std::string_view name) const;
    bool has_col(std::string_view name) const;
};

CsvTable read_csv_text(const std::string& text, const std::string& origin = "<memory>");
CsvTable read_csv(const std::string& path);
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

} // namespace desim
