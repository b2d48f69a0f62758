#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sgb {

double db_to_linear(double db);
double linear_to_db(double linear);

/// Shortest round-trip decimal text for a double; locale independent.
std::string format_double(double v);

/// "lo:hi:steps" -> steps evenly spaced values in [lo, hi]; a bare number
/// gives a single point.
std::vector<double> parse_grid(std::string_view text);

/// Column-oriented CSV table with a header row, LF line endings.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
    const std::vector<double>& column(std::string_view name) const;
    bool has_column(std::string_view name) const;
    void add_column(std::string name, std::vector<double> values);
};

std::string to_csv_text(const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

/// 64-bit FNV-1a, used for config fingerprints in sidecars.
std::string fnv1a_hex(std::string_view text);

}  // namespace sgb
