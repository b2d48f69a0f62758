#include "sgbounds/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sgb {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

namespace {

double parse_number(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() == 1) return {parse_number(parts[0])};
    if (parts.size() != 3) throw std::invalid_argument("grid must be 'lo:hi:steps' or a single value");
    const double lo = parse_number(parts[0]);
    const double hi = parse_number(parts[1]);
    const double steps_d = parse_number(parts[2]);
    if (!(steps_d >= 1.0) || steps_d != std::floor(steps_d)) throw std::invalid_argument("grid steps must be a positive integer");
    const auto steps = static_cast<std::size_t>(steps_d);
    if (steps == 1) return {lo};
    if (!(hi > lo)) throw std::invalid_argument("grid needs hi > lo");
    std::vector<double> out(steps);
    for (std::size_t i = 0; i < steps; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    return out;
}

const std::vector<double>& CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return columns[i];
    throw std::out_of_range("CSV has no column '" + std::string(name) + "'");
}

bool CsvTable::has_column(std::string_view name) const {
    for (const auto& h : header)
        if (h == name) return true;
    return false;
}

void CsvTable::add_column(std::string name, std::vector<double> values) {
    if (!columns.empty() && values.size() != rows()) throw std::invalid_argument("CSV column length mismatch");
    header.push_back(std::move(name));
    columns.push_back(std::move(values));
}

std::string to_csv_text(const CsvTable& table) {
    std::string out;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c) out += ',';
        out += table.header[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) out += ',';
            out += format_double(table.columns[c][r]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << to_csv_text(table);
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    CsvTable table;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty CSV: " + path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (auto h : split(line, ',')) table.header.emplace_back(h);
    table.columns.resize(table.header.size());
    while (std::getline(is, line)) {
        if (line.empty() || line == "\r") continue;
        const auto cells = split(line, ',');
        if (cells.size() != table.header.size()) throw std::runtime_error("ragged CSV row in " + path.string());
        for (std::size_t c = 0; c < cells.size(); ++c) table.columns[c].push_back(parse_number(cells[c]));
    }
    return table;
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace sgb
