#pragma once

#include "winv/geometry.hpp"
#include "winv/rational.hpp"
#include "winv/session.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace winv {

constexpr int kTableCount = 20;

struct Table {
    int number = 0;
    std::string corner;
    std::vector<std::string> columns;
    std::vector<std::string> rows;
    // cells[row][column]; empty where the constraint count is negative
    std::vector<std::vector<std::optional<Rational>>> cells;
};

Table build_table(Session& s, int number);

std::string render_csv(const Table& t);
nlohmann::json render_json(const Table& t);
Table parse_csv(const std::string& text);
Table read_csv_file(const std::string& path);

struct Mismatch {
    std::string row, column, expected, actual;
};
std::vector<Mismatch> compare_tables(const Table& expected, const Table& actual);

std::string table_file_name(int number);

// the real blowup classes a table is built from; empty for other tables
std::vector<RealBlowupClass> blowup_classes(int number);

}  // namespace winv
