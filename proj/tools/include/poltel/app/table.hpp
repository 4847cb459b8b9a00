#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "poltel/app/config.hpp"

namespace poltel::app {

/// Empty cells render as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::string, double, long long>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

Cell optional_cell(const std::optional<double>& value);

/// 12 significant digits, '.' decimal separator, locale independent.
std::string format_number(double value);

std::string to_csv(const Table& table);
/// Array of row objects; numbers carry the same 12-digit values as the CSV.
std::string to_json(const Table& table);
std::string render(const Table& table, OutputFormat format);

}  // namespace poltel::app
