#include "poltel/app/table.hpp"

#include <charconv>
#include <cmath>
#include <locale>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace poltel::app {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("row width does not match the table header");
    }
    rows.push_back(std::move(row));
}

Cell optional_cell(const std::optional<double>& value) {
    if (!value) {
        return std::monostate{};
    }
    return *value;
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(12);
    os << (value == 0.0 ? 0.0 : value);
    return os.str();
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

struct CsvCell {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
};

struct JsonCell {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(double v) const {
        if (!std::isfinite(v)) {
            return format_number(v);
        }
        const auto text = format_number(v);
        double rounded = v;
        std::from_chars(text.data(), text.data() + text.size(), rounded);
        return rounded;
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
};

}  // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_escape(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += std::visit(CsvCell{}, row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    auto ordered = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[table.columns[i]] = std::visit(JsonCell{}, row[i]);
        }
        ordered.push_back(std::move(obj));
    }
    return ordered.dump(2) + '\n';
}

std::string render(const Table& table, OutputFormat format) {
    return format == OutputFormat::csv ? to_csv(table) : to_json(table);
}

}  // namespace poltel::app
