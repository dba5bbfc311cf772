#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace jacklab::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

Format parse_format(const std::string& name);

// Tabular command output. Doubles are rounded to `precision` significant digits when written, and
// values with magnitude below `chop` (when positive) are written as 0.
class Report {
public:
    Report(std::string command, Json config) : command_(std::move(command)), config_(std::move(config)) {}

    void set_columns(std::vector<std::string> columns) { columns_ = std::move(columns); }
    // Throws std::logic_error when the row width differs from the column count.
    void add_row(std::vector<Json> row);
    Json& config() { return config_; }
    Json& summary() { return summary_; }

    void write(std::ostream& out, Format format, int precision, double chop = 0) const;

private:
    std::string command_;
    Json config_;
    std::vector<std::string> columns_;
    std::vector<std::vector<Json>> rows_;
    Json summary_ = Json::object();
};

double round_significant(double x, int precision);

}  // namespace jacklab::cli
