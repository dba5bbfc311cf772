#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace jacklab::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

Json rounded(const Json& j, int precision, double chop) {
    if (j.is_number_float()) {
        const double x = j.get<double>();
        return std::abs(x) < chop ? 0.0 : round_significant(x, precision);
    }
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& x : j) out.push_back(rounded(x, precision, chop));
        return out;
    }
    if (j.is_object()) {
        Json out = Json::object();
        for (const auto& [k, v] : j.items()) out[k] = rounded(v, precision, chop);
        return out;
    }
    return j;
}

std::string csv_field(const Json& j, int precision, double chop) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    }
    if (j.is_number_float()) {
        char buf[64];
        const double x = j.get<double>();
        std::snprintf(buf, sizeof buf, "%.*g", precision, std::abs(x) < chop ? 0.0 : x);
        return buf;
    }
    if (j.is_null()) return "";
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    return j.dump();
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

double round_significant(double x, int precision) {
    if (!std::isfinite(x) || x == 0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return std::strtod(buf, nullptr);
}

void Report::add_row(std::vector<Json> row) {
    if (row.size() != columns_.size()) throw std::logic_error("report row width does not match the columns");
    rows_.push_back(std::move(row));
}

void Report::write(std::ostream& out, Format format, int precision, double chop) const {
    if (format == Format::Json) {
        Json doc = Json::object();
        doc["command"] = command_;
        doc["version"] = kVersion;
        doc["config"] = rounded(config_, precision, 0);
        doc["columns"] = columns_;
        Json rows = Json::array();
        for (const auto& r : rows_) rows.push_back(rounded(Json(r), precision, chop));
        doc["rows"] = std::move(rows);
        doc["summary"] = rounded(summary_, precision, chop);
        out << doc.dump(2) << "\n";
        return;
    }
    out << "# command: " << command_ << "\n";
    out << "# version: " << kVersion << "\n";
    out << "# config: " << rounded(config_, precision, 0).dump() << "\n";
    out << "# summary: " << rounded(summary_, precision, chop).dump() << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << "\n";
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i], precision, chop);
        out << "\n";
    }
}

}  // namespace jacklab::cli
