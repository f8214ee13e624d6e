#include "liouk/report.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "liouk/errors.hpp"

namespace liouk {

namespace {

std::string scalar_cell(const nlohmann::json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();  // shortest round-trip for numbers
}

void flatten(const std::string& prefix, const nlohmann::json& j,
             std::map<std::string, std::string>& row, std::vector<std::string>& order) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(prefix.empty() ? k : prefix + "." + k, v, row, order);
    } else if (j.is_array()) {
        size_t i = 0;
        for (const auto& v : j) flatten(prefix + "." + std::to_string(i++), v, row, order);
    } else if (!j.is_null()) {
        if (row.find(prefix) == row.end()) order.push_back(prefix);
        row[prefix] = scalar_cell(j);
    }
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

} // namespace

bool SuiteReport::overall_pass() const {
    for (const auto& rec : checks)
        if (!rec.pass) return false;
    return true;
}

nlohmann::json to_json(const CheckRecord& rec) {
    return nlohmann::json{{"name", rec.name},       {"params", rec.params},
                          {"measured", rec.measured}, {"expected", rec.expected},
                          {"basis", rec.basis},     {"pass", rec.pass},
                          {"wall_ms", rec.wall_ms}};
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& rec : report.checks) checks.push_back(to_json(rec));
    nlohmann::json diags = nlohmann::json::array();
    for (const auto& rec : report.diagnostics) diags.push_back(to_json(rec));
    return nlohmann::json{{"version", report.version},
                          {"config", report.config},
                          {"checks", checks},
                          {"diagnostics", diags},
                          {"overall_pass", report.overall_pass()}};
}

std::string to_csv(const SuiteReport& report) {
    struct Row {
        std::string kind;
        const CheckRecord* rec;
    };
    std::vector<Row> rows;
    for (const auto& rec : report.checks) rows.push_back({"check", &rec});
    for (const auto& rec : report.diagnostics) rows.push_back({"diagnostic", &rec});

    std::vector<std::map<std::string, std::string>> cells(rows.size());
    std::vector<std::string> keys;
    for (size_t i = 0; i < rows.size(); ++i) {
        flatten("params", rows[i].rec->params, cells[i], keys);
        flatten("measured", rows[i].rec->measured, cells[i], keys);
        flatten("expected", rows[i].rec->expected, cells[i], keys);
    }
    // keys accumulated per row in first-seen order but shared: rebuild union
    std::vector<std::string> header;
    std::map<std::string, bool> seen;
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [k, v] : cells[i])
            if (!seen[k]) {
                seen[k] = true;
                header.push_back(k);
            }

    std::string out = "kind,name,basis,pass,wall_ms";
    for (const auto& k : header) out += "," + csv_escape(k);
    out += '\n';
    for (size_t i = 0; i < rows.size(); ++i) {
        const CheckRecord& rec = *rows[i].rec;
        out += rows[i].kind + "," + csv_escape(rec.name) + "," + csv_escape(rec.basis) +
               "," + (rec.pass ? "true" : "false") + "," +
               nlohmann::json(rec.wall_ms).dump();
        for (const auto& k : header) {
            out += ',';
            auto it = cells[i].find(k);
            if (it != cells[i].end()) out += csv_escape(it->second);
        }
        out += '\n';
    }
    out += "summary,overall,,";
    out += report.overall_pass() ? "true" : "false";
    out += ",";
    for (size_t j = 0; j < header.size(); ++j) out += ',';
    out += '\n';
    return out;
}

void write_report(const SuiteReport& report, const std::string& path,
                  const std::string& format) {
    std::string text;
    if (format == "json")
        text = to_json(report).dump(2) + "\n";
    else if (format == "csv")
        text = to_csv(report);
    else
        throw UsageError("unknown report format: " + format);

    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open output file: " + path);
    f << text;
}

nlohmann::json complex_json(cplx z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

} // namespace liouk
