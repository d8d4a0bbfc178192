#include "citerank/report.hpp"

#include "citerank/csv.hpp"

#include <algorithm>

#include "json.hpp"

namespace citerank {

std::string render_text(const StudyTable& table) {
    std::vector<std::size_t> width(table.columns.size(), 0);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        width[c] = table.columns[c].size();
    }
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }

    std::string out;
    auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) {
                line += "  ";
            }
            line += cells[c];
            if (c + 1 < cells.size()) {
                line.append(width[c] - cells[c].size(), ' ');
            }
        }
        out += line;
        out += '\n';
    };

    if (!table.caption.empty()) {
        out += table.caption;
        out += '\n';
    }
    emit(table.columns);
    std::vector<std::string> rule;
    for (auto w : width) {
        rule.emplace_back(w, '-');
    }
    emit(rule);
    for (const auto& row : table.rows) {
        emit(row);
    }
    for (const auto& note : table.footnotes) {
        out += "* ";
        out += note;
        out += '\n';
    }
    return out;
}

std::string render_csv(const StudyTable& table) {
    std::string out = csv::format_row(table.columns);
    for (const auto& row : table.rows) {
        out += csv::format_row(row);
    }
    return out;
}

std::string render_json(const StudyTable& table) {
    nlohmann::ordered_json j;
    j["caption"] = table.caption;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    j["footnotes"] = table.footnotes;
    return j.dump(2) + "\n";
}

} // namespace citerank
