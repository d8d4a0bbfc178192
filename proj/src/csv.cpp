#include "citerank/csv.hpp"

#include "citerank/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace citerank::csv {

std::size_t Table::column(std::string_view name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw DataError(fmt::format("{}: missing column '{}'", source, name));
    }
    return static_cast<std::size_t>(it - header.begin());
}

Table parse(std::string_view text, std::string source) {
    if (text.starts_with("\xEF\xBB\xBF")) {
        text.remove_prefix(3);
    }
    Table table;
    table.source = std::move(source);

    std::vector<Record> records;
    Record current;
    std::string field;
    bool quoted = false;       // inside a quoted field
    bool was_quoted = false;   // current field started with a quote
    bool row_has_content = false;
    std::size_t line = 1;
    std::size_t quote_line = 0;
    current.line = 1;

    auto end_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
    };
    auto end_row = [&] {
        if (row_has_content) {
            end_field();
            records.push_back(std::move(current));
        }
        current = Record{};
        field.clear();
        was_quoted = false;
        row_has_content = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') {
                    ++line;
                }
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!field.empty() || was_quoted) {
                throw DataError(fmt::format("{}:{}: unexpected quote", table.source, line));
            }
            quoted = was_quoted = row_has_content = true;
            quote_line = line;
            if (current.fields.empty() && field.empty()) {
                current.line = line;
            }
            break;
        case ',':
            if (!row_has_content) {
                current.line = line;
            }
            row_has_content = true;
            end_field();
            break;
        case '\r':
            if (i + 1 < text.size() && text[i + 1] == '\n') {
                break;
            }
            [[fallthrough]];
        case '\n':
            end_row();
            ++line;
            current.line = line;
            break;
        default:
            if (was_quoted) {
                throw DataError(
                    fmt::format("{}:{}: text after closing quote", table.source, line));
            }
            if (!row_has_content) {
                current.line = line;
            }
            row_has_content = true;
            field.push_back(c);
        }
    }
    if (quoted) {
        throw DataError(fmt::format("{}:{}: unterminated quoted field", table.source, quote_line));
    }
    end_row();

    if (records.empty()) {
        throw DataError(fmt::format("{}: missing header row", table.source));
    }
    table.header = std::move(records.front().fields);
    records.erase(records.begin());
    table.records = std::move(records);
    return table;
}

Table read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError(fmt::format("cannot read '{}'", path.string()));
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path.string());
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_row(const Row& row) {
    if (row.size() == 1 && row[0].empty()) {
        return "\"\"\n"; // a bare empty line would read back as no record
    }
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += escape(row[i]);
    }
    out.push_back('\n');
    return out;
}

} // namespace citerank::csv
