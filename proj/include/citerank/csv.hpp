#pragma once

// Minimal RFC 4180 CSV codec. Fields containing a comma, double quote, CR or LF are
// written quoted with embedded quotes doubled; rows end with "\n". The reader accepts
// CRLF line endings, quoted fields spanning lines, a leading UTF-8 BOM, and skips
// blank lines.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace citerank::csv {

using Row = std::vector<std::string>;

struct Record {
    /// 1-based line on which the record starts.
    std::size_t line = 0;
    Row fields;
};

struct Table {
    std::string source;
    Row header;
    std::vector<Record> records;

    /// Index of a header column, or throws DataError.
    std::size_t column(std::string_view name) const;
};

/// Throws DataError with "<source>:<line>: ..." on unterminated quotes or stray quote
/// characters inside an unquoted field.
Table parse(std::string_view text, std::string source = "<memory>");
Table read_file(const std::filesystem::path& path);

std::string escape(std::string_view field);
std::string format_row(const Row& row);

} // namespace citerank::csv
