#pragma once

#include "citerank/study.hpp"

#include <string>

namespace citerank {

/// Caption, column-aligned rows, then footnotes.
std::string render_text(const StudyTable& table);
/// Header and rows only.
std::string render_csv(const StudyTable& table);
/// {"caption", "columns", "rows", "footnotes"} with rows as arrays of cell strings.
std::string render_json(const StudyTable& table);

} // namespace citerank
