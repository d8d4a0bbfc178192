#include "citerank/corpus.hpp"

#include "citerank/csv.hpp"
#include "citerank/error.hpp"

#include <charconv>
#include <ostream>
#include <set>

#include <fmt/format.h>

namespace citerank {

namespace {

// Thrown inside row handlers; converted into a RowPolicy rejection.
struct RowError {
    std::string message;
};

struct LinedEdge {
    std::string file;
    std::size_t line = 0;
    Edge edge;
};

template <class Int>
Int parse_int(const std::string& text, std::string_view what) {
    Int value{};
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw RowError{fmt::format("invalid {} '{}'", what, text)};
    }
    return value;
}

double parse_real(const std::string& text, std::string_view what) {
    double value = 0.0;
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw RowError{fmt::format("invalid {} '{}'", what, text)};
    }
    return value;
}

bool parse_flag(const std::string& text) {
    if (text == "1" || text == "true" || text == "yes") {
        return true;
    }
    if (text == "0" || text == "false" || text == "no") {
        return false;
    }
    throw RowError{fmt::format("invalid indexed flag '{}'", text)};
}

void require_header(const csv::Table& table, std::initializer_list<std::string_view> expected) {
    csv::Row want(expected.begin(), expected.end());
    if (table.header != want) {
        throw DataError(fmt::format("{}: expected header '{}'", table.source,
                                    fmt::join(expected, ",")));
    }
}

// Runs `handle` on each record with the right width, routing failures through the policy.
template <class Handle>
void for_each_row(const csv::Table& table, RowPolicy& policy, Handle handle) {
    for (const auto& rec : table.records) {
        try {
            if (rec.fields.size() != table.header.size()) {
                throw RowError{fmt::format("expected {} fields, found {}", table.header.size(),
                                           rec.fields.size())};
            }
            handle(rec.fields);
        } catch (const RowError& e) {
            policy.reject(table.source, rec.line, e.message);
        } catch (const DataError& e) {
            policy.reject(table.source, rec.line, e.what());
        }
    }
}

std::vector<std::string> split_authors(const std::string& text) {
    std::vector<std::string> authors;
    if (text.empty()) {
        return authors;
    }
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(';', start);
        auto name = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        const auto first = name.find_first_not_of(" \t");
        const auto last = name.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw RowError{"empty author name"};
        }
        authors.push_back(name.substr(first, last - first + 1));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    return authors;
}

std::vector<LinedEdge> read_edge_rows(const std::filesystem::path& path, RowPolicy policy) {
    const auto table = csv::read_file(path);
    require_header(table, {"citing_id", "cited_id"});
    std::vector<LinedEdge> edges;
    for (const auto& rec : table.records) {
        if (rec.fields.size() != 2) {
            policy.reject(table.source, rec.line,
                          fmt::format("expected 2 fields, found {}", rec.fields.size()));
        } else if (rec.fields[0].empty() || rec.fields[1].empty()) {
            policy.reject(table.source, rec.line, "empty node id");
        } else {
            edges.push_back({table.source, rec.line, {rec.fields[0], rec.fields[1]}});
        }
    }
    return edges;
}

} // namespace

void RowPolicy::reject(const std::string& file, std::size_t line, const std::string& message) {
    if (strict_) {
        throw DataError(fmt::format("{}:{}: {}", file, line, message));
    }
    report_->skipped.push_back({file, line, message});
}

std::vector<Edge> read_edges(const std::filesystem::path& path, RowPolicy policy) {
    std::vector<Edge> edges;
    for (auto& row : read_edge_rows(path, policy)) {
        edges.push_back(std::move(row.edge));
    }
    return edges;
}

std::vector<DocumentRecord> read_documents(const std::filesystem::path& path, RowPolicy policy) {
    const auto table = csv::read_file(path);
    require_header(table, {"id", "venue", "year", "doc_type", "cites", "authors"});
    std::vector<DocumentRecord> docs;
    std::set<std::string, std::less<>> seen;
    for_each_row(table, policy, [&](const csv::Row& f) {
        DocumentRecord doc;
        doc.id = f[0];
        doc.venue = f[1];
        doc.year = parse_int<int>(f[2], "year");
        doc.doc_type = parse_doc_type(f[3]);
        doc.cites = parse_int<std::uint64_t>(f[4], "cites");
        doc.authors = split_authors(f[5]);
        validate(doc);
        if (doc.venue.empty()) {
            throw RowError{"empty venue"};
        }
        if (seen.contains(doc.id)) {
            throw RowError{fmt::format("duplicate document id '{}'", doc.id)};
        }
        seen.insert(doc.id);
        docs.push_back(std::move(doc));
    });
    return docs;
}

JournalCitationMatrix read_journal_matrix(const std::filesystem::path& path) {
    const auto table = csv::read_file(path);
    const auto& h = table.header;
    if (h.size() < 2 || h.front() != "journal" || h.back() != "pubs") {
        throw DataError(fmt::format("{}: header must be journal,<journal ids...>,pubs", table.source));
    }
    std::vector<std::string> journals(h.begin() + 1, h.end() - 1);
    const auto n = journals.size();
    if (table.records.size() != n) {
        throw DataError(fmt::format("{}: {} rows for {} journals", table.source,
                                    table.records.size(), n));
    }
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> pubs;
    counts.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& rec = table.records[i];
        try {
            if (rec.fields.size() != n + 2) {
                throw RowError{fmt::format("expected {} fields, found {}", n + 2, rec.fields.size())};
            }
            if (rec.fields[0] != journals[i]) {
                throw RowError{fmt::format("row journal '{}' does not match column '{}'",
                                           rec.fields[0], journals[i])};
            }
            for (std::size_t j = 0; j < n; ++j) {
                counts.push_back(parse_int<std::uint64_t>(rec.fields[j + 1], "count"));
            }
            pubs.push_back(parse_int<std::uint64_t>(rec.fields[n + 1], "pubs"));
        } catch (const RowError& e) {
            throw DataError(fmt::format("{}:{}: {}", table.source, rec.line, e.message));
        }
    }
    return JournalCitationMatrix(std::move(journals), std::move(counts), std::move(pubs));
}

std::vector<RankRecord> read_rank_records(const std::filesystem::path& path, RowPolicy policy) {
    const auto table = csv::read_file(path);
    require_header(table, {"journal", "year", "indexed", "tc_rank", "if_rank"});
    std::vector<RankRecord> records;
    std::set<std::pair<std::string, int>> seen;
    for_each_row(table, policy, [&](const csv::Row& f) {
        RankRecord r;
        r.journal = f[0];
        r.year = parse_int<int>(f[1], "year");
        r.indexed = parse_flag(f[2]);
        if (!f[3].empty()) {
            r.tc_rank = parse_int<std::uint32_t>(f[3], "tc_rank");
        }
        if (!f[4].empty()) {
            r.if_rank = parse_int<std::uint32_t>(f[4], "if_rank");
        }
        validate(r);
        if (!seen.emplace(r.journal, r.year).second) {
            throw RowError{fmt::format("duplicate record for {}/{}", r.journal, r.year)};
        }
        records.push_back(std::move(r));
    });
    return records;
}

std::vector<std::uint64_t> read_profile(const std::filesystem::path& path, RowPolicy policy) {
    const auto table = csv::read_file(path);
    require_header(table, {"cites"});
    std::vector<std::uint64_t> counts;
    for_each_row(table, policy, [&](const csv::Row& f) {
        counts.push_back(parse_int<std::uint64_t>(f[0], "cites"));
    });
    return counts;
}

std::vector<CountEntry> read_counts(const std::filesystem::path& path, RowPolicy policy) {
    const auto table = csv::read_file(path);
    require_header(table, {"id", "count"});
    std::vector<CountEntry> counts;
    std::set<std::string, std::less<>> seen;
    for_each_row(table, policy, [&](const csv::Row& f) {
        if (f[0].empty()) {
            throw RowError{"empty id"};
        }
        if (!seen.insert(f[0]).second) {
            throw RowError{fmt::format("duplicate id '{}'", f[0])};
        }
        counts.push_back({f[0], parse_int<std::uint64_t>(f[1], "count")});
    });
    return counts;
}

std::pair<std::vector<double>, std::vector<double>> read_pairs(const std::filesystem::path& path,
                                                               RowPolicy policy) {
    const auto table = csv::read_file(path);
    require_header(table, {"x", "y"});
    std::vector<double> xs;
    std::vector<double> ys;
    for_each_row(table, policy, [&](const csv::Row& f) {
        const double x = parse_real(f[0], "x");
        const double y = parse_real(f[1], "y");
        xs.push_back(x);
        ys.push_back(y);
    });
    return {std::move(xs), std::move(ys)};
}

std::vector<SubjectEntry> read_subjects(const std::filesystem::path& path) {
    const auto table = csv::read_file(path);
    require_header(table, {"subject", "year", "author"});
    std::vector<SubjectEntry> subjects;
    std::set<std::string, std::less<>> seen;
    for (const auto& rec : table.records) {
        try {
            if (rec.fields.size() != 3) {
                throw RowError{"expected 3 fields"};
            }
            if (rec.fields[0].empty() || rec.fields[2].empty()) {
                throw RowError{"empty subject or author"};
            }
            if (!seen.insert(rec.fields[0]).second) {
                throw RowError{fmt::format("duplicate subject '{}'", rec.fields[0])};
            }
            subjects.push_back({rec.fields[0], parse_int<int>(rec.fields[1], "year"),
                                rec.fields[2]});
        } catch (const RowError& e) {
            throw DataError(fmt::format("{}:{}: {}", table.source, rec.line, e.message));
        }
    }
    return subjects;
}

std::vector<std::pair<std::string, std::string>> read_members(const std::filesystem::path& path) {
    const auto table = csv::read_file(path);
    const auto subject_col = table.column("subject");
    const auto doc_col = table.column("doc_id");
    std::vector<std::pair<std::string, std::string>> members;
    for (const auto& rec : table.records) {
        if (rec.fields.size() != table.header.size()) {
            throw DataError(fmt::format("{}:{}: expected {} fields", table.source, rec.line,
                                        table.header.size()));
        }
        members.emplace_back(rec.fields[subject_col], rec.fields[doc_col]);
    }
    return members;
}

CorpusBundle load_corpus(const CorpusPaths& paths, bool strict, GraphOptions options) {
    CorpusBundle bundle;
    RowPolicy policy(strict, bundle.report);

    std::vector<LinedEdge> rows;
    if (paths.edges) {
        rows = read_edge_rows(*paths.edges, policy);
    }
    if (paths.documents) {
        bundle.documents = read_documents(*paths.documents, policy);
    }
    std::set<std::string_view> doc_ids;
    for (const auto& d : bundle.documents) {
        doc_ids.insert(d.id);
    }

    std::vector<Edge> edges;
    edges.reserve(rows.size());
    for (auto& row : rows) {
        const auto& e = row.edge;
        if (!options.allow_self_loops && e.citing == e.cited) {
            policy.reject(row.file, row.line, fmt::format("self-citation '{}'", e.citing));
            continue;
        }
        if (paths.documents) {
            const auto* missing = !doc_ids.contains(e.citing) ? &e.citing
                                  : !doc_ids.contains(e.cited) ? &e.cited
                                                               : nullptr;
            if (missing) {
                policy.reject(row.file, row.line, fmt::format("unknown document id '{}'", *missing));
                continue;
            }
        }
        edges.push_back(std::move(row.edge));
    }

    bundle.graph = build_graph(edges, bundle.documents, options);
    if (paths.journal_matrix) {
        bundle.journal_matrix = read_journal_matrix(*paths.journal_matrix);
    }
    if (paths.rank_records) {
        bundle.rank_records = read_rank_records(*paths.rank_records, policy);
    }
    if (paths.profile) {
        bundle.profile = read_profile(*paths.profile, policy);
    }
    return bundle;
}

void write_edges(std::ostream& out, const CitationGraph& graph) {
    out << csv::format_row({"citing_id", "cited_id"});
    for (const auto& e : graph.edges()) {
        out << csv::format_row({e.citing, e.cited});
    }
}

void write_documents(std::ostream& out, std::span<const DocumentRecord> docs) {
    out << csv::format_row({"id", "venue", "year", "doc_type", "cites", "authors"});
    for (const auto& d : docs) {
        out << csv::format_row({d.id, d.venue, std::to_string(d.year),
                                std::string(to_string(d.doc_type)), std::to_string(d.cites),
                                fmt::format("{}", fmt::join(d.authors, ";"))});
    }
}

} // namespace citerank
