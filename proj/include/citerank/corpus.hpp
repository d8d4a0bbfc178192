#pragma once

// Corpus file formats (UTF-8 CSV, header row required):
//
//   edges.csv           citing_id,cited_id
//   docs.csv            id,venue,year,doc_type,cites,authors     (authors ';'-separated)
//   journal_matrix.csv  journal,<journal ids...>,pubs
//   rank_records.csv    journal,year,indexed,tc_rank,if_rank     (empty rank = unranked)
//   profile.csv         cites
//
// Auxiliary inputs used by the CLI:
//
//   counts.csv          id,count
//   pairs.csv           x,y
//   subjects.csv        subject,year,author
//   members.csv         subject,doc_id   (further columns ignored)

#include "citerank/concentration.hpp"
#include "citerank/graph.hpp"
#include "citerank/study.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace citerank {

struct LoadIssue {
    std::string file;
    std::size_t line = 0;
    std::string message;
};

/// Rows skipped in non-strict mode.
struct LoadReport {
    std::vector<LoadIssue> skipped;
};

/// Row-level error policy: strict loading throws DataError naming the file and line;
/// lenient loading skips the row and records it.
class RowPolicy {
public:
    RowPolicy(bool strict, LoadReport& report) : strict_(strict), report_(&report) {}
    void reject(const std::string& file, std::size_t line, const std::string& message);
    bool strict() const noexcept { return strict_; }

private:
    bool strict_;
    LoadReport* report_;
};

struct CorpusPaths {
    std::optional<std::filesystem::path> edges;
    std::optional<std::filesystem::path> documents;
    std::optional<std::filesystem::path> journal_matrix;
    std::optional<std::filesystem::path> rank_records;
    std::optional<std::filesystem::path> profile;
};

struct CorpusBundle {
    CitationGraph graph;
    std::vector<DocumentRecord> documents;
    std::optional<JournalCitationMatrix> journal_matrix;
    std::vector<RankRecord> rank_records;
    std::optional<std::vector<std::uint64_t>> profile;
    LoadReport report;
};

/// Loads and cross-validates whichever files are given. With a documents file, every
/// edge endpoint must name a document.
CorpusBundle load_corpus(const CorpusPaths& paths, bool strict = true, GraphOptions options = {});

std::vector<Edge> read_edges(const std::filesystem::path& path, RowPolicy policy);
std::vector<DocumentRecord> read_documents(const std::filesystem::path& path, RowPolicy policy);
/// Structural errors in a matrix file are always fatal.
JournalCitationMatrix read_journal_matrix(const std::filesystem::path& path);
std::vector<RankRecord> read_rank_records(const std::filesystem::path& path, RowPolicy policy);
std::vector<std::uint64_t> read_profile(const std::filesystem::path& path, RowPolicy policy);
std::vector<CountEntry> read_counts(const std::filesystem::path& path, RowPolicy policy);
std::pair<std::vector<double>, std::vector<double>> read_pairs(const std::filesystem::path& path,
                                                               RowPolicy policy);

struct SubjectEntry {
    std::string name;
    int year = 0;
    std::string author;
};
std::vector<SubjectEntry> read_subjects(const std::filesystem::path& path);
/// (subject, doc_id) pairs in file order.
std::vector<std::pair<std::string, std::string>> read_members(const std::filesystem::path& path);

void write_edges(std::ostream& out, const CitationGraph& graph);
void write_documents(std::ostream& out, std::span<const DocumentRecord> docs);

} // namespace citerank
