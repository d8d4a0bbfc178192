#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace citerank {

enum class DocType { Article, Review, Book, Proceedings, Other };

std::string_view to_string(DocType type);
/// Accepts the lower-case names written by to_string(); throws DataError otherwise.
DocType parse_doc_type(std::string_view text);

/// Bibliographic metadata for one document of a corpus.
struct DocumentRecord {
    std::string id;
    std::string venue;
    int year = 0;
    DocType doc_type = DocType::Article;
    /// Externally supplied citation count (Google-Scholar style), independent of the graph.
    std::uint64_t cites = 0;
    /// Byline order; position 1 is the primary author. May be empty when unknown.
    std::vector<std::string> authors;

    friend bool operator==(const DocumentRecord&, const DocumentRecord&) = default;
};

/// Throws DataError when the record violates its invariants.
void validate(const DocumentRecord& doc);

/// A citation: `citing` lists `cited` among its references.
struct Edge {
    std::string citing;
    std::string cited;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Citing year plus the inclusive range of publication years that may be cited.
struct TimeWindow {
    int cite_year = 0;
    int first_source_year = 0;
    int last_source_year = 0;

    bool contains_source(int year) const noexcept {
        return year >= first_source_year && year <= last_source_year;
    }

    /// The two years preceding `cite_year`, as used by the impact factor.
    static TimeWindow two_year(int cite_year);
    /// Every year up to and including `cite_year`; total cites has no age cap.
    static TimeWindow all_prior(int cite_year);

    friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

/// Throws ArgumentError unless first <= last <= cite_year.
void validate(const TimeWindow& window);

using NodeIndex = std::uint32_t;

/// Neighbour with the number of parallel citations to/from it.
struct Arc {
    NodeIndex node;
    std::uint32_t multiplicity;

    friend bool operator==(const Arc&, const Arc&) = default;
};

struct GraphOptions {
    bool allow_self_loops = false;
};

/// Immutable directed citation graph. Node ids are kept in lexicographic order, so
/// the node index of an id does not depend on the order the edges were supplied in.
class CitationGraph {
public:
    CitationGraph() = default;

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    /// Total edge multiplicity.
    std::uint64_t edge_count() const noexcept { return edge_count_; }

    const std::vector<std::string>& ids() const noexcept { return ids_; }
    const std::string& id(NodeIndex node) const { return ids_.at(node); }
    std::optional<NodeIndex> find(std::string_view id) const;
    /// Throws ArgumentError for unknown ids.
    NodeIndex index_of(std::string_view id) const;

    std::uint64_t in_degree(NodeIndex node) const { return in_degree_.at(node); }
    std::uint64_t out_degree(NodeIndex node) const { return out_degree_.at(node); }
    std::uint64_t in_degree(std::string_view id) const { return in_degree(index_of(id)); }
    std::uint64_t out_degree(std::string_view id) const { return out_degree(index_of(id)); }

    /// Distinct cited nodes of `node`, ascending.
    std::span<const Arc> references(NodeIndex node) const;
    /// Distinct citing nodes of `node`, ascending.
    std::span<const Arc> citations(NodeIndex node) const;

    const DocumentRecord* document(NodeIndex node) const;
    const DocumentRecord* document(std::string_view id) const;
    bool has_metadata() const noexcept { return !docs_.empty(); }

    /// Edge list in canonical order, each edge repeated by its multiplicity.
    std::vector<Edge> edges() const;
    /// Documents in id order.
    std::vector<DocumentRecord> documents() const;

    friend bool operator==(const CitationGraph&, const CitationGraph&) = default;

private:
    friend CitationGraph build_graph(std::span<const Edge>, std::span<const DocumentRecord>,
                                     GraphOptions);

    std::vector<std::string> ids_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Arc> out_arcs_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Arc> in_arcs_;
    std::vector<std::uint64_t> out_degree_;
    std::vector<std::uint64_t> in_degree_;
    std::vector<std::optional<DocumentRecord>> docs_;
    std::uint64_t edge_count_ = 0;
};

/// Nodes are the union of edge endpoints and document ids. Repeated edges become
/// multiplicity. Throws DataError on empty ids, duplicate documents, invalid
/// records, and on self-citations unless `options.allow_self_loops` is set.
CitationGraph build_graph(std::span<const Edge> edges, std::span<const DocumentRecord> docs = {},
                          GraphOptions options = {});

/// Square journal-to-journal reference counts: count(i, j) references from journal i to
/// journal j. The diagonal holds journal self-citations.
class JournalCitationMatrix {
public:
    JournalCitationMatrix() = default;
    /// `counts` is row-major n*n. Throws DataError on duplicate journals, shape
    /// mismatches, or publication counts below 1.
    JournalCitationMatrix(std::vector<std::string> journals, std::vector<std::uint64_t> counts,
                          std::vector<std::uint64_t> pubs,
                          std::optional<TimeWindow> window = std::nullopt);

    std::size_t size() const noexcept { return journals_.size(); }
    const std::vector<std::string>& journals() const noexcept { return journals_; }
    std::optional<std::size_t> find(std::string_view journal) const;
    std::size_t index_of(std::string_view journal) const;

    std::uint64_t count(std::size_t citing, std::size_t cited) const {
        return counts_[citing * size() + cited];
    }
    std::uint64_t pubs(std::size_t journal) const { return pubs_.at(journal); }
    const std::vector<std::uint64_t>& pubs() const noexcept { return pubs_; }
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    const std::optional<TimeWindow>& window() const noexcept { return window_; }

    /// References given by `journal`.
    std::uint64_t references_given(std::size_t journal) const;
    /// Citations received by `journal`.
    std::uint64_t citations_received(std::size_t journal) const;
    std::uint64_t total() const;

    /// Copy with the diagonal zeroed.
    JournalCitationMatrix without_self_citations() const;
    /// Sub-matrix over the given journal indices, in the given order.
    JournalCitationMatrix restricted_to(std::span<const std::size_t> keep) const;

    friend bool operator==(const JournalCitationMatrix&, const JournalCitationMatrix&) = default;

private:
    std::vector<std::string> journals_;
    std::vector<std::uint64_t> counts_;
    std::vector<std::uint64_t> pubs_;
    std::optional<TimeWindow> window_;
};

struct AggregationOptions {
    bool keep_self_citations = true;
};

struct JournalAggregation {
    JournalCitationMatrix matrix;
    /// Venues with no items published inside the source years.
    std::vector<std::string> dropped_journals;
    /// References made in the cite year to items in the source years.
    std::uint64_t in_window_references = 0;
    /// In-window references whose citing journal was dropped.
    std::uint64_t references_from_dropped = 0;
    /// Journal self-citations removed because keep_self_citations was off.
    std::uint64_t self_citations_removed = 0;
};

/// Counts every reference instance from items published in `window.cite_year` to items
/// published in the source years, grouped by venue. Throws DataError if an edge that may
/// fall inside the window has an endpoint without metadata.
JournalAggregation aggregate_to_journal_matrix(const CitationGraph& graph, const TimeWindow& window,
                                               AggregationOptions options = {});

} // namespace citerank
