#include "citerank/graph.hpp"

#include "citerank/error.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <utility>

#include <fmt/format.h>

namespace citerank {

namespace {

constexpr std::array<std::pair<DocType, std::string_view>, 5> kDocTypeNames{{
    {DocType::Article, "article"},
    {DocType::Review, "review"},
    {DocType::Book, "book"},
    {DocType::Proceedings, "proceedings"},
    {DocType::Other, "other"},
}};

// Builds one CSR side from (row, col) pairs sorted by (row, col).
void build_csr(const std::vector<std::pair<NodeIndex, NodeIndex>>& sorted_pairs, std::size_t n,
               std::vector<std::size_t>& offsets, std::vector<Arc>& arcs,
               std::vector<std::uint64_t>& degree) {
    offsets.assign(n + 1, 0);
    degree.assign(n, 0);
    arcs.clear();
    for (std::size_t k = 0; k < sorted_pairs.size();) {
        const auto [row, col] = sorted_pairs[k];
        std::size_t run = k;
        while (run < sorted_pairs.size() && sorted_pairs[run] == sorted_pairs[k]) {
            ++run;
        }
        const auto mult = run - k;
        if (mult > std::numeric_limits<std::uint32_t>::max()) {
            throw DataError("edge multiplicity overflow");
        }
        arcs.push_back({col, static_cast<std::uint32_t>(mult)});
        offsets[row + 1] += 1;
        degree[row] += mult;
        k = run;
    }
    for (std::size_t i = 0; i < n; ++i) {
        offsets[i + 1] += offsets[i];
    }
}

} // namespace

std::string_view to_string(DocType type) {
    for (const auto& [value, name] : kDocTypeNames) {
        if (value == type) {
            return name;
        }
    }
    return "other";
}

DocType parse_doc_type(std::string_view text) {
    for (const auto& [value, name] : kDocTypeNames) {
        if (name == text) {
            return value;
        }
    }
    throw DataError(fmt::format("unknown doc_type '{}'", text));
}

void validate(const DocumentRecord& doc) {
    if (doc.id.empty()) {
        throw DataError("document id must be nonempty");
    }
    if (doc.year <= 0) {
        throw DataError(fmt::format("document '{}': year must be positive", doc.id));
    }
    for (const auto& author : doc.authors) {
        if (author.empty()) {
            throw DataError(fmt::format("document '{}': empty author name", doc.id));
        }
    }
}

TimeWindow TimeWindow::two_year(int cite_year) {
    return {cite_year, cite_year - 2, cite_year - 1};
}

TimeWindow TimeWindow::all_prior(int cite_year) {
    return {cite_year, 1, cite_year};
}

void validate(const TimeWindow& window) {
    if (window.first_source_year > window.last_source_year ||
        window.last_source_year > window.cite_year) {
        throw ArgumentError(fmt::format("invalid time window: sources {}..{}, cite year {}",
                                        window.first_source_year, window.last_source_year,
                                        window.cite_year));
    }
}

std::optional<NodeIndex> CitationGraph::find(std::string_view id) const {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) {
        return std::nullopt;
    }
    return static_cast<NodeIndex>(it - ids_.begin());
}

NodeIndex CitationGraph::index_of(std::string_view id) const {
    if (auto node = find(id)) {
        return *node;
    }
    throw ArgumentError(fmt::format("unknown node '{}'", id));
}

std::span<const Arc> CitationGraph::references(NodeIndex node) const {
    return std::span(out_arcs_).subspan(out_offsets_.at(node),
                                        out_offsets_.at(node + 1) - out_offsets_[node]);
}

std::span<const Arc> CitationGraph::citations(NodeIndex node) const {
    return std::span(in_arcs_).subspan(in_offsets_.at(node),
                                       in_offsets_.at(node + 1) - in_offsets_[node]);
}

const DocumentRecord* CitationGraph::document(NodeIndex node) const {
    if (docs_.empty() || !docs_.at(node)) {
        return nullptr;
    }
    return &*docs_[node];
}

const DocumentRecord* CitationGraph::document(std::string_view id) const {
    const auto node = find(id);
    return node ? document(*node) : nullptr;
}

std::vector<Edge> CitationGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeIndex u = 0; u < size(); ++u) {
        for (const auto& arc : references(u)) {
            for (std::uint32_t m = 0; m < arc.multiplicity; ++m) {
                out.push_back({ids_[u], ids_[arc.node]});
            }
        }
    }
    return out;
}

std::vector<DocumentRecord> CitationGraph::documents() const {
    std::vector<DocumentRecord> out;
    for (const auto& doc : docs_) {
        if (doc) {
            out.push_back(*doc);
        }
    }
    return out;
}

CitationGraph build_graph(std::span<const Edge> edges, std::span<const DocumentRecord> docs,
                          GraphOptions options) {
    CitationGraph g;

    std::vector<std::string> ids;
    ids.reserve(edges.size() * 2 + docs.size());
    for (const auto& e : edges) {
        if (e.citing.empty() || e.cited.empty()) {
            throw DataError("edge endpoint ids must be nonempty");
        }
        if (!options.allow_self_loops && e.citing == e.cited) {
            throw DataError(fmt::format("self-citation '{}' -> '{}' rejected", e.citing, e.cited));
        }
        ids.push_back(e.citing);
        ids.push_back(e.cited);
    }
    for (const auto& d : docs) {
        validate(d);
        ids.push_back(d.id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() > std::numeric_limits<NodeIndex>::max()) {
        throw DataError("too many nodes");
    }
    g.ids_ = std::move(ids);
    const auto n = g.ids_.size();

    if (!docs.empty()) {
        g.docs_.resize(n);
        for (const auto& d : docs) {
            auto& slot = g.docs_[*g.find(d.id)];
            if (slot) {
                throw DataError(fmt::format("duplicate document id '{}'", d.id));
            }
            slot = d;
        }
    }

    std::vector<std::pair<NodeIndex, NodeIndex>> forward;
    forward.reserve(edges.size());
    for (const auto& e : edges) {
        forward.emplace_back(*g.find(e.citing), *g.find(e.cited));
    }
    std::vector<std::pair<NodeIndex, NodeIndex>> backward;
    backward.reserve(forward.size());
    for (const auto& [u, v] : forward) {
        backward.emplace_back(v, u);
    }
    std::sort(forward.begin(), forward.end());
    std::sort(backward.begin(), backward.end());

    build_csr(forward, n, g.out_offsets_, g.out_arcs_, g.out_degree_);
    build_csr(backward, n, g.in_offsets_, g.in_arcs_, g.in_degree_);
    g.edge_count_ = edges.size();
    return g;
}

JournalCitationMatrix::JournalCitationMatrix(std::vector<std::string> journals,
                                             std::vector<std::uint64_t> counts,
                                             std::vector<std::uint64_t> pubs,
                                             std::optional<TimeWindow> window)
    : journals_(std::move(journals)), counts_(std::move(counts)), pubs_(std::move(pubs)),
      window_(window) {
    const auto n = journals_.size();
    if (counts_.size() != n * n) {
        throw DataError(fmt::format("journal matrix: expected {} counts, got {}", n * n,
                                    counts_.size()));
    }
    if (pubs_.size() != n) {
        throw DataError(fmt::format("journal matrix: expected {} publication counts, got {}", n,
                                    pubs_.size()));
    }
    auto sorted = journals_;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        throw DataError(fmt::format("journal matrix: duplicate journal '{}'", *dup));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (journals_[j].empty()) {
            throw DataError("journal matrix: empty journal id");
        }
        if (pubs_[j] < 1) {
            throw DataError(
                fmt::format("journal matrix: journal '{}' has no publications", journals_[j]));
        }
    }
}

std::optional<std::size_t> JournalCitationMatrix::find(std::string_view journal) const {
    const auto it = std::find(journals_.begin(), journals_.end(), journal);
    if (it == journals_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - journals_.begin());
}

std::size_t JournalCitationMatrix::index_of(std::string_view journal) const {
    if (auto j = find(journal)) {
        return *j;
    }
    throw ArgumentError(fmt::format("unknown journal '{}'", journal));
}

std::uint64_t JournalCitationMatrix::references_given(std::size_t journal) const {
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < size(); ++j) {
        sum += count(journal, j);
    }
    return sum;
}

std::uint64_t JournalCitationMatrix::citations_received(std::size_t journal) const {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        sum += count(i, journal);
    }
    return sum;
}

std::uint64_t JournalCitationMatrix::total() const {
    std::uint64_t sum = 0;
    for (auto c : counts_) {
        sum += c;
    }
    return sum;
}

JournalCitationMatrix JournalCitationMatrix::without_self_citations() const {
    auto copy = *this;
    for (std::size_t j = 0; j < size(); ++j) {
        copy.counts_[j * size() + j] = 0;
    }
    return copy;
}

JournalCitationMatrix JournalCitationMatrix::restricted_to(std::span<const std::size_t> keep) const {
    std::vector<std::string> journals;
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> pubs;
    for (auto i : keep) {
        journals.push_back(journals_.at(i));
        pubs.push_back(pubs_[i]);
        for (auto j : keep) {
            counts.push_back(count(i, j));
        }
    }
    return JournalCitationMatrix(std::move(journals), std::move(counts), std::move(pubs), window_);
}

JournalAggregation aggregate_to_journal_matrix(const CitationGraph& graph, const TimeWindow& window,
                                               AggregationOptions options) {
    validate(window);

    std::map<std::string, std::uint64_t> pubs;
    for (NodeIndex v = 0; v < graph.size(); ++v) {
        if (const auto* doc = graph.document(v)) {
            auto& count = pubs[doc->venue];
            if (window.contains_source(doc->year)) {
                ++count;
            }
        }
    }

    JournalAggregation result;
    std::vector<std::string> journals;
    std::map<std::string, std::size_t, std::less<>> slot;
    for (const auto& [venue, count] : pubs) {
        if (count == 0) {
            result.dropped_journals.push_back(venue);
        } else {
            slot.emplace(venue, journals.size());
            journals.push_back(venue);
        }
    }

    const auto n = journals.size();
    std::vector<std::uint64_t> counts(n * n, 0);
    for (NodeIndex u = 0; u < graph.size(); ++u) {
        const auto* citing = graph.document(u);
        if (citing && citing->year != window.cite_year) {
            continue;
        }
        for (const auto& arc : graph.references(u)) {
            const auto* cited = graph.document(arc.node);
            if (cited && !window.contains_source(cited->year)) {
                continue;
            }
            if (!citing || !cited) {
                throw DataError(fmt::format("missing metadata for '{}' on edge '{}' -> '{}'",
                                            citing ? graph.id(arc.node) : graph.id(u),
                                            graph.id(u), graph.id(arc.node)));
            }
            result.in_window_references += arc.multiplicity;
            const auto row = slot.find(citing->venue);
            if (row == slot.end()) {
                result.references_from_dropped += arc.multiplicity;
                continue;
            }
            const auto col = slot.at(cited->venue);
            if (row->second == col && !options.keep_self_citations) {
                result.self_citations_removed += arc.multiplicity;
                continue;
            }
            counts[row->second * n + col] += arc.multiplicity;
        }
    }

    std::vector<std::uint64_t> pub_counts;
    pub_counts.reserve(n);
    for (const auto& j : journals) {
        pub_counts.push_back(pubs.at(j));
    }
    result.matrix =
        JournalCitationMatrix(std::move(journals), std::move(counts), std::move(pub_counts), window);
    return result;
}

} // namespace citerank
