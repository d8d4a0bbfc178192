#include "citerank/journal_metrics.hpp"

#include "citerank/error.hpp"
#include "citerank/study.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <fmt/format.h>

namespace citerank {

namespace {

void require_venue(const CitationGraph& graph, std::string_view journal) {
    for (NodeIndex v = 0; v < graph.size(); ++v) {
        if (const auto* doc = graph.document(v); doc && doc->venue == journal) {
            return;
        }
    }
    throw ArgumentError(fmt::format("unknown journal '{}'", journal));
}

// Visits every reference made in `cite_year` to an item published in the source
// years. Edges that could fall in the window but lack metadata are a data error.
template <class Visit>
void for_each_windowed_reference(const CitationGraph& graph, const TimeWindow& window,
                                 Visit visit) {
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
                throw DataError(fmt::format("missing metadata on edge '{}' -> '{}'", graph.id(u),
                                            graph.id(arc.node)));
            }
            visit(*citing, *cited, arc.multiplicity);
        }
    }
}

bool citable(const DocumentRecord& doc, const ImpactFactorOptions& options) {
    return options.citable_types.empty() ||
           std::find(options.citable_types.begin(), options.citable_types.end(), doc.doc_type) !=
               options.citable_types.end();
}

} // namespace

std::uint64_t total_cites(const CitationGraph& graph, std::string_view journal,
                          const TimeWindow& window) {
    validate(window);
    require_venue(graph, journal);
    std::uint64_t count = 0;
    for_each_windowed_reference(graph, window, [&](const auto&, const auto& cited, auto mult) {
        if (cited.venue == journal) {
            count += mult;
        }
    });
    return count;
}

std::uint64_t total_cites(const JournalCitationMatrix& matrix, std::string_view journal) {
    return matrix.citations_received(matrix.index_of(journal));
}

double impact_factor(const ImpactFactorInput& input) {
    if (input.items_in_window == 0) {
        throw UndefinedImpactFactor("impact factor undefined: no items in the window");
    }
    return static_cast<double>(input.cites_to_window) /
           static_cast<double>(input.items_in_window);
}

ImpactFactorInput impact_factor_input(const CitationGraph& graph, std::string_view journal,
                                      int cite_year, const ImpactFactorOptions& options) {
    require_venue(graph, journal);
    const auto window = TimeWindow::two_year(cite_year);
    ImpactFactorInput input;
    for (NodeIndex v = 0; v < graph.size(); ++v) {
        const auto* doc = graph.document(v);
        if (doc && doc->venue == journal && window.contains_source(doc->year) &&
            citable(*doc, options)) {
            ++input.items_in_window;
        }
    }
    for_each_windowed_reference(graph, window, [&](const auto&, const auto& cited, auto mult) {
        if (cited.venue == journal) {
            input.cites_to_window += mult;
        }
    });
    return input;
}

double impact_factor_from_graph(const CitationGraph& graph, std::string_view journal, int cite_year,
                                const ImpactFactorOptions& options) {
    const auto input = impact_factor_input(graph, journal, cite_year, options);
    if (input.items_in_window == 0) {
        throw UndefinedImpactFactor(fmt::format(
            "impact factor undefined for '{}' in {}: no items published in {}-{}", journal,
            cite_year, cite_year - 2, cite_year - 1));
    }
    return impact_factor(input);
}

std::vector<JournalMeasures> journal_measures(const CitationGraph& graph, int cite_year,
                                              const ImpactFactorOptions& options) {
    std::map<std::string, JournalMeasures, std::less<>> by_journal;
    const auto two_year = TimeWindow::two_year(cite_year);
    for (NodeIndex v = 0; v < graph.size(); ++v) {
        if (const auto* doc = graph.document(v)) {
            auto& m = by_journal[doc->venue];
            m.journal = doc->venue;
            if (two_year.contains_source(doc->year) && citable(*doc, options)) {
                ++m.window.items_in_window;
            }
        }
    }
    for_each_windowed_reference(graph, TimeWindow::all_prior(cite_year),
                                [&](const auto&, const auto& cited, auto mult) {
                                    auto& m = by_journal.at(cited.venue);
                                    m.total_cites += mult;
                                    if (two_year.contains_source(cited.year)) {
                                        m.window.cites_to_window += mult;
                                    }
                                });
    std::vector<JournalMeasures> out;
    out.reserve(by_journal.size());
    for (auto& [_, m] : by_journal) {
        if (m.window.items_in_window > 0) {
            m.impact_factor = impact_factor(m.window);
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::uint64_t h_index(std::span<const std::uint64_t> counts) {
    std::vector<std::uint64_t> sorted(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::uint64_t h = 0;
    while (h < sorted.size() && sorted[h] >= h + 1) {
        ++h;
    }
    return h;
}

HCoreSummary summarize_h_core(std::span<const std::uint64_t> counts) {
    std::vector<std::uint64_t> sorted(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    HCoreSummary s;
    s.publications = sorted.size();
    s.h = h_index(sorted);
    if (s.h == 0) {
        return s;
    }
    s.max_cites = sorted.front();
    s.cites_range = sorted.front() - sorted[s.h - 1];
    for (std::size_t i = 0; i < s.h; ++i) {
        s.total_cites += sorted[i];
    }
    return s;
}

std::vector<std::uint64_t> citation_profile_from_graph(const CitationGraph& graph,
                                                       std::string_view author) {
    const auto wanted = normalize_name(author);
    std::vector<std::uint64_t> profile;
    for (NodeIndex v = 0; v < graph.size(); ++v) {
        const auto* doc = graph.document(v);
        if (!doc) {
            continue;
        }
        const bool listed = std::any_of(doc->authors.begin(), doc->authors.end(),
                                        [&](const auto& a) { return normalize_name(a) == wanted; });
        if (listed) {
            profile.push_back(graph.in_degree(v));
        }
    }
    return profile;
}

} // namespace citerank
