#pragma once

#include "citerank/error.hpp"
#include "citerank/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace citerank {

/// References made in `window.cite_year` to the journal's items published in the
/// source years. Use TimeWindow::all_prior() for the classic, age-uncapped count.
/// Throws ArgumentError when no document carries `journal` as its venue.
std::uint64_t total_cites(const CitationGraph& graph, std::string_view journal,
                          const TimeWindow& window);

/// Column sum of the matrix for `journal`.
std::uint64_t total_cites(const JournalCitationMatrix& matrix, std::string_view journal);

struct ImpactFactorInput {
    /// Citations in the cite year to items of the two source years.
    std::uint64_t cites_to_window = 0;
    /// Items published in the two source years.
    std::uint64_t items_in_window = 0;
};

/// Raised when the impact-factor denominator is zero. The journal has no defined IF.
class UndefinedImpactFactor : public DataError {
public:
    using DataError::DataError;
};

double impact_factor(const ImpactFactorInput& input);

struct ImpactFactorOptions {
    /// Document types counted in the denominator. Empty counts every item.
    std::vector<DocType> citable_types;
};

ImpactFactorInput impact_factor_input(const CitationGraph& graph, std::string_view journal,
                                      int cite_year, const ImpactFactorOptions& options = {});

/// Two-year impact factor over [cite_year - 2, cite_year - 1].
double impact_factor_from_graph(const CitationGraph& graph, std::string_view journal, int cite_year,
                                const ImpactFactorOptions& options = {});

struct JournalMeasures {
    std::string journal;
    std::uint64_t total_cites = 0;
    ImpactFactorInput window;
    /// Empty when the journal published nothing in the two-year window.
    std::optional<double> impact_factor;
};

/// TC (age-uncapped) and two-year IF for every venue in the metadata, ordered by journal id.
std::vector<JournalMeasures> journal_measures(const CitationGraph& graph, int cite_year,
                                              const ImpactFactorOptions& options = {});

/// Largest h such that at least h counts are >= h.
std::uint64_t h_index(std::span<const std::uint64_t> counts);

/// Descriptive statistics of the h-core, the h most cited publications.
struct HCoreSummary {
    std::uint64_t h = 0;
    std::uint64_t max_cites = 0;
    /// max - min over the h-core.
    std::uint64_t cites_range = 0;
    std::uint64_t total_cites = 0;
    std::size_t publications = 0;
};

HCoreSummary summarize_h_core(std::span<const std::uint64_t> counts);

/// Citation counts taken from graph in-degrees for every document listing `author`.
/// Author names are compared after whitespace and ASCII case normalisation.
std::vector<std::uint64_t> citation_profile_from_graph(const CitationGraph& graph,
                                                       std::string_view author);

} // namespace citerank
