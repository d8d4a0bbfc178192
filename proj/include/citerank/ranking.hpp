#pragma once

// Recursive authority measures computed by power iteration: PageRank, HITS hubs and
// authorities, and journal influence weights.

#include "citerank/graph.hpp"
#include "citerank/kernels.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace citerank {

/// Scores keyed by id. Ids are stored in ascending order.
class ScoreVector {
public:
    ScoreVector() = default;
    /// Throws DataError on length mismatch, duplicate ids or non-finite scores.
    ScoreVector(std::vector<std::string> ids, std::vector<double> values);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    const std::vector<double>& values() const noexcept { return values_; }

    std::optional<double> find(std::string_view id) const;
    /// Throws ArgumentError for unknown ids.
    double at(std::string_view id) const;

    /// Descending by score; equal scores in ascending id order.
    std::vector<std::pair<std::string, double>> ranked() const;

    friend bool operator==(const ScoreVector&, const ScoreVector&) = default;

private:
    std::vector<std::string> ids_;
    std::vector<double> values_;
};

struct SolverStatus {
    std::size_t iterations = 0;
    /// Last measured change (PageRank: L1, HITS: L2) or fixed-point residual (influence: Linf).
    double residual = 0.0;
    bool converged = false;
};

struct PageRankParams {
    double damping = 0.85;
    double tol = 1e-10;
    std::size_t max_iter = 200;
    kernels::Execution execution{};
};

struct PageRankResult {
    ScoreVector scores;
    SolverStatus status;
};

/// Stationary distribution of the damped random surfer. Dangling nodes spread their
/// mass uniformly. Throws DataError on an empty graph and ArgumentError on bad params;
/// running out of iterations is reported through `status`.
PageRankResult pagerank(const CitationGraph& graph, const PageRankParams& params = {});

struct HitsParams {
    double tol = 1e-10;
    std::size_t max_iter = 1000;
    kernels::Execution execution{};
};

struct HitsResult {
    ScoreVector authority;
    ScoreVector hub;
    SolverStatus status;
};

/// Alternating authority/hub updates with L2 normalisation after each half-step.
/// Throws DataError when the graph has no edges.
HitsResult hits(const CitationGraph& graph, const HitsParams& params = {});

enum class InfluenceNormalization {
    /// sum_j r_j w_j = sum_j r_j, with r_j the references given by journal j.
    ReferenceWeightedMean,
    /// sum_j w_j = number of journals.
    UnweightedMean,
};

struct InfluenceParams {
    double tol = 1e-12;
    std::size_t max_iter = 10000;
    bool include_self_citations = true;
    InfluenceNormalization normalization = InfluenceNormalization::ReferenceWeightedMean;
    kernels::Execution execution{};
};

struct InfluenceWeights {
    ScoreVector weights;
    SolverStatus status;
};

struct PrunedMatrix {
    JournalCitationMatrix matrix;
    /// Removed journals in removal order.
    std::vector<std::string> removed;
};

/// Repeatedly drops journals that give no references to the remaining journals, which
/// leaves a matrix influence_weights() accepts (possibly empty).
PrunedMatrix prune_silent_journals(const JournalCitationMatrix& matrix,
                                   bool include_self_citations = true);

/// Fixed point of w_j = (sum_i w_i C[i][j]) / r_j. Throws DataError naming every
/// journal that gives no references.
InfluenceWeights influence_weights(const JournalCitationMatrix& matrix,
                                   const InfluenceParams& params = {});

/// Weighted citations received per publication: (sum_i w_i C[i][j]) / pubs_j.
ScoreVector influence_per_publication(const JournalCitationMatrix& matrix,
                                      const ScoreVector& weights);

/// Element-wise per_publication * pubs. Key sets must match exactly.
ScoreVector total_influence(const ScoreVector& per_publication,
                            const std::map<std::string, std::uint64_t, std::less<>>& pubs);

struct InfluenceResult {
    ScoreVector weight;
    ScoreVector per_publication;
    ScoreVector total;
    SolverStatus status;
};

/// Runs the three influence measures against one matrix.
InfluenceResult influence(const JournalCitationMatrix& matrix, const InfluenceParams& params = {});

} // namespace citerank
