#include "citerank/ranking.hpp"

#include "citerank/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace citerank {

namespace kn = kernels;

namespace {

// Row v pulls from the nodes that cite v, weighted by multiplicity.
kn::CsrMatrix citations_csr(const CitationGraph& g) {
    kn::CsrMatrix m;
    m.rows = m.columns = g.size();
    m.offsets.reserve(g.size() + 1);
    for (NodeIndex v = 0; v < g.size(); ++v) {
        for (const auto& arc : g.citations(v)) {
            m.cols.push_back(arc.node);
            m.values.push_back(arc.multiplicity);
        }
        m.offsets.push_back(m.cols.size());
    }
    return m;
}

// Row u pulls from the nodes u cites.
kn::CsrMatrix references_csr(const CitationGraph& g) {
    kn::CsrMatrix m;
    m.rows = m.columns = g.size();
    m.offsets.reserve(g.size() + 1);
    for (NodeIndex u = 0; u < g.size(); ++u) {
        for (const auto& arc : g.references(u)) {
            m.cols.push_back(arc.node);
            m.values.push_back(arc.multiplicity);
        }
        m.offsets.push_back(m.cols.size());
    }
    return m;
}

// Transpose of the journal matrix: row j holds C[i][j] for every citing journal i.
kn::CsrMatrix received_csr(const JournalCitationMatrix& c) {
    kn::CsrMatrix m;
    m.rows = m.columns = c.size();
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (const auto count = c.count(i, j); count > 0) {
                m.cols.push_back(static_cast<std::uint32_t>(i));
                m.values.push_back(static_cast<double>(count));
            }
        }
        m.offsets.push_back(m.cols.size());
    }
    return m;
}

void check_tolerance(double tol, std::size_t max_iter) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw ArgumentError("tolerance must be positive");
    }
    if (max_iter == 0) {
        throw ArgumentError("max_iter must be positive");
    }
}

void normalize_l2(std::span<double> x, kn::Execution exec) {
    const double norm = kn::l2_norm(x, exec);
    if (norm > 0.0) {
        kn::scale(x, 1.0 / norm, exec);
    }
}

} // namespace

ScoreVector::ScoreVector(std::vector<std::string> ids, std::vector<double> values) {
    if (ids.size() != values.size()) {
        throw DataError("score vector: ids and values differ in length");
    }
    std::vector<std::size_t> order(ids.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ids[a] < ids[b]; });
    ids_.reserve(ids.size());
    values_.reserve(ids.size());
    for (auto k : order) {
        if (!ids_.empty() && ids_.back() == ids[k]) {
            throw DataError(fmt::format("score vector: duplicate id '{}'", ids[k]));
        }
        if (!std::isfinite(values[k])) {
            throw DataError(fmt::format("score vector: non-finite score for '{}'", ids[k]));
        }
        ids_.push_back(std::move(ids[k]));
        values_.push_back(values[k]);
    }
}

std::optional<double> ScoreVector::find(std::string_view id) const {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) {
        return std::nullopt;
    }
    return values_[static_cast<std::size_t>(it - ids_.begin())];
}

double ScoreVector::at(std::string_view id) const {
    if (auto v = find(id)) {
        return *v;
    }
    throw ArgumentError(fmt::format("no score for '{}'", id));
}

std::vector<std::pair<std::string, double>> ScoreVector::ranked() const {
    std::vector<std::pair<std::string, double>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out.emplace_back(ids_[i], values_[i]);
    }
    // ids_ is already ascending, so a stable sort on score keeps the id tie-break.
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

PageRankResult pagerank(const CitationGraph& graph, const PageRankParams& params) {
    if (graph.empty()) {
        throw DataError("pagerank: graph has no nodes");
    }
    if (!(params.damping > 0.0 && params.damping < 1.0)) {
        throw ArgumentError("pagerank: damping must lie in (0, 1)");
    }
    check_tolerance(params.tol, params.max_iter);

    const auto exec = params.execution;
    const auto n = graph.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    const double teleport = (1.0 - params.damping) * inv_n;
    const auto pull = citations_csr(graph);

    std::vector<double> inv_out(n, 0.0);
    std::vector<double> dangling(n, 0.0);
    for (NodeIndex u = 0; u < n; ++u) {
        if (const auto deg = graph.out_degree(u); deg > 0) {
            inv_out[u] = 1.0 / static_cast<double>(deg);
        } else {
            dangling[u] = 1.0;
        }
    }

    std::vector<double> rank(n, inv_n);
    std::vector<double> share(n);
    std::vector<double> next(n);
    SolverStatus status;
    while (status.iterations < params.max_iter) {
        for (std::size_t u = 0; u < n; ++u) {
            share[u] = rank[u] * inv_out[u];
        }
        const double dangling_mass = kn::dot(rank, dangling, exec);
        kn::multiply(pull, share, next, exec);
        const double base = teleport + params.damping * dangling_mass * inv_n;
        for (auto& v : next) {
            v = base + params.damping * v;
        }
        status.residual = kn::l1_distance(next, rank, exec);
        rank.swap(next);
        ++status.iterations;
        if (status.residual < params.tol) {
            status.converged = true;
            break;
        }
    }
    return {ScoreVector(graph.ids(), std::move(rank)), status};
}

HitsResult hits(const CitationGraph& graph, const HitsParams& params) {
    if (graph.edge_count() == 0) {
        throw DataError("hits: graph has no edges");
    }
    check_tolerance(params.tol, params.max_iter);

    const auto exec = params.execution;
    const auto n = graph.size();
    const auto cited_by = citations_csr(graph);
    const auto cites = references_csr(graph);

    std::vector<double> hub(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> authority(n, 0.0);
    std::vector<double> next_authority(n);
    std::vector<double> next_hub(n);
    SolverStatus status;
    while (status.iterations < params.max_iter) {
        kn::multiply(cited_by, hub, next_authority, exec);
        normalize_l2(next_authority, exec);
        kn::multiply(cites, next_authority, next_hub, exec);
        normalize_l2(next_hub, exec);

        status.residual = std::max(kn::l2_distance(next_authority, authority, exec),
                                   kn::l2_distance(next_hub, hub, exec));
        authority.swap(next_authority);
        hub.swap(next_hub);
        ++status.iterations;
        if (status.residual < params.tol) {
            status.converged = true;
            break;
        }
    }
    return {ScoreVector(graph.ids(), std::move(authority)), ScoreVector(graph.ids(), std::move(hub)),
            status};
}

PrunedMatrix prune_silent_journals(const JournalCitationMatrix& input,
                                   bool include_self_citations) {
    PrunedMatrix out{include_self_citations ? input : input.without_self_citations(), {}};
    while (true) {
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < out.matrix.size(); ++j) {
            if (out.matrix.references_given(j) > 0) {
                keep.push_back(j);
            } else {
                out.removed.push_back(out.matrix.journals()[j]);
            }
        }
        if (keep.size() == out.matrix.size()) {
            return out;
        }
        out.matrix = out.matrix.restricted_to(keep);
    }
}

InfluenceWeights influence_weights(const JournalCitationMatrix& input,
                                   const InfluenceParams& params) {
    check_tolerance(params.tol, params.max_iter);
    const auto matrix = params.include_self_citations ? input : input.without_self_citations();
    const auto n = matrix.size();
    if (n == 0) {
        throw DataError("influence: matrix has no journals");
    }

    std::vector<double> refs(n);
    std::vector<std::string> silent;
    for (std::size_t j = 0; j < n; ++j) {
        refs[j] = static_cast<double>(matrix.references_given(j));
        if (refs[j] == 0.0) {
            silent.push_back(matrix.journals()[j]);
        }
    }
    if (!silent.empty()) {
        throw DataError(fmt::format("influence: journals giving no references: {}",
                                    fmt::join(silent, ", ")));
    }

    const auto exec = params.execution;
    const auto received = received_csr(matrix);
    const std::vector<double> ones(n, 1.0);
    const auto& norm_weights =
        params.normalization == InfluenceNormalization::ReferenceWeightedMean ? refs : ones;
    const double norm_target = kn::sum(norm_weights, exec);
    auto normalize = [&](std::span<double> w) {
        const double current = kn::dot(w, norm_weights, exec);
        if (current > 0.0) {
            kn::scale(w, norm_target / current, exec);
        }
    };

    // The map F preserves sum_j r_j w_j, so it has spectral radius one. Averaging with
    // the identity keeps the same fixed points and damps the periodic modes that plain
    // iteration would cycle through on bipartite-like matrices.
    std::vector<double> w(n, 1.0);
    normalize(w);
    std::vector<double> image(n);
    SolverStatus status;
    while (true) {
        kn::multiply(received, w, image, exec);
        for (std::size_t j = 0; j < n; ++j) {
            image[j] /= refs[j];
        }
        status.residual = kn::linf_distance(w, image, exec);
        if (status.residual < params.tol) {
            status.converged = true;
            break;
        }
        if (status.iterations == params.max_iter) {
            break;
        }
        for (std::size_t j = 0; j < n; ++j) {
            w[j] = 0.5 * (w[j] + image[j]);
        }
        normalize(w);
        ++status.iterations;
    }
    return {ScoreVector(matrix.journals(), std::move(w)), status};
}

ScoreVector influence_per_publication(const JournalCitationMatrix& matrix,
                                      const ScoreVector& weights) {
    const auto n = matrix.size();
    if (weights.size() != n) {
        throw ArgumentError(fmt::format("influence per publication: {} weights for {} journals",
                                        weights.size(), n));
    }
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto value = weights.find(matrix.journals()[i]);
        if (!value) {
            throw ArgumentError(fmt::format("influence per publication: no weight for '{}'",
                                            matrix.journals()[i]));
        }
        w[i] = *value;
    }
    std::vector<double> per_pub(n);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += w[i] * static_cast<double>(matrix.count(i, j));
        }
        per_pub[j] = acc / static_cast<double>(matrix.pubs(j));
    }
    return ScoreVector(matrix.journals(), std::move(per_pub));
}

ScoreVector total_influence(const ScoreVector& per_publication,
                            const std::map<std::string, std::uint64_t, std::less<>>& pubs) {
    if (pubs.size() != per_publication.size()) {
        throw ArgumentError("total influence: key sets differ");
    }
    std::vector<double> totals;
    totals.reserve(pubs.size());
    for (std::size_t i = 0; i < per_publication.size(); ++i) {
        const auto& id = per_publication.ids()[i];
        const auto it = pubs.find(id);
        if (it == pubs.end()) {
            throw ArgumentError(fmt::format("total influence: no publication count for '{}'", id));
        }
        totals.push_back(per_publication.values()[i] * static_cast<double>(it->second));
    }
    return ScoreVector(per_publication.ids(), std::move(totals));
}

InfluenceResult influence(const JournalCitationMatrix& input, const InfluenceParams& params) {
    const auto matrix = params.include_self_citations ? input : input.without_self_citations();
    auto weights = influence_weights(matrix, params);
    auto per_pub = influence_per_publication(matrix, weights.weights);
    std::map<std::string, std::uint64_t, std::less<>> pubs;
    for (std::size_t j = 0; j < matrix.size(); ++j) {
        pubs.emplace(matrix.journals()[j], matrix.pubs(j));
    }
    auto total = total_influence(per_pub, pubs);
    return {std::move(weights.weights), std::move(per_pub), std::move(total), weights.status};
}

} // namespace citerank
