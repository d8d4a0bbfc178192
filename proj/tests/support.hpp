#pragma once

#include "citerank/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace test_support {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(CITERANK_FIXTURE_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

inline std::string node_name(std::size_t i) {
    std::string s = std::to_string(i);
    return "v" + std::string(3 - std::min<std::size_t>(3, s.size()), '0') + s;
}

/// Random simple digraph on n nodes without self-loops. Every node appears in the graph
/// because each one is given as a document.
inline citerank::CitationGraph random_graph(std::size_t n, double p, std::uint64_t seed,
                                            std::vector<citerank::Edge>* out_edges = nullptr) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<citerank::Edge> edges;
    std::vector<citerank::DocumentRecord> docs;
    for (std::size_t i = 0; i < n; ++i) {
        docs.push_back({node_name(i), "J", 2000, citerank::DocType::Article, 0, {}});
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && coin(rng)) {
                edges.push_back({node_name(i), node_name(j)});
            }
        }
    }
    if (out_edges) {
        *out_edges = edges;
    }
    return citerank::build_graph(edges, docs);
}

inline std::vector<std::vector<double>> dense_adjacency(const citerank::CitationGraph& g) {
    std::vector<std::vector<double>> a(g.size(), std::vector<double>(g.size(), 0.0));
    for (citerank::NodeIndex i = 0; i < g.size(); ++i) {
        for (const auto& arc : g.references(i)) {
            a[i][arc.node] += arc.multiplicity;
        }
    }
    return a;
}

} // namespace test_support
