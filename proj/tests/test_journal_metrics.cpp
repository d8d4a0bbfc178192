#include "doctest.h"

#include "citerank/corpus.hpp"
#include "citerank/error.hpp"
#include "citerank/journal_metrics.hpp"
#include "support.hpp"

#include <random>

using namespace citerank;

namespace {

DocumentRecord doc(std::string id, std::string venue, int year,
                   DocType type = DocType::Article) {
    return {std::move(id), std::move(venue), year, type, 0, {}};
}

std::uint64_t brute_h(const std::vector<std::uint64_t>& counts) {
    std::uint64_t best = 0;
    for (std::uint64_t h = 0; h <= counts.size(); ++h) {
        std::uint64_t at_least = 0;
        for (auto c : counts) {
            at_least += c >= h;
        }
        if (at_least >= h) {
            best = h;
        }
    }
    return best;
}

// Cite year 1969, two-year window 1967-1968.
//   J: items j67, j68a, j68b (3 in window) + j60 (outside)
//   K: items k67 (1 in window)  Methods: m51 only (superclassic)
//   Citing items from 1969: c1, c2, c3 in venue X
CitationGraph tally_corpus() {
    std::vector<DocumentRecord> docs{
        doc("j67", "J", 1967),  doc("j68a", "J", 1968), doc("j68b", "J", 1968, DocType::Review),
        doc("j60", "J", 1960),  doc("k67", "K", 1967),  doc("m51", "Methods", 1951),
        doc("c1", "X", 1969),   doc("c2", "X", 1969),   doc("c3", "X", 1969),
        doc("c0", "X", 1968),
    };
    std::vector<Edge> edges{
        {"c1", "j67"}, {"c1", "j68a"}, {"c1", "m51"}, {"c1", "k67"},
        {"c2", "j67"}, {"c2", "j60"},  {"c2", "m51"}, {"c2", "j68b"},
        {"c3", "j68b"}, {"c3", "m51"}, {"c3", "m51"}, // repeated reference
        {"c0", "j67"}, {"c0", "m51"},                  // cited in 1968: outside
    };
    return build_graph(edges, docs);
}

} // namespace

TEST_CASE("impact factor arithmetic") {
    CHECK(impact_factor({120, 60}) == 2.0);
    CHECK(impact_factor({0, 40}) == 0.0);
    CHECK_THROWS_AS(impact_factor({5, 0}), UndefinedImpactFactor);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t c = rng() % 10000, a = rng() % 500 + 1;
        CHECK(impact_factor({2 * c, 2 * a}) == impact_factor({c, a}));
    }
}

TEST_CASE("impact factor from a hand-tallied corpus") {
    const auto g = tally_corpus();
    // J in window: cites from 1969 to j67 (2), j68a (1), j68b (2) = 5; items = 3.
    const auto in = impact_factor_input(g, "J", 1969);
    CHECK(in.cites_to_window == 5);
    CHECK(in.items_in_window == 3);
    CHECK(impact_factor_from_graph(g, "J", 1969) == 5.0 / 3.0);
    CHECK(impact_factor_from_graph(g, "K", 1969) == 1.0);

    ImpactFactorOptions articles;
    articles.citable_types = {DocType::Article};
    CHECK(impact_factor_input(g, "J", 1969, articles).items_in_window == 2);
    CHECK(impact_factor_input(g, "J", 1969, articles).cites_to_window == 5);

    CHECK_THROWS_AS(impact_factor_from_graph(g, "Methods", 1969), UndefinedImpactFactor);
    CHECK_THROWS_AS(impact_factor_from_graph(g, "Nope", 1969), ArgumentError);
}

TEST_CASE("a superclassic-only journal is excluded from IF but counts fully in TC") {
    const auto g = tally_corpus();
    const auto all = TimeWindow::all_prior(1969);
    CHECK(total_cites(g, "Methods", all) == 4);
    CHECK(total_cites(g, "J", all) == 6);
    CHECK(total_cites(g, "K", all) == 1);

    const auto measures = journal_measures(g, 1969);
    REQUIRE(measures.size() == 4);
    CHECK(measures[0].journal == "J");
    CHECK(measures[1].journal == "K");
    const auto& methods = measures[2];
    REQUIRE(methods.journal == "Methods");
    CHECK(methods.total_cites == 4);
    CHECK(methods.window.cites_to_window == 0);
    CHECK(methods.window.items_in_window == 0);
    CHECK_FALSE(methods.impact_factor);
    CHECK(*measures[0].impact_factor == 5.0 / 3.0);
    // Fourfold K's TC, yet no IF at all.
    CHECK(methods.total_cites == 4 * measures[1].total_cites);
    CHECK(*measures[1].impact_factor == 1.0);
}

TEST_CASE("total cites: windows, additivity and the matrix form") {
    const auto g = tally_corpus();
    CHECK(total_cites(g, "J", TimeWindow{1969, 1900, 1950}) == 0);
    CHECK(total_cites(g, "Methods", TimeWindow{1969, 1900, 1951}) == 4);
    // Additive over disjoint source ranges.
    for (const char* j : {"J", "K", "Methods"}) {
        const auto whole = total_cites(g, j, TimeWindow{1969, 1900, 1969});
        const auto left = total_cites(g, j, TimeWindow{1969, 1900, 1962});
        const auto right = total_cites(g, j, TimeWindow{1969, 1963, 1969});
        CHECK(whole == left + right);
    }
    CHECK_THROWS_AS(total_cites(g, "Nope", TimeWindow::two_year(1969)), ArgumentError);

    const JournalCitationMatrix m({"A", "B"}, {1, 7, 0, 2}, {1, 1});
    CHECK(total_cites(m, "B") == 9);
    CHECK(total_cites(m, "A") == 1);
}

TEST_CASE("total cites matches a brute-force edge filter on random corpora") {
    std::mt19937_64 rng(17);
    const char* venues[] = {"A", "B", "C"};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<DocumentRecord> docs;
        for (int i = 0; i < 30; ++i) {
            docs.push_back(doc("d" + std::to_string(i), venues[rng() % 3],
                               1960 + static_cast<int>(rng() % 10)));
        }
        std::vector<Edge> edges;
        for (int k = 0; k < 80; ++k) {
            const auto a = rng() % 30, b = rng() % 30;
            if (a != b) {
                edges.push_back({docs[a].id, docs[b].id});
            }
        }
        const auto g = build_graph(edges, docs);
        const TimeWindow w{1968, 1962, 1966};
        for (const char* v : venues) {
            std::uint64_t expected = 0;
            bool present = false;
            for (const auto& d : docs) {
                present |= d.venue == v;
            }
            if (!present) {
                continue;
            }
            for (const auto& e : edges) {
                const auto* from = g.document(e.citing);
                const auto* to = g.document(e.cited);
                expected += from->year == 1968 && to->venue == v && w.contains_source(to->year);
            }
            CHECK(total_cites(g, v, w) == expected);
        }
    }
}

TEST_CASE("a small review journal ranks higher by IF, a large journal by TC") {
    std::vector<DocumentRecord> docs;
    std::vector<Edge> edges;
    // Big: 40 items in 1967-68, each cited twice. Rev: 2 items, each cited 15 times.
    for (int i = 0; i < 40; ++i) {
        docs.push_back(doc("big" + std::to_string(i), "Big", 1967 + i % 2));
    }
    docs.push_back(doc("rev0", "Rev", 1967, DocType::Review));
    docs.push_back(doc("rev1", "Rev", 1968, DocType::Review));
    for (int c = 0; c < 30; ++c) {
        docs.push_back(doc("c" + std::to_string(c), "X", 1969));
    }
    for (int i = 0; i < 80; ++i) {
        edges.push_back({"c" + std::to_string(i % 30), "big" + std::to_string(i / 2)});
    }
    for (int c = 0; c < 30; ++c) {
        edges.push_back({"c" + std::to_string(c), "rev" + std::to_string(c % 2)});
    }
    const auto g = build_graph(edges, docs);
    const auto m = journal_measures(g, 1969);
    const auto& big = m[0];
    const auto& rev = m[1];
    REQUIRE(big.journal == "Big");
    REQUIRE(rev.journal == "Rev");
    CHECK(big.total_cites > rev.total_cites);
    CHECK(*rev.impact_factor > *big.impact_factor);
}

TEST_CASE("h-index examples") {
    CHECK(h_index(std::vector<std::uint64_t>{}) == 0);
    CHECK(h_index(std::vector<std::uint64_t>{0, 0, 0}) == 0);
    CHECK(h_index(std::vector<std::uint64_t>{10, 8, 5, 4, 3}) == 4);
    CHECK(h_index(std::vector<std::uint64_t>{3, 8, 4, 10, 5}) == 4);
    CHECK(h_index(std::vector<std::uint64_t>{100}) == 1);
    CHECK(h_index(std::vector<std::uint64_t>{5, 5, 5, 5, 5}) == 5);
}

TEST_CASE("h-index matches the definition, is order-free and monotone") {
    std::mt19937_64 rng(2005);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<std::uint64_t> counts(rng() % 60);
        const std::uint64_t cap = 1 + rng() % 120;
        for (auto& c : counts) {
            c = rng() % cap;
        }
        const auto h = h_index(counts);
        CHECK(h == brute_h(counts));
        CHECK(h <= counts.size());
        auto shuffled = counts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(h_index(shuffled) == h);
        if (!counts.empty()) {
            counts[rng() % counts.size()] += 1 + rng() % 5;
            CHECK(h_index(counts) >= h);
        }
    }
}

TEST_CASE("h-core summary") {
    const std::vector<std::uint64_t> p{10, 8, 5, 4, 3};
    const auto s = summarize_h_core(p);
    CHECK(s.h == 4);
    CHECK(s.max_cites == 10);
    CHECK(s.cites_range == 6);
    CHECK(s.total_cites == 27);
    CHECK(s.publications == 5);
    CHECK(summarize_h_core(std::vector<std::uint64_t>{0, 0}).h == 0);
}

TEST_CASE("Negishi-shaped profile fixture") {
    LoadReport report;
    const auto profile =
        read_profile(test_support::fixture("laureates/negishi_profile.csv"), RowPolicy(true, report));
    const auto s = summarize_h_core(profile);
    CHECK(s.h == 49);
    CHECK(s.max_cites == 797);
    CHECK(s.total_cites == 6692);
    CHECK(s.cites_range == 748);
}

TEST_CASE("citation profile from graph in-degrees") {
    std::vector<DocumentRecord> docs{
        {"p1", "J", 2000, DocType::Article, 0, {"Ann Lee", "Bo Kim"}},
        {"p2", "J", 2001, DocType::Article, 0, {"  ann   LEE "}},
        {"p3", "J", 2001, DocType::Article, 0, {"Bo Kim"}},
        {"q", "J", 2002, DocType::Article, 0, {}},
        {"r", "J", 2002, DocType::Article, 0, {}},
    };
    std::vector<Edge> edges{{"q", "p1"}, {"r", "p1"}, {"p3", "p1"}, {"q", "p2"}};
    const auto g = build_graph(edges, docs);
    auto p = citation_profile_from_graph(g, "Ann Lee");
    std::sort(p.begin(), p.end());
    CHECK(p == std::vector<std::uint64_t>{1, 3});
    CHECK(h_index(p) == 1);
    CHECK(citation_profile_from_graph(g, "Nobody").empty());
}
