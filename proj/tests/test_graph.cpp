#include "doctest.h"

#include "citerank/error.hpp"
#include "citerank/graph.hpp"
#include "support.hpp"

#include <map>
#include <numeric>

using namespace citerank;

namespace {

DocumentRecord doc(std::string id, std::string venue, int year,
                   DocType type = DocType::Article) {
    return {std::move(id), std::move(venue), year, type, 0, {}};
}

} // namespace

TEST_CASE("build_graph: path of two edges") {
    const std::vector<Edge> edges{{"a", "b"}, {"b", "c"}};
    const auto g = build_graph(edges);
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.out_degree("a") == 1);
    CHECK(g.in_degree("c") == 1);
    CHECK(g.in_degree("a") == 0);
}

TEST_CASE("build_graph: self-loops are rejected unless allowed") {
    const std::vector<Edge> loop{{"a", "a"}};
    CHECK_THROWS_AS(build_graph(loop), DataError);
    const auto g = build_graph(loop, {}, GraphOptions{true});
    CHECK(g.in_degree("a") == 1);
    CHECK(g.out_degree("a") == 1);
}

TEST_CASE("build_graph: repeated edges become multiplicity") {
    const std::vector<Edge> edges{{"a", "b"}, {"a", "b"}, {"b", "a"}, {"a", "b"}};
    std::size_t expected = 0;
    for (const auto& e : edges) {
        expected += e == Edge{"a", "b"};
    }
    const auto g = build_graph(edges);
    const auto refs = g.references(g.index_of("a"));
    REQUIRE(refs.size() == 1);
    CHECK(refs[0].multiplicity == expected);
    CHECK(g.in_degree("b") == expected);
    CHECK(g.edge_count() == 4);
}

TEST_CASE("build_graph: empty input, documents only, and id errors") {
    CHECK(build_graph({}).empty());
    const std::vector<DocumentRecord> docs{doc("x", "J", 2001), doc("y", "J", 2002)};
    const auto g = build_graph({}, docs);
    CHECK(g.size() == 2);
    CHECK(g.out_degree("x") == 0);
    CHECK(g.in_degree("y") == 0);
    CHECK(g.document("y")->year == 2002);

    const std::vector<DocumentRecord> dup{doc("x", "J", 2001), doc("x", "K", 2001)};
    CHECK_THROWS_AS(build_graph({}, dup), DataError);
    const std::vector<Edge> blank{{"", "b"}};
    CHECK_THROWS_AS(build_graph(blank), DataError);
    CHECK_THROWS_AS(g.index_of("nope"), ArgumentError);
    CHECK_THROWS_AS(g.in_degree("nope"), ArgumentError);
}

TEST_CASE("document validation") {
    auto d = doc("p", "J", 0);
    CHECK_THROWS_AS(validate(d), DataError);
    d.year = 1999;
    d.authors = {"A", ""};
    CHECK_THROWS_AS(validate(d), DataError);
    d.authors = {};
    CHECK_NOTHROW(validate(d));
    CHECK(parse_doc_type("review") == DocType::Review);
    CHECK(to_string(DocType::Proceedings) == "proceedings");
    CHECK_THROWS_AS(parse_doc_type("Poster"), DataError);
}

TEST_CASE("star graph degrees") {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({"leaf" + std::to_string(i), "hub"});
    }
    const auto g = build_graph(edges);
    CHECK(g.in_degree("hub") == 5);
    CHECK(g.out_degree("leaf3") == 1);
    CHECK(g.out_degree("hub") == 0);
}

TEST_CASE("a node with 62804 inlinks") {
    std::vector<Edge> edges;
    edges.reserve(62804);
    for (int i = 0; i < 62804; ++i) {
        edges.push_back({"page" + std::to_string(i), "netscape"});
    }
    const auto g = build_graph(edges);
    CHECK(g.in_degree("netscape") == 62804);
    CHECK(g.citations(g.index_of("netscape")).size() == 62804);
}

TEST_CASE("degrees match an exhaustive edge scan on random graphs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::vector<Edge> edges;
        const auto g = test_support::random_graph(20, 0.2, seed, &edges);
        std::map<std::string, std::uint64_t> in, out;
        for (const auto& e : edges) {
            ++out[e.citing];
            ++in[e.cited];
        }
        std::uint64_t in_sum = 0, out_sum = 0;
        for (const auto& id : g.ids()) {
            CHECK(g.in_degree(id) == in[id]);
            CHECK(g.out_degree(id) == out[id]);
            in_sum += g.in_degree(id);
            out_sum += g.out_degree(id);
        }
        CHECK(in_sum == g.edge_count());
        CHECK(out_sum == g.edge_count());
    }
}

TEST_CASE("graph construction does not depend on edge order") {
    std::vector<Edge> edges;
    test_support::random_graph(25, 0.15, 99, &edges);
    // Duplicate a few edges so multiplicity is exercised too.
    edges.push_back(edges[0]);
    edges.push_back(edges[3]);
    const auto base = build_graph(edges);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(edges.begin(), edges.end(), rng);
        CHECK(build_graph(edges) == base);
    }
    auto canonical = base.edges();
    std::sort(edges.begin(), edges.end());
    CHECK(canonical == edges);
}

TEST_CASE("time windows") {
    const auto w = TimeWindow::two_year(1969);
    CHECK(w.first_source_year == 1967);
    CHECK(w.last_source_year == 1968);
    CHECK(w.contains_source(1967));
    CHECK_FALSE(w.contains_source(1969));
    CHECK_THROWS_AS(validate(TimeWindow{1969, 1968, 1970}), ArgumentError);
    CHECK_THROWS_AS(validate(TimeWindow{1969, 1968, 1967}), ArgumentError);
}

TEST_CASE("journal matrix validation and views") {
    CHECK_THROWS_AS(JournalCitationMatrix({"A", "A"}, {0, 0, 0, 0}, {1, 1}), DataError);
    CHECK_THROWS_AS(JournalCitationMatrix({"A", "B"}, {0, 0, 0}, {1, 1}), DataError);
    CHECK_THROWS_AS(JournalCitationMatrix({"A", "B"}, {0, 0, 0, 0}, {1, 0}), DataError);

    const JournalCitationMatrix m({"A", "B"}, {3, 1, 4, 2}, {10, 20});
    CHECK(m.count(0, 1) == 1);
    CHECK(m.references_given(0) == 4);
    CHECK(m.citations_received(0) == 7);
    CHECK(m.total() == 10);
    const auto z = m.without_self_citations();
    CHECK(z.count(0, 0) == 0);
    CHECK(z.count(1, 0) == 4);
    const std::vector<std::size_t> keep{1};
    const auto r = m.restricted_to(keep);
    CHECK(r.size() == 1);
    CHECK(r.count(0, 0) == 2);
    CHECK(r.pubs(0) == 20);
}

TEST_CASE("aggregation: one cross-reference") {
    const std::vector<DocumentRecord> docs{doc("a1", "A", 1969), doc("b1", "B", 1968)};
    const std::vector<Edge> edges{{"a1", "b1"}};
    // Both journals need items in the source years to stay in the matrix.
    auto with_source = docs;
    with_source.push_back(doc("a0", "A", 1967));
    const auto g = build_graph(edges, with_source);
    const auto agg = aggregate_to_journal_matrix(g, TimeWindow::two_year(1969));
    REQUIRE(agg.matrix.journals() == std::vector<std::string>{"A", "B"});
    CHECK(agg.matrix.counts() == std::vector<std::uint64_t>{0, 1, 0, 0});
    CHECK(agg.matrix.pubs() == std::vector<std::uint64_t>{1, 1});
    CHECK(agg.dropped_journals.empty());
    CHECK(agg.in_window_references == 1);
}

TEST_CASE("aggregation: nothing inside the window") {
    const std::vector<DocumentRecord> docs{doc("a1", "A", 1950), doc("b1", "B", 1940)};
    const std::vector<Edge> edges{{"a1", "b1"}};
    const auto g = build_graph(edges, docs);
    const auto agg = aggregate_to_journal_matrix(g, TimeWindow::two_year(1969));
    CHECK(agg.matrix.size() == 0);
    CHECK(agg.dropped_journals == std::vector<std::string>{"A", "B"});
    CHECK(agg.in_window_references == 0);
}

TEST_CASE("aggregation: missing metadata inside the window is an error") {
    const std::vector<DocumentRecord> docs{doc("a1", "A", 1969)};
    const std::vector<Edge> edges{{"a1", "ghost"}};
    const auto g = build_graph(edges, docs);
    CHECK_THROWS_AS(aggregate_to_journal_matrix(g, TimeWindow::two_year(1969)), DataError);
}

TEST_CASE("aggregation: 4-journal corpus against a hand tally") {
    // Cite year 1969, sources 1967-1968. Items per journal in the sources:
    // A: a67, a68  B: b67  C: c68  D: d67, d68, d68b
    std::vector<DocumentRecord> docs{
        doc("a67", "A", 1967), doc("a68", "A", 1968), doc("a69", "A", 1969),
        doc("b67", "B", 1967), doc("b69", "B", 1969), doc("c68", "C", 1968),
        doc("c69", "C", 1969), doc("d67", "D", 1967), doc("d68", "D", 1968),
        doc("d68b", "D", 1968), doc("d69", "D", 1969), doc("old", "B", 1950),
    };
    std::vector<Edge> edges{
        {"a69", "a67"}, {"a69", "b67"}, {"a69", "d68"}, {"a69", "old"},  // old is outside
        {"b69", "a68"}, {"b69", "a67"}, {"b69", "c68"},
        {"c69", "d67"}, {"c69", "d68b"}, {"c69", "c68"}, {"c69", "c68"},  // repeated
        {"d69", "a69"},                                                   // same-year target
        {"d69", "b67"}, {"d68", "a67"},                                   // citing 1968
    };
    const auto g = build_graph(edges, docs);
    const auto agg = aggregate_to_journal_matrix(g, TimeWindow::two_year(1969));
    // rows: citing A,B,C,D ; cols: cited A,B,C,D
    const std::vector<std::uint64_t> expected{
        1, 1, 0, 1,  //
        2, 0, 1, 0,  //
        0, 0, 2, 2,  //
        0, 1, 0, 0,
    };
    CHECK(agg.matrix.journals() == std::vector<std::string>{"A", "B", "C", "D"});
    CHECK(agg.matrix.counts() == expected);
    CHECK(agg.matrix.pubs() == std::vector<std::uint64_t>{2, 1, 1, 3});
    CHECK(agg.in_window_references == 11);
    CHECK(agg.matrix.total() == 11);

    const auto no_self =
        aggregate_to_journal_matrix(g, TimeWindow::two_year(1969), AggregationOptions{false});
    CHECK(no_self.self_citations_removed == 3);
    CHECK(no_self.matrix.total() == 8);
}

TEST_CASE("aggregation total equals a brute-force window filter on random corpora") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<DocumentRecord> docs;
        const char* venues[] = {"A", "B", "C", "D", "E"};
        for (int i = 0; i < 40; ++i) {
            docs.push_back(doc("d" + std::to_string(i), venues[rng() % 5],
                               1964 + static_cast<int>(rng() % 7)));
        }
        std::vector<Edge> edges;
        for (int k = 0; k < 120; ++k) {
            const auto a = rng() % 40, b = rng() % 40;
            if (a != b) {
                edges.push_back({docs[a].id, docs[b].id});
            }
        }
        const auto g = build_graph(edges, docs);
        const TimeWindow w = TimeWindow::two_year(1969);
        std::map<std::string, int> year;
        std::map<std::string, std::string> venue;
        for (const auto& d : docs) {
            year[d.id] = d.year;
            venue[d.id] = d.venue;
        }
        std::uint64_t in_window = 0;
        std::map<std::string, std::uint64_t> pubs;
        for (const auto& d : docs) {
            if (w.contains_source(d.year)) {
                ++pubs[d.venue];
            }
        }
        std::uint64_t from_kept = 0;
        for (const auto& e : edges) {
            if (year[e.citing] == 1969 && w.contains_source(year[e.cited])) {
                ++in_window;
                from_kept += pubs.count(venue[e.citing]) > 0;
            }
        }
        const auto agg = aggregate_to_journal_matrix(g, w);
        CHECK(agg.in_window_references == in_window);
        CHECK(agg.matrix.total() == from_kept);
        CHECK(agg.matrix.total() + agg.references_from_dropped == in_window);
    }
}
