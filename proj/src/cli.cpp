#include "citerank/cli.hpp"

#include "citerank/concentration.hpp"
#include "citerank/corpus.hpp"
#include "citerank/error.hpp"
#include "citerank/journal_metrics.hpp"
#include "citerank/ranking.hpp"
#include "citerank/report.hpp"
#include "citerank/study.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"

namespace citerank::cli {

namespace {

struct Options {
    // corpus inputs
    std::string edges;
    std::string docs;
    std::string matrix;
    std::string profile;
    std::string counts;
    std::string counts_b;
    std::string pairs;
    std::string ranks;
    std::string subjects;
    std::string members;
    std::string sample;
    bool lenient = false;
    bool allow_self_loops = false;

    // outputs
    std::string csv_out;
    std::string json_out;

    // solver settings
    double damping = 0.85;
    double tol = 0.0; // 0 selects the solver default
    std::size_t max_iter = 0;
    int threads = 0;
    std::size_t top = 0;

    // journal measures
    int cite_year = 0;
    std::optional<int> from_year;
    std::optional<int> to_year;
    std::string journal;
    std::vector<std::string> citable;
    bool zero_diagonal = false;
    bool prune = false;
    std::string normalization = "reference";

    std::string author;

    // concentration
    std::string by = "articles";
    std::optional<int> year;
    std::size_t zones = 3;
    std::vector<double> boundaries;
    std::vector<double> shares;
    std::vector<std::uint64_t> thresholds;

    std::string method = "both";

    // study
    std::size_t k = 3;
    std::vector<std::string> types{"article", "review"};
    std::optional<std::uint64_t> seed;
    std::string measure = "tc";
    std::string subset = "all";
};

struct Outcome {
    StudyTable table;
    bool converged = true;
};

std::string fixed(double value, int precision) {
    return fmt::format("{:.{}f}", value, precision);
}

std::string status_note(const SolverStatus& s, std::string_view norm) {
    return fmt::format("{} after {} iterations ({} change {:.3e})",
                       s.converged ? "converged" : "NOT CONVERGED", s.iterations, norm, s.residual);
}

kernels::Execution execution(const Options& o) {
    return kernels::Execution::with_threads(o.threads);
}

CorpusBundle load(const Options& o, std::ostream& err, bool need_edges) {
    CorpusPaths paths;
    if (!o.edges.empty()) {
        paths.edges = o.edges;
    } else if (need_edges) {
        throw ArgumentError("--edges is required");
    }
    if (!o.docs.empty()) {
        paths.documents = o.docs;
    }
    auto bundle = load_corpus(paths, !o.lenient, GraphOptions{o.allow_self_loops});
    for (const auto& issue : bundle.report.skipped) {
        err << fmt::format("warning: {}:{}: {} (row skipped)\n", issue.file, issue.line,
                           issue.message);
    }
    return bundle;
}

std::vector<std::pair<std::string, double>> limit(std::vector<std::pair<std::string, double>> rows,
                                                  std::size_t top) {
    if (top > 0 && rows.size() > top) {
        rows.resize(top);
    }
    return rows;
}

Outcome run_pagerank(const Options& o, std::ostream& err) {
    const auto corpus = load(o, err, true);
    PageRankParams params;
    params.damping = o.damping;
    if (o.tol > 0) {
        params.tol = o.tol;
    }
    if (o.max_iter > 0) {
        params.max_iter = o.max_iter;
    }
    params.execution = execution(o);
    const auto result = pagerank(corpus.graph, params);

    Outcome out;
    out.converged = result.status.converged;
    out.table.caption = "PageRank";
    out.table.columns = {"rank", "id", "score"};
    std::size_t rank = 0;
    for (const auto& [id, score] : limit(result.scores.ranked(), o.top)) {
        out.table.rows.push_back({std::to_string(++rank), id, fixed(score, 12)});
    }
    out.table.footnotes.push_back(fmt::format("{} nodes, {} edges, damping {}",
                                              corpus.graph.size(), corpus.graph.edge_count(),
                                              o.damping));
    out.table.footnotes.push_back(status_note(result.status, "L1"));
    return out;
}

Outcome run_hits(const Options& o, std::ostream& err) {
    const auto corpus = load(o, err, true);
    HitsParams params;
    if (o.tol > 0) {
        params.tol = o.tol;
    }
    if (o.max_iter > 0) {
        params.max_iter = o.max_iter;
    }
    params.execution = execution(o);
    const auto result = hits(corpus.graph, params);

    Outcome out;
    out.converged = result.status.converged;
    out.table.caption = "HITS authorities and hubs";
    out.table.columns = {"rank", "id", "authority", "hub"};
    std::size_t rank = 0;
    for (const auto& [id, score] : limit(result.authority.ranked(), o.top)) {
        out.table.rows.push_back(
            {std::to_string(++rank), id, fixed(score, 12), fixed(result.hub.at(id), 12)});
    }
    out.table.footnotes.push_back(status_note(result.status, "L2"));
    return out;
}

TimeWindow window_from(const Options& o) {
    if (o.cite_year <= 0) {
        throw ArgumentError("--cite-year is required");
    }
    auto w = TimeWindow::all_prior(o.cite_year);
    if (o.from_year) {
        w.first_source_year = *o.from_year;
    }
    if (o.to_year) {
        w.last_source_year = *o.to_year;
    }
    validate(w);
    return w;
}

Outcome run_influence(const Options& o, std::ostream& err) {
    JournalCitationMatrix matrix;
    std::vector<std::string> notes;
    if (!o.matrix.empty()) {
        matrix = read_journal_matrix(o.matrix);
    } else {
        const auto corpus = load(o, err, true);
        if (o.docs.empty()) {
            throw ArgumentError("influence needs --matrix or --edges with --docs");
        }
        auto agg = aggregate_to_journal_matrix(corpus.graph, window_from(o));
        matrix = std::move(agg.matrix);
        if (!agg.dropped_journals.empty()) {
            notes.push_back(fmt::format("journals without items in the window: {}",
                                        fmt::join(agg.dropped_journals, ", ")));
        }
    }

    InfluenceParams params;
    if (o.tol > 0) {
        params.tol = o.tol;
    }
    if (o.max_iter > 0) {
        params.max_iter = o.max_iter;
    }
    params.include_self_citations = !o.zero_diagonal;
    if (o.normalization == "unweighted") {
        params.normalization = InfluenceNormalization::UnweightedMean;
    }
    params.execution = execution(o);
    if (o.prune) {
        auto pruned = prune_silent_journals(matrix, params.include_self_citations);
        if (!pruned.removed.empty()) {
            notes.push_back(fmt::format("pruned journals giving no references: {}",
                                        fmt::join(pruned.removed, ", ")));
        }
        matrix = std::move(pruned.matrix);
    }

    const auto result = influence(matrix, params);
    Outcome out;
    out.converged = result.status.converged;
    out.table.caption = "Journal influence";
    out.table.columns = {"rank",         "journal",          "influence_weight",
                         "per_publication", "publications", "total_influence",
                         "references_given"};
    const auto effective = params.include_self_citations ? matrix : matrix.without_self_citations();
    std::size_t rank = 0;
    for (const auto& [id, weight] : limit(result.weight.ranked(), o.top)) {
        const auto j = effective.index_of(id);
        out.table.rows.push_back({std::to_string(++rank), id, fixed(weight, 6),
                                  fixed(result.per_publication.at(id), 6),
                                  std::to_string(effective.pubs(j)),
                                  fixed(result.total.at(id), 6),
                                  std::to_string(effective.references_given(j))});
    }
    for (auto& n : notes) {
        out.table.footnotes.push_back(std::move(n));
    }
    out.table.footnotes.push_back(fmt::format(
        "weights normalised so the {} mean is 1; self-citations {}",
        params.normalization == InfluenceNormalization::ReferenceWeightedMean ? "reference-weighted"
                                                                              : "unweighted",
        params.include_self_citations ? "kept" : "removed"));
    out.table.footnotes.push_back(status_note(result.status, "fixed-point Linf"));
    return out;
}

Outcome run_total_cites(const Options& o, std::ostream& err) {
    const auto corpus = load(o, err, true);
    const auto window = window_from(o);
    std::vector<CountEntry> counts;
    if (!o.journal.empty()) {
        counts.push_back({o.journal, total_cites(corpus.graph, o.journal, window)});
    } else {
        std::vector<std::string> venues;
        for (const auto& d : corpus.documents) {
            venues.push_back(d.venue);
        }
        std::sort(venues.begin(), venues.end());
        venues.erase(std::unique(venues.begin(), venues.end()), venues.end());
        for (const auto& v : venues) {
            counts.push_back({v, total_cites(corpus.graph, v, window)});
        }
    }
    Outcome out;
    out.table.caption =
        window.first_source_year == 1
            ? fmt::format("Total cites in {} to items of any year", window.cite_year)
            : fmt::format("Total cites in {} to items from {}-{}", window.cite_year,
                          window.first_source_year, window.last_source_year);
    out.table.columns = {"rank", "journal", "total_cites"};
    const RankedCounts ranked(std::move(counts));
    std::size_t rank = 0;
    for (const auto& e : ranked.items()) {
        out.table.rows.push_back({std::to_string(++rank), e.id, std::to_string(e.count)});
    }
    return out;
}

ImpactFactorOptions citable_options(const Options& o) {
    ImpactFactorOptions opts;
    for (const auto& t : o.citable) {
        opts.citable_types.push_back(parse_doc_type(t));
    }
    return opts;
}

Outcome run_impact_factor(const Options& o, std::ostream& err) {
    const auto corpus = load(o, err, true);
    if (o.cite_year <= 0) {
        throw ArgumentError("--cite-year is required");
    }
    const auto opts = citable_options(o);
    auto measures = journal_measures(corpus.graph, o.cite_year, opts);
    if (!o.journal.empty()) {
        std::erase_if(measures, [&](const auto& m) { return m.journal != o.journal; });
        if (measures.empty()) {
            throw ArgumentError(fmt::format("unknown journal '{}'", o.journal));
        }
        if (!measures.front().impact_factor) {
            // Surfaces the undefined-denominator error with its message.
            impact_factor_from_graph(corpus.graph, o.journal, o.cite_year, opts);
        }
    }
    std::vector<std::string> excluded;
    std::vector<const JournalMeasures*> ranked;
    for (const auto& m : measures) {
        if (m.impact_factor) {
            ranked.push_back(&m);
        } else {
            excluded.push_back(m.journal);
        }
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto* a, const auto* b) {
        return *a->impact_factor > *b->impact_factor;
    });

    Outcome out;
    out.table.caption = fmt::format("Impact factor {} (items from {}-{})", o.cite_year,
                                    o.cite_year - 2, o.cite_year - 1);
    out.table.columns = {"rank",          "journal",       "cites_to_window",
                         "items_in_window", "impact_factor", "total_cites"};
    std::size_t rank = 0;
    for (const auto* m : ranked) {
        out.table.rows.push_back({std::to_string(++rank), m->journal,
                                  std::to_string(m->window.cites_to_window),
                                  std::to_string(m->window.items_in_window),
                                  fixed(*m->impact_factor, 3), std::to_string(m->total_cites)});
    }
    for (const auto& m : measures) {
        if (!m.impact_factor) {
            out.table.rows.push_back({"-", m.journal, std::to_string(m.window.cites_to_window),
                                      "0", "n/a", std::to_string(m.total_cites)});
        }
    }
    if (!excluded.empty()) {
        out.table.footnotes.push_back(fmt::format(
            "no impact factor (no items in the two-year window): {}", fmt::join(excluded, ", ")));
    }
    return out;
}

Outcome run_h_index(const Options& o, std::ostream& err) {
    std::vector<std::uint64_t> profile;
    std::string source;
    if (!o.profile.empty()) {
        LoadReport report;
        profile = read_profile(o.profile, RowPolicy(!o.lenient, report));
        for (const auto& issue : report.skipped) {
            err << fmt::format("warning: {}:{}: {} (row skipped)\n", issue.file, issue.line,
                               issue.message);
        }
        source = o.profile;
    } else {
        if (o.author.empty()) {
            throw ArgumentError("h-index needs --profile or --edges/--docs with --author");
        }
        const auto corpus = load(o, err, true);
        profile = citation_profile_from_graph(corpus.graph, o.author);
        source = o.author;
    }
    const auto s = summarize_h_core(profile);
    Outcome out;
    out.table.caption = "h-index";
    out.table.columns = {"source",    "h_index",     "publications",
                         "max_cites", "cites_range", "h_core_cites"};
    out.table.rows.push_back({source, std::to_string(s.h), std::to_string(s.publications),
                              std::to_string(s.max_cites), std::to_string(s.cites_range),
                              std::to_string(s.total_cites)});
    out.table.footnotes.push_back("cites range is max - min over the h-core");
    return out;
}

std::vector<CountEntry> counts_from_docs(const Options& o, std::ostream& err) {
    const auto corpus = load(o, err, false);
    if (o.docs.empty()) {
        throw ArgumentError("need --counts or --docs");
    }
    std::map<std::string, std::uint64_t> by_venue;
    if (o.by == "tc") {
        const auto window = window_from(o);
        for (const auto& d : corpus.documents) {
            by_venue.try_emplace(d.venue, 0);
        }
        for (auto& [venue, count] : by_venue) {
            count = total_cites(corpus.graph, venue, window);
        }
    } else if (o.by == "articles" || o.by == "cites") {
        for (const auto& d : corpus.documents) {
            if (o.year && d.year != *o.year) {
                continue;
            }
            by_venue[d.venue] += o.by == "articles" ? 1 : d.cites;
        }
    } else {
        throw ArgumentError(fmt::format("--by must be articles, cites or tc, got '{}'", o.by));
    }
    std::vector<CountEntry> counts;
    for (auto& [venue, count] : by_venue) {
        counts.push_back({venue, count});
    }
    return counts;
}

RankedCounts ranked_counts(const Options& o, const std::string& path, std::ostream& err) {
    if (path.empty()) {
        return RankedCounts(counts_from_docs(o, err));
    }
    LoadReport report;
    auto counts = read_counts(path, RowPolicy(!o.lenient, report));
    for (const auto& issue : report.skipped) {
        err << fmt::format("warning: {}:{}: {} (row skipped)\n", issue.file, issue.line,
                           issue.message);
    }
    return RankedCounts(std::move(counts));
}

Outcome run_bradford(const Options& o, std::ostream& err) {
    const auto ranked = ranked_counts(o, o.counts, err);
    const auto partition = o.boundaries.empty() ? bradford_partition(ranked, o.zones)
                                                : bradford_partition_at(ranked, o.boundaries);
    Outcome out;
    out.table.caption = "Bradford zones";
    out.table.columns = {"zone",      "journals",      "pct_journals", "items",
                         "pct_items", "first_journal", "last_journal"};
    for (std::size_t z = 0; z < partition.zones.size(); ++z) {
        const auto& zone = partition.zones[z];
        out.table.rows.push_back(
            {z == 0 ? "nucleus" : fmt::format("zone {}", z), std::to_string(zone.journals.size()),
             Share{zone.journals.size(), ranked.size()}.str(), std::to_string(zone.items),
             Share{zone.items, ranked.total()}.str(), zone.journals.front(),
             zone.journals.back()});
    }
    out.table.footnotes.push_back(
        fmt::format("multiplier n = {} (geometric mean of successive zone-size ratios)",
                    fixed(partition.multiplier, 4)));
    return out;
}

Outcome run_share_curve(const Options& o, std::ostream& err) {
    const auto ranked = ranked_counts(o, o.counts, err);
    const auto curve = share_curve(ranked);
    Outcome out;
    out.table.caption = "Cumulative share curve";
    out.table.columns = {"journals", "id", "count", "cumulative_share"};
    for (std::size_t m = 0; m < curve.size(); ++m) {
        if (o.top > 0 && m >= o.top) {
            break;
        }
        out.table.rows.push_back({std::to_string(curve[m].journals), ranked.items()[m].id,
                                  std::to_string(ranked.items()[m].count),
                                  fixed(curve[m].share, 6)});
    }
    for (double p : o.shares) {
        out.table.footnotes.push_back(fmt::format("{} of {} journals account for {}% of the total",
                                                  journals_for_share(curve, p), ranked.size(),
                                                  fixed(100.0 * p, 1)));
    }
    for (auto t : o.thresholds) {
        out.table.footnotes.push_back(fmt::format("{} journals have a count of at least {}",
                                                  count_above_threshold(ranked, t), t));
    }
    return out;
}

Outcome run_stability(const Options& o, std::ostream& err) {
    if (o.counts.empty() || o.counts_b.empty()) {
        throw ArgumentError("stability needs --a and --b");
    }
    const auto a = ranked_counts(o, o.counts, err);
    const auto b = ranked_counts(o, o.counts_b, err);
    const auto top = o.top > 0 ? o.top : std::min(a.size(), b.size());
    const auto overlap = stability_overlap(a, b, top);
    Outcome out;
    out.table.caption = "Top-list stability";
    out.table.columns = {"top", "on_both_lists", "pct_on_both"};
    out.table.rows.push_back({std::to_string(top), std::to_string(overlap),
                              Share{overlap, top}.str()});
    return out;
}

Outcome run_correlate(const Options& o, std::ostream& err) {
    if (o.pairs.empty()) {
        throw ArgumentError("correlate needs --pairs");
    }
    LoadReport report;
    const auto [xs, ys] = read_pairs(o.pairs, RowPolicy(!o.lenient, report));
    for (const auto& issue : report.skipped) {
        err << fmt::format("warning: {}:{}: {} (row skipped)\n", issue.file, issue.line,
                           issue.message);
    }
    Outcome out;
    out.table.caption = "Correlation";
    out.table.columns = {"method", "pairs", "coefficient"};
    if (o.method == "pearson" || o.method == "both") {
        out.table.rows.push_back(
            {"pearson", std::to_string(xs.size()),
             fixed(rank_correlation(xs, ys, CorrelationMethod::Pearson), 12)});
    }
    if (o.method == "spearman" || o.method == "both") {
        out.table.rows.push_back(
            {"spearman", std::to_string(xs.size()),
             fixed(rank_correlation(xs, ys, CorrelationMethod::Spearman), 12)});
    }
    if (out.table.rows.empty()) {
        throw ArgumentError("--method must be pearson, spearman or both");
    }
    return out;
}

// Subjects in subjects-file order with their works ranked by cites. Works come from
// --sample as given, or from --members filtered by type and sampled every k-th item.
std::vector<Subject> load_subjects(const Options& o, std::ostream& err) {
    if (o.subjects.empty() || o.docs.empty()) {
        throw ArgumentError("study commands need --subjects and --docs");
    }
    const bool from_sample = !o.sample.empty();
    if (from_sample == !o.members.empty()) {
        throw ArgumentError("give exactly one of --sample or --members");
    }
    const auto corpus = load(o, err, false);
    std::map<std::string, const DocumentRecord*, std::less<>> by_id;
    for (const auto& d : corpus.documents) {
        by_id.emplace(d.id, &d);
    }
    std::vector<DocType> types;
    for (const auto& t : o.types) {
        types.push_back(parse_doc_type(t));
    }

    std::vector<Subject> subjects;
    std::map<std::string, std::size_t, std::less<>> slot;
    for (const auto& s : read_subjects(o.subjects)) {
        slot.emplace(s.name, subjects.size());
        subjects.push_back({s.name, s.year, s.author, {}});
    }
    const auto& membership_file = from_sample ? o.sample : o.members;
    for (const auto& [subject, doc_id] : read_members(membership_file)) {
        const auto s = slot.find(subject);
        if (s == slot.end()) {
            throw DataError(fmt::format("{}: unknown subject '{}'", membership_file, subject));
        }
        const auto d = by_id.find(doc_id);
        if (d == by_id.end()) {
            const auto msg = fmt::format("{}: unknown document '{}'", membership_file, doc_id);
            if (!o.lenient) {
                throw DataError(msg);
            }
            err << "warning: " << msg << " (skipped)\n";
            continue;
        }
        subjects[s->second].works.push_back(*d->second);
    }
    for (auto& s : subjects) {
        rank_by_cites(s.works);
        if (from_sample) {
            continue;
        }
        if (!types.empty()) {
            std::erase_if(s.works, [&](const auto& d) {
                return std::find(types.begin(), types.end(), d.doc_type) == types.end();
            });
        }
        const auto offset = o.seed ? seeded_offset(o.k, *o.seed) : 0;
        s.works = stratified_every_kth(s.works, o.k, offset);
    }
    return subjects;
}

RankLookup load_ranks(const Options& o, std::ostream& err) {
    if (o.ranks.empty()) {
        throw ArgumentError("--ranks is required");
    }
    LoadReport report;
    auto records = read_rank_records(o.ranks, RowPolicy(!o.lenient, report));
    for (const auto& issue : report.skipped) {
        err << fmt::format("warning: {}:{}: {} (row skipped)\n", issue.file, issue.line,
                           issue.message);
    }
    return RankLookup(std::move(records));
}

Outcome run_study_sample(const Options& o, std::ostream& err) {
    const auto subjects = load_subjects(o, err);
    Outcome out;
    out.table.caption = "Stratified sample";
    out.table.columns = {"subject", "doc_id", "sample_position", "cites", "venue", "year"};
    for (const auto& s : subjects) {
        for (std::size_t i = 0; i < s.works.size(); ++i) {
            const auto& d = s.works[i];
            out.table.rows.push_back({s.name, d.id, std::to_string(i + 1), std::to_string(d.cites),
                                      d.venue, std::to_string(d.year)});
        }
    }
    out.table.footnotes.push_back(
        fmt::format("every {} item(s) by cites, types {}", o.k,
                    o.types.empty() ? std::string("all") : fmt::format("{}", fmt::join(o.types, ","))));
    return out;
}

Outcome run_study_rank_buckets(const Options& o, std::ostream& err) {
    RankMeasure measure;
    if (o.measure == "tc") {
        measure = RankMeasure::TotalCites;
    } else if (o.measure == "if") {
        measure = RankMeasure::ImpactFactor;
    } else {
        throw ArgumentError("--measure must be tc or if");
    }
    const auto subjects = load_subjects(o, err);
    return {rank_bucket_table(subjects, load_ranks(o, err), measure), true};
}

Outcome run_study_tc_vs_if(const Options& o, std::ostream& err) {
    const auto subjects = load_subjects(o, err);
    return {tc_vs_if_table(subjects, load_ranks(o, err)), true};
}

Outcome run_study_authorship(const Options& o, std::ostream& err) {
    AuthorshipSubset subset;
    if (o.subset == "all") {
        subset = AuthorshipSubset::All;
    } else if (o.subset == "reviews") {
        subset = AuthorshipSubset::ReviewsOnly;
    } else {
        throw ArgumentError("--subset must be all or reviews");
    }
    const auto subjects = load_subjects(o, err);
    return {authorship_table(subjects, subset), true};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw DataError(fmt::format("cannot write '{}'", path));
    }
    f << content;
    if (!f) {
        throw DataError(fmt::format("failed writing '{}'", path));
    }
}

void add_outputs(CLI::App* cmd, Options& o) {
    cmd->add_option("--csv", o.csv_out, "Also write the report as CSV to this file");
    cmd->add_option("--json", o.json_out, "Also write the report as JSON to this file");
    cmd->add_flag("--lenient", o.lenient, "Skip malformed rows instead of failing");
}

void add_graph_inputs(CLI::App* cmd, Options& o) {
    cmd->add_option("--edges", o.edges, "edges.csv (citing_id,cited_id)");
    cmd->add_option("--docs", o.docs, "docs.csv (id,venue,year,doc_type,cites,authors)");
    cmd->add_flag("--allow-self-loops", o.allow_self_loops, "Accept document self-citations");
}

void add_solver(CLI::App* cmd, Options& o) {
    cmd->add_option("--tol", o.tol, "Convergence tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", o.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "OpenMP threads (0 = default)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--top", o.top, "Only report the top N rows");
}

void add_window(CLI::App* cmd, Options& o) {
    cmd->add_option("--cite-year", o.cite_year, "Year in which references are counted");
    cmd->add_option("--from", o.from_year, "First cited publication year");
    cmd->add_option("--to", o.to_year, "Last cited publication year");
}

void add_counts(CLI::App* cmd, Options& o) {
    cmd->add_option("--counts", o.counts, "counts.csv (id,count)");
    add_graph_inputs(cmd, o);
    cmd->add_option("--by", o.by, "With --docs: articles, cites or tc")
        ->check(CLI::IsMember({"articles", "cites", "tc"}));
    cmd->add_option("--year", o.year, "With --by articles|cites: only this publication year");
    add_window(cmd, o);
}

void add_study(CLI::App* cmd, Options& o) {
    cmd->add_option("--docs", o.docs, "docs.csv")->required();
    cmd->add_option("--subjects", o.subjects, "subjects.csv (subject,year,author)")->required();
    cmd->add_option("--members", o.members, "subject,doc_id: works to sample from");
    cmd->add_option("--sample", o.sample, "subject,doc_id: an already drawn sample");
    cmd->add_option("--k", o.k, "Sampling stride with --members")->check(CLI::PositiveNumber);
    cmd->add_option("--types", o.types, "Document types eligible for sampling")->delimiter(',');
    cmd->add_option("--seed", o.seed, "Random start offset in [0, k) from this seed");
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Citation-network ranking and bibliometric analysis", "citerank"};
    app.require_subcommand(1);

    auto* pr = app.add_subcommand("pagerank", "PageRank scores of a citation graph");
    add_graph_inputs(pr, o);
    pr->add_option("--damping", o.damping, "Damping factor in (0,1)");
    add_solver(pr, o);
    add_outputs(pr, o);

    auto* hi = app.add_subcommand("hits", "HITS authority and hub scores");
    add_graph_inputs(hi, o);
    add_solver(hi, o);
    add_outputs(hi, o);

    auto* inf = app.add_subcommand("influence", "Journal influence weights and totals");
    inf->add_option("--matrix", o.matrix, "journal_matrix.csv");
    add_graph_inputs(inf, o);
    add_window(inf, o);
    add_solver(inf, o);
    inf->add_flag("--zero-diagonal", o.zero_diagonal, "Drop journal self-citations");
    inf->add_flag("--prune", o.prune, "Drop journals that give no references");
    inf->add_option("--normalization", o.normalization, "reference or unweighted")
        ->check(CLI::IsMember({"reference", "unweighted"}));
    add_outputs(inf, o);

    auto* tc = app.add_subcommand("total-cites", "Citations received per journal");
    add_graph_inputs(tc, o);
    add_window(tc, o);
    tc->add_option("--journal", o.journal, "Only this journal");
    add_outputs(tc, o);

    auto* ifc = app.add_subcommand("impact-factor", "Two-year impact factor per journal");
    add_graph_inputs(ifc, o);
    ifc->add_option("--cite-year", o.cite_year, "Citing year")->required();
    ifc->add_option("--journal", o.journal, "Only this journal");
    ifc->add_option("--citable", o.citable, "Document types counted as citable items")
        ->delimiter(',');
    add_outputs(ifc, o);

    auto* hx = app.add_subcommand("h-index", "h-index of a citation profile");
    hx->add_option("--profile", o.profile, "profile.csv (cites)");
    add_graph_inputs(hx, o);
    hx->add_option("--author", o.author, "With --edges/--docs: use in-degrees of this author's works");
    add_outputs(hx, o);

    auto* br = app.add_subcommand("bradford", "Bradford zone partition");
    add_counts(br, o);
    br->add_option("--zones", o.zones, "Number of equal-yield zones")->check(CLI::Range(2, 1000));
    br->add_option("--boundaries", o.boundaries, "Explicit cumulative item boundaries")
        ->delimiter(',');
    add_outputs(br, o);

    auto* sc = app.add_subcommand("share-curve", "Cumulative concentration curve");
    add_counts(sc, o);
    sc->add_option("--share", o.shares, "Report journals needed for this share")->delimiter(',');
    sc->add_option("--threshold", o.thresholds, "Report journals with at least this count")
        ->delimiter(',');
    sc->add_option("--top", o.top, "Only list the first N points");
    add_outputs(sc, o);

    auto* st = app.add_subcommand("stability", "Overlap of two top-N lists");
    st->add_option("--a", o.counts, "counts.csv for the first period")->required();
    st->add_option("--b", o.counts_b, "counts.csv for the second period")->required();
    st->add_option("--top", o.top, "List length (default: shorter list)");
    add_outputs(st, o);

    auto* study = app.add_subcommand("study", "Validation-study tables");
    study->require_subcommand(1);
    auto* ss = study->add_subcommand("sample", "Every-k-th stratified sample");
    add_study(ss, o);
    add_outputs(ss, o);
    auto* rb = study->add_subcommand("rank-buckets", "Journal-rank buckets of sampled works");
    add_study(rb, o);
    rb->add_option("--ranks", o.ranks, "rank_records.csv")->required();
    rb->add_option("--measure", o.measure, "tc or if")->check(CLI::IsMember({"tc", "if"}));
    add_outputs(rb, o);
    auto* tvi = study->add_subcommand("tc-vs-if", "Total-cites rank against impact-factor rank");
    add_study(tvi, o);
    tvi->add_option("--ranks", o.ranks, "rank_records.csv")->required();
    add_outputs(tvi, o);
    auto* au = study->add_subcommand("authorship", "Authorship-position table");
    add_study(au, o);
    au->add_option("--subset", o.subset, "all or reviews")->check(CLI::IsMember({"all", "reviews"}));
    add_outputs(au, o);

    auto* co = app.add_subcommand("correlate", "Pearson and Spearman correlation");
    co->add_option("--pairs", o.pairs, "pairs.csv (x,y)")->required();
    co->add_option("--method", o.method, "pearson, spearman or both")
        ->check(CLI::IsMember({"pearson", "spearman", "both"}));
    add_outputs(co, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out;
        std::ostringstream help_err;
        const int code = app.exit(e, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        return code == 0 ? kOk : kUsage;
    }

    try {
        Outcome result;
        if (*pr) result = run_pagerank(o, err);
        else if (*hi) result = run_hits(o, err);
        else if (*inf) result = run_influence(o, err);
        else if (*tc) result = run_total_cites(o, err);
        else if (*ifc) result = run_impact_factor(o, err);
        else if (*hx) result = run_h_index(o, err);
        else if (*br) result = run_bradford(o, err);
        else if (*sc) result = run_share_curve(o, err);
        else if (*st) result = run_stability(o, err);
        else if (*co) result = run_correlate(o, err);
        else if (*ss) result = run_study_sample(o, err);
        else if (*rb) result = run_study_rank_buckets(o, err);
        else if (*tvi) result = run_study_tc_vs_if(o, err);
        else if (*au) result = run_study_authorship(o, err);

        out << render_text(result.table);
        if (!o.csv_out.empty()) {
            write_file(o.csv_out, render_csv(result.table));
        }
        if (!o.json_out.empty()) {
            write_file(o.json_out, render_json(result.table));
        }
        if (!result.converged) {
            err << "error: solver did not converge; partial results reported\n";
            return kNotConverged;
        }
        return kOk;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
}

} // namespace citerank::cli
