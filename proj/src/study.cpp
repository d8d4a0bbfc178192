#include "citerank/study.hpp"

#include "citerank/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>

#include <fmt/format.h>

namespace citerank {

namespace {

bool ranks_before(const DocumentRecord& a, const DocumentRecord& b) {
    return a.cites != b.cites ? a.cites > b.cites : a.id < b.id;
}

std::string optional_median(const std::optional<double>& m) {
    return m ? format_median(*m) : "n/a";
}

} // namespace

std::optional<std::uint64_t> Share::tenths() const {
    if (denominator == 0) {
        return std::nullopt;
    }
    return (2000 * count + denominator) / (2 * denominator);
}

std::string Share::str() const {
    const auto t = tenths();
    if (!t) {
        return "n/a";
    }
    return fmt::format("{}.{}%", *t / 10, *t % 10);
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw ArgumentError("median of an empty set");
    }
    std::sort(values.begin(), values.end());
    const auto mid = values.size() / 2;
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    return 0.5 * (values[mid - 1] + values[mid]);
}

std::string format_median(double value) {
    if (value == std::floor(value)) {
        return fmt::format("{:.0f}", value);
    }
    return fmt::format("{:.1f}", value);
}

void require_ranked_by_cites(std::span<const DocumentRecord> docs) {
    for (std::size_t i = 1; i < docs.size(); ++i) {
        if (!ranks_before(docs[i - 1], docs[i])) {
            throw DataError(fmt::format("works not ranked by cites at position {} ('{}' then '{}')",
                                        i + 1, docs[i - 1].id, docs[i].id));
        }
    }
}

void rank_by_cites(std::vector<DocumentRecord>& docs) {
    std::sort(docs.begin(), docs.end(), ranks_before);
}

std::vector<DocumentRecord> stratified_every_kth(std::span<const DocumentRecord> ranked,
                                                 std::size_t k, std::size_t offset) {
    if (k == 0) {
        throw ArgumentError("sampling stride must be at least 1");
    }
    if (offset >= k) {
        throw ArgumentError("sampling offset must be below the stride");
    }
    require_ranked_by_cites(ranked);
    std::vector<DocumentRecord> sample;
    for (std::size_t i = offset; i < ranked.size(); i += k) {
        sample.push_back(ranked[i]);
    }
    return sample;
}

std::size_t seeded_offset(std::size_t k, std::uint64_t seed) {
    if (k == 0) {
        throw ArgumentError("sampling stride must be at least 1");
    }
    std::mt19937_64 rng(seed);
    return static_cast<std::size_t>(rng() % k);
}

std::string_view to_string(RankBucket b) {
    switch (b) {
    case RankBucket::Top500: return "top_500";
    case RankBucket::From501To1000: return "501_to_1000";
    case RankBucket::Below1000: return "below_1000";
    case RankBucket::NotIndexed: return "not_indexed";
    }
    return "not_indexed";
}

RankBucket bucket(std::optional<std::int64_t> rank) {
    if (!rank) {
        return RankBucket::NotIndexed;
    }
    if (*rank < 1) {
        throw ArgumentError(fmt::format("rank must be positive, got {}", *rank));
    }
    if (*rank <= 500) {
        return RankBucket::Top500;
    }
    if (*rank <= 1000) {
        return RankBucket::From501To1000;
    }
    return RankBucket::Below1000;
}

void validate(const RankRecord& r) {
    if (r.journal.empty()) {
        throw DataError("rank record: empty journal id");
    }
    if ((r.tc_rank && *r.tc_rank == 0) || (r.if_rank && *r.if_rank == 0)) {
        throw DataError(fmt::format("rank record {}/{}: ranks start at 1", r.journal, r.year));
    }
    if (!r.indexed && (r.tc_rank || r.if_rank)) {
        throw DataError(
            fmt::format("rank record {}/{}: unindexed journal carries a rank", r.journal, r.year));
    }
}

RankLookup::RankLookup(std::vector<RankRecord> records) {
    for (auto& r : records) {
        validate(r);
        auto key = std::make_pair(r.journal, r.year);
        if (records_.contains(key)) {
            throw DataError(fmt::format("duplicate rank record for {}/{}", r.journal, r.year));
        }
        records_.emplace(std::move(key), std::move(r));
    }
}

const RankRecord* RankLookup::find(std::string_view journal, int year) const {
    const auto it = records_.find(std::make_pair(std::string(journal), year));
    return it == records_.end() ? nullptr : &it->second;
}

std::vector<RankBucketRow> rank_bucket_rows(std::span<const Subject> subjects,
                                            const RankLookup& ranks, RankMeasure measure) {
    std::vector<RankBucketRow> rows;
    std::size_t sampled = 0;
    for (const auto& s : subjects) {
        RankBucketRow row;
        row.subject = s.name;
        row.year = s.year;
        row.sample_size = s.works.size();
        std::vector<double> indexed_ranks;
        for (const auto& doc : s.works) {
            const auto* rec = ranks.find(doc.venue, doc.year);
            std::optional<std::int64_t> rank;
            if (rec && rec->indexed) {
                if (auto r = rec->rank(measure)) {
                    rank = *r;
                }
            }
            const auto b = bucket(rank);
            if (b == RankBucket::NotIndexed) {
                ++row.not_indexed;
                continue;
            }
            ++row.counts[static_cast<std::size_t>(b)];
            indexed_ranks.push_back(static_cast<double>(*rank));
        }
        row.ranked = indexed_ranks.size();
        if (!indexed_ranks.empty()) {
            row.median_rank = median(std::move(indexed_ranks));
        }
        sampled += row.sample_size;
        rows.push_back(std::move(row));
    }
    if (sampled == 0) {
        throw DataError("rank buckets: empty sample");
    }
    return rows;
}

StudyTable rank_bucket_table(std::span<const Subject> subjects, const RankLookup& ranks,
                             RankMeasure measure) {
    StudyTable t;
    t.caption = measure == RankMeasure::TotalCites ? "Journal rankings by total cites"
                                                   : "Journal rankings by impact factor";
    t.columns = {"subject",        "year",          "sample_size",   "top_500",
                 "pct_top_500",    "rank_501_1000", "pct_501_1000",  "below_1000",
                 "pct_below_1000", "median_rank",   "not_indexed"};
    for (const auto& r : rank_bucket_rows(subjects, ranks, measure)) {
        t.rows.push_back({r.subject, std::to_string(r.year), std::to_string(r.sample_size),
                          std::to_string(r.counts[0]), r.share(RankBucket::Top500).str(),
                          std::to_string(r.counts[1]), r.share(RankBucket::From501To1000).str(),
                          std::to_string(r.counts[2]), r.share(RankBucket::Below1000).str(),
                          optional_median(r.median_rank), std::to_string(r.not_indexed)});
    }
    t.footnotes.push_back("Percentages are of sampled items ranked in the year of publication; "
                          "unranked items are counted as not indexed.");
    return t;
}

std::vector<TcVsIfRow> tc_vs_if_rows(std::span<const Subject> subjects, const RankLookup& ranks) {
    std::vector<TcVsIfRow> rows;
    for (const auto& s : subjects) {
        TcVsIfRow row;
        row.subject = s.name;
        row.year = s.year;
        row.sample_size = s.works.size();
        for (const auto& doc : s.works) {
            const auto* rec = ranks.find(doc.venue, doc.year);
            if (!rec || !rec->indexed) {
                ++row.not_indexed;
                continue;
            }
            ++row.indexed;
            if (!rec->tc_rank || !rec->if_rank) {
                continue;
            }
            ++row.both_ranked;
            if (*rec->tc_rank < *rec->if_rank) {
                ++row.higher_by_tc;
            } else if (*rec->if_rank < *rec->tc_rank) {
                ++row.higher_by_if;
            } else {
                ++row.ties;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

StudyTable tc_vs_if_table(std::span<const Subject> subjects, const RankLookup& ranks) {
    StudyTable t;
    t.caption = "Journals indexed and total-cites rank versus impact-factor rank";
    t.columns = {"subject",     "year",         "sample_size",         "indexed",
                 "not_indexed", "pct_indexed",  "higher_by_tc",        "pct_higher_by_tc",
                 "higher_by_if", "ties",        "ranked_by_both"};
    std::size_t excluded = 0;
    for (const auto& r : tc_vs_if_rows(subjects, ranks)) {
        excluded += r.sample_size - r.both_ranked;
        t.rows.push_back({r.subject, std::to_string(r.year), std::to_string(r.sample_size),
                          std::to_string(r.indexed), std::to_string(r.not_indexed),
                          r.indexed_share().str(), std::to_string(r.higher_by_tc),
                          r.tc_higher_share().str(), std::to_string(r.higher_by_if),
                          std::to_string(r.ties), std::to_string(r.both_ranked)});
    }
    t.footnotes.push_back("Higher means a numerically smaller rank; equal ranks count as neither.");
    t.footnotes.push_back(fmt::format(
        "Percent higher by TC is over items ranked by both measures; {} sampled item(s) excluded.",
        excluded));
    return t;
}

std::string_view to_string(AuthorshipClass cls) {
    switch (cls) {
    case AuthorshipClass::Primary: return "primary";
    case AuthorshipClass::SecondToFifth: return "2nd_to_5th";
    case AuthorshipClass::SixthToTenth: return "6th_to_10th";
    case AuthorshipClass::EleventhOrLower: return "11th_and_lower";
    }
    return "primary";
}

AuthorshipClass classify_position(std::size_t position) {
    if (position == 0) {
        throw ArgumentError("author positions start at 1");
    }
    if (position == 1) {
        return AuthorshipClass::Primary;
    }
    if (position <= 5) {
        return AuthorshipClass::SecondToFifth;
    }
    if (position <= 10) {
        return AuthorshipClass::SixthToTenth;
    }
    return AuthorshipClass::EleventhOrLower;
}

std::string normalize_name(std::string_view name) {
    std::string out;
    bool pending_space = false;
    for (char ch : name) {
        const auto c = static_cast<unsigned char>(ch);
        if (std::isspace(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

AuthorshipPosition authorship_position(const DocumentRecord& doc, std::string_view author) {
    const auto wanted = normalize_name(author);
    for (std::size_t i = 0; i < doc.authors.size(); ++i) {
        if (normalize_name(doc.authors[i]) == wanted) {
            return {i + 1, classify_position(i + 1)};
        }
    }
    throw DataError(fmt::format("'{}' is not an author of '{}'", author, doc.id));
}

AuthorshipSummary authorship_summary(std::span<const Subject> subjects, AuthorshipSubset subset) {
    AuthorshipSummary summary;
    for (const auto& s : subjects) {
        AuthorshipRow row;
        row.subject = s.name;
        row.year = s.year;
        std::vector<double> author_counts;
        std::vector<double> cites_ranks;
        for (std::size_t i = 0; i < s.works.size(); ++i) {
            const auto& doc = s.works[i];
            if (subset == AuthorshipSubset::ReviewsOnly && doc.doc_type != DocType::Review) {
                continue;
            }
            const auto pos = authorship_position(doc, s.author);
            ++row.classes[static_cast<std::size_t>(pos.cls)];
            author_counts.push_back(static_cast<double>(doc.authors.size()));
            cites_ranks.push_back(static_cast<double>(i + 1));
        }
        row.sample_size = author_counts.size();
        if (!author_counts.empty()) {
            const auto [lo, hi] = std::minmax_element(author_counts.begin(), author_counts.end());
            row.min_authors = static_cast<std::size_t>(*lo);
            row.max_authors = static_cast<std::size_t>(*hi);
            row.median_authors = median(author_counts);
            if (subset == AuthorshipSubset::ReviewsOnly) {
                row.median_cites_rank = median(cites_ranks);
            }
        }
        summary.overall_primary.count += row.classes[0];
        summary.overall_primary.denominator += row.sample_size;
        summary.rows.push_back(std::move(row));
    }
    if (summary.overall_primary.denominator == 0) {
        throw DataError("authorship: empty sample");
    }
    return summary;
}

StudyTable authorship_table(std::span<const Subject> subjects, AuthorshipSubset subset) {
    const bool reviews = subset == AuthorshipSubset::ReviewsOnly;
    const auto summary = authorship_summary(subjects, subset);
    StudyTable t;
    t.caption = reviews ? "Authorship position in review articles"
                        : "Authorship position in sampled works";
    t.columns = {"subject", "year", "sample_size"};
    if (reviews) {
        t.columns.push_back("median_cites_rank");
    }
    for (const char* c : {"authors_range", "median_authors", "primary", "pct_primary",
                          "2nd_to_5th", "pct_2nd_to_5th", "6th_to_10th", "pct_6th_to_10th",
                          "11th_and_lower", "pct_11th_and_lower"}) {
        t.columns.emplace_back(c);
    }
    for (const auto& r : summary.rows) {
        std::vector<std::string> cells{r.subject, std::to_string(r.year),
                                       std::to_string(r.sample_size)};
        if (reviews) {
            cells.push_back(optional_median(r.median_cites_rank));
        }
        cells.push_back(r.sample_size ? fmt::format("{} to {}", r.min_authors, r.max_authors)
                                      : "n/a");
        cells.push_back(optional_median(r.median_authors));
        for (auto c : {AuthorshipClass::Primary, AuthorshipClass::SecondToFifth,
                       AuthorshipClass::SixthToTenth, AuthorshipClass::EleventhOrLower}) {
            cells.push_back(std::to_string(r.classes[static_cast<std::size_t>(c)]));
            cells.push_back(r.share(c).str());
        }
        t.rows.push_back(std::move(cells));
    }
    t.footnotes.push_back(fmt::format("Percent of times primary author of the {} = {}",
                                      reviews ? "review articles" : "works",
                                      summary.overall_primary.str()));
    t.footnotes.push_back("Author names matched exactly after whitespace and case normalisation.");
    return t;
}

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && values[order[j]] == values[order[i]]) {
            ++j;
        }
        // positions i..j-1 (0-based) share the mean 1-based rank
        const double shared = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t m = i; m < j; ++m) {
            ranks[order[m]] = shared;
        }
        i = j;
    }
    return ranks;
}

double rank_correlation(std::span<const double> xs, std::span<const double> ys,
                        CorrelationMethod method) {
    if (xs.size() != ys.size()) {
        throw ArgumentError(
            fmt::format("correlation: lists differ in length ({} vs {})", xs.size(), ys.size()));
    }
    if (xs.size() < 3) {
        throw ArgumentError("correlation: need at least 3 pairs");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
            throw DataError("correlation: non-finite value");
        }
    }
    std::vector<double> a(xs.begin(), xs.end());
    std::vector<double> b(ys.begin(), ys.end());
    if (method == CorrelationMethod::Spearman) {
        a = average_ranks(xs);
        b = average_ranks(ys);
    }
    const double n = static_cast<double>(a.size());
    const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0.0;
    double saa = 0.0;
    double sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0) {
        throw DataError("correlation undefined: zero variance");
    }
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

} // namespace citerank
