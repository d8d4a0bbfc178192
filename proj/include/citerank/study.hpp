#pragma once

// Validation-study harness: stratified sampling of a subject's most cited works,
// journal-rank bucket tables, TC-versus-IF comparisons, authorship-position tables and
// rank correlations.

#include "citerank/graph.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace citerank {

/// A tabular result: one row of formatted cells per subject.
struct StudyTable {
    std::string caption;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footnotes;

    friend bool operator==(const StudyTable&, const StudyTable&) = default;
};

/// count / denominator, reported as a percentage with one decimal (half away from zero).
struct Share {
    std::uint64_t count = 0;
    std::uint64_t denominator = 0;

    /// Percentage in tenths, computed in integer arithmetic. Empty for a zero denominator.
    std::optional<std::uint64_t> tenths() const;
    /// "63.6%", or "n/a" for a zero denominator.
    std::string str() const;
};

/// Median of a nonempty set; even sizes give the midpoint of the middle pair.
double median(std::vector<double> values);
/// "22" for whole numbers, "22.5" otherwise.
std::string format_median(double value);

// ---------------------------------------------------------------------------
// Sampling

/// Throws DataError unless docs are ordered by cites descending, ties by id ascending.
void require_ranked_by_cites(std::span<const DocumentRecord> docs);
/// Sorts by cites descending, ties by id ascending.
void rank_by_cites(std::vector<DocumentRecord>& docs);

/// Items at 0-based positions offset, offset + k, offset + 2k, ...
std::vector<DocumentRecord> stratified_every_kth(std::span<const DocumentRecord> ranked,
                                                 std::size_t k, std::size_t offset = 0);
/// Deterministic pseudo-random start offset in [0, k).
std::size_t seeded_offset(std::size_t k, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Journal rank buckets

enum class RankBucket { Top500, From501To1000, Below1000, NotIndexed };
std::string_view to_string(RankBucket bucket);

/// Throws ArgumentError for ranks below 1.
RankBucket bucket(std::optional<std::int64_t> rank);

enum class RankMeasure { TotalCites, ImpactFactor };

/// A journal's standing in one annual ranking.
struct RankRecord {
    std::string journal;
    int year = 0;
    bool indexed = false;
    std::optional<std::uint32_t> tc_rank;
    std::optional<std::uint32_t> if_rank;

    std::optional<std::uint32_t> rank(RankMeasure measure) const {
        return measure == RankMeasure::TotalCites ? tc_rank : if_rank;
    }
    friend bool operator==(const RankRecord&, const RankRecord&) = default;
};

/// Throws DataError when a rank is zero or an unindexed record carries ranks.
void validate(const RankRecord& record);

/// Rank records keyed by (journal, year).
class RankLookup {
public:
    RankLookup() = default;
    /// Throws DataError on duplicate (journal, year) keys or invalid records.
    explicit RankLookup(std::vector<RankRecord> records);

    const RankRecord* find(std::string_view journal, int year) const;
    std::size_t size() const noexcept { return records_.size(); }

private:
    std::map<std::pair<std::string, int>, RankRecord, std::less<>> records_;
};

/// A subject (e.g. a laureate) and the works chosen for one analysis, ranked by cites.
struct Subject {
    std::string name;
    int year = 0;
    std::string author;
    std::vector<DocumentRecord> works;
};

struct RankBucketRow {
    std::string subject;
    int year = 0;
    std::size_t sample_size = 0;
    /// Items with a rank for the measure; the percentage denominator.
    std::size_t ranked = 0;
    std::array<std::size_t, 3> counts{};
    std::size_t not_indexed = 0;
    std::optional<double> median_rank;

    Share share(RankBucket b) const {
        return {counts.at(static_cast<std::size_t>(b)), ranked};
    }
};

std::vector<RankBucketRow> rank_bucket_rows(std::span<const Subject> subjects,
                                            const RankLookup& ranks, RankMeasure measure);
StudyTable rank_bucket_table(std::span<const Subject> subjects, const RankLookup& ranks,
                             RankMeasure measure);

struct TcVsIfRow {
    std::string subject;
    int year = 0;
    std::size_t sample_size = 0;
    std::size_t indexed = 0;
    std::size_t not_indexed = 0;
    std::size_t both_ranked = 0;
    std::size_t higher_by_tc = 0;
    std::size_t higher_by_if = 0;
    std::size_t ties = 0;

    Share indexed_share() const { return {indexed, sample_size}; }
    Share tc_higher_share() const { return {higher_by_tc, both_ranked}; }
};

/// "Higher" means a numerically smaller rank; ties count as not higher.
std::vector<TcVsIfRow> tc_vs_if_rows(std::span<const Subject> subjects, const RankLookup& ranks);
StudyTable tc_vs_if_table(std::span<const Subject> subjects, const RankLookup& ranks);

// ---------------------------------------------------------------------------
// Authorship

enum class AuthorshipClass { Primary, SecondToFifth, SixthToTenth, EleventhOrLower };
std::string_view to_string(AuthorshipClass cls);
AuthorshipClass classify_position(std::size_t position);

/// Trims, collapses internal whitespace and lower-cases ASCII letters.
std::string normalize_name(std::string_view name);

struct AuthorshipPosition {
    std::size_t position = 0; // 1-based
    AuthorshipClass cls = AuthorshipClass::Primary;
};

/// First byline position matching `author` after normalisation. Throws DataError when absent.
AuthorshipPosition authorship_position(const DocumentRecord& doc, std::string_view author);

enum class AuthorshipSubset { All, ReviewsOnly };

struct AuthorshipRow {
    std::string subject;
    int year = 0;
    std::size_t sample_size = 0;
    std::size_t min_authors = 0;
    std::size_t max_authors = 0;
    std::optional<double> median_authors;
    std::array<std::size_t, 4> classes{};
    /// Median 1-based cites-rank position within the subject's works (reviews only).
    std::optional<double> median_cites_rank;

    Share share(AuthorshipClass c) const {
        return {classes.at(static_cast<std::size_t>(c)), sample_size};
    }
};

struct AuthorshipSummary {
    std::vector<AuthorshipRow> rows;
    /// Pooled share of primary authorships across all subjects.
    Share overall_primary;
};

/// With ReviewsOnly, only works typed as reviews are counted. Throws DataError when
/// nothing is left to count.
AuthorshipSummary authorship_summary(std::span<const Subject> subjects, AuthorshipSubset subset);
StudyTable authorship_table(std::span<const Subject> subjects, AuthorshipSubset subset);

// ---------------------------------------------------------------------------
// Correlation

enum class CorrelationMethod { Pearson, Spearman };

/// Average (1-based) ranks, ties sharing the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// Throws ArgumentError on length mismatch or fewer than 3 pairs, DataError when either
/// list has zero variance.
double rank_correlation(std::span<const double> xs, std::span<const double> ys,
                        CorrelationMethod method);

} // namespace citerank
