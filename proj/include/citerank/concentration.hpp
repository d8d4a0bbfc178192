#pragma once

// Bradford zoning and concentration statistics over rank-ordered count distributions
// (citations received, articles published, references given).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace citerank {

struct CountEntry {
    std::string id;
    std::uint64_t count = 0;

    friend bool operator==(const CountEntry&, const CountEntry&) = default;
};

/// Counts sorted by count descending, ties by id ascending.
class RankedCounts {
public:
    RankedCounts() = default;
    /// Sorts the input. Throws DataError on empty or duplicate ids.
    explicit RankedCounts(std::vector<CountEntry> items);

    const std::vector<CountEntry>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    std::uint64_t total() const noexcept { return total_; }

private:
    std::vector<CountEntry> items_;
    std::uint64_t total_ = 0;
};

struct BradfordZone {
    std::vector<std::string> journals;
    std::uint64_t items = 0;
};

struct BradfordPartition {
    std::vector<BradfordZone> zones;
    /// Geometric mean of successive zone-size ratios.
    double multiplier = 1.0;
};

/// Equal-yield zoning: the boundary after zone i targets i * total / zones. A zone
/// closes at the first journal whose cumulative count reaches the target; that journal
/// stays in the zone when it lands at least as near the target as the previous one.
BradfordPartition bradford_partition(const RankedCounts& ranked, std::size_t zones);

/// Same closing rule with explicit cumulative item targets, one per internal boundary
/// (strictly increasing). Produces targets.size() + 1 zones.
BradfordPartition bradford_partition_at(const RankedCounts& ranked,
                                        std::span<const double> cumulative_targets);

/// Geometric mean of |zone[i+1]| / |zone[i]|.
double zone_multiplier(const std::vector<BradfordZone>& zones);

struct SharePoint {
    std::size_t journals = 0;
    double share = 0.0;

    friend bool operator==(const SharePoint&, const SharePoint&) = default;
};

/// Cumulative share of the total held by the top m entries, m = 1..N.
std::vector<SharePoint> share_curve(const RankedCounts& ranked);

/// Smallest m whose cumulative share reaches p, for p in (0, 1].
std::size_t journals_for_share(std::span<const SharePoint> curve, double p);

std::size_t count_above_threshold(const RankedCounts& ranked, std::uint64_t threshold);

/// Size of the intersection of the two top-`top` id sets.
std::size_t stability_overlap(const RankedCounts& a, const RankedCounts& b, std::size_t top);

} // namespace citerank
