#include "citerank/concentration.hpp"

#include "citerank/error.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace citerank {

RankedCounts::RankedCounts(std::vector<CountEntry> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end(), [](const auto& a, const auto& b) {
        return a.count != b.count ? a.count > b.count : a.id < b.id;
    });
    std::vector<std::string_view> ids;
    ids.reserve(items_.size());
    for (const auto& e : items_) {
        if (e.id.empty()) {
            throw DataError("ranked counts: empty id");
        }
        ids.push_back(e.id);
        total_ += e.count;
    }
    std::sort(ids.begin(), ids.end());
    if (auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end()) {
        throw DataError(fmt::format("ranked counts: duplicate id '{}'", *dup));
    }
}

double zone_multiplier(const std::vector<BradfordZone>& zones) {
    if (zones.size() < 2) {
        return 1.0;
    }
    double log_sum = 0.0;
    for (std::size_t i = 1; i < zones.size(); ++i) {
        log_sum += std::log(static_cast<double>(zones[i].journals.size()) /
                            static_cast<double>(zones[i - 1].journals.size()));
    }
    return std::exp(log_sum / static_cast<double>(zones.size() - 1));
}

BradfordPartition bradford_partition_at(const RankedCounts& ranked,
                                        std::span<const double> cumulative_targets) {
    const auto n = ranked.size();
    const auto k = cumulative_targets.size() + 1;
    if (ranked.total() == 0) {
        throw DataError("bradford: total count is zero");
    }
    if (k < 2) {
        throw ArgumentError("bradford: need at least two zones");
    }
    if (k > n) {
        throw ArgumentError(fmt::format("bradford: {} zones requested for {} journals", k, n));
    }
    for (std::size_t i = 1; i < cumulative_targets.size(); ++i) {
        if (!(cumulative_targets[i] > cumulative_targets[i - 1])) {
            throw ArgumentError("bradford: boundary targets must increase");
        }
    }

    const auto& items = ranked.items();
    // prefix[m] = items held by the first m journals.
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
        prefix[m + 1] = prefix[m] + static_cast<double>(items[m].count);
    }

    std::vector<std::size_t> bounds{0};
    for (std::size_t z = 0; z + 1 < k; ++z) {
        const double target = cumulative_targets[z];
        const std::size_t lo = bounds.back() + 1;
        const std::size_t hi = n - (k - 1 - z); // leave one journal per remaining zone
        std::size_t m = lo;
        while (m < hi && prefix[m] < target) {
            ++m;
        }
        if (m > lo && prefix[m] >= target && prefix[m] - target > target - prefix[m - 1]) {
            --m;
        }
        bounds.push_back(m);
    }
    bounds.push_back(n);

    BradfordPartition out;
    for (std::size_t z = 0; z < k; ++z) {
        BradfordZone zone;
        for (std::size_t m = bounds[z]; m < bounds[z + 1]; ++m) {
            zone.journals.push_back(items[m].id);
            zone.items += items[m].count;
        }
        out.zones.push_back(std::move(zone));
    }
    out.multiplier = zone_multiplier(out.zones);
    return out;
}

BradfordPartition bradford_partition(const RankedCounts& ranked, std::size_t zones) {
    if (zones < 2) {
        throw ArgumentError("bradford: need at least two zones");
    }
    std::vector<double> targets;
    const double total = static_cast<double>(ranked.total());
    for (std::size_t z = 1; z < zones; ++z) {
        targets.push_back(total * static_cast<double>(z) / static_cast<double>(zones));
    }
    return bradford_partition_at(ranked, targets);
}

std::vector<SharePoint> share_curve(const RankedCounts& ranked) {
    if (ranked.total() == 0) {
        throw DataError("share curve: total count is zero");
    }
    std::vector<SharePoint> curve;
    curve.reserve(ranked.size());
    std::uint64_t running = 0;
    const double total = static_cast<double>(ranked.total());
    for (std::size_t m = 0; m < ranked.size(); ++m) {
        running += ranked.items()[m].count;
        curve.push_back({m + 1, static_cast<double>(running) / total});
    }
    return curve;
}

std::size_t journals_for_share(std::span<const SharePoint> curve, double p) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw ArgumentError("share must lie in (0, 1]");
    }
    if (curve.empty()) {
        throw ArgumentError("share curve is empty");
    }
    for (const auto& point : curve) {
        if (point.share >= p) {
            return point.journals;
        }
    }
    // The last point holds every item by construction.
    return curve.back().journals;
}

std::size_t count_above_threshold(const RankedCounts& ranked, std::uint64_t threshold) {
    const auto& items = ranked.items();
    return static_cast<std::size_t>(std::count_if(
        items.begin(), items.end(), [&](const auto& e) { return e.count >= threshold; }));
}

std::size_t stability_overlap(const RankedCounts& a, const RankedCounts& b, std::size_t top) {
    if (top > a.size() || top > b.size()) {
        throw ArgumentError(fmt::format("stability: top {} exceeds list lengths {} and {}", top,
                                        a.size(), b.size()));
    }
    std::vector<std::string_view> ta;
    std::vector<std::string_view> tb;
    for (std::size_t i = 0; i < top; ++i) {
        ta.push_back(a.items()[i].id);
        tb.push_back(b.items()[i].id);
    }
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    std::vector<std::string_view> common;
    std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(common));
    return common.size();
}

} // namespace citerank
