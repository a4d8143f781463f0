#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <utility>

#include "vertex_set.hpp"

namespace domenum {

/// Delay statistics in counted basic operations (adjacency reads, mark
/// updates, output scans), not wall-clock time.
struct DelayStats {
    std::uint64_t count = 0;
    /// Operations before the first emission.
    std::uint64_t preprocessing = 0;
    /// Largest gap between consecutive emissions, including the gap between
    /// the last emission and termination.
    std::uint64_t max_delay = 0;
    /// Sum of the gaps counted in max_delay.
    std::uint64_t total_delay = 0;
    std::uint64_t gaps = 0;
    std::uint64_t total_ops = 0;

    double mean_delay() const noexcept {
        return gaps ? static_cast<double>(total_delay) / static_cast<double>(gaps) : 0.0;
    }
};

/// Receives the sets produced by an enumerator, one at a time, and measures
/// the operation count between emissions. Producers call tick() for every
/// basic operation and stop as soon as emit() returns false.
class VertexSetStream {
public:
    using consumer_type = std::function<void(const VertexSet&)>;
    static constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

    VertexSetStream() = default;

    explicit VertexSetStream(consumer_type consumer, std::uint64_t limit = unlimited)
        : consumer_(std::move(consumer)), limit_(limit) {}

    void tick(std::uint64_t ops = 1) noexcept { ops_ += ops; }

    /// Forwards `s` unless the limit is reached. Returns whether the producer
    /// should continue.
    bool emit(const VertexSet& s) {
        if (stats_.count >= limit_) {
            return false;
        }
        if (reject_duplicates_ && !seen_.insert(s).second) {
            throw contract_violation("duplicate emission");
        }
        record_gap();
        ++stats_.count;
        if (consumer_) {
            consumer_(s);
        }
        return stats_.count < limit_;
    }

    /// Closes the stream; the trailing gap enters the delay statistics.
    void finish() {
        if (finished_) {
            return;
        }
        finished_ = true;
        if (stats_.count > 0) {
            record_gap();
        } else {
            stats_.preprocessing = ops_;
        }
        stats_.total_ops = ops_;
    }

    bool stopped() const noexcept { return stats_.count >= limit_; }
    std::uint64_t ops() const noexcept { return ops_; }
    const DelayStats& stats() const noexcept { return stats_; }

    /// Throw contract_violation on a repeated set. Costs a copy of every emission.
    void reject_duplicates(bool on = true) { reject_duplicates_ = on; }

private:
    void record_gap() {
        if (stats_.count == 0 && !finished_) {
            stats_.preprocessing = ops_;
        } else {
            std::uint64_t gap = ops_ - last_mark_;
            stats_.max_delay = std::max(stats_.max_delay, gap);
            stats_.total_delay += gap;
            ++stats_.gaps;
        }
        last_mark_ = ops_;
    }

    consumer_type consumer_;
    std::uint64_t limit_ = unlimited;
    std::uint64_t ops_ = 0;
    std::uint64_t last_mark_ = 0;
    DelayStats stats_;
    bool finished_ = false;
    bool reject_duplicates_ = false;
    std::set<VertexSet> seen_;
};

/// Runs `producer` against a collecting stream and returns everything emitted.
template <typename Producer>
Family collect(Producer&& producer) {
    Family out;
    VertexSetStream stream([&](const VertexSet& s) { out.push_back(s); });
    std::forward<Producer>(producer)(stream);
    stream.finish();
    return out;
}

} // namespace domenum
