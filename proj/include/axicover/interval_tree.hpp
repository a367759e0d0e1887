#ifndef AXICOVER_INTERVAL_TREE_HPP
#define AXICOVER_INTERVAL_TREE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "axicover/geometry.hpp"

namespace axicover {

/// One half-open interval [lo, hi) of axis positions sharing the same
/// farthest site, with the smallest covering disk whose center is
/// restricted to the interval.
struct FarthestInterval {
    AxisBound lo = AxisBound::neg_inf();
    AxisBound hi = AxisBound::pos_inf();
    PointXY site;
    AxisDisk candidate;
    double candidate_radius = 0.0;
};

struct NonMonotoneInsertion : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The intersection of the farthest-point Voronoi diagram of the inserted
/// sites with the x-axis, maintained incrementally under insertions of
/// points with strictly increasing x. The intervals partition the axis and
/// their site x-coordinates strictly decrease left to right; the structure
/// keeps the global minimum candidate radius, i.e. the radius of the
/// smallest axis-centered disk enclosing every inserted site.
///
/// Finite-p metrics only; L_inf coverings are computed by a direct formula
/// elsewhere and never touch this structure.
class FarthestIntervalStructure {
public:
    FarthestIntervalStructure(const PointXY& first_site, const Metric& metric);

    void reserve(std::size_t expected_points);

    /// Requires p.x strictly greater than every previously inserted x.
    /// Amortized O(1) interval updates per insertion: intervals are only
    /// ever removed from the left, shrunk at the left edge, or prepended.
    void insert_point(const PointXY& p);

    /// Radius of the smallest axis-centered disk enclosing all inserted
    /// sites.
    double min_enclosing_radius() const;

    /// A disk achieving min_enclosing_radius(); ties broken toward the
    /// leftmost interval.
    AxisDisk min_enclosing_disk() const;

    /// Left-to-right listing.
    std::vector<FarthestInterval> intervals_snapshot() const;

    std::size_t inserted_count() const { return inserted_; }
    std::size_t interval_count() const { return entries_.size(); }

    /// Intervals removed over the structure's lifetime; never exceeds the
    /// number of insertions, which is what makes insert_point amortized
    /// constant.
    std::size_t lifetime_deleted() const { return deleted_; }

    const Metric& metric() const { return metric_; }

private:
    struct Entry {
        FarthestInterval iv;
        // Minimum candidate radius over this interval and every interval
        // to its right (i.e. deeper in the stack).
        double min_radius_right;
    };

    // Stack of intervals, rightmost first: entries_.back() is the leftmost
    // interval, which is the only place insertions mutate.
    std::vector<Entry> entries_;
    Metric metric_;
    double last_x_;
    std::size_t inserted_ = 1;
    std::size_t deleted_ = 0;

    // d(c, q) - d(c, site) extended to the sentinel endpoints via the
    // asymptotic limits (finite for p = 1, sign-exact otherwise).
    double h_at(const AxisBound& c, const PointXY& q, const PointXY& site) const;
    double crossing_in(const PointXY& q, const FarthestInterval& iv) const;
    void push_interval(const AxisBound& lo, const AxisBound& hi, const PointXY& site);
    void refresh_top_candidate();
};

}  // namespace axicover

#endif  // AXICOVER_INTERVAL_TREE_HPP
