#ifndef AXICOVER_DP_SOLVER_HPP
#define AXICOVER_DP_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "axicover/geometry.hpp"

namespace axicover {

/// A covering: disks ordered by center, total cost sum(r^alpha), and the
/// number of disks used. Empty input yields the empty covering.
struct Covering {
    std::vector<AxisDisk> disks;
    double total_cost = 0.0;
    std::size_t k = 0;
};

struct SolveRequest {
    std::vector<PointXY> points;  // raw; solvers normalize internally
    CostExponent alpha;
    Metric metric;
    std::optional<std::size_t> max_disks;
};

struct InvalidMetric : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Suffix-cost table of the unbounded recurrence: min_cost_from[i] is the
/// optimal cost of covering points i..n-1, min_cost_from[n] = 0, and
/// split_end[i] is the last point of the first disk's group in an optimal
/// split (ties resolved toward the larger index).
struct DpTable {
    std::vector<double> min_cost_from;
    std::vector<std::size_t> split_end;
};

/// Mirror every point above the axis, drop all but the highest point among
/// exact x-duplicates, and sort by strictly increasing x.
std::vector<PointXY> preprocess(const std::vector<PointXY>& raw);

/// Radii of the smallest enclosing disks of every contiguous group of
/// normalized points: entry [i][j] for j >= i covers points i..j. Built in
/// O(n^2 log n) for finite p (incremental farthest intervals per row) and
/// O(n^2) for L_inf.
std::vector<std::vector<double>> build_radii_cache(const std::vector<PointXY>& normalized,
                                                   const Metric& metric);

DpTable unbounded_table(const std::vector<PointXY>& normalized, const CostExponent& alpha,
                        const Metric& metric);

/// Optimal covering with no bound on the number of disks, finite-p metrics.
/// O(n^2 log n) time, O(n) working memory.
Covering solve_unbounded(const SolveRequest& req);

/// Optimal covering under L_inf (squares), O(n^2): the smallest enclosing
/// square of a group is max(half the x-span, the highest y), maintained by
/// a running maximum.
Covering solve_linf(const SolveRequest& req);

/// Optimal covering with at most max_disks disks (clamped to n). Any
/// metric. Fills an (k x n) table over a materialized radii cache.
Covering solve_with_budget(const SolveRequest& req);

/// Coverings for every budget k = 1..n from a single table fill; the cost
/// sequence is non-increasing in k.
std::vector<Covering> solve_all_budgets(const SolveRequest& req);

/// Dispatch on max_disks and metric.
Covering solve(const SolveRequest& req);

}  // namespace axicover

#endif  // AXICOVER_DP_SOLVER_HPP
