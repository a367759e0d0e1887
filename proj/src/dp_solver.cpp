#include "axicover/dp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "axicover/interval_tree.hpp"

namespace axicover {

std::vector<PointXY> preprocess(const std::vector<PointXY>& raw) {
    std::vector<PointXY> pts = raw;
    for (PointXY& p : pts) p.y = std::fabs(p.y);
    std::sort(pts.begin(), pts.end(), [](const PointXY& a, const PointXY& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::vector<PointXY> out;
    out.reserve(pts.size());
    for (const PointXY& p : pts) {
        if (!out.empty() && out.back().x == p.x) {
            // Same x: any disk through the higher point covers the lower,
            // so keep only the highest. Ascending sort puts it last.
            out.back() = p;
        } else {
            out.push_back(p);
        }
    }
    return out;
}

namespace {

double linf_group_radius(const std::vector<PointXY>& pts, std::size_t i, std::size_t j) {
    double max_y = 0.0;
    for (std::size_t l = i; l <= j; ++l) max_y = std::max(max_y, pts[l].y);
    return std::max(0.5 * (pts[j].x - pts[i].x), max_y);
}

AxisDisk group_disk(const std::vector<PointXY>& pts, std::size_t i, std::size_t j,
                    const Metric& m) {
    if (m.is_linf()) {
        const double r = linf_group_radius(pts, i, j);
        return AxisDisk{pts[j].x - r, r, m};  // leftmost feasible center
    }
    // Replaying the row-i insertions reproduces the radius the table saw,
    // bit for bit.
    FarthestIntervalStructure s(pts[i], m);
    s.reserve(j - i + 1);
    for (std::size_t l = i + 1; l <= j; ++l) s.insert_point(pts[l]);
    return s.min_enclosing_disk();
}

using GroupList = std::vector<std::pair<std::size_t, std::size_t>>;

Covering covering_from_groups(const std::vector<PointXY>& pts, const GroupList& groups,
                              const CostExponent& alpha, const Metric& m) {
    Covering cov;
    cov.disks.reserve(groups.size());
    for (const auto& [i, j] : groups) cov.disks.push_back(group_disk(pts, i, j, m));
    // Accumulate right to left, matching the recurrence's evaluation order.
    double total = 0.0;
    for (auto it = cov.disks.rbegin(); it != cov.disks.rend(); ++it) {
        total = cost(it->radius, alpha) + total;
    }
    cov.total_cost = total;
    cov.k = cov.disks.size();
    // L_inf's leftmost-center rule can put a wide square's center left of
    // its predecessor's; present the disks in center order regardless.
    std::stable_sort(cov.disks.begin(), cov.disks.end(),
                     [](const AxisDisk& a, const AxisDisk& b) {
                         return a.center_x < b.center_x;
                     });
    return cov;
}

GroupList walk_splits(const std::vector<std::size_t>& split_end, std::size_t n) {
    GroupList groups;
    for (std::size_t i = 0; i < n;) {
        const std::size_t j = split_end[i];
        groups.emplace_back(i, j);
        i = j + 1;
    }
    return groups;
}

}  // namespace

DpTable unbounded_table(const std::vector<PointXY>& normalized, const CostExponent& alpha,
                        const Metric& metric) {
    if (metric.is_linf()) throw InvalidMetric("unbounded_table: finite-p metrics only");
    const std::size_t n = normalized.size();
    DpTable t;
    t.min_cost_from.assign(n + 1, 0.0);
    t.split_end.assign(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        FarthestIntervalStructure s(normalized[i], metric);
        s.reserve(n - i);
        double best = cost(s.min_enclosing_radius(), alpha) + t.min_cost_from[i + 1];
        std::size_t best_j = i;
        for (std::size_t j = i + 1; j < n; ++j) {
            s.insert_point(normalized[j]);
            const double v = cost(s.min_enclosing_radius(), alpha) + t.min_cost_from[j + 1];
            // <= so equal-cost splits resolve to the larger j.
            if (v <= best) {
                best = v;
                best_j = j;
            }
        }
        t.min_cost_from[i] = best;
        t.split_end[i] = best_j;
    }
    return t;
}

Covering solve_unbounded(const SolveRequest& req) {
    if (req.metric.is_linf()) {
        throw InvalidMetric("solve_unbounded: use solve_linf for the L_inf metric");
    }
    const std::vector<PointXY> pts = preprocess(req.points);
    if (pts.empty()) return Covering{};
    const DpTable t = unbounded_table(pts, req.alpha, req.metric);
    return covering_from_groups(pts, walk_splits(t.split_end, pts.size()), req.alpha,
                                req.metric);
}

Covering solve_linf(const SolveRequest& req) {
    if (!req.metric.is_linf()) throw InvalidMetric("solve_linf: L_inf metric required");
    const std::vector<PointXY> pts = preprocess(req.points);
    const std::size_t n = pts.size();
    if (n == 0) return Covering{};

    std::vector<double> min_cost_from(n + 1, 0.0);
    std::vector<std::size_t> split_end(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        double max_y = 0.0;
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = i;
        for (std::size_t j = i; j < n; ++j) {
            max_y = std::max(max_y, pts[j].y);
            const double r = std::max(0.5 * (pts[j].x - pts[i].x), max_y);
            const double v = cost(r, req.alpha) + min_cost_from[j + 1];
            if (v <= best) {
                best = v;
                best_j = j;
            }
        }
        min_cost_from[i] = best;
        split_end[i] = best_j;
    }
    return covering_from_groups(pts, walk_splits(split_end, n), req.alpha, req.metric);
}

std::vector<std::vector<double>> build_radii_cache(const std::vector<PointXY>& normalized,
                                                   const Metric& metric) {
    const std::size_t n = normalized.size();
    std::vector<std::vector<double>> radii(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        if (metric.is_linf()) {
            double max_y = 0.0;
            for (std::size_t j = i; j < n; ++j) {
                max_y = std::max(max_y, normalized[j].y);
                radii[i][j] = std::max(0.5 * (normalized[j].x - normalized[i].x), max_y);
            }
        } else {
            FarthestIntervalStructure s(normalized[i], metric);
            s.reserve(n - i);
            radii[i][i] = s.min_enclosing_radius();
            for (std::size_t j = i + 1; j < n; ++j) {
                s.insert_point(normalized[j]);
                radii[i][j] = s.min_enclosing_radius();
            }
        }
    }
    return radii;
}

namespace {

struct BudgetTables {
    // cost[m][i]: optimal cost of covering points i..n-1 with at most m
    // disks; +inf where infeasible (m = 0 with points remaining).
    std::vector<std::vector<double>> cost_table;
    std::vector<std::vector<std::size_t>> split;
};

BudgetTables budget_tables(const std::vector<std::vector<double>>& radii, std::size_t n,
                           std::size_t k, const CostExponent& alpha) {
    const double inf = std::numeric_limits<double>::infinity();
    BudgetTables t;
    t.cost_table.assign(k + 1, std::vector<double>(n + 1, inf));
    t.split.assign(k + 1, std::vector<std::size_t>(n, 0));
    for (std::size_t m = 0; m <= k; ++m) t.cost_table[m][n] = 0.0;
    for (std::size_t m = 1; m <= k; ++m) {
        for (std::size_t i = n; i-- > 0;) {
            double best = inf;
            std::size_t best_j = i;
            for (std::size_t j = i; j < n; ++j) {
                const double tail = t.cost_table[m - 1][j + 1];
                if (tail == inf) continue;
                const double v = cost(radii[i][j], alpha) + tail;
                if (v <= best) {
                    best = v;
                    best_j = j;
                }
            }
            t.cost_table[m][i] = best;
            t.split[m][i] = best_j;
        }
    }
    return t;
}

GroupList budget_groups(const BudgetTables& t, std::size_t n, std::size_t k) {
    GroupList groups;
    std::size_t i = 0;
    std::size_t m = k;
    while (i < n) {
        const std::size_t j = t.split[m][i];
        groups.emplace_back(i, j);
        i = j + 1;
        --m;
    }
    return groups;
}

}  // namespace

Covering solve_with_budget(const SolveRequest& req) {
    if (!req.max_disks) throw std::invalid_argument("solve_with_budget: max_disks required");
    if (*req.max_disks < 1) {
        throw std::invalid_argument("solve_with_budget: max_disks must be >= 1");
    }
    const std::vector<PointXY> pts = preprocess(req.points);
    const std::size_t n = pts.size();
    if (n == 0) return Covering{};
    const std::size_t k = std::min(*req.max_disks, n);
    const auto radii = build_radii_cache(pts, req.metric);
    const BudgetTables t = budget_tables(radii, n, k, req.alpha);
    return covering_from_groups(pts, budget_groups(t, n, k), req.alpha, req.metric);
}

std::vector<Covering> solve_all_budgets(const SolveRequest& req) {
    const std::vector<PointXY> pts = preprocess(req.points);
    const std::size_t n = pts.size();
    if (n == 0) return {};
    const auto radii = build_radii_cache(pts, req.metric);
    const BudgetTables t = budget_tables(radii, n, n, req.alpha);
    std::vector<Covering> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        out.push_back(
            covering_from_groups(pts, budget_groups(t, n, k), req.alpha, req.metric));
    }
    return out;
}

Covering solve(const SolveRequest& req) {
    if (req.max_disks) return solve_with_budget(req);
    return req.metric.is_linf() ? solve_linf(req) : solve_unbounded(req);
}

}  // namespace axicover
