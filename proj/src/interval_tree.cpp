#include "axicover/interval_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace axicover {

FarthestIntervalStructure::FarthestIntervalStructure(const PointXY& first_site,
                                                     const Metric& metric)
    : metric_(metric), last_x_(first_site.x) {
    if (metric.is_linf()) {
        throw std::invalid_argument("FarthestIntervalStructure: finite-p metrics only");
    }
    push_interval(AxisBound::neg_inf(), AxisBound::pos_inf(), first_site);
}

void FarthestIntervalStructure::reserve(std::size_t expected_points) {
    entries_.reserve(expected_points);
}

double FarthestIntervalStructure::h_at(const AxisBound& c, const PointXY& q,
                                       const PointXY& site) const {
    if (c.is_finite()) {
        return detail::bisector_h(c.value(), q, site, metric_);
    }
    // q.x > site.x always holds here. For p > 1 the y terms vanish in the
    // limit; for p = 1 they survive and can flip the sign.
    const double dx = q.x - site.x;
    if (metric_.p() == 1.0) {
        const double dy = std::fabs(q.y) - std::fabs(site.y);
        return c.is_neg_inf() ? dx + dy : -dx + dy;
    }
    return c.is_neg_inf() ? dx : -dx;
}

double FarthestIntervalStructure::crossing_in(const PointXY& q,
                                              const FarthestInterval& iv) const {
    const double p = metric_.p();
    double b;
    if (p == 2.0) {
        b = detail::l2_crossing(q, iv.site);
    } else if (p == 1.0) {
        // Caller verified that the crossing exists inside the interval.
        detail::l1_crossing(q, iv.site, b);
    } else {
        // Finite bracket with h > 0 on the left and h < 0 on the right.
        double lo, hi;
        if (iv.lo.is_finite()) {
            lo = iv.lo.value();
        } else {
            const double reach =
                std::hypot(q.x - iv.site.x, std::fabs(q.y) - std::fabs(iv.site.y)) + 1.0;
            lo = iv.site.x - reach;
            double step = reach;
            while (detail::bisector_h(lo, q, iv.site, metric_) <= 0.0) {
                lo -= step;
                step *= 2.0;
            }
        }
        if (iv.hi.is_finite()) {
            hi = iv.hi.value();
        } else {
            const double reach =
                std::hypot(q.x - iv.site.x, std::fabs(q.y) - std::fabs(iv.site.y)) + 1.0;
            hi = q.x + reach;
            double step = reach;
            while (detail::bisector_h(hi, q, iv.site, metric_) >= 0.0) {
                hi += step;
                step *= 2.0;
            }
        }
        b = detail::crossing_bisect(q, iv.site, metric_, lo, hi);
    }
    // Guard against drift out of the interval.
    if (iv.lo.is_finite() && b < iv.lo.value()) b = iv.lo.value();
    if (iv.hi.is_finite() && b > iv.hi.value()) b = iv.hi.value();
    return b;
}

void FarthestIntervalStructure::push_interval(const AxisBound& lo, const AxisBound& hi,
                                              const PointXY& site) {
    FarthestInterval iv;
    iv.lo = lo;
    iv.hi = hi;
    iv.site = site;
    iv.candidate = smallest_axis_disk_in_interval(site, lo, hi, metric_);
    iv.candidate_radius = iv.candidate.radius;
    const double below = entries_.empty() ? std::numeric_limits<double>::infinity()
                                          : entries_.back().min_radius_right;
    entries_.push_back(Entry{iv, std::min(iv.candidate_radius, below)});
}

void FarthestIntervalStructure::refresh_top_candidate() {
    Entry& top = entries_.back();
    top.iv.candidate =
        smallest_axis_disk_in_interval(top.iv.site, top.iv.lo, top.iv.hi, metric_);
    top.iv.candidate_radius = top.iv.candidate.radius;
    const double below = entries_.size() > 1
                             ? entries_[entries_.size() - 2].min_radius_right
                             : std::numeric_limits<double>::infinity();
    top.min_radius_right = std::min(top.iv.candidate_radius, below);
}

void FarthestIntervalStructure::insert_point(const PointXY& p) {
    if (!(p.x > last_x_)) {
        throw NonMonotoneInsertion(
            "insert_point: x-coordinates must be strictly increasing");
    }
    last_x_ = p.x;
    ++inserted_;

    while (!entries_.empty()) {
        const FarthestInterval& top = entries_.back().iv;

        // p at least as far at the right end means p beats the site on the
        // whole interval (the crossing of the two is at or beyond hi).
        if (h_at(top.hi, p, top.site) >= 0.0) {
            entries_.pop_back();
            ++deleted_;
            continue;
        }

        double b;
        const double left = h_at(top.lo, p, top.site);
        if (left <= 0.0) {
            if (top.lo.is_neg_inf()) {
                // p is never the farthest site (possible under L1 when a
                // high older point dominates it); enclosing radii are
                // unaffected, so the intervals stay as they are.
                return;
            }
            b = top.lo.value();
        } else {
            b = crossing_in(p, top);
        }

        if (top.hi.is_pos_inf() || b < top.hi.value()) {
            AxisBound cut = AxisBound::at(b);
            entries_.back().iv.lo = cut;
            refresh_top_candidate();
            push_interval(AxisBound::neg_inf(), cut, p);
            return;
        }
        // The computed crossing collapsed onto hi: same as full domination.
        entries_.pop_back();
        ++deleted_;
    }

    // Every interval was dominated; p owns the whole axis.
    push_interval(AxisBound::neg_inf(), AxisBound::pos_inf(), p);
}

double FarthestIntervalStructure::min_enclosing_radius() const {
    return entries_.back().min_radius_right;
}

AxisDisk FarthestIntervalStructure::min_enclosing_disk() const {
    const double best = entries_.back().min_radius_right;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (it->iv.candidate_radius == best) return it->iv.candidate;
    }
    return entries_.back().iv.candidate;  // unreachable
}

std::vector<FarthestInterval> FarthestIntervalStructure::intervals_snapshot() const {
    std::vector<FarthestInterval> out;
    out.reserve(entries_.size());
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        out.push_back(it->iv);
    }
    return out;
}

}  // namespace axicover
