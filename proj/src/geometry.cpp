#include "axicover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace axicover {

Metric Metric::lp(double p) {
    if (!std::isfinite(p) || p < 1.0) {
        throw std::invalid_argument("Metric: p must be a finite real >= 1");
    }
    return Metric(p, false);
}

Metric Metric::linf() { return Metric(0.0, true); }

double Metric::p() const {
    if (linf_) throw std::logic_error("Metric: p() called on L_inf");
    return p_;
}

CostExponent::CostExponent(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha) || alpha < 1.0) {
        throw std::invalid_argument("CostExponent: alpha must be a finite real >= 1");
    }
}

double AxisBound::value() const {
    if (kind_ != Kind::Finite) throw std::logic_error("AxisBound: value() on a sentinel");
    return x_;
}

bool operator<(const AxisBound& a, const AxisBound& b) {
    if (a.kind_ == b.kind_) {
        return a.kind_ == AxisBound::Kind::Finite && a.x_ < b.x_;
    }
    if (a.kind_ == AxisBound::Kind::NegInf) return true;
    if (b.kind_ == AxisBound::Kind::PosInf) return true;
    return false;
}

bool operator==(const AxisBound& a, const AxisBound& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != AxisBound::Kind::Finite || a.x_ == b.x_;
}

double axis_distance(double center_x, const PointXY& q, const Metric& m) {
    const double dx = std::fabs(q.x - center_x);
    const double dy = std::fabs(q.y);
    if (m.is_linf()) return std::max(dx, dy);
    const double p = m.p();
    if (p == 1.0) return dx + dy;
    if (p == 2.0) return std::hypot(dx, dy);
    const double big = std::max(dx, dy);
    if (big == 0.0) return 0.0;
    const double small = std::min(dx, dy) / big;
    return big * std::pow(1.0 + std::pow(small, p), 1.0 / p);
}

double cost(double radius, const CostExponent& alpha) {
    const double a = alpha.value();
    if (a == 1.0) return radius;
    if (a == 2.0) return radius * radius;
    if (a == 3.0) return radius * radius * radius;
    return std::pow(radius, a);
}

namespace detail {

double bisector_h(double c, const PointXY& a, const PointXY& b, const Metric& m) {
    return axis_distance(c, a, m) - axis_distance(c, b, m);
}

double l2_crossing(const PointXY& a, const PointXY& b) {
    const double ya = std::fabs(a.y);
    const double yb = std::fabs(b.y);
    return (a.x * a.x + ya * ya - b.x * b.x - yb * yb) / (2.0 * (a.x - b.x));
}

bool l1_crossing(const PointXY& a, const PointXY& b, double& out) {
    PointXY r = a, l = b;
    if (r.x < l.x) std::swap(r, l);
    // h(c) = d(c,r) - d(c,l) is non-increasing: constant left of l.x,
    // slope -2 on [l.x, r.x], constant right of r.x. A crossing exists
    // iff the middle segment reaches zero.
    const double c = 0.5 * (r.x + l.x + std::fabs(r.y) - std::fabs(l.y));
    if (c < l.x || c > r.x) return false;
    out = c;
    return true;
}

double crossing_bisect(const PointXY& a, const PointXY& b, const Metric& m,
                       double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-10 * (1.0 + std::fabs(mid))) return mid;
        if (bisector_h(mid, a, b, m) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

double bisector_axis_crossing(const PointXY& q1, const PointXY& q2, const Metric& m) {
    if (m.is_linf()) {
        throw std::invalid_argument("bisector_axis_crossing: finite-p metrics only");
    }
    if (q1.x == q2.x) {
        throw NonUniqueBisector("bisector_axis_crossing: points share an x-coordinate");
    }
    const double p = m.p();
    if (p == 2.0) return detail::l2_crossing(q1, q2);
    if (p == 1.0) {
        double c = 0.0;
        if (!detail::l1_crossing(q1, q2, c)) {
            throw NoAxisCrossing("bisector_axis_crossing: L1 bisector misses the axis");
        }
        return c;
    }

    // a is the right point, so h(c) = d(c,a) - d(c,b) tends to a positive
    // limit at -inf and a negative one at +inf.
    PointXY a = q1, b = q2;
    if (a.x < b.x) std::swap(a, b);
    const double reach = std::hypot(a.x - b.x, std::fabs(a.y) - std::fabs(b.y)) + 1.0;
    double lo = b.x - reach;
    double hi = a.x + reach;
    double step = reach;
    for (int guard = 0; detail::bisector_h(lo, a, b, m) <= 0.0; ++guard) {
        if (guard > 100) throw NoAxisCrossing("bisector_axis_crossing: no sign change found");
        lo -= step;
        step *= 2.0;
    }
    step = reach;
    for (int guard = 0; detail::bisector_h(hi, a, b, m) >= 0.0; ++guard) {
        if (guard > 100) throw NoAxisCrossing("bisector_axis_crossing: no sign change found");
        hi += step;
        step *= 2.0;
    }
    return detail::crossing_bisect(a, b, m, lo, hi);
}

AxisDisk smallest_axis_disk_in_interval(const PointXY& site, const AxisBound& lo,
                                        const AxisBound& hi, const Metric& m) {
    if (!(lo < hi)) throw std::invalid_argument("smallest_axis_disk_in_interval: lo >= hi");
    double c = site.x;
    if (lo.is_finite() && c < lo.value()) c = lo.value();
    if (hi.is_finite() && c > hi.value()) c = hi.value();
    return AxisDisk{c, axis_distance(c, site, m), m};
}

AxisDisk smallest_axis_disk_bruteforce(const std::vector<PointXY>& points, const Metric& m) {
    if (points.empty()) throw EmptyInput("smallest_axis_disk_bruteforce: empty point set");

    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    for (const PointXY& p : points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
    }
    const double span = (max_x - min_x) + 1.0;

    const auto farthest = [&](double c) {
        double worst = 0.0;
        for (const PointXY& p : points) {
            worst = std::max(worst, axis_distance(c, p, m));
        }
        return worst;
    };

    // The optimal center lies in [min_x, max_x]; the objective is convex,
    // so equal probe values bracket a minimizer between them.
    double lo = min_x - span;
    double hi = max_x + span;
    for (int it = 0; it < 300; ++it) {
        if (hi - lo <= 1e-12 * std::max(1.0, std::fabs(lo) + std::fabs(hi))) break;
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        const double f1 = farthest(m1);
        const double f2 = farthest(m2);
        if (f1 < f2) {
            hi = m2;
        } else if (f2 < f1) {
            lo = m1;
        } else {
            lo = m1;
            hi = m2;
        }
    }
    double center = 0.5 * (lo + hi);
    const double value = farthest(center);

    // Slide to the leftmost center achieving the minimum; the sublevel set
    // of a convex function is an interval, so bisect on membership.
    const double level = value + 1e-12 * std::max(1.0, value);
    double walk_lo = min_x - span;
    if (farthest(walk_lo) <= level) {
        center = walk_lo;
    } else {
        double walk_hi = center;
        for (int it = 0; it < 120; ++it) {
            if (walk_hi - walk_lo <=
                1e-12 * std::max(1.0, std::fabs(walk_lo) + std::fabs(walk_hi))) {
                break;
            }
            const double mid = 0.5 * (walk_lo + walk_hi);
            if (farthest(mid) <= level) {
                walk_hi = mid;
            } else {
                walk_lo = mid;
            }
        }
        center = walk_hi;
    }
    return AxisDisk{center, farthest(center), m};
}

bool covers(const AxisDisk& d, const PointXY& q, double tol) {
    return axis_distance(d.center_x, q, d.metric) <= d.radius + tol;
}

}  // namespace axicover
