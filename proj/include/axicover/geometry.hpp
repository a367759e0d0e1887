#ifndef AXICOVER_GEOMETRY_HPP
#define AXICOVER_GEOMETRY_HPP

#include <stdexcept>
#include <vector>

namespace axicover {

/// An input site. Normalized point sets have y >= 0 and strictly
/// increasing x-coordinates.
struct PointXY {
    double x = 0.0;
    double y = 0.0;
};

/// Metric selector: a finite exponent p >= 1, or L_inf.
class Metric {
public:
    static Metric lp(double p);
    static Metric linf();

    bool is_linf() const { return linf_; }

    /// Exponent of a finite-p metric. Must not be called on L_inf.
    double p() const;

    friend bool operator==(const Metric& a, const Metric& b) {
        return a.linf_ == b.linf_ && (a.linf_ || a.p_ == b.p_);
    }

private:
    Metric(double p, bool linf) : p_(p), linf_(linf) {}
    double p_;
    bool linf_;
};

/// Cost exponent: a disk of radius r costs r^alpha, alpha >= 1.
class CostExponent {
public:
    explicit CostExponent(double alpha);
    double value() const { return alpha_; }

private:
    double alpha_;
};

/// Interval endpoint on the x-axis, extended with -inf/+inf sentinels.
/// Sentinels are explicit flags so endpoint arithmetic never sees an
/// IEEE infinity.
class AxisBound {
public:
    static AxisBound neg_inf() { return AxisBound(Kind::NegInf, 0.0); }
    static AxisBound pos_inf() { return AxisBound(Kind::PosInf, 0.0); }
    static AxisBound at(double x) { return AxisBound(Kind::Finite, x); }

    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_finite() const { return kind_ == Kind::Finite; }

    /// Finite bounds only.
    double value() const;

    friend bool operator<(const AxisBound& a, const AxisBound& b);
    friend bool operator==(const AxisBound& a, const AxisBound& b);

private:
    enum class Kind { NegInf, Finite, PosInf };
    AxisBound(Kind k, double x) : kind_(k), x_(x) {}
    Kind kind_;
    double x_;
};

/// A disk centered at (center_x, 0): the L_p ball of the given radius,
/// or the square [center_x - r, center_x + r] x [-r, r] under L_inf.
struct AxisDisk {
    double center_x = 0.0;
    double radius = 0.0;
    Metric metric = Metric::lp(2.0);
};

struct NonUniqueBisector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The bisector of the two points never meets the x-axis. Only possible
/// for p = 1, where one point can be farther than the other from every
/// axis position.
struct NoAxisCrossing : std::domain_error {
    using std::domain_error::domain_error;
};

struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Distance from the axis point (center_x, 0) to q. Uses |q.y|, so both
/// mirror images of q are equidistant. Large exponents are evaluated by
/// factoring out the dominant term before pow.
double axis_distance(double center_x, const PointXY& q, const Metric& m);

/// radius^alpha.
double cost(double radius, const CostExponent& alpha);

/// The unique axis position equidistant from q1 and q2. Closed form for
/// p in {1, 2}, bracketed bisection otherwise. Requires q1.x != q2.x and
/// a finite-p metric; throws NoAxisCrossing for degenerate L1 pairs whose
/// bisector misses the axis.
double bisector_axis_crossing(const PointXY& q1, const PointXY& q2, const Metric& m);

/// Smallest disk covering `site` whose center is restricted to [lo, hi):
/// centered at site.x clamped into the interval.
AxisDisk smallest_axis_disk_in_interval(const PointXY& site, const AxisBound& lo,
                                        const AxisBound& hi, const Metric& m);

/// Oracle-grade smallest enclosing axis-centered disk: ternary search on
/// the convex max-distance objective, then a slide to the leftmost center
/// achieving the minimum (the objective has a flat bottom for p = 1 and
/// L_inf). Throws EmptyInput.
AxisDisk smallest_axis_disk_bruteforce(const std::vector<PointXY>& points, const Metric& m);

/// True iff q lies within d, with slack tol on the radius.
bool covers(const AxisDisk& d, const PointXY& q, double tol);

namespace detail {

/// d(c, a) - d(c, b): positive where a is farther.
double bisector_h(double c, const PointXY& a, const PointXY& b, const Metric& m);

/// L2 crossing in closed form. Requires a.x != b.x.
double l2_crossing(const PointXY& a, const PointXY& b);

/// L1 crossing, or no value when the bisector misses the axis.
/// Requires a.x != b.x.
bool l1_crossing(const PointXY& a, const PointXY& b, double& out);

/// Root of bisector_h(c, a, b) by bisection. Requires a bracket with
/// bisector_h(lo) >= 0 >= bisector_h(hi).
double crossing_bisect(const PointXY& a, const PointXY& b, const Metric& m,
                       double lo, double hi);

}  // namespace detail

}  // namespace axicover

#endif  // AXICOVER_GEOMETRY_HPP
