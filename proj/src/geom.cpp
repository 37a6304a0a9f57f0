#include "smocked/geom.hpp"

#include <limits>

namespace smocked {

PointSegmentResult point_segment_distance(Point2 p, const DirectedSegment& s) {
    const Point2 v = s.end - s.start;
    const double len2 = dot(v, v);
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(dot(p - s.start, v) / len2, 0.0, 1.0);
    const Point2 q = s.start + t * v;
    return {distance(p, q), q, t};
}

namespace {

struct Candidate {
    double dist;
    Point2 a, b;
    double ta, tb;
};

bool better(const Candidate& lhs, const Candidate& rhs) {
    constexpr double tie = 1e-12;
    if (lhs.dist < rhs.dist - tie) return true;
    if (lhs.dist > rhs.dist + tie) return false;
    if (lhs.ta != rhs.ta) return lhs.ta < rhs.ta;
    return lhs.tb < rhs.tb;
}

}  // namespace

SegmentPairResult segment_segment_nearest(const DirectedSegment& a, const DirectedSegment& b) {
    const Point2 u = a.end - a.start;
    const Point2 v = b.end - b.start;
    const Point2 w = b.start - a.start;
    const double denom = cross(u, v);
    if (denom != 0.0) {
        const double ta = cross(w, v) / denom;
        const double tb = cross(w, u) / denom;
        if (ta >= 0.0 && ta <= 1.0 && tb >= 0.0 && tb <= 1.0) {
            const Point2 q = a.start + ta * u;
            return {0.0, q, q, ta, tb};
        }
    }
    // Non-crossing segments: the minimum is attained at an endpoint of one
    // of them, so four point-segment checks cover every case (including
    // parallel and collinear overlaps).
    Candidate best{std::numeric_limits<double>::infinity(), {}, {}, 0.0, 0.0};
    const auto consider = [&best](const Candidate& c) {
        if (better(c, best)) best = c;
    };

    const PointSegmentResult bs = point_segment_distance(b.start, a);
    consider({bs.distance, bs.point, b.start, bs.parameter, 0.0});
    const PointSegmentResult be = point_segment_distance(b.end, a);
    consider({be.distance, be.point, b.end, be.parameter, 1.0});
    const PointSegmentResult as = point_segment_distance(a.start, b);
    consider({as.distance, a.start, as.point, 0.0, as.parameter});
    const PointSegmentResult ae = point_segment_distance(a.end, b);
    consider({ae.distance, a.end, ae.point, 1.0, ae.parameter});

    return {best.dist, best.a, best.b, best.ta, best.tb};
}

bool segment_contains(const DirectedSegment& s, Point2 p, double tol) {
    return point_segment_distance(p, s).distance <= tol;
}

}  // namespace smocked
