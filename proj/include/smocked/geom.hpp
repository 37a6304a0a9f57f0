#pragma once

#include <algorithm>
#include <cmath>

namespace smocked {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::sqrt(p.x * p.x + p.y * p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline double norm_inf(Point2 p) { return std::max(std::abs(p.x), std::abs(p.y)); }

// Closed planar segment from start to end. start == end is allowed and
// stands for a single point (stationary-path placeholder).
struct DirectedSegment {
    Point2 start;
    Point2 end;
};

inline double length(const DirectedSegment& s) { return distance(s.start, s.end); }

// Nearest point of a segment to a query point.
struct PointSegmentResult {
    double distance = 0.0;
    Point2 point;            // minimizer on the segment
    double parameter = 0.0;  // 0 at start, 1 at end
};

// Nearest pair between two segments. Ties are broken by the smallest
// parameter on the first segment, then on the second.
struct SegmentPairResult {
    double distance = 0.0;
    Point2 point_a;
    Point2 point_b;
    double parameter_a = 0.0;
    double parameter_b = 0.0;
};

PointSegmentResult point_segment_distance(Point2 p, const DirectedSegment& s);
SegmentPairResult segment_segment_nearest(const DirectedSegment& a, const DirectedSegment& b);
bool segment_contains(const DirectedSegment& s, Point2 p, double tol);

}  // namespace smocked
