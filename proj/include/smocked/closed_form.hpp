#pragma once

#include "smocked/geom.hpp"
#include "smocked/path.hpp"
#include "smocked/pattern.hpp"

#include <optional>

namespace smocked {

// Norm whose unit ball is a regular octagon with vertices (+-1.5, 0),
// (0, +-1.5) and (+-3*sqrt(2)/4, +-3*sqrt(2)/4); it estimates the checkered
// smocked distance uniformly.
double octagon_norm(Point2 v);

// Distance in the checkered smocked plane from the origin stitch to stitch
// j, in closed form. j must be a checkered index other than the origin (the
// aligned-column branch does not vanish there).
double closed_form_distance_from_origin(const StitchIndex& j);
double closed_form_stitch_distance(const StitchIndex& j, const StitchIndex& k);

// Self-map of the checkered pattern taking stitch j to the origin stitch:
// a reflection across the main diagonal when j is vertical, followed by a
// translation.
struct PlaneIsometry {
    bool swap_xy = false;
    Point2 translation;

    Point2 apply(Point2 p) const;
    Point2 apply_inverse(Point2 p) const;
    StitchIndex apply(const StitchIndex& j) const;
    StitchIndex apply_inverse(const StitchIndex& j) const;
    DirectedSegment apply(const DirectedSegment& s) const;
    DirectedSegment apply_inverse(const DirectedSegment& s) const;
};

PlaneIsometry isometry_to_origin(const StitchIndex& j);

// The eight canonical hops between neighboring stitches: diagonals of
// length sqrt(2) between any stitch and the four diagonal neighbors,
// horizontals/verticals of length 2 between same-class neighbors.
enum class PartKind { NE, NW, SE, SW, Right, Left, Up, Down };
const char* part_kind_name(PartKind k);

struct NetworkPart {
    PartKind kind;
    StitchIndex target;
    DirectedSegment segment;
};

// The canonical shortest network route from stitch j to stitch k, shaped
// case by case from diagonal runs plus an axis run and transported by the
// pattern isometry. Its length always matches canonical_path_length.
Path canonical_network_path(const StitchIndex& j, const StitchIndex& k);
double canonical_path_length(const StitchIndex& j, const StitchIndex& k);

// Length of the single straight segment between the two stitches.
double euclidean_stitch_distance(const StitchIndex& j, const StitchIndex& k);

// (|j1| + |j2|) / 3: hop count of every monotone network route from the
// origin stitch to j.
double index_depth(const StitchIndex& j);
// (2/3) min(|j1|, |j2|): diagonal hops on a shortest monotone route;
// requires j1 != 0.
long max_diagonal_count(const StitchIndex& j);
// D diagonals and n - D axis hops: D*sqrt(2) + 2*(n - D).
double network_path_length(long combinatorial_length, long diagonal_count);

bool is_network_adjacent(const StitchIndex& j, const StitchIndex& k);
std::optional<NetworkPart> classify_network_part(const DirectedSegment& s, const Pattern& pattern,
                                                 double tol = 1e-9);
// True when every segment classifies as a network part and all parts fall
// in one quadrant set ({Up,Right,NE}, {Up,Left,NW}, {Down,Left,SW} or
// {Down,Right,SE}); throws when a segment is not a network part.
bool is_monotone_network_path(const Path& path, const Pattern& pattern, double tol = 1e-9);

// The three inequalities certifying that network routes beat the straight
// segment: squared route length vs squared stitch gap toward a vertical
// neighbor (CornerNeighbor, |x|,|y| >= 1.5), toward a horizontal stitch
// (AxisNeighbor, (x,y) on 3Z x 3Z with |x| >= 3), and the aligned-column
// route vs the vertical gap (AlignedColumn, |y| >= 3).
enum class DominanceCase { CornerNeighbor, AxisNeighbor, AlignedColumn };

struct InequalityCheck {
    bool holds = false;
    double slack = 0.0;  // rhs - lhs
    double lhs = 0.0;
    double rhs = 0.0;
};

InequalityCheck dominance_inequality(DominanceCase which, double x, double y);

}  // namespace smocked
