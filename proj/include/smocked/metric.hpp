#pragma once

#include "smocked/geom.hpp"
#include "smocked/path.hpp"
#include "smocked/pattern.hpp"

#include <cstddef>
#include <vector>

namespace smocked {

// Complete weighted graph over the stitches of a pattern plus up to two
// query endpoints. Edge weights are nearest distances between the node
// geometries and are computed on demand; a shortest path in this graph
// realizes the smocked distance because every inter-stitch hop term is
// minimized independently.
class StitchGraph {
public:
    explicit StitchGraph(const Pattern& pattern, std::vector<Point2> endpoints = {});

    std::size_t node_count() const { return pattern_->size() + endpoints_.size(); }
    std::size_t stitch_node_count() const { return pattern_->size(); }
    std::size_t endpoint_count() const { return endpoints_.size(); }
    std::size_t edge_count() const;  // complete graph

    bool is_endpoint(std::size_t node) const { return node >= pattern_->size(); }
    std::size_t endpoint_node(std::size_t ordinal) const { return pattern_->size() + ordinal; }
    const Pattern& pattern() const { return *pattern_; }
    DirectedSegment node_geometry(std::size_t node) const;

    double edge_weight(std::size_t u, std::size_t v) const;
    // Nearest pair realizing the edge weight; point_a on u, point_b on v.
    SegmentPairResult edge_witness(std::size_t u, std::size_t v) const;

private:
    const Pattern* pattern_;
    std::vector<Point2> endpoints_;
};

// Endpoints must not lie inside a stitch; project such points to the stitch
// node first (the quotient identifies them).
StitchGraph build_stitch_graph(const Pattern& pattern, std::vector<Point2> endpoints = {});

// Window radius beyond which additional stitches cannot shorten any path
// between x and y.
double required_window(Point2 x, Point2 y, double max_stitch_length);

double stitch_distance(const Pattern& pattern, const StitchIndex& j, const StitchIndex& k);
// Distances from one stitch to every stitch of the pattern, in stitch order.
std::vector<double> single_source_stitch_distances(const Pattern& pattern, const StitchIndex& source);

// Smocked pseudometric between plane points: zero when both map to the same
// quotient point, otherwise the shortest route through the stitch graph
// (the direct segment included).
double pseudometric(const Pattern& pattern, Point2 x, Point2 y);

struct GeodesicResult {
    Path path;
    double distance = 0.0;
    std::size_t stitch_count = 0;  // stitches at segment junctions
};

// Shortest route plus its witness path. Among equal-length routes prefers
// fewer hops, then the lexicographically smallest junction sequence.
GeodesicResult geodesic(const Pattern& pattern, Point2 x, Point2 y);

// Distances from the origin stitch of the unbounded checkered pattern,
// tabulated over index displacements up to a bound. Shortest paths run over
// hop-pruned neighbor templates; after construction the table is certified
// against the pruning invariants (no pruned hop can shorten any route), so
// lookups agree with the complete-graph computation. Point queries anchor
// one endpoint near the origin using the translation symmetry.
class CheckeredDistanceField {
public:
    explicit CheckeredDistanceField(double max_index_displacement);

    double max_index_displacement() const { return window_; }
    double stitch_distance(const StitchIndex& j, const StitchIndex& k) const;
    double distance(Point2 x, Point2 y) const;  // smocked pseudometric

private:
    struct Table {
        long amin = 0, amax = -1, bmin = 0, bmax = -1;
        long cols = 0;
        std::vector<double> values;

        bool contains(long a, long b) const {
            return a >= amin && a <= amax && b >= bmin && b <= bmax;
        }
        double at(long a, long b) const { return values[(a - amin) * cols + (b - bmin)]; }
        double& at(long a, long b) { return values[(a - amin) * cols + (b - bmin)]; }
    };

    struct Candidate {
        int cls;  // 0 horizontal, 1 vertical
        long a, b;
        double cost;
        bool on_stitch;
    };

    void build();
    void certify() const;
    void collect_candidates(Point2 p, std::vector<Candidate>& out) const;

    double request_ = 0.0;
    double window_ = 0.0;
    Table horizontal_;  // displacement (3a, 3b) from the origin stitch
    Table vertical_;    // displacement (1.5 + 3a, 1.5 + 3b)
};

}  // namespace smocked
