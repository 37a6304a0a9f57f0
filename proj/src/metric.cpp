#include "smocked/metric.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace smocked {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTie = 1e-12;

}  // namespace

StitchGraph::StitchGraph(const Pattern& pattern, std::vector<Point2> endpoints)
    : pattern_(&pattern), endpoints_(std::move(endpoints)) {
    if (endpoints_.size() > 2) throw std::invalid_argument("stitch graph: at most two endpoints");
    for (const Point2& p : endpoints_) {
        if (pattern.stitch_containing(p))
            throw std::invalid_argument("stitch graph: endpoint lies in a stitch; "
                                        "identify it with the stitch node instead");
    }
}

std::size_t StitchGraph::edge_count() const {
    const std::size_t n = node_count();
    return n * (n - 1) / 2;
}

DirectedSegment StitchGraph::node_geometry(std::size_t node) const {
    if (node < pattern_->size()) return pattern_->stitches()[node].segment;
    const Point2 p = endpoints_.at(node - pattern_->size());
    return {p, p};
}

double StitchGraph::edge_weight(std::size_t u, std::size_t v) const {
    return segment_segment_nearest(node_geometry(u), node_geometry(v)).distance;
}

SegmentPairResult StitchGraph::edge_witness(std::size_t u, std::size_t v) const {
    return segment_segment_nearest(node_geometry(u), node_geometry(v));
}

StitchGraph build_stitch_graph(const Pattern& pattern, std::vector<Point2> endpoints) {
    return StitchGraph(pattern, std::move(endpoints));
}

double required_window(Point2 x, Point2 y, double max_stitch_length) {
    // Any stitch that can shorten a route lies within |x - y| + L of the
    // endpoint closer to the origin; 3 covers the conversion to indices.
    return std::min(norm_inf(x), norm_inf(y)) + distance(x, y) + max_stitch_length + 3.0;
}

namespace {

// Label-setting over the complete graph with on-demand weights.
std::vector<double> dijkstra_distances(const StitchGraph& g, std::size_t src,
                                       std::optional<std::size_t> stop = std::nullopt) {
    const std::size_t n = g.node_count();
    std::vector<double> dist(n, kInf);
    std::vector<char> settled(n, 0);
    dist[src] = 0.0;
    for (std::size_t round = 0; round < n; ++round) {
        std::size_t u = n;
        double best = kInf;
        for (std::size_t i = 0; i < n; ++i)
            if (!settled[i] && dist[i] < best) {
                best = dist[i];
                u = i;
            }
        if (u == n) break;
        settled[u] = 1;
        if (stop && u == *stop) break;
        for (std::size_t v = 0; v < n; ++v) {
            if (settled[v] || v == u) continue;
            const double nd = dist[u] + g.edge_weight(u, v);
            if (nd < dist[v]) dist[v] = nd;
        }
    }
    return dist;
}

struct WitnessLabels {
    std::vector<double> dist;
    std::vector<std::uint32_t> hops;
    std::vector<std::int64_t> parent;
};

// Junction sequence a route would have after being extended past `u`:
// every node after the source, including u itself.
std::vector<std::size_t> junction_sequence(const std::vector<std::int64_t>& parent, std::size_t u) {
    std::vector<std::size_t> chain;
    for (std::int64_t w = static_cast<std::int64_t>(u); parent[w] >= 0; w = parent[w])
        chain.push_back(static_cast<std::size_t>(w));
    std::reverse(chain.begin(), chain.end());
    return chain;
}

// Dijkstra keeping, among equal-length routes, the one with fewest hops and
// then the lexicographically smallest junction sequence. Node ids follow
// the pattern's lexicographic stitch order, so id sequences compare the
// same way as index sequences.
WitnessLabels dijkstra_witness(const StitchGraph& g, std::size_t src, std::size_t dst) {
    const std::size_t n = g.node_count();
    WitnessLabels lab{std::vector<double>(n, kInf), std::vector<std::uint32_t>(n, 0),
                      std::vector<std::int64_t>(n, -1)};
    std::vector<char> settled(n, 0);
    lab.dist[src] = 0.0;

    const auto tie_better = [&](std::size_t via, std::size_t v) {
        const std::uint32_t nh = lab.hops[via] + 1;
        if (nh != lab.hops[v]) return nh < lab.hops[v];
        // Junctions of the candidate route to v are those accumulated up to
        // and including `via`; the incumbent's are those up to v's parent.
        const std::vector<std::size_t> cand = junction_sequence(lab.parent, via);
        std::vector<std::size_t> cur;
        if (lab.parent[v] >= 0)
            cur = junction_sequence(lab.parent, static_cast<std::size_t>(lab.parent[v]));
        return std::lexicographical_compare(cand.begin(), cand.end(), cur.begin(), cur.end());
    };

    bool dst_settled = false;
    for (std::size_t round = 0; round < n; ++round) {
        std::size_t u = n;
        double best = kInf;
        std::uint32_t best_hops = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (settled[i] || lab.dist[i] == kInf) continue;
            if (u == n || lab.dist[i] < best - kTie ||
                (lab.dist[i] <= best + kTie && lab.hops[i] < best_hops)) {
                best = lab.dist[i];
                best_hops = lab.hops[i];
                u = i;
            }
        }
        if (u == n) break;
        settled[u] = 1;
        if (u == dst) dst_settled = true;
        if (dst_settled && lab.dist[u] > lab.dist[dst] + kTie) break;

        for (std::size_t v = 0; v < n; ++v) {
            if (v == u) continue;
            // Settled labels are final except for equal-length refinements
            // of the destination, whose chain nobody else depends on.
            if (settled[v] && v != dst) continue;
            const double nd = lab.dist[u] + g.edge_weight(u, v);
            if (nd < lab.dist[v] - kTie) {
                if (settled[v]) continue;
                lab.dist[v] = nd;
                lab.hops[v] = lab.hops[u] + 1;
                lab.parent[v] = static_cast<std::int64_t>(u);
            } else if (nd <= lab.dist[v] + kTie && tie_better(u, v)) {
                lab.dist[v] = std::min(lab.dist[v], nd);
                lab.hops[v] = lab.hops[u] + 1;
                lab.parent[v] = static_cast<std::int64_t>(u);
            }
        }
    }
    return lab;
}

void check_window(const Pattern& pattern, Point2 x, Point2 y) {
    if (pattern.extent() != Pattern::Extent::Window) return;
    const double need = required_window(x, y, pattern.max_stitch_length());
    if (pattern.window_radius() + 1e-9 < need) {
        std::ostringstream msg;
        msg << "pattern window radius " << pattern.window_radius()
            << " is insufficient for this query; need at least " << need;
        throw std::invalid_argument(msg.str());
    }
}

std::size_t require_stitch(const Pattern& pattern, const StitchIndex& j) {
    const auto at = pattern.find(j);
    if (!at) throw std::invalid_argument("stitch " + to_string(j) + " is not in the pattern");
    return *at;
}

}  // namespace

double stitch_distance(const Pattern& pattern, const StitchIndex& j, const StitchIndex& k) {
    const std::size_t a = require_stitch(pattern, j);
    const std::size_t b = require_stitch(pattern, k);
    if (a == b) return 0.0;
    const StitchGraph g(pattern);
    return dijkstra_distances(g, a, b)[b];
}

std::vector<double> single_source_stitch_distances(const Pattern& pattern, const StitchIndex& source) {
    const std::size_t a = require_stitch(pattern, source);
    const StitchGraph g(pattern);
    auto dist = dijkstra_distances(g, a);
    dist.resize(pattern.size());
    return dist;
}

double pseudometric(const Pattern& pattern, Point2 x, Point2 y) {
    check_window(pattern, x, y);
    const auto sx = pattern.stitch_containing(x);
    const auto sy = pattern.stitch_containing(y);
    if (sx && sy && *sx == *sy) return 0.0;
    if (!sx && !sy && x == y) return 0.0;

    std::vector<Point2> endpoints;
    std::size_t src, dst;
    if (sx) {
        src = *sx;
    } else {
        src = pattern.size() + endpoints.size();
        endpoints.push_back(x);
    }
    if (sy) {
        dst = *sy;
    } else {
        dst = pattern.size() + endpoints.size();
        endpoints.push_back(y);
    }
    const StitchGraph g(pattern, std::move(endpoints));
    return dijkstra_distances(g, src, dst)[dst];
}

GeodesicResult geodesic(const Pattern& pattern, Point2 x, Point2 y) {
    check_window(pattern, x, y);
    const auto sx = pattern.stitch_containing(x);
    const auto sy = pattern.stitch_containing(y);

    GeodesicResult res;
    if ((sx && sy && *sx == *sy) || (!sx && !sy && x == y)) {
        res.path.segments.push_back({x, x});
        res.path.total_length = 0.0;
        res.distance = 0.0;
        res.stitch_count = 0;
        return res;
    }

    std::vector<Point2> endpoints;
    std::size_t src, dst;
    if (sx) {
        src = *sx;
    } else {
        src = pattern.size() + endpoints.size();
        endpoints.push_back(x);
    }
    if (sy) {
        dst = *sy;
    } else {
        dst = pattern.size() + endpoints.size();
        endpoints.push_back(y);
    }
    const StitchGraph g(pattern, std::move(endpoints));
    const WitnessLabels lab = dijkstra_witness(g, src, dst);
    if (lab.dist[dst] == kInf) throw std::logic_error("geodesic: destination unreachable");

    std::vector<std::size_t> chain = junction_sequence(lab.parent, dst);
    chain.insert(chain.begin(), src);

    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const SegmentPairResult w = g.edge_witness(chain[i], chain[i + 1]);
        res.path.segments.push_back({w.point_a, w.point_b});
        res.path.total_length += distance(w.point_a, w.point_b);
        if (i + 2 < chain.size())
            res.path.visited_stitches.push_back(pattern.stitches()[chain[i + 1]].index);
    }
    res.distance = lab.dist[dst];
    res.stitch_count = res.path.visited_stitches.size();
    return res;
}

}  // namespace smocked
