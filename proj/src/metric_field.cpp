#include "smocked/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace smocked {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// No shortest route needs an inter-stitch hop longer than this; certified
// for every tabulated displacement after construction.
constexpr double kHopCutoff = 14.0;

// Entry and exit hops of point queries beyond this radius are dominated by
// entering the nearest stitch and travelling inside the network. The bound
// follows from the certified growth of the table (rate 0.722, offset 1.6)
// and the 1.5 covering radius of the pattern.
constexpr double kPointCutoff = 18.0;

// Lattice padding past the requested displacement so that entry/exit
// candidates and boundary routes stay inside the table.
constexpr double kPad = 45.0;

struct TemplateEdge {
    int da;
    int db;
    double weight;
};

DirectedSegment rep_segment(int cls, long a, long b) {
    if (cls == 0) return stitch_segment({3.0 * a, 3.0 * b, Orientation::Horizontal});
    return stitch_segment({1.5 + 3.0 * a, 1.5 + 3.0 * b, Orientation::Vertical});
}

std::vector<TemplateEdge> make_template(int source_cls, int target_cls) {
    std::vector<TemplateEdge> edges;
    const DirectedSegment src = rep_segment(source_cls, 0, 0);
    for (int da = -6; da <= 6; ++da) {
        for (int db = -6; db <= 6; ++db) {
            if (source_cls == target_cls && da == 0 && db == 0) continue;
            const double w = segment_segment_nearest(src, rep_segment(target_cls, da, db)).distance;
            if (w <= kHopCutoff) edges.push_back({da, db, w});
        }
    }
    return edges;
}

}  // namespace

CheckeredDistanceField::CheckeredDistanceField(double max_index_displacement) {
    if (!(max_index_displacement >= 0.0))
        throw std::invalid_argument("distance field: displacement bound must be nonnegative");
    request_ = max_index_displacement;
    window_ = max_index_displacement + kPad;
    if (window_ > 6000.0)
        throw std::invalid_argument("distance field: displacement bound too large to tabulate");

    const long mh = static_cast<long>(std::floor(window_ / 3.0 + 1e-9));
    horizontal_.amin = horizontal_.bmin = -mh;
    horizontal_.amax = horizontal_.bmax = mh;
    horizontal_.cols = 2 * mh + 1;
    horizontal_.values.assign(static_cast<std::size_t>(horizontal_.cols) * horizontal_.cols, kInf);

    const long va = static_cast<long>(std::ceil((-window_ - 1.5) / 3.0 - 1e-9));
    const long vb = static_cast<long>(std::floor((window_ - 1.5) / 3.0 + 1e-9));
    vertical_.amin = vertical_.bmin = va;
    vertical_.amax = vertical_.bmax = vb;
    vertical_.cols = vb - va + 1;
    vertical_.values.assign(static_cast<std::size_t>(vertical_.cols) * vertical_.cols, kInf);

    build();
    certify();
}

void CheckeredDistanceField::build() {
    const std::vector<TemplateEdge> hh = make_template(0, 0);
    const std::vector<TemplateEdge> hv = make_template(0, 1);
    const std::vector<TemplateEdge> vh = make_template(1, 0);
    const std::vector<TemplateEdge> vv = make_template(1, 1);

    const std::size_t nh = horizontal_.values.size();
    const std::size_t n = nh + vertical_.values.size();

    const auto key = [&](std::size_t id) -> double& {
        return id < nh ? horizontal_.values[id] : vertical_.values[id - nh];
    };

    // 4-ary indexed heap keyed on the table values themselves.
    std::vector<std::int32_t> heap;
    std::vector<std::int32_t> pos(n, -1);
    heap.reserve(1 << 16);

    const auto sift_up = [&](std::size_t slot) {
        const std::int32_t node = heap[slot];
        const double k = key(node);
        while (slot > 0) {
            const std::size_t up = (slot - 1) / 4;
            if (key(heap[up]) <= k) break;
            heap[slot] = heap[up];
            pos[heap[slot]] = static_cast<std::int32_t>(slot);
            slot = up;
        }
        heap[slot] = node;
        pos[node] = static_cast<std::int32_t>(slot);
    };
    const auto sift_down = [&](std::size_t slot) {
        const std::int32_t node = heap[slot];
        const double k = key(node);
        for (;;) {
            std::size_t child = 4 * slot + 1;
            if (child >= heap.size()) break;
            std::size_t smallest = child;
            double sk = key(heap[child]);
            const std::size_t last = std::min(child + 4, heap.size());
            for (std::size_t c = child + 1; c < last; ++c) {
                const double ck = key(heap[c]);
                if (ck < sk) {
                    sk = ck;
                    smallest = c;
                }
            }
            if (sk >= k) break;
            heap[slot] = heap[smallest];
            pos[heap[slot]] = static_cast<std::int32_t>(slot);
            slot = smallest;
        }
        heap[slot] = node;
        pos[node] = static_cast<std::int32_t>(slot);
    };
    const auto push_or_decrease = [&](std::size_t id) {
        if (pos[id] < 0) {
            heap.push_back(static_cast<std::int32_t>(id));
            sift_up(heap.size() - 1);
        } else {
            sift_up(static_cast<std::size_t>(pos[id]));
        }
    };
    const auto pop_min = [&]() {
        const std::int32_t top = heap[0];
        pos[top] = -2;  // settled
        const std::int32_t tail = heap.back();
        heap.pop_back();
        if (!heap.empty()) {
            heap[0] = tail;
            pos[tail] = 0;
            sift_down(0);
        }
        return top;
    };

    const auto h_id = [&](long a, long b) {
        return static_cast<std::size_t>((a - horizontal_.amin) * horizontal_.cols + (b - horizontal_.bmin));
    };
    const auto v_id = [&](long a, long b) {
        return nh + static_cast<std::size_t>((a - vertical_.amin) * vertical_.cols + (b - vertical_.bmin));
    };

    horizontal_.at(0, 0) = 0.0;
    push_or_decrease(h_id(0, 0));

    while (!heap.empty()) {
        const std::size_t u = static_cast<std::size_t>(pop_min());
        const bool from_h = u < nh;
        long a, b;
        if (from_h) {
            const long flat = static_cast<long>(u);
            a = horizontal_.amin + flat / horizontal_.cols;
            b = horizontal_.bmin + flat % horizontal_.cols;
        } else {
            const long flat = static_cast<long>(u - nh);
            a = vertical_.amin + flat / vertical_.cols;
            b = vertical_.bmin + flat % vertical_.cols;
        }
        const double du = key(u);

        const auto relax = [&](const std::vector<TemplateEdge>& edges, Table& t, bool to_h) {
            for (const TemplateEdge& e : edges) {
                const long ta = a + e.da, tb = b + e.db;
                if (!t.contains(ta, tb)) continue;
                const std::size_t vid = to_h ? h_id(ta, tb) : v_id(ta, tb);
                if (pos[vid] == -2) continue;
                const double nd = du + e.weight;
                if (nd < key(vid)) {
                    key(vid) = nd;
                    push_or_decrease(vid);
                }
            }
        };
        if (from_h) {
            relax(hh, horizontal_, true);
            relax(hv, vertical_, false);
        } else {
            relax(vh, horizontal_, true);
            relax(vv, vertical_, false);
        }
    }
}

void CheckeredDistanceField::certify() const {
    const DirectedSegment origin = rep_segment(0, 0, 0);
    const auto check = [&](int cls, const Table& t) {
        for (long a = t.amin; a <= t.amax; ++a) {
            for (long b = t.bmin; b <= t.bmax; ++b) {
                if (cls == 0 && a == 0 && b == 0) continue;
                const double d = t.at(a, b);
                const double hop = segment_segment_nearest(origin, rep_segment(cls, a, b)).distance;
                if (!std::isfinite(d) || d > hop + 1e-9 || d > 0.722 * hop + 1.6 + 1e-9)
                    throw std::logic_error("distance field: hop pruning certificate failed");
            }
        }
    };
    check(0, horizontal_);
    check(1, vertical_);
}

void CheckeredDistanceField::collect_candidates(Point2 p, std::vector<Candidate>& out) const {
    out.clear();
    const auto scan = [&](int cls) {
        const double off = cls == 0 ? 0.0 : 1.5;
        // Stitch centers within reach of the cutoff (half a unit of slack
        // for the stitch extent).
        const long a0 = static_cast<long>(std::ceil((p.x - kPointCutoff - 0.5 - off) / 3.0));
        const long a1 = static_cast<long>(std::floor((p.x + kPointCutoff + 0.5 - off) / 3.0));
        const long b0 = static_cast<long>(std::ceil((p.y - kPointCutoff - 0.5 - off) / 3.0));
        const long b1 = static_cast<long>(std::floor((p.y + kPointCutoff + 0.5 - off) / 3.0));
        for (long a = a0; a <= a1; ++a) {
            for (long b = b0; b <= b1; ++b) {
                const double d = point_segment_distance(p, rep_segment(cls, a, b)).distance;
                if (d <= 1e-9) {
                    out.clear();
                    out.push_back({cls, a, b, 0.0, true});
                    return true;
                }
                if (d <= kPointCutoff) out.push_back({cls, a, b, d, false});
            }
        }
        return false;
    };
    if (scan(0)) return;
    if (scan(1)) return;
}

double CheckeredDistanceField::distance(Point2 x, Point2 y) const {
    if (x == y) return 0.0;
    const Point2 shift{3.0 * std::round(x.x / 3.0), 3.0 * std::round(x.y / 3.0)};
    const Point2 a = x - shift;
    const Point2 b = y - shift;
    if (norm_inf(a - b) > request_ + 1e-9) {
        std::ostringstream msg;
        msg << "distance field covers displacements up to " << request_ << "; query needs "
            << norm_inf(a - b);
        throw std::invalid_argument(msg.str());
    }

    std::vector<Candidate> entries, exits;
    collect_candidates(a, entries);
    collect_candidates(b, exits);

    const bool a_on = !entries.empty() && entries.front().on_stitch;
    const bool b_on = !exits.empty() && exits.front().on_stitch;
    if (a_on && b_on) {
        const Candidate& s = entries.front();
        const Candidate& t = exits.front();
        if (s.cls == t.cls && s.a == t.a && s.b == t.b) return 0.0;
    }

    double best = (!a_on && !b_on) ? norm(a - b) : kInf;

    // Exits sorted so that table rows are walked contiguously: plain order
    // for horizontal entries, transposed order for vertical entries (whose
    // displacements are reflected across the diagonal).
    std::vector<Candidate> row_major = exits;
    std::sort(row_major.begin(), row_major.end(), [](const Candidate& l, const Candidate& r) {
        return std::tie(l.cls, l.a, l.b) < std::tie(r.cls, r.a, r.b);
    });
    std::vector<Candidate> col_major = exits;
    std::sort(col_major.begin(), col_major.end(), [](const Candidate& l, const Candidate& r) {
        return std::tie(l.cls, l.b, l.a) < std::tie(r.cls, r.b, r.a);
    });

    for (const Candidate& s : entries) {
        if (s.cost >= best) continue;
        if (s.cls == 0) {
            for (const Candidate& t : row_major) {
                const Table& table = t.cls == 0 ? horizontal_ : vertical_;
                const long ra = t.a - s.a, rb = t.b - s.b;
                if (!table.contains(ra, rb)) continue;
                const double cand = s.cost + table.at(ra, rb) + t.cost;
                if (cand < best) best = cand;
            }
        } else {
            for (const Candidate& t : col_major) {
                // Reflect across the diagonal: vertical targets land in the
                // horizontal table and vice versa.
                const bool th = t.cls == 0;
                const Table& table = th ? vertical_ : horizontal_;
                const long ra = th ? t.b - s.b - 1 : t.b - s.b;
                const long rb = th ? t.a - s.a - 1 : t.a - s.a;
                if (!table.contains(ra, rb)) continue;
                const double cand = s.cost + table.at(ra, rb) + t.cost;
                if (cand < best) best = cand;
            }
        }
    }
    return best;
}

double CheckeredDistanceField::stitch_distance(const StitchIndex& j, const StitchIndex& k) const {
    if (!is_checkered_index(j) || !is_checkered_index(k))
        throw std::invalid_argument("distance field: not a checkered stitch index");
    if (j == k) return 0.0;

    double d1, d2;
    Orientation target;
    if (j.orientation == Orientation::Horizontal) {
        d1 = k.j1 - j.j1;
        d2 = k.j2 - j.j2;
        target = k.orientation;
    } else {
        d1 = k.j2 - j.j2;
        d2 = k.j1 - j.j1;
        target = k.orientation == Orientation::Vertical ? Orientation::Horizontal
                                                        : Orientation::Vertical;
    }
    const Table& table = target == Orientation::Horizontal ? horizontal_ : vertical_;
    const double off = target == Orientation::Horizontal ? 0.0 : 1.5;
    const long a = std::lround((d1 - off) / 3.0);
    const long b = std::lround((d2 - off) / 3.0);
    if (!table.contains(a, b)) {
        std::ostringstream msg;
        msg << "distance field covers displacements up to " << request_ << "; stitch pair needs "
            << std::max(std::abs(d1), std::abs(d2));
        throw std::invalid_argument(msg.str());
    }
    return table.at(a, b);
}

}  // namespace smocked
