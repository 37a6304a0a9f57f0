#include "smocked/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace smocked {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t position_key(double j1, double j2) {
    const auto a = static_cast<std::uint64_t>(static_cast<std::uint32_t>(std::llround(j1 * 2.0)));
    const auto b = static_cast<std::uint64_t>(static_cast<std::uint32_t>(std::llround(j2 * 2.0)));
    return (a << 32) | b;
}

Point2 midpoint(const DirectedSegment& s) { return {0.5 * (s.start.x + s.end.x), 0.5 * (s.start.y + s.end.y)}; }

std::int64_t cell_coord(double v) { return static_cast<std::int64_t>(std::floor(v / 3.0)); }

std::uint64_t cell_key(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(cy));
}

// Minimum pairwise stitch distance via a coarse cell hash. Rings of cells
// are scanned outward until no farther pair can beat the running minimum.
double min_pairwise_stitch_distance(const std::vector<Stitch>& st) {
    if (st.size() < 2) return kInf;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells;
    cells.reserve(st.size() * 2);
    std::int64_t span = 0;
    std::int64_t cx0 = 0, cy0 = 0;
    for (std::uint32_t i = 0; i < st.size(); ++i) {
        const Point2 m = midpoint(st[i].segment);
        const std::int64_t cx = cell_coord(m.x);
        const std::int64_t cy = cell_coord(m.y);
        if (i == 0) {
            cx0 = cx;
            cy0 = cy;
        }
        span = std::max({span, std::abs(cx - cx0), std::abs(cy - cy0)});
        cells[cell_key(cx, cy)].push_back(i);
    }

    double best = kInf;
    for (std::uint32_t i = 0; i < st.size(); ++i) {
        const Point2 m = midpoint(st[i].segment);
        const std::int64_t cx = cell_coord(m.x);
        const std::int64_t cy = cell_coord(m.y);
        double best_i = kInf;
        for (std::int64_t ring = 1; ring <= 2 * span + 1; ++ring) {
            for (std::int64_t dx = -ring; dx <= ring; ++dx) {
                for (std::int64_t dy = -ring; dy <= ring; ++dy) {
                    if (std::max(std::abs(dx), std::abs(dy)) == ring || ring == 1) {
                        const auto it = cells.find(cell_key(cx + dx, cy + dy));
                        if (it == cells.end()) continue;
                        for (std::uint32_t jj : it->second) {
                            if (jj == i) continue;
                            const double d = segment_segment_nearest(st[i].segment, st[jj].segment).distance;
                            best_i = std::min(best_i, d);
                        }
                    }
                }
            }
            // Any pair separated by more than `ring` cells is at least
            // 3*ring - 1 apart (unit stitches), so the scan can stop.
            if (best_i <= 3.0 * ring - 1.0) break;
        }
        best = std::min(best, best_i);
    }
    return best;
}

double probe_depth(const std::vector<Stitch>& st, double x0, double x1, double y0, double y1,
                   double step, Point2* worst) {
    // Coarse pass against every stitch bounds the supremum, then only
    // stitches near the domain participate in the fine pass.
    const double coarse = std::max(step, 0.5);
    double coarse_sup = 0.0;
    const auto grid_count = [](double lo, double hi, double h) {
        return static_cast<long>(std::floor((hi - lo) / h + 1e-9)) + 1;
    };
    const long cnx = grid_count(x0, x1, coarse), cny = grid_count(y0, y1, coarse);
    for (long ix = 0; ix < cnx; ++ix) {
        for (long iy = 0; iy < cny; ++iy) {
            const Point2 p{x0 + ix * coarse, y0 + iy * coarse};
            double d = kInf;
            for (const Stitch& s : st) d = std::min(d, point_segment_distance(p, s.segment).distance);
            coarse_sup = std::max(coarse_sup, d);
        }
    }
    const double margin = coarse_sup + 1.5 * coarse + 1.0;
    std::vector<const Stitch*> near;
    for (const Stitch& s : st) {
        const Point2 m = midpoint(s.segment);
        if (m.x >= x0 - margin && m.x <= x1 + margin && m.y >= y0 - margin && m.y <= y1 + margin)
            near.push_back(&s);
    }

    double sup = 0.0;
    const long nx = grid_count(x0, x1, step), ny = grid_count(y0, y1, step);
    for (long ix = 0; ix < nx; ++ix) {
        for (long iy = 0; iy < ny; ++iy) {
            const Point2 p{x0 + ix * step, y0 + iy * step};
            double d = kInf;
            for (const Stitch* s : near) d = std::min(d, point_segment_distance(p, s->segment).distance);
            if (d > sup) {
                sup = d;
                if (worst) *worst = p;
            }
        }
    }
    return sup;
}

double depth_of(const Pattern& pattern, double step) {
    const std::vector<Stitch>& st = pattern.stitches();
    if (st.empty()) throw std::invalid_argument("smocking depth: pattern has no stitches");
    double x0, x1, y0, y1;
    if (pattern.is_checkered_window()) {
        x0 = y0 = 0.0;
        x1 = y1 = 3.0;
    } else {
        x0 = y0 = kInf;
        x1 = y1 = -kInf;
        for (const Stitch& s : st) {
            for (const Point2 p : {s.segment.start, s.segment.end}) {
                x0 = std::min(x0, p.x);
                x1 = std::max(x1, p.x);
                y0 = std::min(y0, p.y);
                y1 = std::max(y1, p.y);
            }
        }
    }
    return probe_depth(st, x0, x1, y0, y1, step, nullptr);
}

}  // namespace

bool operator==(const StitchIndex& a, const StitchIndex& b) {
    return a.j1 == b.j1 && a.j2 == b.j2 && a.orientation == b.orientation;
}

bool lex_less(const StitchIndex& a, const StitchIndex& b) {
    if (a.j1 != b.j1) return a.j1 < b.j1;
    if (a.j2 != b.j2) return a.j2 < b.j2;
    return a.orientation < b.orientation;
}

std::string to_string(const StitchIndex& j) {
    std::ostringstream out;
    out << (j.orientation == Orientation::Horizontal ? "H" : "V") << "(" << j.j1 << ", " << j.j2 << ")";
    return out.str();
}

DirectedSegment stitch_segment(const StitchIndex& j) {
    if (j.orientation == Orientation::Horizontal)
        return {{j.j1 - 0.5, j.j2}, {j.j1 + 0.5, j.j2}};
    return {{j.j1, j.j2 - 0.5}, {j.j1, j.j2 + 0.5}};
}

namespace {

// Doubled coordinates of checkered indices are 0 mod 6 (horizontal) or
// 3 mod 6 (vertical).
std::optional<Orientation> lattice_class(double j1, double j2, double tol) {
    const auto near_multiple = [tol](double v, long long& out) {
        out = std::llround(v * 2.0);
        return std::abs(v * 2.0 - static_cast<double>(out)) <= 2.0 * tol;
    };
    long long a = 0, b = 0;
    if (!near_multiple(j1, a) || !near_multiple(j2, b)) return std::nullopt;
    const auto mod6 = [](long long v) { return ((v % 6) + 6) % 6; };
    if (mod6(a) == 0 && mod6(b) == 0) return Orientation::Horizontal;
    if (mod6(a) == 3 && mod6(b) == 3) return Orientation::Vertical;
    return std::nullopt;
}

}  // namespace

bool is_checkered_index(const StitchIndex& j, double tol) {
    const auto cls = lattice_class(j.j1, j.j2, tol);
    return cls && *cls == j.orientation;
}

StitchIndex checkered_index_at(double j1, double j2, double tol) {
    const auto cls = lattice_class(j1, j2, tol);
    if (!cls) {
        std::ostringstream msg;
        msg << "(" << j1 << ", " << j2 << ") is not a checkered stitch index";
        throw std::invalid_argument(msg.str());
    }
    return {j1, j2, *cls};
}

Pattern Pattern::from_stitches(std::vector<Stitch> stitches, Extent extent, double window_radius,
                               bool checkered_window) {
    std::sort(stitches.begin(), stitches.end(),
              [](const Stitch& a, const Stitch& b) { return lex_less(a.index, b.index); });

    Pattern p;
    p.stitches_ = std::move(stitches);
    p.extent_ = extent;
    p.checkered_ = checkered_window;
    p.window_radius_ = window_radius;
    p.by_position_.reserve(p.stitches_.size() * 2);
    for (std::uint32_t i = 0; i < p.stitches_.size(); ++i) {
        const StitchIndex& j = p.stitches_[i].index;
        p.by_position_.emplace(position_key(j.j1, j.j2), i);
        p.max_stitch_length_ = std::max(p.max_stitch_length_, length(p.stitches_[i].segment));
    }

    p.separation_ = min_pairwise_stitch_distance(p.stitches_);
    if (p.separation_ <= 1e-12) throw std::invalid_argument("stitches not disjoint");
    if (!p.stitches_.empty()) p.depth_ = depth_of(p, 0.05);
    return p;
}

std::optional<std::size_t> Pattern::find(const StitchIndex& j) const {
    const auto it = by_position_.find(position_key(j.j1, j.j2));
    if (it != by_position_.end()) {
        const StitchIndex& got = stitches_[it->second].index;
        if (got.orientation == j.orientation && std::abs(got.j1 - j.j1) <= 1e-9 &&
            std::abs(got.j2 - j.j2) <= 1e-9)
            return it->second;
    }
    // Hash keys quantize to the half-integer grid; fall back to a scan for
    // patterns placed off it.
    for (std::size_t i = 0; i < stitches_.size(); ++i) {
        const StitchIndex& got = stitches_[i].index;
        if (got.orientation == j.orientation && std::abs(got.j1 - j.j1) <= 1e-9 &&
            std::abs(got.j2 - j.j2) <= 1e-9)
            return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> Pattern::stitch_containing(Point2 p, double tol) const {
    for (std::size_t i = 0; i < stitches_.size(); ++i)
        if (segment_contains(stitches_[i].segment, p, tol)) return i;
    return std::nullopt;
}

Pattern checkered_pattern(double window_radius) {
    if (!(window_radius >= 0.0))
        throw std::invalid_argument("checkered pattern: window radius must be nonnegative");
    std::vector<Stitch> stitches;
    const long mh = static_cast<long>(std::floor(window_radius / 3.0 + 1e-9));
    for (long a = -mh; a <= mh; ++a) {
        for (long b = -mh; b <= mh; ++b) {
            const StitchIndex j{3.0 * a, 3.0 * b, Orientation::Horizontal};
            stitches.push_back({j, stitch_segment(j)});
        }
    }
    const long va = static_cast<long>(std::ceil((-window_radius - 1.5) / 3.0 - 1e-9));
    const long vb = static_cast<long>(std::floor((window_radius - 1.5) / 3.0 + 1e-9));
    for (long a = va; a <= vb; ++a) {
        for (long b = va; b <= vb; ++b) {
            const StitchIndex j{1.5 + 3.0 * a, 1.5 + 3.0 * b, Orientation::Vertical};
            stitches.push_back({j, stitch_segment(j)});
        }
    }
    return Pattern::from_stitches(std::move(stitches), Pattern::Extent::Window, window_radius, true);
}

double separation_factor(const Pattern& pattern) {
    if (pattern.size() < 2) throw std::invalid_argument("separation undefined: fewer than two stitches");
    return pattern.separation();
}

double smocking_depth(const Pattern& pattern, double probe_grid_step) {
    if (!(probe_grid_step > 0.0)) throw std::invalid_argument("probe_grid_step must be positive");
    return depth_of(pattern, probe_grid_step);
}

Pattern parse_pattern_file(const std::string& text) {
    std::vector<Stitch> stitches;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string tag;
        double j1 = 0.0, j2 = 0.0;
        std::string extra;
        if (!(fields >> tag >> j1 >> j2) || (fields >> extra) || (tag != "H" && tag != "V") ||
            !std::isfinite(j1) || !std::isfinite(j2)) {
            throw std::runtime_error("pattern file line " + std::to_string(line_no) +
                                     ": expected `H <j1> <j2>` or `V <j1> <j2>`");
        }
        const StitchIndex j{j1, j2, tag == "H" ? Orientation::Horizontal : Orientation::Vertical};
        stitches.push_back({j, stitch_segment(j)});
    }
    if (stitches.empty()) throw std::runtime_error("pattern file contains no stitches");
    double radius = 0.0;
    for (const Stitch& s : stitches) radius = std::max(radius, norm_inf({s.index.j1, s.index.j2}));
    return Pattern::from_stitches(std::move(stitches), Pattern::Extent::Complete, radius, false);
}

Pattern load_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern_file(buf.str());
}

}  // namespace smocked
