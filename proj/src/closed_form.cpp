#include "smocked/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace smocked {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

StitchIndex require_checkered(const StitchIndex& j, const char* who) {
    if (!is_checkered_index(j))
        throw std::invalid_argument(std::string(who) + ": " + to_string(j) +
                                    " is not a checkered stitch index");
    return j;
}

bool is_origin(const StitchIndex& j) { return j.j1 == 0.0 && j.j2 == 0.0; }

long exact_count(double v, const char* who) {
    const long n = std::lround(v);
    if (std::abs(v - static_cast<double>(n)) > 1e-9)
        throw std::logic_error(std::string(who) + ": expected an integer count");
    return n;
}

}  // namespace

double octagon_norm(Point2 v) {
    const double a = std::abs(v.x);
    const double b = std::abs(v.y);
    return (kSqrt2 / 3.0) * (a + b) + ((2.0 - kSqrt2) / 3.0) * std::abs(a - b);
}

double closed_form_distance_from_origin(const StitchIndex& j) {
    require_checkered(j, "closed form");
    if (is_origin(j))
        throw std::invalid_argument("closed form: undefined at the origin stitch");
    if (j.j1 == 0.0) return 2.0 * kSqrt2 + (2.0 / 3.0) * std::abs(j.j2) - 2.0;
    return octagon_norm({j.j1, j.j2});
}

Point2 PlaneIsometry::apply(Point2 p) const {
    if (swap_xy) std::swap(p.x, p.y);
    return p + translation;
}

Point2 PlaneIsometry::apply_inverse(Point2 p) const {
    p = p - translation;
    if (swap_xy) std::swap(p.x, p.y);
    return p;
}

StitchIndex PlaneIsometry::apply(const StitchIndex& j) const {
    const Point2 p = apply(Point2{j.j1, j.j2});
    Orientation o = j.orientation;
    if (swap_xy)
        o = o == Orientation::Horizontal ? Orientation::Vertical : Orientation::Horizontal;
    return {p.x, p.y, o};
}

StitchIndex PlaneIsometry::apply_inverse(const StitchIndex& j) const {
    const Point2 p = apply_inverse(Point2{j.j1, j.j2});
    Orientation o = j.orientation;
    if (swap_xy)
        o = o == Orientation::Horizontal ? Orientation::Vertical : Orientation::Horizontal;
    return {p.x, p.y, o};
}

DirectedSegment PlaneIsometry::apply(const DirectedSegment& s) const {
    return {apply(s.start), apply(s.end)};
}

DirectedSegment PlaneIsometry::apply_inverse(const DirectedSegment& s) const {
    return {apply_inverse(s.start), apply_inverse(s.end)};
}

PlaneIsometry isometry_to_origin(const StitchIndex& j) {
    require_checkered(j, "isometry");
    PlaneIsometry iso;
    iso.swap_xy = j.orientation == Orientation::Vertical;
    const Point2 image = iso.swap_xy ? Point2{j.j2, j.j1} : Point2{j.j1, j.j2};
    iso.translation = {-image.x, -image.y};
    return iso;
}

double closed_form_stitch_distance(const StitchIndex& j, const StitchIndex& k) {
    require_checkered(j, "closed form");
    require_checkered(k, "closed form");
    if (j == k) return 0.0;
    return closed_form_distance_from_origin(isometry_to_origin(j).apply(k));
}

const char* part_kind_name(PartKind k) {
    switch (k) {
        case PartKind::NE: return "NE";
        case PartKind::NW: return "NW";
        case PartKind::SE: return "SE";
        case PartKind::SW: return "SW";
        case PartKind::Right: return "Right";
        case PartKind::Left: return "Left";
        case PartKind::Up: return "Up";
        case PartKind::Down: return "Down";
    }
    return "?";
}

namespace {

Point2 part_offset(PartKind k) {
    switch (k) {
        case PartKind::NE: return {1.5, 1.5};
        case PartKind::NW: return {-1.5, 1.5};
        case PartKind::SE: return {1.5, -1.5};
        case PartKind::SW: return {-1.5, -1.5};
        case PartKind::Right: return {3.0, 0.0};
        case PartKind::Left: return {-3.0, 0.0};
        case PartKind::Up: return {0.0, 3.0};
        case PartKind::Down: return {0.0, -3.0};
    }
    return {};
}

PartKind reflect_x(PartKind k) {
    switch (k) {
        case PartKind::NE: return PartKind::SE;
        case PartKind::SE: return PartKind::NE;
        case PartKind::NW: return PartKind::SW;
        case PartKind::SW: return PartKind::NW;
        case PartKind::Up: return PartKind::Down;
        case PartKind::Down: return PartKind::Up;
        default: return k;
    }
}

PartKind reflect_y(PartKind k) {
    switch (k) {
        case PartKind::NE: return PartKind::NW;
        case PartKind::NW: return PartKind::NE;
        case PartKind::SE: return PartKind::SW;
        case PartKind::SW: return PartKind::SE;
        case PartKind::Right: return PartKind::Left;
        case PartKind::Left: return PartKind::Right;
        default: return k;
    }
}

// Word of hops from the origin stitch to (j1, j2): a diagonal run plus an
// axis run, with an extra pair of opposite diagonals in the aligned column
// case; negative quadrants by reflection.
void append_origin_word(double j1, double j2, std::vector<PartKind>& word) {
    if (j1 < 0.0) {
        const std::size_t from = word.size();
        append_origin_word(-j1, j2, word);
        for (std::size_t i = from; i < word.size(); ++i) word[i] = reflect_y(word[i]);
        return;
    }
    if (j2 < 0.0) {
        const std::size_t from = word.size();
        append_origin_word(j1, -j2, word);
        for (std::size_t i = from; i < word.size(); ++i) word[i] = reflect_x(word[i]);
        return;
    }
    if (j1 == 0.0) {
        const long climbs = exact_count(j2 / 3.0, "network word") - 1;
        word.push_back(PartKind::NE);
        word.insert(word.end(), climbs, PartKind::Up);
        word.push_back(PartKind::NW);
    } else if (j1 <= j2) {
        const long climbs = exact_count((j2 - j1) / 3.0, "network word");
        const long diagonals = exact_count(2.0 * j1 / 3.0, "network word") - 1;
        word.push_back(PartKind::NE);
        word.insert(word.end(), climbs, PartKind::Up);
        word.insert(word.end(), diagonals, PartKind::NE);
    } else {
        const long shifts = exact_count((j1 - j2) / 3.0, "network word");
        const long diagonals = exact_count(2.0 * j2 / 3.0, "network word");
        word.insert(word.end(), shifts, PartKind::Right);
        word.insert(word.end(), diagonals, PartKind::NE);
    }
}

StitchIndex part_target(const StitchIndex& from, PartKind k) {
    const Point2 off = part_offset(k);
    const StitchIndex to = checkered_index_at(from.j1 + off.x, from.j2 + off.y);
    const bool axis = k == PartKind::Right || k == PartKind::Left || k == PartKind::Up ||
                      k == PartKind::Down;
    if (axis && to.orientation != from.orientation)
        throw std::logic_error("network word: axis hop between different stitch classes");
    return to;
}

}  // namespace

Path canonical_network_path(const StitchIndex& j, const StitchIndex& k) {
    require_checkered(j, "network path");
    require_checkered(k, "network path");

    Path path;
    if (j == k) {
        const Point2 c{j.j1, j.j2};
        path.segments.push_back({c, c});
        path.total_length = 0.0;
        return path;
    }

    const PlaneIsometry iso = isometry_to_origin(j);
    const StitchIndex image = iso.apply(k);
    std::vector<PartKind> word;
    append_origin_word(image.j1, image.j2, word);

    StitchIndex cur{0.0, 0.0, Orientation::Horizontal};
    for (std::size_t i = 0; i < word.size(); ++i) {
        const StitchIndex next = part_target(cur, word[i]);
        const SegmentPairResult hop =
            segment_segment_nearest(stitch_segment(cur), stitch_segment(next));
        path.segments.push_back(iso.apply_inverse(DirectedSegment{hop.point_a, hop.point_b}));
        path.total_length += hop.distance;
        if (i + 1 < word.size()) path.visited_stitches.push_back(iso.apply_inverse(next));
        cur = next;
    }
    if (!(cur == image)) throw std::logic_error("network path: word does not reach the target");
    return path;
}

double canonical_path_length(const StitchIndex& j, const StitchIndex& k) {
    require_checkered(j, "network path length");
    require_checkered(k, "network path length");
    if (j == k) return 0.0;
    const StitchIndex image = isometry_to_origin(j).apply(k);
    const double a = std::abs(image.j1);
    const double b = std::abs(image.j2);
    if (a == 0.0) return 2.0 * kSqrt2 + (2.0 / 3.0) * b - 2.0;
    return (2.0 * kSqrt2 / 3.0) * std::min(a, b) + (2.0 / 3.0) * std::abs(a - b);
}

double euclidean_stitch_distance(const StitchIndex& j, const StitchIndex& k) {
    return segment_segment_nearest(stitch_segment(j), stitch_segment(k)).distance;
}

double index_depth(const StitchIndex& j) {
    require_checkered(j, "depth");
    return (std::abs(j.j1) + std::abs(j.j2)) / 3.0;
}

long max_diagonal_count(const StitchIndex& j) {
    require_checkered(j, "diagonal count");
    if (j.j1 == 0.0) throw std::invalid_argument("diagonal count: undefined on the aligned column");
    return exact_count((2.0 / 3.0) * std::min(std::abs(j.j1), std::abs(j.j2)), "diagonal count");
}

double network_path_length(long combinatorial_length, long diagonal_count) {
    if (diagonal_count < 0 || combinatorial_length < diagonal_count)
        throw std::invalid_argument("network path length: need 0 <= diagonals <= hops");
    return diagonal_count * kSqrt2 + 2.0 * static_cast<double>(combinatorial_length - diagonal_count);
}

namespace {

std::optional<PartKind> kind_for_offset(const StitchIndex& from, const StitchIndex& to, double tol) {
    const double dx = to.j1 - from.j1;
    const double dy = to.j2 - from.j2;
    const auto is = [tol](double v, double want) { return std::abs(v - want) <= tol; };
    if (is(dx, 1.5) && is(dy, 1.5)) return PartKind::NE;
    if (is(dx, -1.5) && is(dy, 1.5)) return PartKind::NW;
    if (is(dx, 1.5) && is(dy, -1.5)) return PartKind::SE;
    if (is(dx, -1.5) && is(dy, -1.5)) return PartKind::SW;
    const bool both_h = from.orientation == Orientation::Horizontal &&
                        to.orientation == Orientation::Horizontal;
    const bool both_v = from.orientation == Orientation::Vertical &&
                        to.orientation == Orientation::Vertical;
    if (both_h && is(dx, 3.0) && is(dy, 0.0)) return PartKind::Right;
    if (both_h && is(dx, -3.0) && is(dy, 0.0)) return PartKind::Left;
    if (both_v && is(dx, 0.0) && is(dy, 3.0)) return PartKind::Up;
    if (both_v && is(dx, 0.0) && is(dy, -3.0)) return PartKind::Down;
    return std::nullopt;
}

}  // namespace

bool is_network_adjacent(const StitchIndex& j, const StitchIndex& k) {
    return kind_for_offset(j, k, 1e-9).has_value();
}

std::optional<NetworkPart> classify_network_part(const DirectedSegment& s, const Pattern& pattern,
                                                 double tol) {
    const auto from = pattern.stitch_containing(s.start, tol);
    const auto to = pattern.stitch_containing(s.end, tol);
    if (!from || !to || *from == *to) return std::nullopt;
    const Stitch& a = pattern.stitches()[*from];
    const Stitch& b = pattern.stitches()[*to];
    const auto kind = kind_for_offset(a.index, b.index, tol);
    if (!kind) return std::nullopt;
    const SegmentPairResult hop = segment_segment_nearest(a.segment, b.segment);
    if (distance(s.start, hop.point_a) > tol || distance(s.end, hop.point_b) > tol)
        return std::nullopt;
    return NetworkPart{*kind, b.index, {hop.point_a, hop.point_b}};
}

bool is_monotone_network_path(const Path& path, const Pattern& pattern, double tol) {
    bool seen[8] = {};
    for (const DirectedSegment& s : path.segments) {
        if (length(s) == 0.0) continue;  // stationary placeholder
        const auto part = classify_network_part(s, pattern, tol);
        if (!part) throw std::invalid_argument("not a network path");
        seen[static_cast<int>(part->kind)] = true;
    }
    const auto in_set = [&seen](PartKind a, PartKind b, PartKind c) {
        for (int k = 0; k < 8; ++k) {
            if (!seen[k]) continue;
            const auto kk = static_cast<PartKind>(k);
            if (kk != a && kk != b && kk != c) return false;
        }
        return true;
    };
    return in_set(PartKind::Up, PartKind::Right, PartKind::NE) ||
           in_set(PartKind::Up, PartKind::Left, PartKind::NW) ||
           in_set(PartKind::Down, PartKind::Left, PartKind::SW) ||
           in_set(PartKind::Down, PartKind::Right, PartKind::SE);
}

InequalityCheck dominance_inequality(DominanceCase which, double x, double y) {
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    InequalityCheck out;
    switch (which) {
        case DominanceCase::CornerNeighbor: {
            if (ax < 1.5 - 1e-9 || ay < 1.5 - 1e-9)
                throw std::invalid_argument("corner inequality needs |x|, |y| >= 1.5");
            const double route = (2.0 * kSqrt2 / 3.0) * std::min(ax, ay) +
                                 (2.0 / 3.0) * std::abs(ax - ay);
            out.lhs = route * route;
            out.rhs = (ax - 0.5) * (ax - 0.5) + (ay - 0.5) * (ay - 0.5);
            break;
        }
        case DominanceCase::AxisNeighbor: {
            const bool on_lattice = std::abs(x - 3.0 * std::round(x / 3.0)) <= 1e-9 &&
                                    std::abs(y - 3.0 * std::round(y / 3.0)) <= 1e-9;
            if (!on_lattice || ax < 3.0 - 1e-9)
                throw std::invalid_argument("axis inequality needs (x, y) on 3Z x 3Z with |x| >= 3");
            const double route = (2.0 * kSqrt2 / 3.0) * std::min(ax, ay) +
                                 (2.0 / 3.0) * std::abs(ax - ay);
            out.lhs = route * route;
            out.rhs = (ax - 1.0) * (ax - 1.0) + ay * ay;
            break;
        }
        case DominanceCase::AlignedColumn: {
            if (ay < 3.0 - 1e-9)
                throw std::invalid_argument("aligned-column inequality needs |y| >= 3");
            out.lhs = 2.0 * kSqrt2 + (2.0 / 3.0) * ay - 2.0;
            out.rhs = ay;
            break;
        }
    }
    out.slack = out.rhs - out.lhs;
    out.holds = out.slack >= -1e-12;
    return out;
}

}  // namespace smocked
