#pragma once

#include "smocked/geom.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace smocked {

enum class Orientation : std::uint8_t { Horizontal, Vertical };

// Lattice position and orientation of one unit stitch. In the checkered
// pattern, horizontal stitches sit at 3Z x 3Z and vertical stitches at
// (3Z + 1.5) x (3Z + 1.5).
struct StitchIndex {
    double j1 = 0.0;
    double j2 = 0.0;
    Orientation orientation = Orientation::Horizontal;
};

bool operator==(const StitchIndex& a, const StitchIndex& b);
bool lex_less(const StitchIndex& a, const StitchIndex& b);
std::string to_string(const StitchIndex& j);

// Geometry of the unit stitch at an index: [j1-0.5, j1+0.5] x {j2} when
// horizontal, {j1} x [j2-0.5, j2+0.5] when vertical.
DirectedSegment stitch_segment(const StitchIndex& j);

bool is_checkered_index(const StitchIndex& j, double tol = 1e-9);
// Classifies a checkered-lattice position; throws std::invalid_argument if
// (j1, j2) lies on neither sublattice.
StitchIndex checkered_index_at(double j1, double j2, double tol = 1e-9);

struct Stitch {
    StitchIndex index;
    DirectedSegment segment;
};

// Immutable stitch collection plus derived constants.
class Pattern {
public:
    // A Window pattern is a finite view of the unbounded checkered plane and
    // distance queries validate that the view is large enough. A Complete
    // pattern (e.g. loaded from a file) is the whole smocking set.
    enum class Extent { Window, Complete };

    Pattern() = default;
    static Pattern from_stitches(std::vector<Stitch> stitches, Extent extent,
                                 double window_radius, bool checkered_window = false);

    const std::vector<Stitch>& stitches() const { return stitches_; }
    std::size_t size() const { return stitches_.size(); }
    Extent extent() const { return extent_; }
    bool is_checkered_window() const { return checkered_; }
    double window_radius() const { return window_radius_; }

    double separation() const { return separation_; }  // +inf below two stitches
    double depth() const { return depth_; }
    double max_stitch_length() const { return max_stitch_length_; }

    std::optional<std::size_t> find(const StitchIndex& j) const;
    std::optional<std::size_t> stitch_containing(Point2 p, double tol = 1e-9) const;

private:
    std::vector<Stitch> stitches_;
    std::unordered_map<std::uint64_t, std::uint32_t> by_position_;
    double window_radius_ = 0.0;
    double separation_ = std::numeric_limits<double>::infinity();
    double depth_ = 0.0;
    double max_stitch_length_ = 0.0;
    Extent extent_ = Extent::Complete;
    bool checkered_ = false;
};

// All checkered stitches with max(|j1|, |j2|) <= window_radius.
Pattern checkered_pattern(double window_radius);

// Minimum distance between distinct stitches; throws std::invalid_argument
// below two stitches.
double separation_factor(const Pattern& pattern);

// Largest distance from a probe-grid point to the smocking set, accurate to
// probe_grid_step * sqrt(2). The probe domain is [0,3]^2 (one translation
// cell) for checkered windows and the stitch bounding box otherwise.
double smocking_depth(const Pattern& pattern, double probe_grid_step);

// One stitch per line, `H <j1> <j2>` or `V <j1> <j2>`; `#` starts a comment
// line and blank lines are ignored. The result is a Complete pattern.
Pattern parse_pattern_file(const std::string& text);
Pattern load_pattern_file(const std::string& path);

}  // namespace smocked
