#pragma once

#include "smocked/geom.hpp"
#include "smocked/pattern.hpp"

#include <cstddef>
#include <vector>

namespace smocked {

// A route through the smocked plane: directed segments whose junctions lie
// in common stitches. visited_stitches[i] is the stitch shared by the end
// of segments[i] and the start of segments[i+1]; travel within a stitch is
// free and is not represented by a segment.
struct Path {
    std::vector<DirectedSegment> segments;
    std::vector<StitchIndex> visited_stitches;
    double total_length = 0.0;

    std::size_t combinatorial_length() const { return segments.size(); }
};

}  // namespace smocked
