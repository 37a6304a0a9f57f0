#include "smocked/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace smocked {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const Pattern& pattern, const Path* route) {
    double extent = 2.0;
    for (const Stitch& s : pattern.stitches()) {
        extent = std::max(extent, norm_inf(s.segment.start));
        extent = std::max(extent, norm_inf(s.segment.end));
    }
    if (route) {
        for (const DirectedSegment& s : route->segments) {
            extent = std::max(extent, norm_inf(s.start));
            extent = std::max(extent, norm_inf(s.end));
        }
    }
    const double half = extent + 1.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(-half) << ' '
        << num(-half) << ' ' << num(2.0 * half) << ' ' << num(2.0 * half) << "\">\n";
    svg << "<defs><marker id=\"tip\" viewBox=\"0 0 4 4\" refX=\"3\" refY=\"2\" markerWidth=\"4\" "
           "markerHeight=\"4\" orient=\"auto\"><path d=\"M0,0 L4,2 L0,4 z\" fill=\"#b22\"/>"
           "</marker></defs>\n";
    svg << "<g transform=\"scale(1,-1)\">\n";
    for (const Stitch& s : pattern.stitches()) {
        svg << "<line x1=\"" << num(s.segment.start.x) << "\" y1=\"" << num(s.segment.start.y)
            << "\" x2=\"" << num(s.segment.end.x) << "\" y2=\"" << num(s.segment.end.y)
            << "\" stroke=\"#222\" stroke-width=\"0.16\" stroke-linecap=\"round\"/>\n";
    }
    if (route) {
        for (const DirectedSegment& s : route->segments) {
            svg << "<polyline points=\"" << num(s.start.x) << ',' << num(s.start.y) << ' '
                << num(s.end.x) << ',' << num(s.end.y)
                << "\" fill=\"none\" stroke=\"#b22\" stroke-width=\"0.08\" "
                   "marker-end=\"url(#tip)\"/>\n";
        }
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace smocked
