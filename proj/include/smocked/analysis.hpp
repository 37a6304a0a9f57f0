#pragma once

#include "smocked/geom.hpp"
#include "smocked/pattern.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace smocked {

struct Report {
    std::string name;
    std::size_t samples = 0;
    double max_abs_error = 0.0;
    Point2 witness_a;  // worst-case input pair
    Point2 witness_b;
    double threshold = 0.0;
    bool pass = false;
};

std::string report_csv_header();
std::string report_csv_row(const Report& r);
std::string format_number(double v);  // 12 significant digits

// Shortest-path distances from the origin stitch against the closed form,
// for every nonzero stitch index in the window.
Report verify_distance_formula(double window_radius);

// For every ordered stitch pair in the window: the canonical network route
// is no longer than the straight segment (with equality exactly on
// network-adjacent pairs) and matches the shortest-path distance.
Report verify_canonical_paths(double window_radius);

// Positive definiteness, homogeneity and the triangle inequality of the
// octagon norm on seeded samples.
Report verify_norm_axioms(std::size_t n_samples, std::uint64_t seed);

// Points r(theta) * (cos theta, sin theta) of norm one on n_points rays;
// throws if the trace strays more than 1e-6 from the regular octagon.
std::vector<Point2> trace_unit_sphere(std::size_t n_points);
std::array<Point2, 8> octagon_vertices();
double distance_to_octagon(Point2 p);

// Largest |F(a) - F(b)| / |a - b| over seeded pairs plus the axis witness.
double estimate_dilation(std::size_t n_samples, std::uint64_t seed);
// Largest value of the norm on the Euclidean unit circle,
// sqrt(16 - 8 sqrt(2)) / 3.
double dilation_direction_supremum();

// Uniform bound on |pseudometric - norm of the difference|:
// (18 + 11 sqrt(2)) / 3.
double deviation_bound_constant();

// Supremum of |d(x, x') - F(x - x')| over seeded pairs in a ball.
Report deviation_supremum(double ball_radius, std::size_t n_samples, std::uint64_t seed);

// Supremum of |d(x, x') - [F(x) - F(x')]| over the same pairs. The bracket
// form is not uniformly bounded, so this report is informational (threshold
// +inf); it is emitted alongside the deviation suite for comparison.
Report deviation_bracket_supremum(double ball_radius, std::size_t n_samples, std::uint64_t seed);

struct ConvergencePoint {
    double scale = 1.0;
    double sup_deviation = 0.0;
    double bound = 0.0;  // K / scale
};

// Rescaled deviation sup |d(Rx, Rx')/R - F(x - x')| per scale; an upper
// bound on the pointed GH distance between the rescaled ball and the
// normed-plane ball under the identity correspondence.
std::vector<ConvergencePoint> convergence_curve(const std::vector<double>& scales,
                                                double ball_radius, std::size_t n_samples,
                                                std::uint64_t seed);
std::string convergence_csv(const std::vector<ConvergencePoint>& points, std::size_t samples,
                            std::uint64_t seed);

// Seeded sweeps of the three route-dominance inequalities, including their
// equality witnesses.
Report verify_dominance_inequalities(std::size_t n_samples, std::uint64_t seed);

// Classifies the geodesic to every stitch with j1 != 0 in the window and
// counts non-monotone ones. Diagnostic: the count is reported but the
// suite never fails.
Report verify_monotone_geodesics(double window_radius);

}  // namespace smocked
