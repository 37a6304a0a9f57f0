// Acceptance suite: one line per criterion, exit status = failure count.

#include "smocked/analysis.hpp"
#include "smocked/closed_form.hpp"
#include "smocked/metric.hpp"
#include "smocked/sampler.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

using namespace smocked;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

int failures = 0;

void criterion(int id, bool ok, const std::string& label, const std::string& detail) {
    std::printf("[%s] %2d %s (%s)\n", ok ? "PASS" : "FAIL", id, label.c_str(), detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) { return format_number(v); }

}  // namespace

int main() {
    // 1. Closed-form reproduction over the radius-30 window.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const Report r = verify_distance_formula(30.0);
        const double dt = seconds_since(t0);
        criterion(1, r.pass && r.samples == 840,
                  "closed-form distance matches the shortest-path oracle, radius 30",
                  "indices=" + std::to_string(r.samples) + " max_err=" + fmt(r.max_abs_error) +
                      " tol=1e-9 runtime=" + fmt(dt) + "s");
    }

    // 2. Canonical-route dominance and optimality over radius-15 pairs.
    {
        const Report r = verify_canonical_paths(15.0);
        criterion(2, r.pass,
                  "canonical routes beat straight segments (equality only on adjacent pairs) "
                  "and match the oracle, radius 15",
                  "pairs=" + std::to_string(r.samples) + " max_err=" + fmt(r.max_abs_error) +
                      " tol=1e-9");
    }

    // 3. Norm axioms and the octagonal unit sphere.
    {
        const Report r = verify_norm_axioms(10000, 0);
        bool sphere_ok = true;
        std::string sphere_note;
        try {
            const std::vector<Point2> trace = trace_unit_sphere(360);
            const auto verts = octagon_vertices();
            for (std::size_t k = 0; k < verts.size(); ++k) {
                const Point2 traced = trace[k * 45];
                sphere_ok = sphere_ok && distance(traced, verts[k]) <= 1e-6 &&
                            std::abs(norm(verts[k]) - 1.5) <= 1e-12;
            }
            for (const Point2& p : trace) sphere_ok = sphere_ok && distance_to_octagon(p) <= 1e-6;
        } catch (const std::exception& e) {
            sphere_ok = false;
            sphere_note = e.what();
        }
        criterion(3, r.pass && sphere_ok,
                  "norm axioms on 1e4 seeded samples and octagonal unit sphere",
                  "max_err=" + fmt(r.max_abs_error) + " tol=1e-12 sphere_tol=1e-6" + sphere_note);
    }

    // 4. Stitch-level sandwich around the norm, radius 30, bound attained.
    {
        const Pattern window = checkered_pattern(30.0);
        const double cap = 2.0 * kSqrt2 - 2.0;
        double min_dev = 1e300, max_dev = -1e300;
        std::size_t count = 0;
        for (const Stitch& s : window.stitches()) {
            const StitchIndex& j = s.index;
            if (j.j1 == 0.0 && j.j2 == 0.0) continue;
            ++count;
            const double dev =
                closed_form_distance_from_origin(j) - octagon_norm({j.j1, j.j2});
            min_dev = std::min(min_dev, dev);
            max_dev = std::max(max_dev, dev);
        }
        const bool ok = count == 840 && min_dev >= -1e-12 && max_dev <= cap + 1e-12 &&
                        std::abs(max_dev - cap) <= 1e-9;
        criterion(4, ok, "norm sandwich 0 <= d - F <= 2*sqrt(2) - 2 with the bound attained",
                  "indices=" + std::to_string(count) + " min_dev=" + fmt(min_dev) +
                      " max_dev=" + fmt(max_dev) + " cap=" + fmt(cap));
    }

    // 5. Lipschitz bounds of the norm.
    {
        const double sup = estimate_dilation(1000000, 0);
        const bool ok = sup <= 2.0 * kSqrt2 / 3.0 + 1e-9 && sup >= 2.0 / 3.0 - 1e-9;
        criterion(5, ok, "empirical dilation within [2/3, 2*sqrt(2)/3] on 1e6 seeded pairs",
                  "sup=" + fmt(sup) + " direction_sup=" + fmt(dilation_direction_supremum()));
    }

    // 6. Uniform deviation bound on the radius-100 ball.
    {
        const Report r = deviation_supremum(100.0, 10000, 0);
        criterion(6, r.pass, "deviation from the norm bounded by K = (18 + 11*sqrt(2))/3",
                  "sup=" + fmt(r.max_abs_error) + " K=" + fmt(r.threshold) +
                      " (empirical sup expected well below K)");
    }

    // 7. Tangent-cone convergence of the rescaled balls.
    {
        const std::vector<double> scales{1, 2, 4, 8, 16, 32, 64, 128, 256};
        const auto t0 = std::chrono::steady_clock::now();
        const auto points = convergence_curve(scales, 5.0, 1000, 0);
        const double dt = seconds_since(t0);
        bool ok = true;
        for (const ConvergencePoint& p : points) ok = ok && p.sup_deviation <= p.bound;
        const ConvergencePoint& last = points.back();
        ok = ok && last.sup_deviation < 0.0437;
        criterion(7, ok, "rescaled deviation under K/R for R=1..256, ball radius 5",
                  "sup@R=256: " + fmt(last.sup_deviation) + " bound=" + fmt(last.bound) +
                      " runtime=" + fmt(dt) + "s");
    }

    // 8. Route-dominance inequality sweeps with exact equality witnesses.
    {
        const Report r = verify_dominance_inequalities(10000, 0);
        criterion(8, r.pass, "dominance inequalities hold on 1e4 samples each, slack >= -1e-12",
                  "samples=" + std::to_string(r.samples) + " max_err=" + fmt(r.max_abs_error));
    }

    // 9. Pseudometric axioms on seeded triples in the radius-50 ball.
    {
        const CheckeredDistanceField field(100.0);
        Sampler rng(0);
        double worst = 0.0;
        bool upper_ok = true;
        for (int i = 0; i < 10000; ++i) {
            const Point2 x = rng.in_disk(50.0);
            const Point2 y = rng.in_disk(50.0);
            const Point2 z = rng.in_disk(50.0);
            const double dxy = field.distance(x, y);
            const double dyx = field.distance(y, x);
            const double dyz = field.distance(y, z);
            const double dxz = field.distance(x, z);
            worst = std::max(worst, std::abs(dxy - dyx));
            worst = std::max(worst, dxz - (dxy + dyz));
            worst = std::max(worst, field.distance(x, x));
            upper_ok = upper_ok && dxy <= distance(x, y) + 1e-12 &&
                       dyz <= distance(y, z) + 1e-12 && dxz <= distance(x, z) + 1e-12;
        }
        criterion(9, worst <= 1e-9 && upper_ok,
                  "pseudometric symmetry, triangle inequality, identity and the Euclidean "
                  "upper bound on 1e4 triples, radius 50",
                  "worst_violation=" + fmt(worst) + " tol=1e-9");
    }

    // 10. Determinism: reruns reproduce byte-identical CSV.
    {
        const std::string f1 = report_csv_row(verify_distance_formula(10.0));
        const std::string f2 = report_csv_row(verify_distance_formula(10.0));
        const std::string d1 = report_csv_row(deviation_supremum(20.0, 2000, 0));
        const std::string d2 = report_csv_row(deviation_supremum(20.0, 2000, 0));
        const std::string c1 = convergence_csv(convergence_curve({1, 2, 4}, 2.0, 200, 0), 200, 0);
        const std::string c2 = convergence_csv(convergence_curve({1, 2, 4}, 2.0, 200, 0), 200, 0);
        criterion(10, f1 == f2 && d1 == d2 && c1 == c2,
                  "reruns with equal seeds reproduce byte-identical CSV rows",
                  "formula+deviation+convergence reruns compared");
    }

    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures;
}
