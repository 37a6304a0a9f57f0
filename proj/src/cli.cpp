#include "smocked/cli.hpp"

#include "smocked/analysis.hpp"
#include "smocked/closed_form.hpp"
#include "smocked/metric.hpp"
#include "smocked/render.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace smocked::cli {

namespace {

Pattern pattern_for_query(const std::string& path, double window, Point2 x, Point2 y) {
    if (!path.empty()) return load_pattern_file(path);
    const double need = required_window(x, y, 1.0);
    return checkered_pattern(window >= 0.0 ? window : need);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string report_line(const Report& r) {
    std::ostringstream line;
    line << r.name << ": " << (r.pass ? "pass" : "FAIL") << " samples=" << r.samples
         << " max_abs_error=" << format_number(r.max_abs_error)
         << " threshold=" << format_number(r.threshold);
    if (!r.pass)
        line << " witness=(" << format_number(r.witness_a.x) << ", " << format_number(r.witness_a.y)
             << ") (" << format_number(r.witness_b.x) << ", " << format_number(r.witness_b.y) << ")";
    return line.str();
}

struct VerifyOptions {
    std::vector<std::string> suites{"all"};
    double window = 15.0;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    double ball = 100.0;
    std::string csv;
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    const std::vector<std::string> known{"formula", "awesome", "norm",
                                         "lemmas",  "monotone", "deviation"};
    std::vector<std::string> wanted;
    for (const std::string& s : opt.suites) {
        if (s == "all") {
            wanted = known;
            break;
        }
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw CLI::ValidationError("--suite", "unknown suite: " + s);
        wanted.push_back(s);
    }

    std::vector<Report> reports;
    for (const std::string& s : wanted) {
        if (s == "formula") reports.push_back(verify_distance_formula(opt.window));
        if (s == "awesome") reports.push_back(verify_canonical_paths(opt.window));
        if (s == "norm") reports.push_back(verify_norm_axioms(opt.samples, opt.seed));
        if (s == "lemmas") reports.push_back(verify_dominance_inequalities(opt.samples, opt.seed));
        if (s == "monotone") reports.push_back(verify_monotone_geodesics(opt.window));
        if (s == "deviation") {
            reports.push_back(deviation_supremum(opt.ball, opt.samples, opt.seed));
            reports.push_back(deviation_bracket_supremum(opt.ball, opt.samples, opt.seed));
        }
    }

    bool all_pass = true;
    std::ostringstream csv;
    csv << report_csv_header() << '\n';
    for (const Report& r : reports) {
        out << report_line(r) << '\n';
        csv << report_csv_row(r) << '\n';
        all_pass = all_pass && r.pass;
    }
    if (!opt.csv.empty()) write_file(opt.csv, csv.str());
    return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"checkered smocked plane: distances, geodesics, verification sweeps"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- dist ----
    struct {
        double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
        std::string pattern;
        double window = -1.0;
    } dist_opt;
    CLI::App* dist = app.add_subcommand("dist", "smocked pseudometric between two points");
    dist->add_option("--x1", dist_opt.x1)->required();
    dist->add_option("--y1", dist_opt.y1)->required();
    dist->add_option("--x2", dist_opt.x2)->required();
    dist->add_option("--y2", dist_opt.y2)->required();
    dist->add_option("--pattern", dist_opt.pattern, "pattern file (default: built-in checkered)");
    dist->add_option("--window", dist_opt.window, "checkered window radius (default: automatic)");
    dist->callback([&] {
        const Point2 x{dist_opt.x1, dist_opt.y1}, y{dist_opt.x2, dist_opt.y2};
        const Pattern pat = pattern_for_query(dist_opt.pattern, dist_opt.window, x, y);
        out << format_number(pseudometric(pat, x, y)) << '\n';
    });

    // ---- stitch-dist ----
    struct {
        std::vector<double> j, k;
        std::string pattern;
        double window = -1.0;
    } sd_opt;
    CLI::App* sd = app.add_subcommand("stitch-dist", "smocked distance between two stitches");
    sd->add_option("--j", sd_opt.j, "first stitch index j1 j2")->expected(2)->required();
    sd->add_option("--k", sd_opt.k, "second stitch index k1 k2")->expected(2)->required();
    sd->add_option("--pattern", sd_opt.pattern, "pattern file (default: built-in checkered)");
    sd->add_option("--window", sd_opt.window, "checkered window radius (default: automatic)");
    sd->callback([&] {
        const Point2 cj{sd_opt.j[0], sd_opt.j[1]}, ck{sd_opt.k[0], sd_opt.k[1]};
        Pattern pat;
        StitchIndex j, k;
        if (sd_opt.pattern.empty()) {
            j = checkered_index_at(cj.x, cj.y);
            k = checkered_index_at(ck.x, ck.y);
            pat = pattern_for_query("", sd_opt.window, cj, ck);
        } else {
            pat = load_pattern_file(sd_opt.pattern);
            const auto ji = pat.stitch_containing(cj), ki = pat.stitch_containing(ck);
            if (!ji || !ki) throw std::runtime_error("stitch index not found in pattern");
            j = pat.stitches()[*ji].index;
            k = pat.stitches()[*ki].index;
        }
        out << format_number(stitch_distance(pat, j, k)) << '\n';
    });

    // ---- geodesic ----
    struct {
        double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
        std::string pattern;
        double window = -1.0;
    } geo_opt;
    CLI::App* geo = app.add_subcommand("geodesic", "shortest route and its hops");
    geo->add_option("--x1", geo_opt.x1)->required();
    geo->add_option("--y1", geo_opt.y1)->required();
    geo->add_option("--x2", geo_opt.x2)->required();
    geo->add_option("--y2", geo_opt.y2)->required();
    geo->add_option("--pattern", geo_opt.pattern, "pattern file (default: built-in checkered)");
    geo->add_option("--window", geo_opt.window, "checkered window radius (default: automatic)");
    geo->callback([&] {
        const Point2 x{geo_opt.x1, geo_opt.y1}, y{geo_opt.x2, geo_opt.y2};
        const Pattern pat = pattern_for_query(geo_opt.pattern, geo_opt.window, x, y);
        const GeodesicResult g = geodesic(pat, x, y);
        out << "distance " << format_number(g.distance) << '\n';
        out << "hops " << g.path.segments.size() << '\n';
        for (std::size_t i = 0; i < g.path.segments.size(); ++i) {
            const DirectedSegment& s = g.path.segments[i];
            const auto part = classify_network_part(s, pat);
            out << (i + 1) << ' ' << (part ? part_kind_name(part->kind) : "-") << " ("
                << format_number(s.start.x) << ", " << format_number(s.start.y) << ") -> ("
                << format_number(s.end.x) << ", " << format_number(s.end.y) << ")\n";
        }
    });

    // ---- verify ----
    VerifyOptions ver_opt;
    CLI::App* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", ver_opt.suites,
                    "formula, awesome, norm, lemmas, monotone, deviation or all");
    ver->add_option("--window", ver_opt.window, "stitch window radius for the sweep suites");
    ver->add_option("--samples", ver_opt.samples, "sample count for the seeded suites");
    ver->add_option("--seed", ver_opt.seed, "PRNG seed");
    ver->add_option("--ball", ver_opt.ball, "ball radius of the deviation suite");
    ver->add_option("--csv", ver_opt.csv, "write report rows to this CSV file");
    ver->callback([&] { exit_code = run_verify(ver_opt, out); });

    // ---- converge ----
    struct {
        std::vector<double> scales;
        double ball = 5.0;
        std::size_t samples = 1000;
        std::uint64_t seed = 0;
        std::string csv;
    } con_opt;
    CLI::App* con = app.add_subcommand("converge", "rescaled deviation against the norm limit");
    con->add_option("--scales", con_opt.scales, "rescaling factors (default 1 2 4 ... 256)")
        ->delimiter(',');
    con->add_option("--ball", con_opt.ball, "sample ball radius before rescaling");
    con->add_option("--samples", con_opt.samples, "pairs per scale");
    con->add_option("--seed", con_opt.seed, "PRNG seed");
    con->add_option("--csv", con_opt.csv, "write the curve to this CSV file");
    con->callback([&] {
        if (con_opt.scales.empty()) con_opt.scales = {1, 2, 4, 8, 16, 32, 64, 128, 256};
        const auto points =
            convergence_curve(con_opt.scales, con_opt.ball, con_opt.samples, con_opt.seed);
        bool within = true;
        for (const ConvergencePoint& p : points) {
            out << "R=" << format_number(p.scale) << " sup=" << format_number(p.sup_deviation)
                << " bound=" << format_number(p.bound) << '\n';
            within = within && p.sup_deviation <= p.bound;
        }
        if (!con_opt.csv.empty())
            write_file(con_opt.csv, convergence_csv(points, con_opt.samples, con_opt.seed));
        if (!within) exit_code = 1;
    });

    // ---- sphere ----
    struct {
        std::size_t points = 360;
        std::string csv;
    } sph_opt;
    CLI::App* sph = app.add_subcommand("sphere", "trace the unit ball boundary of the norm");
    sph->add_option("--points", sph_opt.points, "number of rays (at least 8)");
    sph->add_option("--csv", sph_opt.csv, "write the trace to this CSV file");
    sph->callback([&] {
        const std::vector<Point2> trace = trace_unit_sphere(sph_opt.points);
        std::ostringstream csv;
        csv << "x,y\n";
        for (const Point2& p : trace) csv << format_number(p.x) << ',' << format_number(p.y) << '\n';
        out << "points " << trace.size() << '\n';
        if (sph_opt.csv.empty())
            out << csv.str();
        else
            write_file(sph_opt.csv, csv.str());
    });

    // ---- render ----
    struct {
        std::string out_path;
        double radius = 6.0;
        std::string pattern;
        std::vector<double> geodesic_pts;
    } ren_opt;
    CLI::App* ren = app.add_subcommand("render", "SVG picture of a pattern and optional geodesic");
    ren->add_option("--out", ren_opt.out_path, "output SVG path")->required();
    ren->add_option("--radius", ren_opt.radius, "checkered window radius");
    ren->add_option("--pattern", ren_opt.pattern, "pattern file (default: built-in checkered)");
    ren->add_option("--geodesic", ren_opt.geodesic_pts, "x1 y1 x2 y2 of a route to draw")
        ->expected(4);
    ren->callback([&] {
        Pattern pat;
        if (!ren_opt.pattern.empty()) {
            pat = load_pattern_file(ren_opt.pattern);
        } else {
            double radius = ren_opt.radius;
            if (ren_opt.geodesic_pts.size() == 4) {
                const Point2 x{ren_opt.geodesic_pts[0], ren_opt.geodesic_pts[1]};
                const Point2 y{ren_opt.geodesic_pts[2], ren_opt.geodesic_pts[3]};
                radius = std::max(radius, required_window(x, y, 1.0));
            }
            pat = checkered_pattern(radius);
        }
        if (ren_opt.geodesic_pts.size() == 4) {
            const Point2 x{ren_opt.geodesic_pts[0], ren_opt.geodesic_pts[1]};
            const Point2 y{ren_opt.geodesic_pts[2], ren_opt.geodesic_pts[3]};
            const GeodesicResult g = geodesic(pat, x, y);
            write_file(ren_opt.out_path, render_svg(pat, &g.path));
        } else {
            write_file(ren_opt.out_path, render_svg(pat));
        }
        out << "wrote " << ren_opt.out_path << '\n';
    });

    // CLI11 wants argv-style input.
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("smocked");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

}  // namespace smocked::cli
