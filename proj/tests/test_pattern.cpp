#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smocked/pattern.hpp"

#include <cmath>
#include <stdexcept>

using namespace smocked;

TEST_CASE("checkered window contents") {
    SUBCASE("radius 0 holds only the origin stitch") {
        const Pattern p = checkered_pattern(0.0);
        REQUIRE(p.size() == 1);
        const Stitch& s = p.stitches()[0];
        CHECK(s.index.orientation == Orientation::Horizontal);
        CHECK(s.segment.start.x == doctest::Approx(-0.5));
        CHECK(s.segment.end.x == doctest::Approx(0.5));
        CHECK(s.segment.start.y == doctest::Approx(0.0));
    }

    SUBCASE("radius 2 contains the first vertical ring") {
        const Pattern p = checkered_pattern(2.0);
        CHECK(p.size() == 5);
        const auto at = p.find({1.5, 1.5, Orientation::Vertical});
        REQUIRE(at.has_value());
        const Stitch& s = p.stitches()[*at];
        CHECK(s.segment.start.x == doctest::Approx(1.5));
        CHECK(s.segment.start.y == doctest::Approx(1.0));
        CHECK(s.segment.end.y == doctest::Approx(2.0));
    }

    SUBCASE("radius 4 counts 9 horizontal + 4 vertical") {
        const Pattern p = checkered_pattern(4.0);
        std::size_t horizontal = 0, vertical = 0;
        for (const Stitch& s : p.stitches())
            (s.index.orientation == Orientation::Horizontal ? horizontal : vertical) += 1;
        CHECK(horizontal == 9);
        CHECK(vertical == 4);
        CHECK(p.size() == 13);
    }
}

TEST_CASE("index classes are a function of the position") {
    const Pattern p = checkered_pattern(10.0);
    for (const Stitch& s : p.stitches()) {
        CHECK(is_checkered_index(s.index));
        const StitchIndex again = checkered_index_at(s.index.j1, s.index.j2);
        CHECK(again.orientation == s.index.orientation);
        CHECK(length(s.segment) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(checkered_index_at(1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(checkered_index_at(3.0, 1.5), std::invalid_argument);
}

TEST_CASE("separation factor") {
    SUBCASE("checkered windows separate at sqrt(2)") {
        for (const double radius : {2.0, 5.0, 11.0}) {
            const Pattern p = checkered_pattern(radius);
            CHECK(separation_factor(p) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
        }
    }
    SUBCASE("two collinear stitches") {
        const Pattern p = parse_pattern_file("H 0 0\nH 3 0\n");
        CHECK(separation_factor(p) == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("undefined on a single stitch") {
        const Pattern p = checkered_pattern(0.0);
        CHECK_THROWS_AS(separation_factor(p), std::invalid_argument);
        CHECK(p.separation() == std::numeric_limits<double>::infinity());
    }
}

TEST_CASE("stitch disjointness is at least the separation") {
    const Pattern p = checkered_pattern(7.0);
    const double delta = separation_factor(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const double d =
                segment_segment_nearest(p.stitches()[i].segment, p.stitches()[j].segment).distance;
            CHECK(d >= delta - 1e-12);
        }
}

TEST_CASE("smocking depth") {
    const Pattern p = checkered_pattern(8.0);

    SUBCASE("deep point of the translation cell") {
        CHECK(smocking_depth(p, 0.01) == doctest::Approx(1.5).epsilon(0.02));
        // The grid with step 0.01 passes through (0, 1.5), where the three
        // nearest stitches are all 1.5 away.
        double d = std::numeric_limits<double>::infinity();
        for (const Stitch& s : p.stitches())
            d = std::min(d, point_segment_distance({0.0, 1.5}, s.segment).distance);
        CHECK(d == doctest::Approx(1.5).epsilon(1e-12));
    }

    SUBCASE("monotone under grid refinement") {
        double prev = 0.0;
        for (const double step : {0.4, 0.2, 0.1, 0.05}) {
            const double h = smocking_depth(p, step);
            CHECK(h >= prev - 1e-12);
            CHECK(h <= 1.5 + 1e-9);
            prev = h;
        }
        CHECK(prev > 1.4);
    }

    SUBCASE("covering pattern probes near zero") {
        // A dense brush of stitches leaves no point far from the set.
        std::string text;
        for (int col = 0; col <= 4; ++col)
            for (int row = 0; row <= 15; ++row)
                text += "H " + std::to_string(1.5 * col) + " " + std::to_string(0.2 * row) + "\n";
        const Pattern brush = parse_pattern_file(text);
        CHECK(smocking_depth(brush, 0.05) <= 0.35);
    }

    SUBCASE("pattern constants") {
        CHECK(p.max_stitch_length() == doctest::Approx(1.0));
        CHECK(p.depth() == doctest::Approx(1.5).epsilon(1e-9));
        CHECK_THROWS_AS(smocking_depth(p, 0.0), std::invalid_argument);
    }
}

TEST_CASE("pattern files") {
    SUBCASE("round trip of a small pattern") {
        const Pattern p = parse_pattern_file("# two stitches\nH 0 0\n\nV 1.5 1.5\n");
        REQUIRE(p.size() == 2);
        CHECK(p.extent() == Pattern::Extent::Complete);
        CHECK(p.find({0.0, 0.0, Orientation::Horizontal}).has_value());
        CHECK(p.find({1.5, 1.5, Orientation::Vertical}).has_value());
        const auto vs = p.stitches()[*p.find({1.5, 1.5, Orientation::Vertical})].segment;
        CHECK(vs.start.y == doctest::Approx(1.0));
        CHECK(vs.end.y == doctest::Approx(2.0));
    }

    SUBCASE("duplicates overlap") {
        CHECK_THROWS_WITH_AS(parse_pattern_file("H 0 0\nH 0 0\n"), "stitches not disjoint",
                             std::invalid_argument);
    }

    SUBCASE("malformed lines carry the line number") {
        CHECK_THROWS_WITH_AS(parse_pattern_file("H 0 0\nX 1 2\n"),
                             "pattern file line 2: expected `H <j1> <j2>` or `V <j1> <j2>`",
                             std::runtime_error);
        CHECK_THROWS_AS(parse_pattern_file("H 0\n"), std::runtime_error);
        CHECK_THROWS_AS(parse_pattern_file("H 0 0 extra\n"), std::runtime_error);
        CHECK_THROWS_AS(parse_pattern_file("# nothing\n\n"), std::runtime_error);
    }

    SUBCASE("separation of a parsed trio") {
        const Pattern p = parse_pattern_file("H 0 0\nH 3 0\nV 1.5 1.5\n");
        CHECK(separation_factor(p) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
}
