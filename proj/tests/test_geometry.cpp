#include <gtest/gtest.h>

#include "vpg/geometry.hpp"

using namespace vpg;

namespace {

RectPath path(std::initializer_list<std::pair<long, long>> pts) {
    std::vector<Point> c;
    for (auto [x, y] : pts) c.emplace_back(x, y);
    return RectPath::from_corners(std::move(c));
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("3/2"), make_rational(3, 2));
    EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(to_string(make_rational(6, 3)), "2");
    EXPECT_EQ(to_string(make_rational(-1, 32)), "-1/32");
    for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "1/-2", "--1"}) EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, DecimalRounding) {
    EXPECT_EQ(to_decimal(make_rational(1, 3)), "0.333333");
    EXPECT_EQ(to_decimal(make_rational(2, 3)), "0.666667");
    EXPECT_EQ(to_decimal(make_rational(-5, 2)), "-2.5");
    EXPECT_EQ(to_decimal(Rational(40)), "40");
    EXPECT_EQ(to_decimal(make_rational(-1, 10000000)), "0");
    EXPECT_EQ(to_decimal(make_rational(1, 2000000)), "0.000001");
}

TEST(Segment, RejectsDegenerateAndDiagonal) {
    EXPECT_THROW(Segment(Point(1, 1), Point(1, 1)), ValidationError);
    EXPECT_THROW(Segment(Point(0, 0), Point(1, 1)), ValidationError);
    Segment s(Point(2, 0), Point(0, 0));
    EXPECT_EQ(s.a(), Point(0, 0));
    EXPECT_TRUE(s.horizontal());
    EXPECT_TRUE(s.interior_contains(Point(1, 0)));
    EXPECT_FALSE(s.interior_contains(Point(2, 0)));
}

TEST(RectPath, Validation) {
    EXPECT_THROW(path({{0, 0}}), ValidationError);
    EXPECT_THROW(path({{0, 0}, {1, 1}}), ValidationError);
    EXPECT_THROW(path({{0, 0}, {2, 0}, {1, 0}}), ValidationError);
    // a loop that closes onto itself
    EXPECT_THROW(path({{0, 0}, {2, 0}, {2, 2}, {1, 2}, {1, -1}}), ValidationError);
    EXPECT_THROW(path({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 0}}), ValidationError);
    // collinear runs are merged and repeated points dropped
    auto p = path({{0, 0}, {1, 0}, {1, 0}, {3, 0}, {3, 2}});
    EXPECT_EQ(p.corners().size(), 3u);
    EXPECT_EQ(bend_count(p), 1u);
}

TEST(RectPath, BendCount) {
    EXPECT_EQ(bend_count(path({{0, 0}, {1, 0}})), 0u);
    EXPECT_EQ(bend_count(path({{0, 0}, {0, 1}, {2, 1}, {2, 3}, {5, 3}})), 3u);
    EXPECT_EQ(bend_count(path({{0, 0}, {1, 0}, {1, -1}, {2, -1}, {2, -2}})), 3u);
}

TEST(RectPath, DirectionVector) {
    const auto p = path({{0, 0}, {1, 0}, {1, -1}});
    EXPECT_EQ(direction_vector(p), (DirectionVector{Direction::Right, Direction::Down}));
    EXPECT_EQ(direction_vector(p.reversed()), (DirectionVector{Direction::Up, Direction::Left}));
    const auto stair = path({{0, 0}, {1, 0}, {1, -1}, {2, -1}, {2, -2}});
    EXPECT_EQ(direction_vector(stair),
              (DirectionVector{Direction::Right, Direction::Down, Direction::Right, Direction::Down}));
}

TEST(RectPath, ArcPositionAndSubpath) {
    const auto p = path({{0, 0}, {4, 0}, {4, 4}, {8, 4}});
    EXPECT_EQ(p.arc_position(Point(4, 2)), Rational(6));
    EXPECT_THROW(p.arc_position(Point(1, 1)), DomainError);
    const auto sub = p.subpath(Point(2, 0), Point(6, 4));
    EXPECT_EQ(sub.corners(), (std::vector<Point>{Point(2, 0), Point(4, 0), Point(4, 4), Point(6, 4)}));
    EXPECT_EQ(p.subpath(Point(1, 0), Point(3, 0)).corners().size(), 2u);
    EXPECT_THROW(p.subpath(Point(6, 4), Point(2, 0)), DomainError);
}

TEST(Intersections, PerpendicularCrossing) {
    const auto p = path({{0, 0}, {2, 0}});
    const auto q = path({{1, -1}, {1, 1}});
    const auto m = path_intersections(p, q);
    ASSERT_EQ(m.points.size(), 1u);
    EXPECT_EQ(m.points[0], Point(1, 0));
    EXPECT_TRUE(m.overlaps.empty());
    EXPECT_TRUE(is_crossing_point(p, q, Point(1, 0)));
}

TEST(Intersections, CollinearOverlap) {
    const auto m = path_intersections(path({{0, 0}, {2, 0}}), path({{1, 0}, {3, 0}}));
    EXPECT_TRUE(m.points.empty());
    ASSERT_EQ(m.overlaps.size(), 1u);
    EXPECT_EQ(m.overlaps[0], Segment(Point(1, 0), Point(2, 0)));
}

TEST(Intersections, Disjoint) {
    EXPECT_TRUE(path_intersections(path({{0, 0}, {2, 0}}), path({{0, 1}, {2, 1}})).empty());
}

TEST(Intersections, TouchingIsNotCrossing) {
    const auto p = path({{0, 0}, {2, 0}});
    EXPECT_FALSE(is_crossing_point(p, path({{2, -1}, {2, 1}}), Point(2, 0)));
    EXPECT_FALSE(is_crossing_point(p, path({{1, 0}, {1, 1}}), Point(1, 0)));
    // two L's sharing their corner
    EXPECT_FALSE(is_crossing_point(path({{-1, 1}, {0, 1}, {0, 2}}), path({{0, 0}, {0, 1}, {2, 1}}), Point(0, 1)));
    EXPECT_THROW(is_crossing_point(p, path({{5, -1}, {5, 1}}), Point(5, 0)), DomainError);
}

TEST(Intersections, OverlapSwallowsPoints) {
    // the two paths share a run and also meet at its end
    const auto p = path({{0, 0}, {4, 0}});
    const auto q = path({{1, 1}, {1, 0}, {3, 0}, {3, -1}});
    const auto m = path_intersections(p, q);
    EXPECT_TRUE(m.points.empty());
    ASSERT_EQ(m.overlaps.size(), 1u);
    EXPECT_EQ(m.overlaps[0], Segment(Point(1, 0), Point(3, 0)));
}

TEST(Intersections, SymmetryAndTranslation) {
    const std::vector<RectPath> ps = {
        path({{0, 0}, {4, 0}, {4, 3}}),         path({{1, -1}, {1, 2}, {5, 2}}),
        path({{2, 0}, {3, 0}}),                 path({{0, 3}, {6, 3}, {6, -2}, {3, -2}, {3, 1}}),
        path({{4, 1}, {4, 5}}),                 path({{-1, 0}, {0, 0}}),
    };
    const Rational dx(7, 3), dy(-5, 2);
    for (const auto& p : ps) {
        for (const auto& q : ps) {
            const auto a = path_intersections(p, q);
            const auto b = path_intersections(q, p);
            EXPECT_EQ(a.points, b.points);
            EXPECT_EQ(a.overlaps, b.overlaps);
            const auto t = path_intersections(p.translated(dx, dy), q.translated(dx, dy));
            ASSERT_EQ(t.points.size(), a.points.size());
            for (std::size_t i = 0; i < a.points.size(); ++i) {
                EXPECT_EQ(t.points[i], Point(a.points[i].x + dx, a.points[i].y + dy));
                EXPECT_EQ(is_crossing_point(p, q, a.points[i]),
                          is_crossing_point(p.translated(dx, dy), q.translated(dx, dy), t.points[i]));
            }
            EXPECT_EQ(t.overlaps.size(), a.overlaps.size());
        }
    }
}

TEST(Intersections, AgreesWithPointSampling) {
    // Half-integer sampling: on integer-cornered paths every intersection
    // point and every overlap run is visible at spacing 1/2.
    const std::vector<RectPath> ps = {
        path({{0, 0}, {4, 0}, {4, 3}}), path({{1, -1}, {1, 2}, {5, 2}}), path({{2, 0}, {3, 0}}),
        path({{0, 3}, {6, 3}, {6, -2}, {3, -2}, {3, 1}}), path({{4, 1}, {4, 5}}), path({{5, 5}, {6, 5}})};
    auto on = [](const RectPath& p, const Point& pt) {
        for (const auto& s : p.segments())
            if (s.contains(pt)) return true;
        return false;
    };
    for (const auto& p : ps)
        for (const auto& q : ps) {
            bool sampled = false;
            for (int x = -4; x <= 14; ++x)
                for (int y = -6; y <= 12; ++y) {
                    Point pt(make_rational(x, 2), make_rational(y, 2));
                    if (on(p, pt) && on(q, pt)) sampled = true;
                }
            EXPECT_EQ(sampled, !path_intersections(p, q).empty());
        }
}
