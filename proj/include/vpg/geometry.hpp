#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "vpg/errors.hpp"
#include "vpg/rational.hpp"

namespace vpg {

struct Point {
    Rational x, y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {
        x.canonicalize();
        y.canonicalize();
    }
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline std::string to_string(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }
inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

enum class Orientation { Horizontal, Vertical };

class Segment {
public:
    // Endpoints are reordered so that a < b along the varying axis.
    Segment(Point p, Point q) {
        if (p == q) throw ValidationError("degenerate segment at " + to_string(p));
        if (p.y == q.y) {
            orientation_ = Orientation::Horizontal;
        } else if (p.x == q.x) {
            orientation_ = Orientation::Vertical;
        } else {
            throw ValidationError("segment " + to_string(p) + "-" + to_string(q) + " is not axis-parallel");
        }
        if (q < p) std::swap(p, q);
        a_ = std::move(p);
        b_ = std::move(q);
    }

    const Point& a() const { return a_; }
    const Point& b() const { return b_; }
    Orientation orientation() const { return orientation_; }
    bool horizontal() const { return orientation_ == Orientation::Horizontal; }

    // Fixed coordinate (y for horizontal, x for vertical) and the varying range.
    const Rational& level() const { return horizontal() ? a_.y : a_.x; }
    const Rational& lo() const { return horizontal() ? a_.x : a_.y; }
    const Rational& hi() const { return horizontal() ? b_.x : b_.y; }

    bool contains(const Point& p) const {
        if (horizontal()) return p.y == a_.y && a_.x <= p.x && p.x <= b_.x;
        return p.x == a_.x && a_.y <= p.y && p.y <= b_.y;
    }
    bool is_endpoint(const Point& p) const { return p == a_ || p == b_; }
    bool interior_contains(const Point& p) const { return contains(p) && !is_endpoint(p); }

    Rational length() const { return hi() - lo(); }

    friend bool operator==(const Segment& s, const Segment& t) { return s.a_ == t.a_ && s.b_ == t.b_; }
    friend bool operator<(const Segment& s, const Segment& t) {
        if (s.a_ != t.a_) return s.a_ < t.a_;
        return s.b_ < t.b_;
    }

private:
    Point a_, b_;
    Orientation orientation_ = Orientation::Horizontal;
};

inline std::string to_string(const Segment& s) { return to_string(s.a()) + "-" + to_string(s.b()); }

namespace detail {

// Intersection of two axis-parallel segments: nothing, a point, or a collinear overlap.
struct SegmentMeet {
    std::optional<Point> point;
    std::optional<Segment> overlap;
};

inline SegmentMeet meet(const Segment& s, const Segment& t) {
    SegmentMeet m;
    if (s.orientation() != t.orientation()) {
        const Segment& h = s.horizontal() ? s : t;
        const Segment& v = s.horizontal() ? t : s;
        Point p(v.a().x, h.a().y);
        if (h.contains(p) && v.contains(p)) m.point = p;
        return m;
    }
    if (s.level() != t.level()) return m;
    const Rational& lo = std::max(s.lo(), t.lo());
    const Rational& hi = std::min(s.hi(), t.hi());
    if (lo > hi) return m;
    auto at = [&](const Rational& c) { return s.horizontal() ? Point(c, s.level()) : Point(s.level(), c); };
    if (lo == hi) {
        m.point = at(lo);
    } else {
        m.overlap = Segment(at(lo), at(hi));
    }
    return m;
}

inline bool bbox_disjoint(const Segment& s, const Segment& t) {
    return s.b().x < t.a().x || t.b().x < s.a().x || s.b().y < t.a().y || t.b().y < s.a().y;
}

}  // namespace detail

enum class Direction { Right, Left, Up, Down };

inline const char* glyph(Direction d) {
    switch (d) {
        case Direction::Right: return "→";
        case Direction::Left: return "←";
        case Direction::Up: return "↑";
        case Direction::Down: return "↓";
    }
    return "?";
}

using DirectionVector = std::vector<Direction>;

// Axis-parallel polyline stored as its corner sequence. Straight-through corners
// are merged on construction, so every interior corner is a bend.
class RectPath {
public:
    static RectPath from_corners(std::vector<Point> pts) {
        std::vector<Point> c;
        for (auto& p : pts) {
            if (!c.empty() && c.back() == p) continue;
            c.push_back(std::move(p));
        }
        if (c.size() < 2) throw ValidationError("path needs two distinct corners");
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            if (c[i].x != c[i + 1].x && c[i].y != c[i + 1].y)
                throw ValidationError("diagonal move " + to_string(c[i]) + "-" + to_string(c[i + 1]));
        }
        std::vector<Point> merged;
        for (auto& p : c) {
            if (merged.size() >= 2) {
                const Point& u = merged[merged.size() - 2];
                const Point& v = merged.back();
                const bool collinear = (u.x == v.x && v.x == p.x) || (u.y == v.y && v.y == p.y);
                if (collinear) {
                    const bool reverses = u.x == v.x ? (v.y - u.y) * (p.y - v.y) < 0 : (v.x - u.x) * (p.x - v.x) < 0;
                    if (reverses) throw ValidationError("path doubles back at " + to_string(v));
                    merged.back() = std::move(p);
                    continue;
                }
            }
            merged.push_back(std::move(p));
        }
        RectPath path(std::move(merged));
        path.check_simple();
        return path;
    }

    static RectPath segment(Point a, Point b) { return from_corners({std::move(a), std::move(b)}); }

    const std::vector<Point>& corners() const { return corners_; }
    const Point& front() const { return corners_.front(); }
    const Point& back() const { return corners_.back(); }
    std::size_t segment_count() const { return corners_.size() - 1; }
    Segment segment_at(std::size_t i) const { return Segment(corners_[i], corners_[i + 1]); }

    std::vector<Segment> segments() const {
        std::vector<Segment> out;
        out.reserve(segment_count());
        for (std::size_t i = 0; i + 1 < corners_.size(); ++i) out.emplace_back(corners_[i], corners_[i + 1]);
        return out;
    }

    RectPath reversed() const {
        std::vector<Point> c(corners_.rbegin(), corners_.rend());
        return RectPath(std::move(c));
    }

    RectPath translated(const Rational& dx, const Rational& dy) const {
        std::vector<Point> c;
        for (const auto& p : corners_) c.emplace_back(p.x + dx, p.y + dy);
        return RectPath(std::move(c));
    }

    // Arc length from the first corner to p, where p lies on the path.
    Rational arc_position(const Point& p) const {
        Rational acc = 0;
        for (std::size_t i = 0; i + 1 < corners_.size(); ++i) {
            Segment s(corners_[i], corners_[i + 1]);
            if (s.contains(p)) return acc + abs(p.x - corners_[i].x) + abs(p.y - corners_[i].y);
            acc += s.length();
        }
        throw DomainError("point " + to_string(p) + " is not on the path");
    }

    // The part of the path between two of its points, in traversal order.
    RectPath subpath(const Point& from, const Point& to) const {
        Rational s = arc_position(from), t = arc_position(to);
        if (t < s) throw DomainError("subpath endpoints out of order");
        std::vector<Point> c{from};
        Rational acc = 0;
        for (std::size_t i = 1; i + 1 < corners_.size(); ++i) {
            acc += Segment(corners_[i - 1], corners_[i]).length();
            if (acc > s && acc < t) c.push_back(corners_[i]);
        }
        c.push_back(to);
        return from_corners(std::move(c));
    }

    friend bool operator==(const RectPath& p, const RectPath& q) { return p.corners_ == q.corners_; }

private:
    explicit RectPath(std::vector<Point> c) : corners_(std::move(c)) {}

    void check_simple() const {
        const auto segs = segments();
        for (std::size_t i = 0; i < segs.size(); ++i) {
            for (std::size_t j = i + 1; j < segs.size(); ++j) {
                if (detail::bbox_disjoint(segs[i], segs[j])) continue;
                auto m = detail::meet(segs[i], segs[j]);
                if (m.overlap) throw ValidationError("path overlaps itself along " + to_string(*m.overlap));
                if (!m.point) continue;
                if (j == i + 1 && *m.point == corners_[i + 1]) continue;
                throw ValidationError("path crosses itself at " + to_string(*m.point));
            }
        }
    }

    std::vector<Point> corners_;
};

inline std::size_t bend_count(const RectPath& p) { return p.corners().size() - 2; }

inline DirectionVector direction_vector(const RectPath& p) {
    DirectionVector dv;
    const auto& c = p.corners();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (c[i + 1].x > c[i].x) dv.push_back(Direction::Right);
        else if (c[i + 1].x < c[i].x) dv.push_back(Direction::Left);
        else if (c[i + 1].y > c[i].y) dv.push_back(Direction::Up);
        else dv.push_back(Direction::Down);
    }
    return dv;
}

struct PathIntersection {
    std::vector<Point> points;      // isolated points, sorted
    std::vector<Segment> overlaps;  // maximal collinear overlaps, sorted

    bool empty() const { return points.empty() && overlaps.empty(); }
};

inline PathIntersection path_intersections(const RectPath& p, const RectPath& q) {
    PathIntersection out;
    const auto ps = p.segments();
    const auto qs = q.segments();
    for (const auto& s : ps) {
        for (const auto& t : qs) {
            if (detail::bbox_disjoint(s, t)) continue;
            auto m = detail::meet(s, t);
            if (m.point) out.points.push_back(*m.point);
            if (m.overlap) out.overlaps.push_back(*m.overlap);
        }
    }
    // Merge collinear overlap pieces that touch or overlap.
    std::sort(out.overlaps.begin(), out.overlaps.end(), [](const Segment& a, const Segment& b) {
        if (a.orientation() != b.orientation()) return a.horizontal();
        if (a.level() != b.level()) return a.level() < b.level();
        return a.lo() < b.lo();
    });
    std::vector<Segment> merged;
    for (const auto& s : out.overlaps) {
        if (!merged.empty()) {
            const Segment& last = merged.back();
            if (last.orientation() == s.orientation() && last.level() == s.level() && s.lo() <= last.hi()) {
                if (s.hi() > last.hi()) merged.back() = Segment(last.a(), s.b());
                continue;
            }
        }
        merged.push_back(s);
    }
    out.overlaps = std::move(merged);
    std::sort(out.overlaps.begin(), out.overlaps.end());
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    std::erase_if(out.points, [&](const Point& pt) {
        return std::any_of(out.overlaps.begin(), out.overlaps.end(), [&](const Segment& s) { return s.contains(pt); });
    });
    return out;
}

namespace detail {

inline bool crosses_at(const RectPath& p, const RectPath& q, const Point& pt) {
    auto on_corner = [&](const RectPath& path) {
        return std::find(path.corners().begin(), path.corners().end(), pt) != path.corners().end();
    };
    if (on_corner(p) || on_corner(q)) return false;
    auto interior_on = [&](const RectPath& path, Orientation o) {
        for (std::size_t i = 0; i < path.segment_count(); ++i) {
            Segment s = path.segment_at(i);
            if (s.orientation() == o && s.interior_contains(pt)) return true;
        }
        return false;
    };
    return (interior_on(p, Orientation::Horizontal) && interior_on(q, Orientation::Vertical)) ||
           (interior_on(p, Orientation::Vertical) && interior_on(q, Orientation::Horizontal));
}

}  // namespace detail

// A corner of either path is an endpoint of its segments, so meeting there is never a crossing.
inline bool is_crossing_point(const RectPath& p, const RectPath& q, const Point& pt) {
    const auto inter = path_intersections(p, q);
    if (!std::binary_search(inter.points.begin(), inter.points.end(), pt))
        throw DomainError(to_string(pt) + " is not an isolated intersection point");
    return detail::crosses_at(p, q, pt);
}

}  // namespace vpg
