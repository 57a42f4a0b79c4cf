#pragma once

// Independent reference checks used by the tests. Deliberately naive: every
// segment pair is compared with plain interval arithmetic.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vpg/graph.hpp"
#include "vpg/representation.hpp"

namespace oracle {

using vpg::Point;
using vpg::Rational;

struct Seg {
    Point a, b;  // a <= b coordinatewise
    bool h;
};

inline std::vector<Seg> segs_of(const vpg::RectPath& p) {
    std::vector<Seg> out;
    const auto& c = p.corners();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Point a = c[i], b = c[i + 1];
        if (b.x < a.x || b.y < a.y) std::swap(a, b);
        out.push_back({a, b, a.y == b.y});
    }
    return out;
}

// Common points of two segments: nothing, one point, or a collinear run.
struct Contact {
    bool any = false;
    bool run = false;
    Point pt;
};

inline Contact contact(const Seg& s, const Seg& t) {
    Contact c;
    if (s.h && t.h) {
        if (s.a.y != t.a.y) return c;
        Rational lo = std::max(s.a.x, t.a.x), hi = std::min(s.b.x, t.b.x);
        if (lo > hi) return c;
        c.any = true;
        c.run = lo < hi;
        c.pt = Point(lo, s.a.y);
    } else if (!s.h && !t.h) {
        if (s.a.x != t.a.x) return c;
        Rational lo = std::max(s.a.y, t.a.y), hi = std::min(s.b.y, t.b.y);
        if (lo > hi) return c;
        c.any = true;
        c.run = lo < hi;
        c.pt = Point(s.a.x, lo);
    } else {
        const Seg& hs = s.h ? s : t;
        const Seg& vs = s.h ? t : s;
        const Rational& x = vs.a.x;
        const Rational& y = hs.a.y;
        if (hs.a.x <= x && x <= hs.b.x && vs.a.y <= y && y <= vs.b.y) {
            c.any = true;
            c.pt = Point(x, y);
        }
    }
    return c;
}

inline bool meets(const vpg::RectPath& p, const vpg::RectPath& q) {
    for (const auto& s : segs_of(p))
        for (const auto& t : segs_of(q))
            if (contact(s, t).any) return true;
    return false;
}

// Edge set realized by R, as sorted label pairs.
inline std::set<std::pair<std::string, std::string>> realized_edges(const vpg::VpgRepresentation& R) {
    std::set<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < R.size(); ++i)
        for (std::size_t j = i + 1; j < R.size(); ++j)
            if (meets(R.path(i), R.path(j))) out.insert(std::minmax(R.label(i), R.label(j)));
    return out;
}

inline bool realizes(const vpg::VpgRepresentation& R, const vpg::Graph& g) {
    if (R.size() != g.order()) return false;
    for (const auto& l : g.labels())
        if (!R.contains(l)) return false;
    std::set<std::pair<std::string, std::string>> want;
    for (auto [u, v] : g.edges()) want.insert(std::minmax(g.label(u), g.label(v)));
    return want == realized_edges(R);
}

// Proper: no shared runs, every common point is a transversal crossing away
// from all corners, and no point lies on three paths.
inline bool proper(const vpg::VpgRepresentation& R) {
    std::map<Point, std::set<std::size_t>> owners;
    for (std::size_t i = 0; i < R.size(); ++i) {
        const auto si = segs_of(R.path(i));
        const auto& ci = R.path(i).corners();
        for (std::size_t j = i + 1; j < R.size(); ++j) {
            const auto& cj = R.path(j).corners();
            for (const auto& s : si)
                for (const auto& t : segs_of(R.path(j))) {
                    auto c = contact(s, t);
                    if (!c.any) continue;
                    if (c.run || s.h == t.h) return false;
                    for (const auto* cs : {&ci, &cj})
                        for (const auto& p : *cs)
                            if (p == c.pt) return false;
                    owners[c.pt].insert(i);
                    owners[c.pt].insert(j);
                }
        }
    }
    for (const auto& [pt, who] : owners)
        if (who.size() > 2) return false;
    return true;
}

}  // namespace oracle
